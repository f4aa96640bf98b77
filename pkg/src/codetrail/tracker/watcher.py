"""Watch exactly one file and report every observable content change.

Two sources feed the same sink: native filesystem events (when the watchdog
observer works on this platform) and a polling loop that reads and hashes the
file. The whole read-compare-dispatch step runs under one lock, so reports
are serialized and in file-state order regardless of which source fired.
Changes to any other file, including siblings in the same directory, are
ignored by construction.
"""

import hashlib
import threading

try:
    from watchdog.events import FileSystemEventHandler
    from watchdog.observers import Observer
except ImportError:  # watcher degrades to polling only
    FileSystemEventHandler = object
    Observer = None


class _NativeHandler(FileSystemEventHandler):
    def __init__(self, watcher):
        self._watcher = watcher

    def on_any_event(self, event):
        paths = {getattr(event, "src_path", None), getattr(event, "dest_path", None)}
        if str(self._watcher.path) in paths:
            self._watcher.check_now()


class DraftWatcher:
    """Calls `on_change(text)` whenever the watched file's content changes."""

    def __init__(self, path, on_change, poll_millis: int, use_native: bool = True):
        self.path = path
        self._on_change = on_change
        self._poll_seconds = poll_millis / 1000.0
        self._use_native = use_native and Observer is not None
        self._stop = threading.Event()
        self._dispatch_lock = threading.Lock()
        self._last_digest = None
        self._thread = None
        self._observer = None

    def start(self, seen_content: str | None = None):
        """Begin watching. `seen_content` is treated as already reported;
        without it, the file's current content at start seeds the gate."""
        self._stop.clear()
        seed = self._read() if seen_content is None else seen_content
        self._last_digest = self._digest(seed)
        if self._use_native:
            self._observer = Observer()
            self._observer.schedule(_NativeHandler(self), str(self.path.parent))
            self._observer.daemon = True
            self._observer.start()
        self._thread = threading.Thread(target=self._poll_loop, daemon=True)
        self._thread.start()

    def stop(self):
        self._stop.set()
        if self._observer is not None:
            self._observer.stop()
            self._observer.join(timeout=5)
            self._observer = None
        if self._thread is not None:
            self._thread.join(timeout=5)
            self._thread = None

    def check_now(self):
        """Read the file and dispatch if its content is new."""
        with self._dispatch_lock:
            content = self._read()
            if content is None:
                return
            digest = self._digest(content)
            if digest == self._last_digest:
                return
            self._last_digest = digest
            self._on_change(content)

    def _poll_loop(self):
        while not self._stop.wait(self._poll_seconds):
            self.check_now()

    def _read(self):
        try:
            return self.path.read_text("utf-8")
        except (OSError, UnicodeDecodeError):
            return None

    @staticmethod
    def _digest(content):
        if content is None:
            return None
        return hashlib.sha256(content.encode("utf-8")).digest()
