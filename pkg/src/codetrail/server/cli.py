"""Command line entry point for the collection server."""

import argparse

import uvicorn

from .app import create_app


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="server",
        description="Serve tasks and translations, collect solution submissions.",
    )
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--storage", required=True, help="submission storage directory")
    parser.add_argument("--tasks", default=None, help="tasks.json (default: bundled set)")
    parser.add_argument(
        "--translations", default=None, help="translations.json (default: bundled)"
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    app = create_app(
        storage_dir=args.storage,
        tasks_path=args.tasks,
        translations_path=args.translations,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
