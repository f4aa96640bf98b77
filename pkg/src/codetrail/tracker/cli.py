"""Command line entry point for the tracker daemon."""

import argparse

import uvicorn

from .api import create_api
from .config import load_config
from .daemon import TrackerDaemon


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracker",
        description="Capture snapshots and events for one user's task sessions.",
    )
    parser.add_argument("--config", required=True, help="JSON config file")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = load_config(args.config)
    daemon = TrackerDaemon(config)
    app = create_api(daemon)
    try:
        # loopback only: this API controls the user's local session
        uvicorn.run(app, host="127.0.0.1", port=config.local_port, log_level="warning")
    finally:
        daemon.stop()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
