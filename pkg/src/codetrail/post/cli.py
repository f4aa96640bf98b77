"""Command-line access to the post-processing pipeline.

Subcommands: merge (interleave the two CSV streams), score (grade one code
file), score-timeline (grade a session's kept snapshots), filter (drop
intermediate snapshots), anonymize (rename identifiers, emitting the rename
map alongside the output).
"""

import argparse
import json
import sys
from pathlib import Path

from ..codecs import decode_action_csv, decode_snapshot_csv, encode_snapshot_csv
from ..tasks import default_task_set, load_task_set, task_by_key
from .anonymize import anonymize_code, load_profile
from .filtering import FILTER_MODES, MODE_LINE_COMPLETED, filter_intermediate
from .merge import merge_streams
from .scoring import default_runners, load_runners, runner_for, score_solution
from .timeline import score_timeline


def _write_json(path, payload):
    Path(path).write_text(json.dumps(payload, ensure_ascii=False, indent=2) + "\n", "utf-8")


def _tasks(args):
    return load_task_set(args.task_set) if args.task_set else default_task_set()


def _runners(args):
    return load_runners(args.runner) if args.runner else default_runners()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="postprocess", description="Transform and grade recorded sessions."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    merge_cmd = commands.add_parser("merge", help="interleave snapshots and actions")
    merge_cmd.add_argument("--snapshots", required=True, help="snapshot CSV file")
    merge_cmd.add_argument("--actions", required=True, help="action CSV file")
    merge_cmd.add_argument("--out", required=True, help="output JSON path")

    score_cmd = commands.add_parser("score", help="grade one code file")
    score_cmd.add_argument("--task-set", dest="task_set", help="tasks JSON file")
    score_cmd.add_argument("--task", required=True, help="task key")
    score_cmd.add_argument("--code", required=True, help="solution file to grade")
    score_cmd.add_argument("--runner", help="JSON file mapping language to runner")
    score_cmd.add_argument("--lang", default="python", help="runner language family")

    timeline_cmd = commands.add_parser(
        "score-timeline", help="grade a session's kept snapshots"
    )
    timeline_cmd.add_argument("--session", required=True, help="session directory")
    timeline_cmd.add_argument("--task-set", dest="task_set", help="tasks JSON file")
    timeline_cmd.add_argument(
        "--criterion", default=MODE_LINE_COMPLETED, choices=FILTER_MODES
    )
    timeline_cmd.add_argument("--runner", help="JSON file mapping language to runner")
    timeline_cmd.add_argument("--out", required=True, help="output JSON path")

    filter_cmd = commands.add_parser("filter", help="drop intermediate snapshots")
    filter_cmd.add_argument("--in", dest="source", required=True, help="snapshot CSV file")
    filter_cmd.add_argument(
        "--criterion", default=MODE_LINE_COMPLETED, choices=FILTER_MODES
    )
    filter_cmd.add_argument("--out", required=True, help="filtered CSV path")

    anon_cmd = commands.add_parser("anonymize", help="rename identifiers")
    anon_cmd.add_argument("--in", dest="source", required=True, help="code file")
    anon_cmd.add_argument("--lang", required=True, help="lexer profile name")
    anon_cmd.add_argument("--out", required=True, help="anonymized code path")

    args = parser.parse_args(argv)
    try:
        if args.command == "merge":
            snapshots = decode_snapshot_csv(Path(args.snapshots).read_text("utf-8"))
            actions = decode_action_csv(Path(args.actions).read_text("utf-8"))
            rows = merge_streams(snapshots, actions)
            _write_json(args.out, [row.to_json() for row in rows])
        elif args.command == "score":
            task = task_by_key(_tasks(args), args.task)
            if task is None:
                raise ValueError(f"unknown task {args.task!r}")
            runner = runner_for(_runners(args), args.lang)
            code = Path(args.code).read_text("utf-8")
            score = score_solution(task, code, runner)
            print(json.dumps(score.to_json()))
        elif args.command == "score-timeline":
            session = Path(args.session)
            snapshots = decode_snapshot_csv((session / "snapshots.csv").read_text("utf-8"))
            if not snapshots:
                raise ValueError(f"session {session} contains no snapshots")
            task = task_by_key(_tasks(args), snapshots[0].task_key)
            if task is None:
                raise ValueError(f"session task {snapshots[0].task_key!r} is unknown")
            runner = runner_for(_runners(args), snapshots[0].language)
            entries = score_timeline(snapshots, task, args.criterion, runner)
            _write_json(args.out, [entry.to_json() for entry in entries])
        elif args.command == "filter":
            snapshots = decode_snapshot_csv(Path(args.source).read_text("utf-8"))
            kept = filter_intermediate(snapshots, args.criterion)
            Path(args.out).write_text(encode_snapshot_csv(kept), "utf-8")
        else:
            profile = load_profile(args.lang)
            code = Path(args.source).read_text("utf-8")
            anonymized, mapping = anonymize_code(code, profile)
            Path(args.out).write_text(anonymized, "utf-8")
            _write_json(str(args.out) + ".map.json", mapping)
    except (ValueError, LookupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
