"""Command-line reports and plots over collected datasets.

Subcommands: stats (participant distributions), table (correct/incorrect
matrix), timeline (fragment length plot for one session), score-plot (score
progression for one session). Plot outputs render as SVG when the output path
ends in .svg and as JSON otherwise.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from ..post.filtering import FILTER_MODES, MODE_LINE_COMPLETED
from ..post.merge import merge_streams
from ..post.scoring import default_runners, load_runners, runner_for
from ..post.timeline import score_timeline
from ..tasks import default_task_set, load_task_set, task_by_key
from .counts import final_scores, solution_counts
from .dataset import load_dataset, load_session
from .plots import action_timeline, score_plot
from .stats import participant_stats
from .svg import render_svg


def _write_json(path, payload):
    Path(path).write_text(json.dumps(payload, ensure_ascii=False, indent=2) + "\n", "utf-8")


def _emit_plot(spec, out):
    out = Path(out)
    if out.suffix == ".svg":
        out.write_text(render_svg(spec), "utf-8")
    else:
        _write_json(out, spec.to_json())


def _load_dataset_reporting(root):
    dataset = load_dataset(root)
    for corrupt in dataset.corrupt:
        print(f"skipped {corrupt.path}: {corrupt.reason}", file=sys.stderr)
    return dataset


def _tasks_and_runners(args):
    tasks = load_task_set(args.task_set) if args.task_set else default_task_set()
    runners = load_runners(args.runners) if args.runners else default_runners()
    return tasks, runners


def _session_context(session_dir, tasks):
    snapshots, actions = load_session(session_dir)
    if not snapshots:
        raise ValueError(f"session {session_dir} contains no snapshots")
    task = task_by_key(tasks, snapshots[0].task_key)
    if task is None:
        raise ValueError(f"session task {snapshots[0].task_key!r} is not in the task set")
    return snapshots, actions, task


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="analyze", description="Reports and plots over collected sessions."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    stats_cmd = commands.add_parser("stats", help="participant distributions")
    stats_cmd.add_argument("--dataset", required=True, help="dataset root directory")
    stats_cmd.add_argument("--out", required=True, help="output report path (.json)")

    table_cmd = commands.add_parser("table", help="correct/incorrect count matrix")
    table_cmd.add_argument("--dataset", required=True, help="dataset root directory")
    table_cmd.add_argument("--runners", help="JSON file mapping language to runner")
    table_cmd.add_argument("--task-set", dest="task_set", help="tasks JSON file")
    table_cmd.add_argument(
        "--threshold",
        default="1",
        help="minimum score value counted as correct (exact fraction or decimal)",
    )
    table_cmd.add_argument("--out", required=True, help="output path (.json or .md)")

    timeline_cmd = commands.add_parser("timeline", help="fragment length plot")
    timeline_cmd.add_argument("--session", required=True, help="session directory")
    timeline_cmd.add_argument("--out", required=True, help="output path (.svg or .json)")

    score_cmd = commands.add_parser("score-plot", help="score progression plot")
    score_cmd.add_argument("--session", required=True, help="session directory")
    score_cmd.add_argument(
        "--criterion", default=MODE_LINE_COMPLETED, choices=FILTER_MODES
    )
    score_cmd.add_argument("--runners", help="JSON file mapping language to runner")
    score_cmd.add_argument("--task-set", dest="task_set", help="tasks JSON file")
    score_cmd.add_argument("--out", required=True, help="output path (.svg or .json)")

    args = parser.parse_args(argv)
    try:
        if args.command == "stats":
            dataset = _load_dataset_reporting(args.dataset)
            _write_json(args.out, participant_stats(dataset).to_json())
        elif args.command == "table":
            dataset = _load_dataset_reporting(args.dataset)
            tasks, runners = _tasks_and_runners(args)
            scores = final_scores(dataset, tasks, runners)
            matrix = solution_counts(dataset, scores, threshold=Fraction(args.threshold))
            if Path(args.out).suffix == ".md":
                Path(args.out).write_text(matrix.to_markdown(), "utf-8")
            else:
                _write_json(args.out, matrix.to_json())
        elif args.command == "timeline":
            snapshots, actions = load_session(args.session)
            merged = merge_streams(snapshots, actions)
            _emit_plot(action_timeline(merged, snapshots, actions), args.out)
        else:
            tasks, runners = _tasks_and_runners(args)
            snapshots, _, task = _session_context(args.session, tasks)
            runner = runner_for(runners, snapshots[0].language)
            timeline = score_timeline(snapshots, task, args.criterion, runner)
            _emit_plot(score_plot(timeline), args.out)
    except (ValueError, LookupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
