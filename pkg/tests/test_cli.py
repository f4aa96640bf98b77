"""Tests for the four command line entry points."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from codetrail.analysis.cli import main as analyze_main
from codetrail.codecs import decode_snapshot_csv, encode_action_csv, encode_snapshot_csv
from codetrail.post.cli import main as postprocess_main
from codetrail.server.cli import build_parser as server_parser
from codetrail.tracker.cli import build_parser as tracker_parser

from conftest import make_action, make_snapshot
from test_analysis import BASE_TS, snaps, write_submission
from test_scoring import reference_code

RUNNERS_JSON = {"python": {"commandTemplate": "python3 {file}", "fileExtension": "py"}}


@pytest.fixture()
def runners_file(tmp_path):
    path = tmp_path / "runners.json"
    path.write_text(json.dumps(RUNNERS_JSON), "utf-8")
    return path


def write_session(tmp_path, fragments, actions=()):
    session = tmp_path / "session"
    session.mkdir()
    recorded = snaps("is_zero", *fragments)
    (session / "snapshots.csv").write_text(encode_snapshot_csv(recorded), "utf-8")
    (session / "actions.csv").write_text(encode_action_csv(list(actions)), "utf-8")
    return session


# --- postprocess ---


def test_merge_command(tmp_path):
    snapshots = [make_snapshot(ts=BASE_TS + 1000, fragment="x")]
    actions = [make_action(ts=BASE_TS), make_action(ts=BASE_TS + 2000)]
    (tmp_path / "s.csv").write_text(encode_snapshot_csv(snapshots), "utf-8")
    (tmp_path / "a.csv").write_text(encode_action_csv(actions), "utf-8")
    out = tmp_path / "merged.json"
    code = postprocess_main(
        ["merge", "--snapshots", str(tmp_path / "s.csv"),
         "--actions", str(tmp_path / "a.csv"), "--out", str(out)]
    )
    assert code == 0
    rows = json.loads(out.read_text("utf-8"))
    assert [row["kind"] for row in rows] == ["action", "snapshot", "action"]
    assert rows[0] == {
        "kind": "action",
        "timestampMillis": BASE_TS,
        "snapshotIndex": -1,
        "payloadRef": 0,
    }


def test_score_command(tmp_path, capsys, runners_file):
    code_file = tmp_path / "solution.py"
    code_file.write_text(reference_code("pies"), "utf-8")
    code = postprocess_main(
        ["score", "--task", "pies", "--code", str(code_file),
         "--runner", str(runners_file)]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] == payload["total"]
    assert payload["value"] == 1.0


def test_score_unknown_task(tmp_path, capsys):
    code_file = tmp_path / "solution.py"
    code_file.write_text("", "utf-8")
    code = postprocess_main(["score", "--task", "nope", "--code", str(code_file)])
    assert code == 2
    assert "unknown task" in capsys.readouterr().err


def test_score_timeline_command(tmp_path, runners_file):
    session = write_session(tmp_path, ["", reference_code("is_zero")])
    out = tmp_path / "timeline.json"
    code = postprocess_main(
        ["score-timeline", "--session", str(session),
         "--runner", str(runners_file), "--out", str(out)]
    )
    assert code == 0
    entries = json.loads(out.read_text("utf-8"))
    assert entries[-1]["score"]["value"] == 1.0
    assert set(entries[0]) == {"snapshotIndex", "timestampMillis", "score", "error"}


def test_filter_command(tmp_path):
    recorded = snaps("is_zero", "a", "a\nb", "a\nb", "a\nbc")
    source = tmp_path / "snapshots.csv"
    source.write_text(encode_snapshot_csv(recorded), "utf-8")
    out = tmp_path / "filtered.csv"
    code = postprocess_main(
        ["filter", "--in", str(source), "--criterion", "dedupeOnly", "--out", str(out)]
    )
    assert code == 0
    kept = decode_snapshot_csv(out.read_text("utf-8"))
    assert [snap.fragment for snap in kept] == ["a", "a\nb", "a\nbc"]


def test_anonymize_command(tmp_path):
    source = tmp_path / "code.py"
    source.write_text("total = 1\nprint(total)\n", "utf-8")
    out = tmp_path / "anon.py"
    code = postprocess_main(
        ["anonymize", "--in", str(source), "--lang", "python", "--out", str(out)]
    )
    assert code == 0
    assert out.read_text("utf-8") == "v0 = 1\nprint(v0)\n"
    mapping = json.loads((tmp_path / "anon.py.map.json").read_text("utf-8"))
    assert mapping == {"total": "v0"}


def test_postprocess_requires_subcommand(capsys):
    with pytest.raises(SystemExit) as excinfo:
        postprocess_main([])
    assert excinfo.value.code == 2


# --- analyze ---


def test_stats_command(tmp_path, capsys):
    root = tmp_path / "data"
    root.mkdir()
    write_submission(root, user="u-a", snapshots=snaps("pies", "x"))
    bad = write_submission(root, user="u-b", snapshots=snaps("pies", "y"))
    (bad / "meta.json").write_text("{", "utf-8")
    out = tmp_path / "report.json"
    code = analyze_main(["stats", "--dataset", str(root), "--out", str(out)])
    assert code == 0
    report = json.loads(out.read_text("utf-8"))
    assert report["participantCount"] == 1
    assert "skipped" in capsys.readouterr().err


def test_table_command_json_and_markdown(tmp_path, runners_file):
    root = tmp_path / "data"
    root.mkdir()
    write_submission(
        root, user="u-a", task="is_zero",
        snapshots=snaps("is_zero", "", reference_code("is_zero")),
    )
    write_submission(root, user="u-b", task="is_zero", snapshots=snaps("is_zero", "x", ""))
    json_out = tmp_path / "table.json"
    code = analyze_main(
        ["table", "--dataset", str(root), "--runners", str(runners_file),
         "--out", str(json_out)]
    )
    assert code == 0
    table = json.loads(json_out.read_text("utf-8"))
    assert table["grandTotal"] == [1, 1]
    assert table["cells"]["is_zero"]["python"] == [1, 1]

    md_out = tmp_path / "table.md"
    code = analyze_main(
        ["table", "--dataset", str(root), "--runners", str(runners_file),
         "--out", str(md_out)]
    )
    assert code == 0
    text = md_out.read_text("utf-8")
    assert "| Task | python S | python NS | All S | All NS |" in text
    assert "| All | 1 | 1 | 1 | 1 |" in text


def test_table_threshold_flag(tmp_path, runners_file):
    root = tmp_path / "data"
    root.mkdir()
    write_submission(
        root, task="voting", snapshots=snaps("voting", "", "print(1)\n")
    )
    out = tmp_path / "table.json"
    code = analyze_main(
        ["table", "--dataset", str(root), "--runners", str(runners_file),
         "--threshold", "1/2", "--out", str(out)]
    )
    assert code == 0
    assert json.loads(out.read_text("utf-8"))["grandTotal"] == [1, 0]
    assert Fraction("1/2") == Fraction(1, 2)


def test_timeline_command_json_and_svg(tmp_path):
    session = write_session(
        tmp_path,
        ["", "x", "xy"],
        actions=[make_action(ts=BASE_TS + 500, action_id="EditorPaste")],
    )
    json_out = tmp_path / "plot.json"
    assert analyze_main(["timeline", "--session", str(session), "--out", str(json_out)]) == 0
    spec = json.loads(json_out.read_text("utf-8"))
    assert [point[1] for point in spec["series"]] == [0.0, 1.0, 2.0]
    assert spec["markers"] == [[0.5, "EditorPaste", "EditorPaste"]]

    svg_out = tmp_path / "plot.svg"
    assert analyze_main(["timeline", "--session", str(session), "--out", str(svg_out)]) == 0
    assert svg_out.read_text("utf-8").startswith("<svg ")


def test_score_plot_command(tmp_path, runners_file):
    session = write_session(tmp_path, ["", reference_code("is_zero")])
    out = tmp_path / "score.json"
    code = analyze_main(
        ["score-plot", "--session", str(session), "--runners", str(runners_file),
         "--criterion", "all", "--out", str(out)]
    )
    assert code == 0
    spec = json.loads(out.read_text("utf-8"))
    assert spec["series"][-1][1] == 1.0
    assert spec["colorBands"][-1][2] == 1.0


def test_score_plot_empty_session(tmp_path, capsys):
    session = tmp_path / "session"
    session.mkdir()
    (session / "snapshots.csv").write_text(encode_snapshot_csv([]), "utf-8")
    (session / "actions.csv").write_text(encode_action_csv([]), "utf-8")
    code = analyze_main(["score-plot", "--session", str(session), "--out", "x.json"])
    assert code == 2
    assert "no snapshots" in capsys.readouterr().err


# --- server and tracker parsers ---


def test_server_parser_requires_storage():
    with pytest.raises(SystemExit):
        server_parser().parse_args([])
    args = server_parser().parse_args(["--storage", "/tmp/store", "--port", "9000"])
    assert args.storage == "/tmp/store"
    assert args.port == 9000
    assert args.host == "127.0.0.1"


def test_tracker_parser_requires_config():
    with pytest.raises(SystemExit):
        tracker_parser().parse_args([])
    args = tracker_parser().parse_args(["--config", "cfg.json"])
    assert args.config == "cfg.json"
