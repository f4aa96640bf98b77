"""Tests for task definitions, the output-comparison rule, and the bundled tasks.

Every bundled test vector is re-derived here by an independent straight-line
implementation of the task statement, so the shipped data cannot drift from
the described behavior.
"""

import itertools

import pytest

from codetrail.tasks import (
    TaskSpec,
    TestCase,
    default_task_set,
    normalize_output,
    parse_task_set,
    task_by_key,
)


# --- output normalization ---


@pytest.mark.parametrize("raw,expected", [
    ("abc", "abc"),
    ("abc\n", "abc"),
    ("abc   \n", "abc"),
    ("a\nb", "a\nb"),
    ("a\r\nb\r\n", "a\nb"),
    ("a\n\n\n", "a"),
    ("a\n\nb\n", "a\n\nb"),
    ("", ""),
    ("\n\n", ""),
    ("  a \n b \n", "  a\n b"),
    ("3 0", "3 0"),
])
def test_normalize_output_pinned_cases(raw, expected):
    assert normalize_output(raw) == expected


def test_normalize_output_is_idempotent():
    samples = ["a \n b\r\n\n", "x", "", "\t\n\t\n", "a\n\nb  "]
    for text in samples:
        once = normalize_output(text)
        assert normalize_output(once) == once


# --- TestCase ---


def test_case_tolerates_trailing_whitespace_only():
    case = TestCase(input="1 2 3", expected_output="3")
    assert case.passes("3")
    assert case.passes("3\n")
    assert case.passes("3   \n\n")
    assert not case.passes(" 3")
    assert not case.passes("3 0")
    assert not case.passes("")


def test_case_requires_flag_for_empty_expected_output():
    with pytest.raises(ValueError):
        TestCase(input="x", expected_output="")
    with pytest.raises(ValueError):
        TestCase(input="x", expected_output="\n  \n")
    case = TestCase(input="x", expected_output="", allow_empty_output=True)
    assert case.passes("")
    assert case.passes("\n")
    assert not case.passes("y")


# --- TaskSpec validation and JSON shape ---


def small_task(**overrides):
    base = dict(
        key="demo",
        names={"en": "Demo"},
        descriptions={"en": "Print x."},
        examples=[("1", "x")],
        tests=[TestCase(input="1", expected_output="x")],
        supported_languages=["python"],
    )
    base.update(overrides)
    return TaskSpec(**base)


@pytest.mark.parametrize("key", ["Demo", "1abc", "a-b", "", "a b"])
def test_task_rejects_bad_keys(key):
    with pytest.raises(ValueError):
        small_task(key=key)


def test_task_rejects_empty_test_list():
    with pytest.raises(ValueError):
        small_task(tests=[], examples=[])


def test_task_rejects_example_not_among_tests():
    with pytest.raises(ValueError):
        small_task(examples=[("2", "y")])


def test_task_json_round_trip():
    task = small_task(
        tests=[
            TestCase(input="1", expected_output="x"),
            TestCase(input="2", expected_output="", allow_empty_output=True),
        ],
    )
    data = task.to_json()
    assert data["key"] == "demo"
    assert data["tests"][0] == {"input": "1", "expectedOutput": "x"}
    assert data["tests"][1] == {"input": "2", "expectedOutput": "", "allowEmptyOutput": True}
    assert data["examples"] == [{"input": "1", "output": "x"}]
    assert TaskSpec.from_json(data) == task


def test_task_from_json_reports_missing_fields():
    with pytest.raises(ValueError, match="supportedLanguages"):
        TaskSpec.from_json({"key": "demo", "names": {}, "descriptions": {},
                            "examples": [], "tests": []})


def test_task_name_falls_back_to_any_available_language():
    task = small_task(names={"es": "Demostración"})
    assert task.name("es") == "Demostración"
    assert task.name("fi") == "Demostración"


def test_parse_task_set_rejects_duplicate_keys():
    item = small_task().to_json()
    with pytest.raises(ValueError, match="duplicate"):
        parse_task_set([item, item])


# --- bundled task set ---


EXPECTED_KEYS = ["pies", "max_3", "is_zero", "voting", "max_digit", "brackets"]


def test_bundle_has_six_tasks_with_expected_keys():
    tasks = default_task_set()
    assert [t.key for t in tasks] == EXPECTED_KEYS


def test_bundle_is_fully_bilingual():
    for task in default_task_set():
        assert set(task.names) == {"en", "es"}
        assert set(task.descriptions) == {"en", "es"}
        assert all(task.names.values())
        assert all(task.descriptions.values())


def test_bundle_tasks_have_examples_and_several_tests():
    for task in default_task_set():
        assert len(task.examples) >= 2
        assert len(task.tests) >= 6
        assert "python" in task.supported_languages


def test_task_by_key():
    tasks = default_task_set()
    assert task_by_key(tasks, "voting").key == "voting"
    assert task_by_key(tasks, "nope") is None


# --- independent re-derivation of every bundled test vector ---


def pies_oracle(line: str) -> str:
    a, b, n = (int(p) for p in line.split())
    cents = (a * 100 + b) * n
    return f"{cents // 100} {cents % 100}"


def max_3_oracle(line: str) -> str:
    return str(max(int(p) for p in line.split()))


def is_zero_oracle(line: str) -> str:
    return "YES" if any(int(p) == 0 for p in line.split()) else "NO"


def voting_oracle(line: str) -> str:
    votes = [int(p) for p in line.split()]
    ones = sum(votes)
    return "1" if ones > len(votes) - ones else "0"


def max_digit_oracle(line: str) -> str:
    return str(max(int(c) for c in line.strip()))


def brackets_iterative(s: str) -> str:
    depth = (len(s) - 1) // 2
    prefix = "".join(s[i] + "(" for i in range(depth))
    suffix = "".join(")" + s[len(s) - depth + i] for i in range(depth))
    return prefix + s[depth:len(s) - depth] + suffix


ORACLES = {
    "pies": pies_oracle,
    "max_3": max_3_oracle,
    "is_zero": is_zero_oracle,
    "voting": voting_oracle,
    "max_digit": max_digit_oracle,
    "brackets": brackets_iterative,
}


@pytest.mark.parametrize("key", EXPECTED_KEYS)
def test_bundled_vectors_match_independent_oracle(key):
    task = task_by_key(default_task_set(), key)
    oracle = ORACLES[key]
    for case in task.tests:
        assert oracle(case.input) == case.expected_output, case.input


# --- the bracket-insertion rule, checked two independent ways ---


def brackets_recursive(s: str) -> str:
    if len(s) <= 2:
        return s
    return s[0] + "(" + brackets_recursive(s[1:-1]) + ")" + s[-1]


def test_brackets_pinned_examples():
    assert brackets_recursive("example") == "e(x(a(m)p)l)e"
    assert brackets_recursive("card") == "c(ar)d"
    assert brackets_iterative("example") == "e(x(a(m)p)l)e"
    assert brackets_iterative("card") == "c(ar)d"


def test_brackets_oracle_agreement_exhaustive():
    for length in range(1, 9):
        for letters in itertools.product("abc", repeat=length):
            s = "".join(letters)
            recursive = brackets_recursive(s)
            iterative = brackets_iterative(s)
            assert recursive == iterative, s
            assert recursive.replace("(", "").replace(")", "") == s
            assert recursive.count("(") == (length - 1) // 2
            assert recursive.count(")") == (length - 1) // 2
