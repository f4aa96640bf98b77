"""Correct/incorrect submission counts per task and language."""

from dataclasses import dataclass
from fractions import Fraction

from ..post.scoring import runner_for, score_solution
from ..tasks import task_by_key


def _pair_sum(pairs):
    correct = sum(p[0] for p in pairs)
    incorrect = sum(p[1] for p in pairs)
    return (correct, incorrect)


@dataclass(frozen=True)
class SolutionCountMatrix:
    """Counts of correct and incorrect submissions per (task, language) cell.

    Every count is a (correct, incorrect) pair; margins are derived by
    summation, so they are consistent by construction.
    """

    tasks: tuple
    languages: tuple
    cells: dict
    row_margins: dict
    column_margins: dict
    grand_total: tuple

    def to_json(self) -> dict:
        return {
            "tasks": list(self.tasks),
            "languages": list(self.languages),
            "cells": {
                task: {lang: list(self.cells[(task, lang)]) for lang in self.languages}
                for task in self.tasks
            },
            "rowTotals": {task: list(self.row_margins[task]) for task in self.tasks},
            "columnTotals": {
                lang: list(self.column_margins[lang]) for lang in self.languages
            },
            "grandTotal": list(self.grand_total),
        }

    def to_markdown(self) -> str:
        """Matrix as a Markdown table: S/NS column pairs per language plus All."""
        header = ["Task"]
        for lang in self.languages:
            header += [f"{lang} S", f"{lang} NS"]
        header += ["All S", "All NS"]
        lines = [
            "| " + " | ".join(header) + " |",
            "|" + "|".join(["---"] + ["---:"] * (len(header) - 1)) + "|",
        ]
        for task in self.tasks:
            row = [task]
            for lang in self.languages:
                correct, incorrect = self.cells[(task, lang)]
                row += [str(correct), str(incorrect)]
            row += [str(n) for n in self.row_margins[task]]
            lines.append("| " + " | ".join(row) + " |")
        footer = ["All"]
        for lang in self.languages:
            footer += [str(n) for n in self.column_margins[lang]]
        footer += [str(n) for n in self.grand_total]
        lines.append("| " + " | ".join(footer) + " |")
        return "\n".join(lines) + "\n"


def final_scores(dataset, tasks, runners) -> dict:
    """Score each submission's final snapshot against its task's tests.

    Returns a mapping from (userId, taskKey, submissionIndex) to Score.
    Raises ValueError for a submission whose task is not in the task set, and
    RunnerMissing when no runner covers a submission's language.
    """
    results = {}
    for sub in dataset.submissions:
        task = task_by_key(tasks, sub.task_key)
        if task is None:
            raise ValueError(f"submission {sub.path} is for unknown task {sub.task_key!r}")
        runner = runner_for(runners, sub.language)
        key = (sub.user_id, sub.task_key, sub.submission_index)
        results[key] = score_solution(task, sub.final_fragment, runner)
    return results


def solution_counts(dataset, scores, threshold=Fraction(1)) -> SolutionCountMatrix:
    """Build the count matrix over a dataset with precomputed final scores.

    A submission counts as correct when its score value is at least
    `threshold`; the default accepts only a full pass. `scores` must hold a
    Score for every (userId, taskKey, submissionIndex) in the dataset.
    """
    raw = {}
    for sub in dataset.submissions:
        key = (sub.user_id, sub.task_key, sub.submission_index)
        if key not in scores:
            raise ValueError(f"no score provided for submission {key}")
        correct = scores[key].value >= threshold
        cell = raw.setdefault((sub.task_key, sub.language), [0, 0])
        cell[0 if correct else 1] += 1
    tasks = tuple(sorted({task for task, _ in raw}))
    languages = tuple(sorted({lang for _, lang in raw}))
    cells = {
        (task, lang): tuple(raw.get((task, lang), [0, 0]))
        for task in tasks
        for lang in languages
    }
    row_margins = {
        task: _pair_sum([cells[(task, lang)] for lang in languages]) for task in tasks
    }
    column_margins = {
        lang: _pair_sum([cells[(task, lang)] for task in tasks]) for lang in languages
    }
    return SolutionCountMatrix(
        tasks=tasks,
        languages=languages,
        cells=cells,
        row_margins=row_margins,
        column_margins=column_margins,
        grand_total=_pair_sum(row_margins.values()),
    )
