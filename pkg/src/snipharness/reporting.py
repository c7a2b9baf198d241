"""Aggregate execution results into frequency tables, gains, and metrics."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import ReportError
from .imports import ScanDiagnostic, extract_imports, top_level_names
from .records import IMPORT_ERROR_FAMILY, OUTCOME_SUCCESS
from .stdlib import bundled_manifest, filter_third_party


@dataclass(frozen=True)
class ClassCount:
    outcome_class: str
    count: int
    percent: float


def _latest(results, phase: str) -> dict[str, str]:
    latest: dict[str, str] = {}
    for row in results:
        if row.get("phase") == phase:
            latest[row["id"]] = row.get("outcome_class", "")
    return latest


def tabulate(results, phase: str) -> list[ClassCount]:
    """Frequency table for one phase; the latest result per id wins.

    Sorted by descending count, ties broken by class name. Unknown phases
    yield an empty table.
    """
    latest = _latest(results, phase)
    total = len(latest)
    counts: dict[str, int] = {}
    for outcome_class in latest.values():
        counts[outcome_class] = counts.get(outcome_class, 0) + 1
    rows = [
        ClassCount(outcome_class=cls, count=count, percent=100.0 * count / total)
        for cls, count in counts.items()
    ]
    rows.sort(key=lambda row: (-row.count, row.outcome_class))
    return rows


def format_table(rows: list[ClassCount]) -> str:
    """Aligned Result / Count / Percent text table."""
    header = ("Result", "Count", "Percent")
    cells = [header] + [
        (row.outcome_class, str(row.count), f"{row.percent:.1f}%") for row in rows
    ]
    widths = [max(len(line[column]) for line in cells) for column in range(3)]
    lines = []
    for index, (result, count, percent) in enumerate(cells):
        lines.append(
            f"{result:<{widths[0]}}  {count:>{widths[1]}}  {percent:>{widths[2]}}"
        )
        if index == 0:
            lines.append("-" * (sum(widths) + 4))
    return "\n".join(lines)


@dataclass(frozen=True)
class GainRecord:
    from_phase: str
    to_phase: str
    eligible: int  # ImportError-family ids in from_phase that were re-run
    left_family: int  # no longer ImportError-family afterwards
    newly_successful: int


def compute_gain(results, from_phase: str, to_phase: str) -> GainRecord:
    """How many ids left the ImportError family between two phases."""
    results = list(results)
    before = _latest(results, from_phase)
    after = _latest(results, to_phase)
    eligible = 0
    left = 0
    newly = 0
    for snippet_id, to_class in after.items():
        if snippet_id not in before:
            raise ReportError(
                f"{snippet_id!r} has a {to_phase} result but no {from_phase} result"
            )
        if before[snippet_id] not in IMPORT_ERROR_FAMILY:
            continue
        eligible += 1
        if to_class not in IMPORT_ERROR_FAMILY:
            left += 1
        if to_class == OUTCOME_SUCCESS:
            newly += 1
    return GainRecord(
        from_phase=from_phase,
        to_phase=to_phase,
        eligible=eligible,
        left_family=left,
        newly_successful=newly,
    )


@dataclass(frozen=True)
class CorpusMetrics:
    snippet_count: int
    mean_lines: float  # physical lines, blanks and comments included
    unique_third_party: int


def corpus_metrics(store, manifest=None) -> CorpusMetrics:
    """Line counts and unique third-party top-level names over the corpus."""
    if manifest is None:
        manifest = bundled_manifest("python:2.7.13")
    ids = store.list_ids()
    total_lines = 0
    third_party: set[str] = set()
    for snippet_id in ids:
        record = store.get_snippet(snippet_id)
        total_lines += len(record.source.splitlines())
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ScanDiagnostic)
            names = top_level_names(extract_imports(record.source))
        names = [name for name in names if name != "__future__"]
        third_party.update(filter_third_party(names, manifest))
    mean = round(total_lines / len(ids), 1) if ids else 0.0
    return CorpusMetrics(
        snippet_count=len(ids),
        mean_lines=mean,
        unique_third_party=len(third_party),
    )
