import pytest

from snipharness.errors import ReportError
from snipharness.records import StdlibManifest
from snipharness.reporting import (
    compute_gain,
    corpus_metrics,
    format_table,
    tabulate,
)
from snipharness.store import CorpusStore

from conftest import FIXED_CREATED_AT
from snipharness.records import SnippetRecord


def row(snippet_id, phase, outcome_class):
    return {"id": snippet_id, "phase": phase, "outcome_class": outcome_class}


class TestTabulate:
    def test_hand_counted_percentages(self):
        rows = [
            row("a", "baseline-v2", "ImportError"),
            row("b", "baseline-v2", "ImportError"),
            row("c", "baseline-v2", "ImportError"),
            row("d", "baseline-v2", "Success"),
        ]
        table = tabulate(rows, "baseline-v2")
        assert [(r.outcome_class, r.count) for r in table] == [
            ("ImportError", 3),
            ("Success", 1),
        ]
        assert table[0].percent == 75.0
        assert table[1].percent == 25.0

    def test_empty_log(self):
        assert tabulate([], "baseline-v2") == []

    def test_latest_wins_for_duplicate_id_phase(self):
        rows = [
            row("a", "baseline-v2", "ImportError"),
            row("a", "baseline-v2", "Success"),
        ]
        table = tabulate(rows, "baseline-v2")
        assert [(r.outcome_class, r.count) for r in table] == [("Success", 1)]

    def test_sorted_desc_count_then_name(self):
        rows = [
            row("a", "baseline-v2", "NameError"),
            row("b", "baseline-v2", "ImportError"),
            row("c", "baseline-v2", "ImportError"),
            row("d", "baseline-v2", "EOFError"),
        ]
        table = tabulate(rows, "baseline-v2")
        assert [r.outcome_class for r in table] == ["ImportError", "EOFError", "NameError"]

    def test_percents_sum_to_hundred(self):
        rows = [row(str(i), "baseline-v2", cls) for i, cls in enumerate(
            ["A", "A", "B", "C", "C", "C", "D"]
        )]
        table = tabulate(rows, "baseline-v2")
        assert abs(sum(r.percent for r in table) - 100.0) < 0.1

    def test_unknown_phase_is_empty(self):
        assert tabulate([row("a", "baseline-v2", "Success")], "post-inference-v3") == []

    def test_format_has_headers(self):
        text = format_table(tabulate([row("a", "baseline-v2", "Success")], "baseline-v2"))
        assert "Result" in text and "Count" in text and "Percent" in text
        assert "100.0%" in text


class TestComputeGain:
    def test_fixture_hand_count(self):
        rows = [
            row("a", "baseline-v2", "ImportError"),
            row("b", "baseline-v2", "ImportError"),
            row("c", "baseline-v2", "ImportError"),
            row("d", "baseline-v2", "ImportError"),
            row("a", "post-inference-v2", "Success"),
            row("b", "post-inference-v2", "NameError"),
            row("c", "post-inference-v2", "ImportError"),
            row("d", "post-inference-v2", "ModuleNotFoundError"),
        ]
        gain = compute_gain(rows, "baseline-v2", "post-inference-v2")
        assert gain.eligible == 4
        assert gain.left_family == 2
        assert gain.newly_successful == 1

    def test_identical_phases_zero_gain(self):
        rows = [
            row("a", "baseline-v2", "ImportError"),
            row("a", "post-inference-v2", "ImportError"),
        ]
        gain = compute_gain(rows, "baseline-v2", "post-inference-v2")
        assert gain.left_family == 0

    def test_empty_to_phase(self):
        rows = [row("a", "baseline-v2", "ImportError")]
        gain = compute_gain(rows, "baseline-v2", "post-inference-v2")
        assert gain.left_family == 0 and gain.eligible == 0

    def test_orphan_to_phase_id_raises(self):
        rows = [row("a", "post-inference-v2", "Success")]
        with pytest.raises(ReportError):
            compute_gain(rows, "baseline-v2", "post-inference-v2")

    def test_gain_bounded_by_family_count(self):
        rows = [
            row("a", "baseline-v2", "ImportError"),
            row("b", "baseline-v2", "NameError"),
            row("a", "post-inference-v2", "Success"),
        ]
        gain = compute_gain(rows, "baseline-v2", "post-inference-v2")
        assert 0 <= gain.left_family <= gain.eligible == 1


class TestCorpusMetrics:
    def put(self, store, snippet_id, source):
        store.put_snippet(
            SnippetRecord(
                id=snippet_id,
                filename="snippet.py",
                source=source,
                language_tag="Python",
                stars=1,
                created_at=FIXED_CREATED_AT,
                origin_url="",
            )
        )

    def test_mean_lines(self, tmp_path):
        store = CorpusStore(tmp_path / "store")
        self.put(store, "three", "a = 1\nb = 2\nc = 3\n")
        self.put(store, "five", "a = 1\n\n# comment\nb = 2\nc = 3\n")
        metrics = corpus_metrics(store)
        assert metrics.mean_lines == 4.0
        assert metrics.snippet_count == 2

    def test_empty_corpus(self, tmp_path):
        metrics = corpus_metrics(CorpusStore(tmp_path / "store"))
        assert metrics.snippet_count == 0
        assert metrics.mean_lines == 0.0
        assert metrics.unique_third_party == 0

    def test_unique_third_party_hand_count(self, tmp_path):
        store = CorpusStore(tmp_path / "store")
        self.put(store, "one", "import requests\nimport json\n")
        self.put(store, "two", "import networkx\nimport requests\n")
        manifest = StdlibManifest(base_image="python:2.7.13", modules=frozenset({"json"}))
        metrics = corpus_metrics(store, manifest)
        assert metrics.unique_third_party == 2
