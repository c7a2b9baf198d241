import pytest

from snipharness.errors import ValidationError
from snipharness.harness import FakeRuntime
from snipharness.imports import extract_imports
from snipharness.inference import (
    LookupStrategy,
    LookupTable,
    NaiveStrategy,
    apply_spec,
    bundled_lookup_table,
    infer_spec,
    load_lookup_table,
    prune_to_installed,
    resolve_lookup,
    resolve_naive,
)
from snipharness.records import EnvironmentSpec, ImportDecl
from snipharness.stdlib import bundled_manifest

from conftest import FIXED_CREATED_AT
from snipharness.records import SnippetRecord


def decl(path, level=0):
    return ImportDecl(module_path=path, relative_level=level)


def record(source, snippet_id="r1"):
    return SnippetRecord(
        id=snippet_id,
        filename="snippet.py",
        source=source,
        language_tag="Python",
        stars=1,
        created_at=FIXED_CREATED_AT,
        origin_url="",
    )


class TestResolveNaive:
    def test_keeps_full_dotted_path(self):
        assert resolve_naive(decl("kazoo.client")) == ["kazoo.client"]
        assert resolve_naive(decl("zope.interface")) == ["zope.interface"]
        assert resolve_naive(decl("requests")) == ["requests"]

    def test_top_level_flag(self):
        assert resolve_naive(decl("kazoo.client"), top_level=True) == ["kazoo"]

    def test_relative_yields_nothing(self):
        assert resolve_naive(decl("mod", level=1)) == []
        assert resolve_naive(decl("", level=2)) == []


class TestResolveLookup:
    def test_table_hits(self):
        table = LookupTable(entries=(("i3", "i3-py"), ("bs4", "beautifulsoup4")))
        assert resolve_lookup(decl("i3"), table) == ["i3-py"]
        assert resolve_lookup(decl("bs4"), table) == ["beautifulsoup4"]

    def test_top_level_hit_for_dotted_import(self):
        table = LookupTable(entries=(("bs4", "beautifulsoup4"),))
        assert resolve_lookup(decl("bs4.element"), table) == ["beautifulsoup4"]

    def test_full_path_hit_wins_over_top_level(self):
        table = LookupTable(entries=(("zope.interface", "zope.interface"), ("zope", "Zope2")))
        assert resolve_lookup(decl("zope.interface"), table) == ["zope.interface"]

    def test_miss_falls_back_to_naive(self):
        table = LookupTable(entries=(("i3", "i3-py"),))
        assert resolve_lookup(decl("requests"), table) == ["requests"]


def test_lookup_table_file_round_trip(tmp_path):
    path = tmp_path / "table.tsv"
    path.write_text("# comment\nbs4\tbeautifulsoup4\ni3\ti3-py\n")
    table = load_lookup_table(path)
    assert table.get("bs4") == "beautifulsoup4"
    assert table.get("i3") == "i3-py"
    assert table.get("missing") is None


def test_lookup_table_rejects_duplicates_and_blanks(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("bs4\tbeautifulsoup4\nbs4\tother\n")
    with pytest.raises(ValidationError):
        load_lookup_table(path)
    path.write_text("nameonly\n")
    with pytest.raises(ValidationError):
        load_lookup_table(path)


def test_bundled_table_covers_known_mismatches():
    table = bundled_lookup_table()
    assert table.get("bs4") == "beautifulsoup4"
    assert table.get("i3") == "i3-py"


class TestInferSpec:
    def test_geocode_example(self):
        manifest = bundled_manifest("python:2.7.13")
        spec = infer_spec(
            record("import requests\nimport json\n"),
            manifest,
            NaiveStrategy(),
            "python:2.7.13",
        )
        assert spec.base_image == "python:2.7.13"
        assert spec.entry_file == "snippet.py"
        assert spec.language_packages == ("requests",)
        assert spec.env_vars == () and spec.volumes == () and spec.system_packages == ()

    def test_stdlib_only_source_is_empty(self):
        manifest = bundled_manifest("python:2.7.13")
        spec = infer_spec(
            record("import os.path\nimport sys\nfrom collections import OrderedDict\n"),
            manifest,
            NaiveStrategy(),
            "python:2.7.13",
        )
        assert spec.language_packages == ()

    def test_graph_example_keeps_dotted_forms(self):
        manifest = bundled_manifest("python:2.7.13")
        source = (
            "from networkx.drawing.nx_agraph import graphviz_layout\n"
            "import matplotlib.pyplot as plot\n"
            "import networkx as nx\n"
        )
        spec = infer_spec(record(source), manifest, NaiveStrategy(), "python:2.7.13")
        assert spec.language_packages == (
            "networkx.drawing.nx_agraph",
            "matplotlib.pyplot",
            "networkx",
        )

    def test_relative_and_future_dropped(self):
        manifest = bundled_manifest("python:2.7.13")
        source = "from __future__ import print_function\nfrom . import x\nimport flask\n"
        spec = infer_spec(record(source), manifest, NaiveStrategy(), "python:2.7.13")
        assert spec.language_packages == ("flask",)

    def test_determinism(self):
        manifest = bundled_manifest("python:2.7.13")
        source = "import numpy\nimport numpy\nimport pandas\n"
        first = infer_spec(record(source), manifest, NaiveStrategy(), "python:2.7.13")
        second = infer_spec(record(source), manifest, NaiveStrategy(), "python:2.7.13")
        assert first == second
        assert first.language_packages == ("numpy", "pandas")


class TestApplySpec:
    def spec(self, packages):
        return EnvironmentSpec(
            base_image="python:2.7.13",
            entry_file="snippet.py",
            language_packages=tuple(packages),
        )

    def test_registry_hit_installs(self):
        runtime = FakeRuntime(registry={"requests": ["requests"]})
        report = apply_spec(self.spec(["requests"]), runtime)
        assert report.installed == ("requests",)

    def test_dotted_candidate_fails_but_run_proceeds(self):
        runtime = FakeRuntime(registry={"kazoo": ["kazoo"]})
        report = apply_spec(self.spec(["kazoo.client"]), runtime)
        assert report.installed == ()
        assert report.failed == ("kazoo.client",)

    def test_mixed_failure_does_not_abort(self):
        runtime = FakeRuntime(registry={"requests": ["requests"]})
        report = apply_spec(self.spec(["requests", "nosuchpkg"]), runtime)
        assert report.installed == ("requests",)
        assert report.failed == ("nosuchpkg",)
        assert [r.package for r in report.results] == ["requests", "nosuchpkg"]

    def test_every_package_attempted_exactly_once(self):
        packages = ["a", "b", "c", "d"]
        runtime = FakeRuntime(registry={"b": ["b"], "d": ["d"]})
        report = apply_spec(self.spec(packages), runtime)
        assert [r.package for r in report.results] == packages
        assert report.installed == ("b", "d")

    def test_empty_spec_short_circuits(self):
        report = apply_spec(self.spec([]), FakeRuntime())
        assert report.results == ()

    def test_prune_keeps_order(self):
        spec = self.spec(["one", "two", "three"])
        runtime = FakeRuntime(registry={"three": ["three"], "one": ["one"]})
        pruned = prune_to_installed(spec, apply_spec(spec, runtime))
        assert pruned.language_packages == ("one", "three")


from hypothesis import given, settings
from hypothesis import strategies as st

_PACKAGES = ["alpha", "beta", "gamma", "delta", "epsilon"]


@settings(max_examples=30, deadline=None)
@given(st.sets(st.sampled_from(_PACKAGES)))
def test_failure_isolation_property(failing):
    # whatever subset fails to install, every package is attempted once
    runtime = FakeRuntime(registry={p: [p] for p in _PACKAGES if p not in failing})
    spec = EnvironmentSpec(
        base_image="python:2.7.13",
        entry_file="snippet.py",
        language_packages=tuple(_PACKAGES),
    )
    report = apply_spec(spec, runtime)
    assert [r.package for r in report.results] == _PACKAGES
    assert set(report.failed) == failing


def test_strategies_differ_exactly_on_table_names():
    table = bundled_lookup_table()
    naive = NaiveStrategy()
    lookup = LookupStrategy(table)
    decls = extract_imports(
        "import i3\nimport bs4\nimport requests\nimport kazoo.client\nimport simplejson\n"
    )
    differing = {
        d.module_path: (naive.resolve(d), lookup.resolve(d))
        for d in decls
        if naive.resolve(d) != lookup.resolve(d)
    }
    assert differing == {
        "i3": (["i3"], ["i3-py"]),
        "bs4": (["bs4"], ["beautifulsoup4"]),
    }
