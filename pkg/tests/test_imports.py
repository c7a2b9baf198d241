import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snipharness.imports import (
    ScanDiagnostic,
    extract_imports,
    split_logical_lines,
    top_level_names,
)


def paths(source):
    return [(d.module_path, d.relative_level) for d in extract_imports(source)]


class TestSplitLogicalLines:
    def test_semicolon_splits_statements(self):
        lines = split_logical_lines("import a; import b")
        assert len(lines) == 1
        assert lines[0].statements == ("import a", "import b")

    def test_bracket_continuation_joins(self):
        lines = split_logical_lines("from x import (\n  y,\n  z)")
        assert len(lines) == 1
        assert lines[0].text == "from x import (y, z)"

    def test_string_literal_is_opaque(self):
        lines = split_logical_lines("s = 'import fake'")
        assert lines[0].statements == ("s = 'import fake'",)

    def test_backslash_continuation(self):
        lines = split_logical_lines("import \\\n    textwrap")
        assert lines[0].text == "import textwrap"

    def test_comments_stripped(self):
        lines = split_logical_lines("x = 1  # import nothing\n# bare comment\n")
        assert len(lines) == 1
        assert lines[0].text == "x = 1"

    def test_triple_quote_spans_lines(self):
        lines = split_logical_lines('s = """\nimport hidden\n"""\nimport visible\n')
        assert len(lines) == 2
        assert lines[1].text == "import visible"
        assert lines[1].start_line == 4

    def test_unterminated_triple_consumes_rest(self):
        with pytest.warns(ScanDiagnostic) as caught:
            lines = split_logical_lines('s = """never closed\nimport ghost\n')
        assert any(w.message.kind == "unterminated_literal" for w in caught)
        assert len(lines) == 1  # everything swallowed by the literal

    def test_start_lines_are_physical(self):
        lines = split_logical_lines("\n\nimport late\n")
        assert lines[0].start_line == 3

    def test_lossy_decode_flagged(self):
        with pytest.warns(ScanDiagnostic) as caught:
            lines = split_logical_lines(b"import ok\n\xff\xfe = 1\n")
        assert any(w.message.kind == "lossy_decode" for w in caught)
        assert lines[0].text == "import ok"


class TestExtractImports:
    def test_plain_imports_in_order(self):
        assert paths("import requests\nimport json") == [("requests", 0), ("json", 0)]

    def test_motivating_example_aliases(self):
        source = (
            "from networkx.drawing.nx_agraph import graphviz_layout\n"
            "import matplotlib.pyplot as plot\n"
            "import networkx as nx\n"
        )
        decls = extract_imports(source)
        assert [d.module_path for d in decls] == [
            "networkx.drawing.nx_agraph",
            "matplotlib.pyplot",
            "networkx",
        ]
        assert [d.module_alias for d in decls] == [None, "plot", "nx"]

    def test_pure_relative_import(self):
        (decl,) = extract_imports("from . import sibling")
        assert decl.relative_level == 1
        assert decl.module_path == ""
        assert decl.imported_names == (("sibling", None),)

    def test_multi_clause_import(self):
        assert paths("import a.b, c") == [("a.b", 0), ("c", 0)]

    def test_star_import(self):
        (decl,) = extract_imports("from os import *")
        assert decl.is_star
        assert decl.imported_names == ()

    def test_nested_and_inline_imports(self):
        source = (
            "if True: import json\n"
            "def f():\n"
            "    import os\n"
            "try:\n"
            "    import simplejson\n"
            "except ImportError:\n"
            "    simplejson = None\n"
        )
        assert paths(source) == [("json", 0), ("os", 0), ("simplejson", 0)]

    def test_lines_non_decreasing(self):
        source = "import a\nx = 1\nimport b; import c\nfrom d import (\n e,\n)\n"
        decls = extract_imports(source)
        lines = [d.line for d in decls]
        assert lines == sorted(lines)
        assert lines[0] == 1 and lines[-1] == 4

    def test_malformed_import_skipped_with_diagnostic(self):
        with pytest.warns(ScanDiagnostic) as caught:
            decls = extract_imports("import \nimport good")
        assert any(w.message.kind == "malformed_import" for w in caught)
        assert [d.module_path for d in decls] == ["good"]

    def test_future_import_is_recorded(self):
        (decl,) = extract_imports("from __future__ import print_function")
        assert decl.module_path == "__future__"


class TestTopLevelNames:
    def test_dedup_preserving_order(self):
        decls = extract_imports("import matplotlib.pyplot\nimport networkx\nimport matplotlib")
        assert top_level_names(decls) == ["matplotlib", "networkx"]

    def test_empty(self):
        assert top_level_names([]) == []

    def test_shared_top_component(self):
        decls = extract_imports("import a.b\nimport a.c")
        assert top_level_names(decls) == ["a"]

    def test_relative_excluded(self):
        decls = extract_imports("from . import x\nfrom .mod import y\nimport real")
        assert top_level_names(decls) == ["real"]


@settings(max_examples=60, deadline=None)
@given(st.text(max_size=60))
def test_literal_opacity_property(payload):
    base = extract_imports("import os\nimport requests\n")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        salted = extract_imports(f"import os\ns = {payload!r}\nimport requests\n")
    assert [(d.module_path, d.relative_level) for d in salted] == [
        (d.module_path, d.relative_level) for d in base
    ]


@settings(max_examples=60, deadline=None)
@given(st.text(alphabet=st.characters(blacklist_characters="\n\r"), max_size=60))
def test_comment_opacity_property(payload):
    base = extract_imports("import os\nimport requests\n")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        salted = extract_imports(f"import os\n# {payload}\nimport requests\n")
    assert [(d.module_path, d.relative_level) for d in salted] == [
        (d.module_path, d.relative_level) for d in base
    ]


@settings(max_examples=40, deadline=None)
@given(st.text(max_size=200))
def test_scanner_is_total_and_pure(source):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        first = extract_imports(source)
        second = extract_imports(source)
    assert first == second
