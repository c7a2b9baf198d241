#!/usr/bin/env python3
"""Generate the differential parser fixtures and their golden answers.

Writes fixtures/differential/files/f###.py plus goldens.json mapping each
file to its sorted [module_path, relative_level] pairs, computed offline
with the interpreter's own ast module. The golden side never touches the
package's parser, so the check stays a true dual route.

Deterministic for a fixed seed; rerun after editing the template bank.
"""

import ast
import json
import random
import sys
from pathlib import Path

SEED = 20260809
COUNT = 220

PLAIN_MODULES = [
    "os", "sys", "json", "requests", "numpy", "collections", "re",
    "itertools", "functools", "flask", "django", "scrapy", "bs4", "i3",
    "kazoo", "simplejson", "six", "yaml", "lxml", "pandas", "café",
]
DOTTED_MODULES = [
    "os.path", "xml.etree.ElementTree", "kazoo.client", "zope.interface",
    "networkx.drawing.nx_agraph", "matplotlib.pyplot", "concurrent.futures",
    "a.b.c", "pkg.sub.mod",
]
NAMES = ["alpha", "beta", "gamma", "delta", "run", "main", "Thing", "helper"]


def plain_import(rng):
    clauses = []
    for _ in range(rng.randint(1, 3)):
        module = rng.choice(PLAIN_MODULES + DOTTED_MODULES)
        if rng.random() < 0.4:
            clauses.append(f"{module} as {rng.choice(NAMES)}")
        else:
            clauses.append(module)
    return "import " + ", ".join(clauses)


def from_import(rng):
    roll = rng.random()
    if roll < 0.15:
        dots = "." * rng.randint(1, 3)
        module = dots if rng.random() < 0.5 else dots + rng.choice(["sib", "helpers"])
        names = ", ".join(rng.sample(NAMES, rng.randint(1, 2)))
        return f"from {module} import {names}"
    module = rng.choice(PLAIN_MODULES + DOTTED_MODULES)
    if roll < 0.25:
        return f"from {module} import *"
    count = rng.randint(1, 4)
    chosen = rng.sample(NAMES, min(count, len(NAMES)))
    parts = [
        f"{name} as {rng.choice(NAMES)}" if rng.random() < 0.3 else name
        for name in chosen
    ]
    if rng.random() < 0.35:
        inner = ",\n    ".join(parts)
        trailing = "," if rng.random() < 0.5 else ""
        return f"from {module} import (\n    {inner}{trailing}\n)"
    return f"from {module} import " + ", ".join(parts)


def future_import(rng):
    feature = rng.choice(["print_function", "division", "unicode_literals"])
    return f"from __future__ import {feature}"


def continued_import(rng):
    module = rng.choice(PLAIN_MODULES)
    if rng.random() < 0.5:
        return f"import \\\n    {module}"
    return f"from {module} \\\n    import {rng.choice(NAMES)}"


def semicolon_line(rng):
    return "; ".join(
        rng.choice([plain_import(rng).replace("\n", " "), "x = 1", "y = []"])
        for _ in range(rng.randint(2, 3))
    )


def inline_compound(rng):
    head = rng.choice(["if True:", "if x:", "while False:", "for i in range(1):"])
    if head == "if x:":
        return "x = 0\n" + f"{head} {plain_import(rng)}"
    return f"{head} {plain_import(rng)}"


def decoy_string(rng):
    decoys = [
        "s = 'import fake_from_string'",
        's = "from fake import nothing"',
        't = """\nimport hidden_one\nfrom hidden import two\n"""',
        "u = '''from ghost import name'''",
        "v = 'semi; import also_fake; done'",
        "w = r'\\n import raw_decoy'",
        "x = b'import byte_decoy'",
        "y = f'import {1 + 1}'",
        "z = 'unbalanced ( [ { quote \\' inside'",
        'q = "colon: import colon_decoy"',
    ]
    return rng.choice(decoys)


def decoy_comment(rng):
    comments = [
        "# import commented_out",
        "# from nowhere import nothing",
        "pass  # import trailing_decoy",
        "value = 10  # from x import y",
    ]
    return rng.choice(comments)


def nested_block(rng):
    body = plain_import(rng).replace("\n", " ")
    shapes = [
        f"def {rng.choice(NAMES)}():\n    {body}\n    return None",
        f"class Wrapper:\n    {body}\n    def method(self):\n        {from_import(rng) if rng.random() < 0.5 else body}",
        f"try:\n    {body}\nexcept ImportError:\n    fallback = None",
        f"if __name__ == '__main__':\n    {body}",
        f"def outer(arg: int = 3) -> str:\n    {body}\n    return ''",
        f"with open('/dev/null') as handle:\n    {body}",
    ]
    text = rng.choice(shapes)
    # parenthesized from-imports cannot be collapsed into a suite line
    return text


def plain_statement(rng):
    statements = [
        "x = {1: 'one', 2: 'two'}",
        "y = [i for i in range(3)]",
        "z = (1,\n     2,\n     3)",
        "f = lambda value: value + 1",
        "annotated: int = 7",
        "sliced = [0, 1, 2][0:2]",
        "print('plain output')",
        "total = sum([1, 2, 3]); print(total)",
        "data = {'key': [1, 2], 'other': {'nested': True}}",
        "call = len('import literal_inside_call')",
    ]
    return rng.choice(statements)


BLOCKS = [
    (plain_import, 4),
    (from_import, 4),
    (future_import, 1),
    (continued_import, 1),
    (semicolon_line, 1),
    (inline_compound, 1),
    (decoy_string, 3),
    (decoy_comment, 2),
    (nested_block, 2),
    (plain_statement, 3),
]


def build_file(rng) -> str:
    parts = []
    if rng.random() < 0.2:
        parts.append("#!/usr/bin/env python")
    if rng.random() < 0.15:
        parts.append("# -*- coding: utf-8 -*-")
    weighted = [fn for fn, weight in BLOCKS for _ in range(weight)]
    for _ in range(rng.randint(3, 10)):
        parts.append(rng.choice(weighted)(rng))
    return "\n".join(parts) + "\n"


def golden_pairs(source: str):
    pairs = set()
    for node in ast.walk(ast.parse(source)):
        if isinstance(node, ast.Import):
            pairs.update((alias.name, 0) for alias in node.names)
        elif isinstance(node, ast.ImportFrom):
            pairs.add((node.module or "", node.level))
    return sorted(pairs)


def main() -> int:
    out_dir = Path(__file__).resolve().parent.parent / "fixtures" / "differential"
    files_dir = out_dir / "files"
    files_dir.mkdir(parents=True, exist_ok=True)
    for stale in files_dir.glob("f*.py"):
        stale.unlink()

    rng = random.Random(SEED)
    goldens = {}
    written = 0
    while written < COUNT:
        source = build_file(rng)
        try:
            pairs = golden_pairs(source)
        except SyntaxError as exc:
            print(f"skipping an invalid candidate: {exc}", file=sys.stderr)
            continue
        name = f"f{written:03d}.py"
        (files_dir / name).write_text(source, encoding="utf-8")
        goldens[name] = [[module, level] for module, level in pairs]
        written += 1

    (out_dir / "goldens.json").write_text(
        json.dumps(goldens, indent=1, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(f"wrote {written} files and goldens.json under {out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
