"""Shim acceptance: class-name fidelity against a bare interpreter.

For every fixture snippet the shim's reported exception class must equal
what a bare interpreter run leaves behind, and the sentinel must appear
exactly once, as the final stderr line. The looping fixture cannot emit a
sentinel (both runs are killed at the wall clock); agreement there means
both runs time out.
"""

import json
import re
import subprocess
import sys
from pathlib import Path

SHIM = Path(__file__).resolve().parent.parent / "shim.py"
CORPUS = Path(__file__).resolve().parent.parent.parent / "fixtures" / "corpus"
SENTINEL_PREFIX = "SNIPHARNESS_RESULT:"
RUN_TIMEOUT = 4

FIXTURE_FILES = sorted(CORPUS.glob("fx-*.py"))

_EXC_LINE = re.compile(r"^([A-Za-z_][A-Za-z0-9_.]*)(?::\s?(.*))?$")


def run(args):
    """Run a command; returns (exit_code, stdout, stderr, timed_out)."""
    try:
        proc = subprocess.run(
            args,
            stdin=subprocess.DEVNULL,
            capture_output=True,
            text=True,
            timeout=RUN_TIMEOUT,
        )
    except subprocess.TimeoutExpired:
        return None, "", "", True
    return proc.returncode, proc.stdout, proc.stderr, False


def bare_exception_name(stderr, exit_code):
    """What a bare interpreter run says: the final traceback class, or
    SystemExit for a bare nonzero exit, or None on success."""
    for line in reversed(stderr.splitlines()):
        if not line.strip():
            continue
        match = _EXC_LINE.match(line)
        if match and line[:1] not in (" ", "\t"):
            name = match.group(1).rsplit(".", 1)[-1]
            if name[:1].isupper():
                return match.group(1)
        break
    return None if exit_code == 0 else "SystemExit"


def sentinel_lines(stderr):
    return [
        line for line in stderr.splitlines() if line.strip().startswith(SENTINEL_PREFIX)
    ]


def parse_sentinel(stderr):
    lines = sentinel_lines(stderr)
    assert len(lines) == 1, f"expected exactly one sentinel, got {len(lines)}"
    non_empty = [line for line in stderr.splitlines() if line.strip()]
    assert non_empty[-1] == lines[0], "sentinel must be the final stderr line"
    return json.loads(lines[0].split(SENTINEL_PREFIX, 1)[1].strip())


def check_one(snippet):
    shim_code, shim_out, shim_err, shim_killed = run(
        [sys.executable, str(SHIM), str(snippet)]
    )
    bare_code, bare_out, bare_err, bare_killed = run([sys.executable, str(snippet)])

    if bare_killed or shim_killed:
        # the looping fixture: agreement means both runs hit the wall clock
        assert shim_killed and bare_killed, snippet.stem
        return

    record = parse_sentinel(shim_err)
    expected = bare_exception_name(bare_err, bare_code)
    if expected is None:
        assert record == {"status": "success"}, snippet.stem
        assert shim_code == 0, snippet.stem
    else:
        assert record["status"] == "exception", snippet.stem
        assert record["exception_name"] == expected, snippet.stem

    # pass-through fidelity: snippet stdout identical to a bare run
    assert shim_out == bare_out, snippet.stem
    # exit status parity
    assert shim_code == bare_code, snippet.stem


def test_criterion_7_shim_fidelity(capsys):
    assert len(FIXTURE_FILES) == 12
    for snippet in FIXTURE_FILES:
        check_one(snippet)
    with capsys.disabled():
        print(
            "ACCEPTANCE 7: PASS — shim agreed with the bare interpreter on "
            f"{len(FIXTURE_FILES)}/{len(FIXTURE_FILES)} fixtures; sentinel once, final line"
        )


def test_systemexit_code_propagates(tmp_path):
    snippet = tmp_path / "exit3.py"
    snippet.write_text("import sys\nsys.exit(3)\n")
    code, _, err, _ = run([sys.executable, str(SHIM), str(snippet)])
    record = parse_sentinel(err)
    assert record["exception_name"] == "SystemExit"
    assert code == 3


def test_zero_status_exit_request(tmp_path):
    snippet = tmp_path / "exit0.py"
    snippet.write_text("import sys\nsys.exit()\n")
    code, _, err, _ = run([sys.executable, str(SHIM), str(snippet)])
    record = parse_sentinel(err)
    assert record["exception_name"] == "SystemExit"
    assert code == 0


def test_string_exit_prints_message(tmp_path):
    snippet = tmp_path / "boom.py"
    snippet.write_text("import sys\nsys.exit('boom')\n")
    code, _, err, _ = run([sys.executable, str(SHIM), str(snippet)])
    assert code == 1
    assert "boom" in err.splitlines()[0]
    assert parse_sentinel(err)["exception_message"] == "boom"


def test_empty_snippet_succeeds(tmp_path):
    snippet = tmp_path / "empty.py"
    snippet.write_text("")
    code, _, err, _ = run([sys.executable, str(SHIM), str(snippet)])
    assert code == 0
    assert parse_sentinel(err) == {"status": "success"}


def test_main_guard_blocks_execute(tmp_path):
    snippet = tmp_path / "guarded.py"
    snippet.write_text("if __name__ == '__main__':\n    print('ran as main')\n")
    code, out, _, _ = run([sys.executable, str(SHIM), str(snippet)])
    assert code == 0
    assert out == "ran as main\n"


def test_unreadable_entry_reports_shim_internal(tmp_path):
    code, _, err, _ = run([sys.executable, str(SHIM), str(tmp_path / "missing.py")])
    record = parse_sentinel(err)
    assert record["exception_name"] == "ShimInternalError"
    assert code == 1


def test_stderr_passthrough_before_sentinel(tmp_path):
    snippet = tmp_path / "noisy.py"
    snippet.write_text("import sys\nsys.stderr.write('warning line\\n')\nprint('done')\n")
    code, out, err, _ = run([sys.executable, str(SHIM), str(snippet)])
    assert code == 0
    assert out == "done\n"
    lines = err.splitlines()
    assert lines[0] == "warning line"
    assert lines[-1].startswith(SENTINEL_PREFIX)
