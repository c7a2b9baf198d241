"""In-container snippet runner.

Usage: <interpreter> shim.py <entry_file>

Loads the snippet, executes it as the main program with stdin inherited,
and reports how it terminated on one final stderr line:

    SNIPHARNESS_RESULT: {"status": ..., "exception_name": ..., "exception_message": ...}

The snippet's own stdout and stderr pass through untouched; the sentinel
is emitted exactly once, after everything else. Exit status mirrors a
bare interpreter run: 0 on normal completion or a zero-status interpreter
exit request, the requested code for integer exit requests, 1 otherwise.

Written against the syntax subset shared by Python 2.7 and 3.x so a
single file runs under every supported base image.
"""

import json
import os
import sys
import traceback

SENTINEL_PREFIX = "SNIPHARNESS_RESULT: "

_REAL_STDERR = sys.stderr


def _emit(record):
    """Write the sentinel as the final stderr line; never raise."""
    line = SENTINEL_PREFIX + json.dumps(record, sort_keys=True) + "\n"
    try:
        sys.stdout.flush()
    except Exception:
        pass
    try:
        sys.stderr.flush()
    except Exception:
        pass
    try:
        _REAL_STDERR.write(line)
        _REAL_STDERR.flush()
        return
    except Exception:
        pass
    try:
        os.write(2, line.encode("utf-8"))
    except Exception:
        pass


def _exception_record(value):
    return {
        "status": "exception",
        "exception_name": value.__class__.__name__,
        "exception_message": _stringify(value),
    }


def _stringify(value):
    try:
        return str(value)
    except Exception:
        return "<unprintable %s>" % value.__class__.__name__


def _run(entry_file):
    """Compile and execute the snippet; returns (record, exit_code)."""
    try:
        handle = open(entry_file, "rb")
        try:
            source = handle.read()
        finally:
            handle.close()
    except Exception:
        value = sys.exc_info()[1]
        return (
            {
                "status": "exception",
                "exception_name": "ShimInternalError",
                "exception_message": "cannot read %s: %s" % (entry_file, _stringify(value)),
            },
            1,
        )

    try:
        code = compile(source, entry_file, "exec")
    except BaseException:
        etype, value, _ = sys.exc_info()
        # same caret block a bare interpreter prints for a bad file
        traceback.print_exception(etype, value, None)
        return _exception_record(value), 1

    snippet_globals = {"__name__": "__main__", "__file__": entry_file}
    sys.argv = [entry_file]
    try:
        exec(code, snippet_globals)
    except SystemExit:
        value = sys.exc_info()[1]
        status = getattr(value, "code", None)
        if status is None:
            exit_code = 0
            message = ""
        elif isinstance(status, int):
            exit_code = status
            message = str(status)
        else:
            # the interpreter prints non-integer exit arguments
            try:
                sys.stderr.write("%s\n" % (status,))
            except Exception:
                pass
            exit_code = 1
            message = _stringify(status)
        record = {
            "status": "exception",
            "exception_name": "SystemExit",
            "exception_message": message,
        }
        return record, exit_code
    except BaseException:
        etype, value, tb = sys.exc_info()
        # drop the shim's own exec frame so stderr matches a bare run
        inner = tb.tb_next if tb is not None else None
        traceback.print_exception(etype, value, inner)
        return _exception_record(value), 1
    return {"status": "success"}, 0


def main(argv):
    try:
        if len(argv) < 2:
            record = {
                "status": "exception",
                "exception_name": "ShimInternalError",
                "exception_message": "usage: shim.py <entry_file>",
            }
            exit_code = 1
        else:
            record, exit_code = _run(argv[1])
    except BaseException:
        value = sys.exc_info()[1]
        record = {
            "status": "exception",
            "exception_name": "ShimInternalError",
            "exception_message": _stringify(value),
        }
        exit_code = 1
    _emit(record)
    return exit_code


if __name__ == "__main__":
    sys.exit(main(sys.argv))
