"""Containerized snippet execution with bounded concurrency.

Each snippet runs in a fresh container built from its record directory.
Classification is shim-first: the in-container wrapper reports the
propagated exception class on a sentinel stderr line; when no sentinel is
present the final traceback block is parsed instead.
"""

from __future__ import annotations

import json
import re
import shutil
import subprocess
import threading
import time
import uuid
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import dockerfile
from .errors import GatingError, InfraError, ValidationError
from .inference import apply_spec, infer_spec, prune_to_installed
from .records import (
    IMPORT_ERROR_FAMILY,
    OUTCOME_INFRA,
    OUTCOME_SUCCESS,
    OUTCOME_TIMEOUT,
    PHASES,
    EnvironmentSpec,
    ExecutionOutcome,
    InstallReport,
    SnippetRecord,
)
from .stdlib import bundled_manifest

SENTINEL_PREFIX = "SNIPHARNESS_RESULT:"
SHIM_NAME = "shim.py"
TAIL_BYTES = 4096
DEFAULT_TIMEOUT = 60.0


@dataclass(frozen=True)
class RunResult:
    exit_code: int
    stdout: str
    stderr: str
    duration_ms: int
    timed_out: bool = False


def parse_sentinel(stderr: str) -> dict | None:
    """Return the last shim record found in stderr, if any."""
    record = None
    for line in stderr.splitlines():
        line = line.strip()
        if line.startswith(SENTINEL_PREFIX):
            try:
                record = json.loads(line[len(SENTINEL_PREFIX) :].strip())
            except ValueError:
                continue
    return record if isinstance(record, dict) else None


def strip_sentinel(stderr: str) -> str:
    lines = [
        line
        for line in stderr.splitlines(keepends=True)
        if not line.strip().startswith(SENTINEL_PREFIX)
    ]
    return "".join(lines)


_TRACEBACK_HEADER = "Traceback (most recent call last):"
_EXC_LINE = re.compile(
    r"^([A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z_][A-Za-z0-9_]*)*)(?::\s?(.*))?$"
)
_BARE_EXCEPTIONS = frozenset(
    {"KeyboardInterrupt", "SystemExit", "StopIteration", "StopAsyncIteration", "GeneratorExit"}
)


def _looks_like_exception(name: str) -> bool:
    last = name.rsplit(".", 1)[-1]
    if last in _BARE_EXCEPTIONS:
        return True
    return last[:1].isupper() and last.endswith(
        ("Error", "Exception", "Exit", "Warning", "Interrupt")
    )


def classify_stderr(stderr: str, exit_code: int) -> tuple[str, str | None, str]:
    """Code a run by the name of the error in its final traceback block.

    Total over arbitrary input: exit 0 is Success; a nonzero exit with no
    recognizable traceback is coded SystemExit, which is what a bare
    interpreter leaves behind for ``sys.exit("message")``.
    """
    if exit_code == 0:
        return OUTCOME_SUCCESS, None, ""
    lines = stderr.splitlines()
    header_at = None
    for index, line in enumerate(lines):
        if line.strip() == _TRACEBACK_HEADER:
            header_at = index
    if header_at is not None:
        for line in reversed(lines[header_at + 1 :]):
            match = _EXC_LINE.match(line.rstrip())
            if match and line[:1] not in (" ", "\t"):
                name = match.group(1)
                return name, name, match.group(2) or ""
    else:
        # syntax-stage failures print a file/caret block with no header
        for line in reversed(lines):
            if not line.strip():
                continue
            match = _EXC_LINE.match(line.rstrip())
            if match and line[:1] not in (" ", "\t") and _looks_like_exception(match.group(1)):
                name = match.group(1)
                return name, name, match.group(2) or ""
            break
    message = ""
    for line in reversed(lines):
        if line.strip():
            message = line.strip()
            break
    return "SystemExit", "SystemExit", message


def _tail(text: str) -> str:
    return text[-TAIL_BYTES:]


def prepare_context(
    store,
    record: SnippetRecord,
    spec: EnvironmentSpec,
    *,
    shim_path: Path | None = None,
) -> Path:
    """Write the Dockerfile (and shim, in shim mode) into the record dir."""
    context = store.record_dir(record.id)
    shim_file = None
    if shim_path is not None:
        shutil.copyfile(shim_path, context / SHIM_NAME)
        shim_file = SHIM_NAME
    dockerfile.write_dockerfile(record.id, spec, store, shim_file=shim_file)
    return context


def execute_one(
    record: SnippetRecord,
    spec: EnvironmentSpec,
    runtime,
    timeout: float,
    *,
    phase: str,
    context_dir: Path,
    install_report: InstallReport | None = None,
) -> ExecutionOutcome:
    """Build and run one snippet container and classify the result.

    A failed build is an Infra outcome (the flaky category), never an
    exception; stdin is closed so input-reading snippets raise EOFError.
    """
    try:
        image = runtime.build(context_dir)
    except Exception as exc:
        # nothing executed, so there is no run duration to report
        return ExecutionOutcome(
            snippet_id=record.id,
            phase=phase,
            outcome_class=OUTCOME_INFRA,
            exception_name=None,
            exception_message=str(exc),
            exit_code=-1,
            duration_ms=0,
            stdout_tail="",
            stderr_tail="",
            install_report=install_report,
        )
    result = runtime.run(image, timeout=timeout)

    if result.timed_out:
        outcome_class, exception_name, message = OUTCOME_TIMEOUT, None, f"exceeded {timeout:g}s"
    else:
        shim_record = parse_sentinel(result.stderr)
        if shim_record is not None:
            if shim_record.get("status") == "success" and result.exit_code == 0:
                outcome_class, exception_name, message = OUTCOME_SUCCESS, None, ""
            else:
                exception_name = shim_record.get("exception_name") or "SystemExit"
                outcome_class = exception_name
                message = shim_record.get("exception_message", "")
        else:
            outcome_class, exception_name, message = classify_stderr(
                result.stderr, result.exit_code
            )

    return ExecutionOutcome(
        snippet_id=record.id,
        phase=phase,
        outcome_class=outcome_class,
        exception_name=exception_name,
        exception_message=message,
        exit_code=result.exit_code,
        duration_ms=result.duration_ms,
        stdout_tail=_tail(result.stdout),
        stderr_tail=_tail(strip_sentinel(result.stderr)),
        install_report=install_report,
    )


def latest_class_by_id(results, phase: str) -> dict[str, str]:
    """Latest outcome class per id for one phase (later lines win)."""
    classes: dict[str, str] = {}
    for row in results:
        if row.get("phase") == phase:
            classes[row["id"]] = row.get("outcome_class", "")
    return classes


def run_phase(
    ids,
    phase: str,
    base_image: str,
    strategy,
    runtime,
    workers: int,
    *,
    store,
    timeout: float = DEFAULT_TIMEOUT,
    shim_path: Path | None = None,
    manifest=None,
    install_timeout: float = 600,
) -> list[ExecutionOutcome]:
    """Execute the ids for one evaluation phase with a bounded worker pool.

    Post-inference phases are gated on the baseline-v2 outcome: only ids
    whose first failure was in the ImportError family are eligible;
    requesting any other id raises GatingError before anything runs. The
    returned list follows input order; every outcome is appended to the
    store's result log.
    """
    ids = list(ids)
    if phase not in PHASES:
        raise ValidationError(f"unknown phase {phase!r}; expected one of {PHASES}")
    if workers < 1:
        raise ValidationError("workers must be positive")

    post_inference = phase.startswith("post-inference")
    if post_inference:
        baseline = latest_class_by_id(store.iter_results(), "baseline-v2")
        rejected = {}
        for snippet_id in ids:
            cls = baseline.get(snippet_id)
            if cls not in IMPORT_ERROR_FAMILY:
                rejected[snippet_id] = cls
        if rejected:
            raise GatingError(
                f"{len(rejected)} id(s) lack an ImportError-family baseline-v2 "
                f"outcome: {sorted(rejected)}",
                rejected=rejected,
            )
        if manifest is None:
            manifest = bundled_manifest(base_image)

    def job(snippet_id: str) -> ExecutionOutcome:
        try:
            record = store.get_snippet(snippet_id)
            report = None
            if post_inference:
                spec = infer_spec(record, manifest, strategy, base_image)
                report = apply_spec(spec, runtime, timeout=install_timeout)
                spec = prune_to_installed(spec, report)
            else:
                spec = EnvironmentSpec(base_image=base_image, entry_file=record.filename)
            context = prepare_context(store, record, spec, shim_path=shim_path)
            outcome = execute_one(
                record,
                spec,
                runtime,
                timeout,
                phase=phase,
                context_dir=context,
                install_report=report,
            )
        except Exception as exc:  # per-snippet trouble never aborts the phase
            outcome = ExecutionOutcome(
                snippet_id=snippet_id,
                phase=phase,
                outcome_class=OUTCOME_INFRA,
                exception_name=None,
                exception_message=str(exc),
                exit_code=-1,
                duration_ms=0,
                stdout_tail="",
                stderr_tail="",
            )
        store.append_result(outcome)
        return outcome

    if workers == 1:
        return [job(snippet_id) for snippet_id in ids]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(job, ids))


class DockerRuntime:
    """Adapter over the container engine CLI.

    Each run starts from a fresh container with stdin closed; wall-clock
    timeout is enforced from the host and the container killed on expiry.
    """

    def __init__(self, engine: str = "docker", network: bool = True):
        self.engine = engine
        self.network = network

    @classmethod
    def available(cls, engine: str = "docker") -> bool:
        if shutil.which(engine) is None:
            return False
        try:
            probe = subprocess.run(
                [engine, "version"],
                stdout=subprocess.DEVNULL,
                stderr=subprocess.DEVNULL,
                timeout=20,
            )
        except (OSError, subprocess.TimeoutExpired):
            return False
        return probe.returncode == 0

    def build(self, context_dir) -> str:
        proc = subprocess.run(
            [self.engine, "build", "-q", str(context_dir)],
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            raise InfraError(f"image build failed: {proc.stderr.strip()[-1000:]}")
        return proc.stdout.strip()

    def run(self, image_ref: str, timeout: float) -> RunResult:
        name = f"snipharness-{uuid.uuid4().hex[:12]}"
        cmd = [self.engine, "run", "--rm", "--name", name]
        if not self.network:
            cmd += ["--network", "none"]
        cmd.append(image_ref)
        start = time.monotonic()
        try:
            proc = subprocess.run(
                cmd,
                stdin=subprocess.DEVNULL,
                capture_output=True,
                text=True,
                timeout=timeout,
            )
        except subprocess.TimeoutExpired as exc:
            subprocess.run(
                [self.engine, "rm", "-f", name],
                stdout=subprocess.DEVNULL,
                stderr=subprocess.DEVNULL,
            )
            return RunResult(
                exit_code=-1,
                stdout=_decode(exc.stdout),
                stderr=_decode(exc.stderr),
                duration_ms=int((time.monotonic() - start) * 1000),
                timed_out=True,
            )
        return RunResult(
            exit_code=proc.returncode,
            stdout=proc.stdout,
            stderr=proc.stderr,
            duration_ms=int((time.monotonic() - start) * 1000),
        )


def _decode(data) -> str:
    if data is None:
        return ""
    if isinstance(data, bytes):
        return data.decode("utf-8", errors="replace")
    return data


class FakeRuntime:
    """Scripted runtime for offline runs and the test suite.

    The registry maps installable package names to the module names they
    provide (a plain iterable means each package provides itself). A
    snippet's scripted entry says which modules it needs; with any of
    them missing from the image's installed packages the run fails in the
    ImportError family, otherwise the scripted outcome is returned.
    Deterministic under concurrent use.
    """

    def __init__(
        self,
        registry=None,
        stdlib_modules=(),
        outcomes=None,
        default_outcome=None,
    ):
        self.registry = self._normalize_registry(registry)
        self.stdlib_modules = set(stdlib_modules)
        self.outcomes = {
            key: self._normalize_script(value) for key, value in (outcomes or {}).items()
        }
        self.default_outcome = self._normalize_script(default_outcome or {})
        self._images: dict[str, dict] = {}
        self._lock = threading.Lock()
        self._counter = 0

    @staticmethod
    def _normalize_script(script: dict) -> dict:
        # a flat {exit_code, stderr, shim_record, ...} entry is shorthand
        # for {"outcome": {...}}
        if script and not ({"outcome", "requires", "build_error"} & script.keys()):
            return {"outcome": dict(script)}
        return dict(script)

    @staticmethod
    def _normalize_registry(registry) -> dict[str, set[str]]:
        if registry is None:
            return {}
        if isinstance(registry, dict):
            return {pkg: set(mods) for pkg, mods in registry.items()}
        return {pkg: {pkg.split(".", 1)[0]} for pkg in registry}

    @classmethod
    def from_scenario(cls, path) -> "FakeRuntime":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(
            registry=data.get("registry"),
            stdlib_modules=data.get("stdlib_modules", ()),
            outcomes=data.get("outcomes", {}),
            default_outcome=data.get("default_outcome"),
        )

    def build(self, context_dir) -> str:
        context = Path(context_dir)
        info: dict = {"kind": "snippet", "id": context.name}
        if (context / "packages.txt").is_file():
            info["kind"] = "install-probe"
            info["packages"] = [
                line.strip()
                for line in (context / "packages.txt").read_text().splitlines()
                if line.strip()
            ]
        elif (context / "candidates.txt").is_file():
            info["kind"] = "stdlib-probe"
            info["candidates"] = [
                line.strip()
                for line in (context / "candidates.txt").read_text().splitlines()
                if line.strip()
            ]
        else:
            text = (context / "Dockerfile").read_text(encoding="utf-8")
            info["pip_packages"] = dockerfile.parse_pip_packages(text)
            info["shim_mode"] = f'"{SHIM_NAME}"' in text
            info["base_image"] = ""
            info["entry"] = "snippet.py"
            for line in text.splitlines():
                if line.startswith("FROM "):
                    info["base_image"] = line[len("FROM ") :].strip()
                if line.startswith("ADD ") and line.split()[1] != SHIM_NAME:
                    info["entry"] = line.split()[1]
            script = self.outcomes.get(info["id"], self.default_outcome)
            if script.get("build_error"):
                raise InfraError(str(script["build_error"]))
        with self._lock:
            self._counter += 1
            ref = f"fake:{self._counter}"
            self._images[ref] = info
        return ref

    def run(self, image_ref: str, timeout: float) -> RunResult:
        with self._lock:
            info = self._images[image_ref]
        if info["kind"] == "install-probe":
            lines = [
                f"OK {pkg}" if pkg in self.registry else f"FAIL {pkg} exit=1"
                for pkg in info["packages"]
            ]
            return RunResult(0, "".join(l + "\n" for l in lines), "", 3)
        if info["kind"] == "stdlib-probe":
            lines = [
                f"OK {name}" if name in self.stdlib_modules else f"FAIL {name}"
                for name in info["candidates"]
            ]
            return RunResult(0, "".join(l + "\n" for l in lines), "", 3)
        return self._run_snippet(info, timeout)

    def _run_snippet(self, info: dict, timeout: float) -> RunResult:
        script = self.outcomes.get(info["id"], self.default_outcome)
        provided: set[str] = set()
        for package in info["pip_packages"]:
            provided |= self.registry.get(package, set())
        missing = [m for m in script.get("requires", ()) if m not in provided]
        if missing:
            return self._import_failure(info, missing[0], script)
        outcome = script.get("outcome", {"exit_code": 0})
        stderr = outcome.get("stderr", "")
        shim_record = outcome.get("shim_record")
        if shim_record is not None and info.get("shim_mode"):
            if stderr and not stderr.endswith("\n"):
                stderr += "\n"
            stderr += SENTINEL_PREFIX + " " + json.dumps(shim_record, sort_keys=True) + "\n"
        timed_out = bool(outcome.get("timed_out"))
        return RunResult(
            exit_code=int(outcome.get("exit_code", 0)),
            stdout=outcome.get("stdout", ""),
            stderr=stderr,
            duration_ms=int(
                outcome.get("duration_ms", int(timeout * 1000) if timed_out else 7)
            ),
            timed_out=timed_out,
        )

    def _import_failure(self, info: dict, module: str, script: dict) -> RunResult:
        py3 = ":3" in info.get("base_image", "")
        if py3:
            name, message = "ModuleNotFoundError", f"No module named '{module}'"
        else:
            name, message = "ImportError", f"No module named {module}"
        stderr = (
            f"{_TRACEBACK_HEADER}\n"
            f'  File "{info["entry"]}", line 1, in <module>\n'
            f"{name}: {message}\n"
        )
        if info.get("shim_mode"):
            record = {
                "status": "exception",
                "exception_name": name,
                "exception_message": message,
            }
            stderr += SENTINEL_PREFIX + " " + json.dumps(record, sort_keys=True) + "\n"
        return RunResult(
            exit_code=1,
            stdout="",
            stderr=stderr,
            duration_ms=int(script.get("import_failure_duration_ms", 5)),
        )
