"""Immutable domain records passed between modules.

Everything here is a frozen value type, safe to hand across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone

from .errors import ValidationError

ID_PATTERN = re.compile(r"^[A-Za-z0-9_-]+$")

PHASES = ("baseline-v2", "baseline-v3", "post-inference-v2", "post-inference-v3")

# python:2.7.13 is the primary baseline image; python:3.6.5 the secondary one.
PHASE_BASE_IMAGES = {
    "baseline-v2": "python:2.7.13",
    "baseline-v3": "python:3.6.5",
    "post-inference-v2": "python:2.7.13",
    "post-inference-v3": "python:3.6.5",
}

# ModuleNotFoundError is a direct subclass of ImportError on Python 3.6; the
# two are treated as one failure family everywhere (gating, gains, reports).
IMPORT_ERROR_FAMILY = frozenset({"ImportError", "ModuleNotFoundError"})

OUTCOME_SUCCESS = "Success"
OUTCOME_TIMEOUT = "Timeout"
OUTCOME_INFRA = "Infra"


def parse_timestamp(value: str) -> datetime:
    """Parse an ISO-8601 timestamp, accepting a trailing ``Z`` for UTC."""
    if value.endswith("Z"):
        value = value[:-1] + "+00:00"
    try:
        parsed = datetime.fromisoformat(value)
    except ValueError as exc:
        raise ValidationError(f"bad timestamp {value!r}: {exc}") from None
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed


def sanitize_id(raw: str) -> str:
    """Map an arbitrary identifier onto the filesystem-safe alphabet."""
    cleaned = re.sub(r"[^A-Za-z0-9_-]", "_", raw)
    if not cleaned:
        raise ValidationError("identifier is empty after sanitization")
    return cleaned


@dataclass(frozen=True)
class SnippetRecord:
    """One mined snippet: identity, source text, and provenance."""

    id: str
    filename: str
    source: str
    language_tag: str
    stars: int
    created_at: datetime
    origin_url: str

    def validate(self) -> None:
        if not self.id or not ID_PATTERN.match(self.id):
            raise ValidationError(f"snippet id {self.id!r} is not filesystem-safe")
        if not self.filename or "/" in self.filename or "\\" in self.filename:
            raise ValidationError(f"filename {self.filename!r} must be a bare file name")
        if self.filename in (".", ".."):
            raise ValidationError(f"filename {self.filename!r} must be a bare file name")
        if self.stars < 0:
            raise ValidationError("stars must be non-negative")


@dataclass(frozen=True)
class ImportDecl:
    """One parsed import declaration.

    ``imported_names`` is empty for plain ``import`` forms; ``relative_level``
    counts leading dots, and a positive level never yields an install
    candidate. ``module_path`` is empty only for pure-relative imports.
    """

    module_path: str
    imported_names: tuple[tuple[str, str | None], ...] = ()
    module_alias: str | None = None
    relative_level: int = 0
    is_star: bool = False
    line: int = 0

    @property
    def top_level_name(self) -> str:
        return self.module_path.split(".", 1)[0] if self.module_path else ""


@dataclass(frozen=True)
class EnvironmentSpec:
    """Everything needed to build a runnable image for one snippet."""

    base_image: str
    entry_file: str
    env_vars: tuple[tuple[str, str], ...] = ()
    volumes: tuple[str, ...] = ()
    system_packages: tuple[str, ...] = ()
    language_packages: tuple[str, ...] = ()
    diagnostics: tuple[str, ...] = ()

    def validate(self) -> None:
        if not self.base_image:
            raise ValidationError("base_image must be non-empty")
        if not self.entry_file:
            raise ValidationError("entry_file must be set")
        for label, values in (
            ("env_vars", [k for k, _ in self.env_vars]),
            ("volumes", self.volumes),
            ("system_packages", self.system_packages),
            ("language_packages", self.language_packages),
        ):
            if len(values) != len(set(values)):
                raise ValidationError(f"duplicate entries in {label}: {values!r}")

    def with_language_packages(self, packages) -> "EnvironmentSpec":
        return replace(self, language_packages=tuple(packages))


@dataclass(frozen=True)
class InstallResult:
    package: str
    status: str  # "installed" | "failed"
    message: str = ""


@dataclass(frozen=True)
class InstallReport:
    """Per-package outcome of attempting to install a spec's packages."""

    results: tuple[InstallResult, ...] = ()

    @property
    def installed(self) -> tuple[str, ...]:
        return tuple(r.package for r in self.results if r.status == "installed")

    @property
    def failed(self) -> tuple[str, ...]:
        return tuple(r.package for r in self.results if r.status != "installed")

    def to_json(self) -> list[dict]:
        return [
            {"package": r.package, "status": r.status, "message": r.message}
            for r in self.results
        ]

    @classmethod
    def from_json(cls, data) -> "InstallReport":
        return cls(
            tuple(
                InstallResult(d["package"], d["status"], d.get("message", ""))
                for d in data
            )
        )


@dataclass(frozen=True)
class ExecutionOutcome:
    """Classified result of one containerized run."""

    snippet_id: str
    phase: str
    outcome_class: str
    exception_name: str | None
    exception_message: str
    exit_code: int
    duration_ms: int
    stdout_tail: str
    stderr_tail: str
    install_report: InstallReport | None = None

    def to_json(self) -> dict:
        payload = {
            "id": self.snippet_id,
            "phase": self.phase,
            "outcome_class": self.outcome_class,
            "exception_name": self.exception_name,
            "exception_message": self.exception_message,
            "exit_code": self.exit_code,
            "duration_ms": self.duration_ms,
            "stdout_tail": self.stdout_tail,
            "stderr_tail": self.stderr_tail,
        }
        if self.install_report is not None:
            payload["install_report"] = self.install_report.to_json()
        return payload

    @classmethod
    def from_json(cls, data: dict) -> "ExecutionOutcome":
        report = data.get("install_report")
        return cls(
            snippet_id=data["id"],
            phase=data["phase"],
            outcome_class=data["outcome_class"],
            exception_name=data.get("exception_name"),
            exception_message=data.get("exception_message", ""),
            exit_code=data["exit_code"],
            duration_ms=data["duration_ms"],
            stdout_tail=data.get("stdout_tail", ""),
            stderr_tail=data.get("stderr_tail", ""),
            install_report=InstallReport.from_json(report) if report is not None else None,
        )


@dataclass(frozen=True)
class StdlibManifest:
    """Top-level module names importable in a clean interpreter image."""

    base_image: str
    modules: frozenset[str] = field(default_factory=frozenset)
    generated_at: str = ""
    method: str = "probe"  # "probe" | "static-file"

    def __contains__(self, name: str) -> bool:
        return name in self.modules
