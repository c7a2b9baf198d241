"""Environment inference: map imports to installable package candidates.

Two resolution strategies behind one interface: the naive identity
mapping (the import path is assumed to be the install name) and a
reverse-lookup table for names that are known not to match (bs4 imports
come from beautifulsoup4, i3 from i3-py). Install candidates that turn
out not to exist are probed and dropped rather than failing the run.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Protocol

from .errors import InfraError, ValidationError
from .imports import ScanDiagnostic, extract_imports
from .records import (
    EnvironmentSpec,
    ImportDecl,
    InstallReport,
    InstallResult,
    SnippetRecord,
    StdlibManifest,
)

_BUNDLED_TABLE = "module_to_package.tsv"


class ResolutionStrategy(Protocol):
    def resolve(self, decl: ImportDecl) -> list[str]: ...


def resolve_naive(decl: ImportDecl, *, top_level: bool = False) -> list[str]:
    """The import name is assumed to be the install name.

    Default keeps the full dotted path (so ``kazoo.client`` is attempted
    verbatim); ``top_level`` switches to the first dotted component.
    """
    if decl.relative_level > 0 or not decl.module_path:
        return []
    return [decl.top_level_name if top_level else decl.module_path]


@dataclass(frozen=True)
class NaiveStrategy:
    top_level: bool = False

    def resolve(self, decl: ImportDecl) -> list[str]:
        return resolve_naive(decl, top_level=self.top_level)


@dataclass(frozen=True)
class LookupTable:
    """Module name (top-level or dotted) to install name."""

    entries: tuple[tuple[str, str], ...]
    source_path: str = ""

    def get(self, module: str) -> str | None:
        for key, value in self.entries:
            if key == module:
                return value
        return None


def load_lookup_table(path) -> LookupTable:
    path = Path(path)
    entries: list[tuple[str, str]] = []
    seen = set()
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ValidationError(f"{path}:{number}: expected 'module<TAB>package'")
        if parts[0] in seen:
            raise ValidationError(f"{path}:{number}: duplicate module {parts[0]!r}")
        seen.add(parts[0])
        entries.append((parts[0], parts[1]))
    return LookupTable(entries=tuple(entries), source_path=str(path))


def bundled_lookup_table() -> LookupTable:
    text = resources.files("snipharness.data").joinpath(_BUNDLED_TABLE).read_text("utf-8")
    entries = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        module, package = line.split("\t")
        entries.append((module, package))
    return LookupTable(entries=tuple(entries), source_path=_BUNDLED_TABLE)


def resolve_lookup(
    decl: ImportDecl, table: LookupTable, *, top_level: bool = False
) -> list[str]:
    """Reverse lookup: full dotted path first, then the top-level name,
    falling back to the naive mapping on a miss."""
    if decl.relative_level > 0 or not decl.module_path:
        return []
    hit = table.get(decl.module_path)
    if hit is None:
        hit = table.get(decl.top_level_name)
    if hit is not None:
        return [hit]
    return resolve_naive(decl, top_level=top_level)


@dataclass(frozen=True)
class LookupStrategy:
    table: LookupTable
    top_level: bool = False

    def resolve(self, decl: ImportDecl) -> list[str]:
        return resolve_lookup(decl, self.table, top_level=self.top_level)


def infer_spec(
    record: SnippetRecord,
    manifest: StdlibManifest,
    strategy: ResolutionStrategy,
    base_image: str,
) -> EnvironmentSpec:
    """Assemble a spec from the snippet's third-party imports.

    Relative and ``__future__`` imports never produce candidates. Stdlib
    membership is decided on the top-level component: a clean image
    imports ``os.path`` just fine, so dotted stdlib paths are filtered
    even when candidates keep their dotted form. Only the base image,
    entry file, and language packages are populated; nothing else can be
    inferred from imports alone.
    """
    diagnostics: list[str] = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ScanDiagnostic)
        decls = extract_imports(record.source)
    for item in caught:
        if isinstance(item.message, ScanDiagnostic):
            diagnostics.append(str(item.message))

    candidates: list[str] = []
    for decl in decls:
        if decl.relative_level > 0 or not decl.module_path:
            continue
        top = decl.top_level_name
        if top == "__future__" or top in manifest.modules:
            continue
        for name in strategy.resolve(decl):
            if name not in candidates:
                candidates.append(name)

    return EnvironmentSpec(
        base_image=base_image,
        entry_file=record.filename,
        language_packages=tuple(candidates),
        diagnostics=tuple(diagnostics),
    )


# Runs under both pinned interpreters, installing one package per line
# from packages.txt at container run time so a missing package cannot
# fail an image build.
INSTALL_PROBE_SCRIPT = """\
import subprocess
import sys


def main():
    with open("packages.txt") as fh:
        packages = [line.strip() for line in fh if line.strip()]
    for package in packages:
        proc = subprocess.Popen(
            [sys.executable, "-m", "pip", "install", package],
            stdout=subprocess.PIPE,
            stderr=subprocess.STDOUT,
        )
        proc.communicate()
        if proc.returncode == 0:
            sys.stdout.write("OK %s\\n" % package)
        else:
            sys.stdout.write("FAIL %s exit=%d\\n" % (package, proc.returncode))
    sys.stdout.flush()


if __name__ == "__main__":
    main()
"""

_INSTALL_PROBE_DOCKERFILE = """\
FROM {base_image}
ADD probe_install.py probe_install.py
ADD packages.txt packages.txt
CMD ["python", "probe_install.py"]
"""


def apply_spec(spec: EnvironmentSpec, runtime, *, timeout: float = 600) -> InstallReport:
    """Attempt each language package once, in order, inside the target image.

    Failures are recorded and skipped, never raised; only container-level
    trouble (build or launch) raises InfraError.
    """
    if not spec.language_packages:
        return InstallReport()

    import tempfile

    with tempfile.TemporaryDirectory(prefix="snipharness-install-") as ctx:
        ctx_path = Path(ctx)
        (ctx_path / "probe_install.py").write_text(INSTALL_PROBE_SCRIPT, encoding="utf-8")
        (ctx_path / "packages.txt").write_text(
            "".join(pkg + "\n" for pkg in spec.language_packages), encoding="utf-8"
        )
        (ctx_path / "Dockerfile").write_text(
            _INSTALL_PROBE_DOCKERFILE.format(base_image=spec.base_image),
            encoding="utf-8",
        )
        try:
            image = runtime.build(ctx_path)
            result = runtime.run(image, timeout=timeout)
        except InfraError:
            raise
        except Exception as exc:
            raise InfraError(f"install probe failed to launch: {exc}") from exc

    if result.timed_out:
        raise InfraError("install probe timed out")

    answers: dict[str, tuple[str, str]] = {}
    for line in result.stdout.splitlines():
        parts = line.strip().split(None, 2)
        if len(parts) >= 2 and parts[0] in ("OK", "FAIL"):
            status = "installed" if parts[0] == "OK" else "failed"
            answers[parts[1]] = (status, parts[2] if len(parts) > 2 else "")
    results = []
    for package in spec.language_packages:
        status, message = answers.get(package, ("failed", "no probe answer"))
        results.append(InstallResult(package=package, status=status, message=message))
    return InstallReport(results=tuple(results))


def prune_to_installed(spec: EnvironmentSpec, report: InstallReport) -> EnvironmentSpec:
    """Keep only packages that actually installed, preserving order."""
    installed = set(report.installed)
    return spec.with_language_packages(
        pkg for pkg in spec.language_packages if pkg in installed
    )
