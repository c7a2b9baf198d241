"""Snippet executability toolchain.

Mines single-file code snippets, infers the third-party packages they
need, renders container build files, executes snippets in isolation, and
aggregates the failure classes.
"""

from .errors import (
    GatingError,
    InfraError,
    ManifestError,
    MineError,
    ProbeError,
    RenderError,
    ReportError,
    SnipharnessError,
    SnippetNotFound,
    StoreError,
    ValidationError,
)
from .records import (
    EnvironmentSpec,
    ExecutionOutcome,
    ImportDecl,
    InstallReport,
    InstallResult,
    SnippetRecord,
    StdlibManifest,
)

__version__ = "0.1.0"

__all__ = [
    "EnvironmentSpec",
    "ExecutionOutcome",
    "GatingError",
    "ImportDecl",
    "InfraError",
    "InstallReport",
    "InstallResult",
    "ManifestError",
    "MineError",
    "ProbeError",
    "RenderError",
    "ReportError",
    "SnipharnessError",
    "SnippetNotFound",
    "SnippetRecord",
    "StdlibManifest",
    "StoreError",
    "ValidationError",
    "__version__",
]
