"""Exception hierarchy shared by every part of the toolchain."""


class SnipharnessError(Exception):
    """Base class for all toolchain errors."""


class ValidationError(SnipharnessError):
    """Input violates a documented invariant (bad id, bad query, bad spec)."""


class StoreError(SnipharnessError):
    """The on-disk corpus store could not be read or written."""


class SnippetNotFound(StoreError):
    """No record with the requested id exists in the store."""


class MineError(SnipharnessError):
    """Mining aborted; any records gathered before the failure are kept.

    ``partial`` holds records enumerated before the error; ``stored`` counts
    records already persisted when mining aborted mid-store.
    """

    def __init__(self, message, partial=None, stored=0):
        super().__init__(message)
        self.partial = list(partial or [])
        self.stored = stored


class ProbeError(SnipharnessError):
    """A manifest probe container could not be launched or produced no data."""


class ManifestError(SnipharnessError):
    """A standard-library manifest file is missing fields or unparseable."""


class RenderError(SnipharnessError):
    """An environment spec violates its invariants and cannot be rendered."""


class InfraError(SnipharnessError):
    """Container-level failure (build, launch), distinct from snippet failure."""


class GatingError(SnipharnessError):
    """A post-inference run was requested for ids without an eligible baseline.

    ``rejected`` maps each offending id to the baseline outcome class that made
    it ineligible, or ``None`` when no baseline result exists at all.
    """

    def __init__(self, message, rejected=None):
        super().__init__(message)
        self.rejected = dict(rejected or {})

    @property
    def missing_baseline(self):
        return all(cls is None for cls in self.rejected.values())


class ReportError(SnipharnessError):
    """Aggregation encountered inconsistent phase data."""
