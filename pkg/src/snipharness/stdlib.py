"""Standard-library baselines for the pinned interpreter images.

A module name counts as standard library when a clean container of the
base image can import it. Probing a live image is the operational
definition; static manifests bundled with the package keep the offline
test suite and desk-scale runs container-free.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path

from .errors import ManifestError, ProbeError, ValidationError
from .records import StdlibManifest

_BUNDLED = {
    "python:2.7.13": "stdlib_python2.7.13.json",
    "python:3.6.5": "stdlib_python3.6.5.json",
}

# Runs under both pinned interpreters; reads one candidate per line and
# answers with the OK/FAIL line protocol.
PROBE_SCRIPT = """\
import sys


def main():
    with open("candidates.txt") as fh:
        names = [line.strip() for line in fh if line.strip()]
    for name in names:
        try:
            __import__(name)
        except BaseException:
            sys.stdout.write("FAIL %s\\n" % name)
        else:
            sys.stdout.write("OK %s\\n" % name)
    sys.stdout.flush()


if __name__ == "__main__":
    main()
"""

_PROBE_DOCKERFILE = """\
FROM {base_image}
ADD probe_stdlib.py probe_stdlib.py
ADD candidates.txt candidates.txt
CMD ["python", "probe_stdlib.py"]
"""


def probe_manifest(base_image: str, candidates, runtime, *, timeout: float = 300) -> StdlibManifest:
    """Probe a clean image: every importable candidate is standard library.

    Per-name import crashes count as "not stdlib" and are never fatal;
    only a container that fails to launch or answers nothing raises.
    """
    names = sorted(set(candidates))
    if not names:
        raise ValidationError("candidate set must be non-empty")

    import tempfile

    with tempfile.TemporaryDirectory(prefix="snipharness-probe-") as ctx:
        ctx_path = Path(ctx)
        (ctx_path / "probe_stdlib.py").write_text(PROBE_SCRIPT, encoding="utf-8")
        (ctx_path / "candidates.txt").write_text(
            "".join(name + "\n" for name in names), encoding="utf-8"
        )
        (ctx_path / "Dockerfile").write_text(
            _PROBE_DOCKERFILE.format(base_image=base_image), encoding="utf-8"
        )
        try:
            image = runtime.build(ctx_path)
            result = runtime.run(image, timeout=timeout)
        except ProbeError:
            raise
        except Exception as exc:
            raise ProbeError(f"stdlib probe for {base_image} failed: {exc}") from exc

    if result.timed_out:
        raise ProbeError(f"stdlib probe for {base_image} timed out")
    modules = parse_probe_output(result.stdout)
    if not modules and result.exit_code != 0:
        raise ProbeError(
            f"stdlib probe for {base_image} produced no answers "
            f"(exit {result.exit_code})"
        )
    return StdlibManifest(
        base_image=base_image,
        modules=frozenset(modules),
        generated_at=datetime.now(timezone.utc).isoformat(),
        method="probe",
    )


def parse_probe_output(stdout: str) -> set[str]:
    """Collect names answered ``OK``; anything else is not stdlib."""
    modules = set()
    for line in stdout.splitlines():
        parts = line.strip().split(None, 1)
        if len(parts) == 2 and parts[0] == "OK":
            modules.add(parts[1])
    return modules


def save_manifest(manifest: StdlibManifest, path) -> None:
    payload = {
        "base_image": manifest.base_image,
        "method": manifest.method,
        "generated_at": manifest.generated_at,
        "modules": sorted(manifest.modules),
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def load_manifest(path) -> StdlibManifest:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc}") from exc
    return _manifest_from_dict(data, str(path))


def _manifest_from_dict(data, origin: str) -> StdlibManifest:
    if not isinstance(data, dict):
        raise ManifestError(f"manifest {origin} is not a JSON object")
    for key in ("base_image", "modules"):
        if key not in data:
            raise ManifestError(f"manifest {origin} is missing {key!r}")
    modules = data["modules"]
    if not isinstance(modules, list) or not all(isinstance(m, str) for m in modules):
        raise ManifestError(f"manifest {origin} has a malformed module list")
    return StdlibManifest(
        base_image=data["base_image"],
        modules=frozenset(modules),
        generated_at=data.get("generated_at", ""),
        method=data.get("method", "static-file"),
    )


def bundled_manifest(base_image: str) -> StdlibManifest:
    """Load the static manifest shipped for one of the pinned images."""
    try:
        filename = _BUNDLED[base_image]
    except KeyError:
        raise ManifestError(
            f"no bundled manifest for {base_image!r}; "
            f"known images: {sorted(_BUNDLED)}"
        ) from None
    text = resources.files("snipharness.data").joinpath(filename).read_text("utf-8")
    return _manifest_from_dict(json.loads(text), filename)


def filter_third_party(names, manifest: StdlibManifest) -> list[str]:
    """Drop names present in the manifest; order and first occurrence kept."""
    kept: list[str] = []
    for name in names:
        if name in manifest.modules or name in kept:
            continue
        kept.append(name)
    return kept


def probe_candidates(store, seed=None) -> set[str]:
    """Candidate universe for a probe: every top-level name observed in
    the corpus, plus a seed list (the bundled manifest by default).

    Probing "all possible names" is impossible; probing what the corpus
    actually imports is the operational substitute.
    """
    import warnings

    from .imports import ScanDiagnostic, extract_imports, top_level_names

    if seed is None:
        seed = bundled_manifest("python:2.7.13").modules
    candidates = set(seed)
    for snippet_id in store.list_ids():
        record = store.get_snippet(snippet_id)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ScanDiagnostic)
            candidates.update(top_level_names(extract_imports(record.source)))
    return candidates
