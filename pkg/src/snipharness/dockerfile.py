"""Deterministic rendering of an environment spec into a Dockerfile.

Line order is fixed: FROM, ENV, VOLUME, apt lines, ADD, pip installs,
CMD. Package installs use exec form and apt lines shell form; output ends
with a trailing newline and uses LF endings throughout.
"""

from __future__ import annotations

from pathlib import Path

from .errors import RenderError, ValidationError
from .records import EnvironmentSpec


def render(spec: EnvironmentSpec, *, shim_file: str | None = None) -> str:
    """Render the build file text for a spec.

    With ``shim_file`` set, the shim is added to the image and becomes the
    entry command, wrapping the snippet; otherwise the snippet runs
    directly.
    """
    try:
        spec.validate()
    except ValidationError as exc:
        raise RenderError(str(exc)) from exc

    lines = [f"FROM {spec.base_image}"]
    for key, value in spec.env_vars:
        lines.append(f"ENV {key} {value}")
    for volume in spec.volumes:
        lines.append(f"VOLUME {volume}")
    if spec.system_packages:
        lines.append("RUN apt-get update")
        for package in spec.system_packages:
            lines.append(f"RUN apt-get install -y {package}")
    lines.append(f"ADD {spec.entry_file} {spec.entry_file}")
    if shim_file:
        lines.append(f"ADD {shim_file} {shim_file}")
    for package in spec.language_packages:
        lines.append(f'RUN ["pip", "install", "{package}"]')
    if shim_file:
        lines.append(f'CMD ["python", "{shim_file}", "{spec.entry_file}"]')
    else:
        lines.append(f'CMD ["python", "{spec.entry_file}"]')
    return "\n".join(lines) + "\n"


def write_dockerfile(
    record_id: str, spec: EnvironmentSpec, store, *, shim_file: str | None = None
) -> Path:
    """Render and store ``<root>/<id>/Dockerfile``, overwrite-atomic."""
    text = render(spec, shim_file=shim_file)
    return store.write_file(record_id, "Dockerfile", text)


def parse_pip_packages(dockerfile_text: str) -> list[str]:
    """Package names from the exec-form pip lines, in order."""
    packages = []
    for line in dockerfile_text.splitlines():
        line = line.strip()
        if line.startswith('RUN ["pip", "install", "') and line.endswith('"]'):
            packages.append(line[len('RUN ["pip", "install", "') : -len('"]')])
    return packages
