import pytest

from snipharness.dockerfile import parse_pip_packages, render, write_dockerfile
from snipharness.errors import RenderError, ValidationError
from snipharness.records import EnvironmentSpec
from snipharness.store import CorpusStore

GEOCODE_SPEC = EnvironmentSpec(
    base_image="python:2.7.13",
    entry_file="snippet.py",
    language_packages=("requests",),
)

GRAPH_SPEC = EnvironmentSpec(
    base_image="python:2.7.13",
    entry_file="snippet.py",
    env_vars=(("MPLBACKEND", "Agg"),),
    volumes=("/output",),
    system_packages=("graphviz",),
    language_packages=("pygraphviz", "matplotlib", "networkx"),
)


def test_minimal_four_lines():
    assert render(GEOCODE_SPEC) == (
        "FROM python:2.7.13\n"
        "ADD snippet.py snippet.py\n"
        'RUN ["pip", "install", "requests"]\n'
        'CMD ["python", "snippet.py"]\n'
    )


def test_zero_packages_renders_from_add_cmd_only():
    spec = EnvironmentSpec(base_image="python:2.7.13", entry_file="snippet.py")
    text = render(spec)
    assert text.splitlines() == [
        "FROM python:2.7.13",
        "ADD snippet.py snippet.py",
        'CMD ["python", "snippet.py"]',
    ]
    assert text.endswith("\n")


def test_manual_spec_includes_env_volume_apt():
    text = render(GRAPH_SPEC)
    assert "ENV MPLBACKEND Agg\n" in text
    assert "VOLUME /output\n" in text
    assert "RUN apt-get update\n" in text
    assert "RUN apt-get install -y graphviz\n" in text
    # apt block comes after ENV/VOLUME and before ADD
    lines = text.splitlines()
    assert lines.index("RUN apt-get update") < lines.index("ADD snippet.py snippet.py")


def test_pip_line_count_matches_packages():
    text = render(GRAPH_SPEC)
    assert parse_pip_packages(text) == ["pygraphviz", "matplotlib", "networkx"]


def test_shim_mode_wraps_cmd():
    text = render(GEOCODE_SPEC, shim_file="shim.py")
    lines = text.splitlines()
    assert "ADD shim.py shim.py" in lines
    assert lines[-1] == 'CMD ["python", "shim.py", "snippet.py"]'


def test_render_rejects_invalid_spec():
    with pytest.raises(RenderError):
        render(EnvironmentSpec(base_image="", entry_file="snippet.py"))
    with pytest.raises(RenderError):
        render(
            EnvironmentSpec(
                base_image="python:2.7.13",
                entry_file="snippet.py",
                language_packages=("requests", "requests"),
            )
        )


def test_write_round_trip_and_determinism(tmp_path, sample_record):
    store = CorpusStore(tmp_path / "store")
    store.put_snippet(sample_record)
    path = write_dockerfile(sample_record.id, GEOCODE_SPEC, store)
    first = path.read_text()
    assert first == render(GEOCODE_SPEC)
    write_dockerfile(sample_record.id, GEOCODE_SPEC, store)
    assert path.read_text() == first


def test_write_unknown_record(tmp_path):
    store = CorpusStore(tmp_path / "store")
    with pytest.raises(ValidationError):
        write_dockerfile("ghost", GEOCODE_SPEC, store)


def test_render_injective_on_serialized_fields():
    variants = [
        GEOCODE_SPEC,
        GRAPH_SPEC,
        EnvironmentSpec(base_image="python:3.6.5", entry_file="snippet.py"),
        EnvironmentSpec(base_image="python:2.7.13", entry_file="other.py"),
        EnvironmentSpec(
            base_image="python:2.7.13",
            entry_file="snippet.py",
            language_packages=("requests", "flask"),
        ),
        EnvironmentSpec(
            base_image="python:2.7.13",
            entry_file="snippet.py",
            env_vars=(("MPLBACKEND", "Agg"),),
        ),
    ]
    rendered = [render(spec) for spec in variants]
    assert len(set(rendered)) == len(variants)
