import json
from datetime import datetime, timezone
from pathlib import Path

import pytest

from snipharness.records import SnippetRecord
from snipharness.store import CorpusStore

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
CORPUS_DIR = FIXTURES / "corpus"
INFERENCE_DIR = FIXTURES / "inference"
SHIM_PATH = Path(__file__).resolve().parent.parent / "shim" / "shim.py"

FIXED_CREATED_AT = datetime(2014, 1, 1, tzinfo=timezone.utc)


def fixture_records(directory: Path) -> list[SnippetRecord]:
    records = []
    for path in sorted(directory.glob("*.py")):
        records.append(
            SnippetRecord(
                id=path.stem,
                filename="snippet.py",
                source=path.read_text(encoding="utf-8"),
                language_tag="Python",
                stars=1,
                created_at=FIXED_CREATED_AT,
                origin_url=f"https://gists.example/{path.stem}",
            )
        )
    return records


def seed_store(root: Path, directory: Path) -> CorpusStore:
    store = CorpusStore(root)
    for record in fixture_records(directory):
        store.put_snippet(record)
    return store


def load_json(path: Path):
    return json.loads(path.read_text(encoding="utf-8"))


@pytest.fixture
def corpus_store(tmp_path) -> CorpusStore:
    return seed_store(tmp_path / "corpus", CORPUS_DIR)


@pytest.fixture
def inference_store(tmp_path) -> CorpusStore:
    return seed_store(tmp_path / "inference", INFERENCE_DIR)


@pytest.fixture
def sample_record() -> SnippetRecord:
    return SnippetRecord(
        id="10017416",
        filename="snippet.py",
        source="import requests\nimport json\nprint('geo')\n",
        language_tag="Python",
        stars=3,
        created_at=FIXED_CREATED_AT,
        origin_url="https://gists.example/10017416",
    )
