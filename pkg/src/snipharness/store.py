"""On-disk corpus store.

Layout under one root directory:

    <root>/<id>/snippet.<ext>   the single source file
    <root>/<id>/meta.json       record fields (source lives only in the file)
    <root>/<id>/Dockerfile      optional, written by the generator
    <root>/results.jsonl        append-only execution log, one JSON per line

Snippet writes swap a fully built temp directory into place; result
appends are funneled through one lock so concurrent workers interleave at
line granularity only.
"""

from __future__ import annotations

import json
import os
import shutil
import tempfile
import threading
import uuid
import warnings
from pathlib import Path
from typing import Iterator

from .errors import SnippetNotFound, StoreError, ValidationError
from .records import ExecutionOutcome, SnippetRecord, parse_timestamp

RESULTS_NAME = "results.jsonl"
META_NAME = "meta.json"


class CorpusStore:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StoreError(f"cannot create store root {self.root}: {exc}") from exc
        self._swap_lock = threading.Lock()
        self._results_lock = threading.Lock()

    @property
    def results_path(self) -> Path:
        return self.root / RESULTS_NAME

    def record_dir(self, snippet_id: str) -> Path:
        return self.root / snippet_id

    def has_snippet(self, snippet_id: str) -> bool:
        return (self.record_dir(snippet_id) / META_NAME).is_file()

    def list_ids(self) -> list[str]:
        ids = []
        for entry in sorted(self.root.iterdir()):
            if entry.name.startswith("."):
                continue  # staging/graveyard dirs mid-swap
            if entry.is_dir() and (entry / META_NAME).is_file():
                ids.append(entry.name)
        return ids

    def put_snippet(self, record: SnippetRecord) -> Path:
        """Persist a record, atomically replacing any prior one with its id."""
        record.validate()
        meta = {
            "id": record.id,
            "filename": record.filename,
            "language_tag": record.language_tag,
            "stars": record.stars,
            "created_at": record.created_at.isoformat(),
            "origin_url": record.origin_url,
        }
        staging = Path(
            tempfile.mkdtemp(prefix=f".tmp-{record.id}-", dir=self.root)
        )
        try:
            (staging / record.filename).write_text(record.source, encoding="utf-8")
            (staging / META_NAME).write_text(
                json.dumps(meta, indent=2, sort_keys=True) + "\n", encoding="utf-8"
            )
            target = self.record_dir(record.id)
            with self._swap_lock:
                if target.exists():
                    graveyard = self.root / f".old-{record.id}-{uuid.uuid4().hex}"
                    os.replace(target, graveyard)
                    os.replace(staging, target)
                    shutil.rmtree(graveyard, ignore_errors=True)
                else:
                    os.replace(staging, target)
        except OSError as exc:
            shutil.rmtree(staging, ignore_errors=True)
            raise StoreError(f"cannot store snippet {record.id}: {exc}") from exc
        return self.record_dir(record.id) / record.filename

    def get_snippet(self, snippet_id: str) -> SnippetRecord:
        meta_path = self.record_dir(snippet_id) / META_NAME
        if not meta_path.is_file():
            raise SnippetNotFound(f"no snippet {snippet_id!r} in {self.root}")
        try:
            meta = json.loads(meta_path.read_text(encoding="utf-8"))
        except ValueError as exc:
            raise StoreError(f"corrupt metadata in {meta_path}: {exc}") from exc
        except OSError as exc:
            raise StoreError(f"cannot read {meta_path}: {exc}") from exc
        try:
            filename = meta["filename"]
            source_path = self.record_dir(snippet_id) / filename
            source = source_path.read_text(encoding="utf-8")
            return SnippetRecord(
                id=meta["id"],
                filename=filename,
                source=source,
                language_tag=meta["language_tag"],
                stars=int(meta["stars"]),
                created_at=parse_timestamp(meta["created_at"]),
                origin_url=meta["origin_url"],
            )
        except KeyError as exc:
            raise StoreError(f"corrupt metadata in {meta_path}: missing {exc}") from None
        except OSError as exc:
            raise StoreError(
                f"snippet file missing for {snippet_id!r}: {exc}"
            ) from exc

    def append_result(self, outcome: ExecutionOutcome) -> None:
        """Append one result line; the snippet must already exist."""
        if not self.has_snippet(outcome.snippet_id):
            raise ValidationError(
                f"result references unknown snippet {outcome.snippet_id!r}"
            )
        line = json.dumps(outcome.to_json(), sort_keys=True) + "\n"
        with self._results_lock:
            with open(self.results_path, "a", encoding="utf-8") as fh:
                fh.write(line)

    def iter_results(self) -> Iterator[dict]:
        """Yield parsed result lines, skipping (with a warning) any bad line.

        A final line truncated by an interrupted writer is tolerated.
        """
        if not self.results_path.is_file():
            return
        with open(self.results_path, encoding="utf-8") as fh:
            for number, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    yield json.loads(line)
                except ValueError:
                    warnings.warn(
                        f"skipping unparseable line {number} in {self.results_path}",
                        stacklevel=2,
                    )

    def write_file(self, snippet_id: str, name: str, content: str) -> Path:
        """Atomically write an auxiliary file (e.g. Dockerfile) into a record."""
        if not self.has_snippet(snippet_id):
            raise ValidationError(f"unknown snippet {snippet_id!r}")
        target = self.record_dir(snippet_id) / name
        fd, tmp = tempfile.mkstemp(prefix=f".tmp-{name}-", dir=target.parent)
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(content)
            os.replace(tmp, target)
        except OSError as exc:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise StoreError(f"cannot write {target}: {exc}") from exc
        return target
