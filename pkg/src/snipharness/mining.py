"""Mining single-file snippets from a gist-hosting REST API.

The primary strategy enumerates a creation-date window page by page;
when the API's pagination ceiling is hit the window is bisected and both
halves enumerated recursively. A UI-scraping strategy slot exists in the
interface but is intentionally unimplemented.
"""

from __future__ import annotations

import json
import os
import time
import warnings
from dataclasses import dataclass
from datetime import datetime, timedelta
from pathlib import Path
from typing import Protocol

from .errors import MineError, ValidationError
from .records import SnippetRecord, parse_timestamp, sanitize_id

API_TOKEN_ENV = "SNIPHARNESS_API_TOKEN"
PAGINATION_CEILING = 3000
LANGUAGE_EXTENSIONS = {"python": ".py"}


@dataclass(frozen=True)
class MineQuery:
    window_start: datetime
    window_end: datetime
    max_records: int
    language_tag: str = "Python"
    min_stars: int = 1
    page_size: int = 100

    def __post_init__(self):
        if self.window_start >= self.window_end:
            raise ValidationError("window_start must precede window_end")
        if self.max_records < 1:
            raise ValidationError("max_records must be positive")
        if not 1 <= self.page_size <= 100:
            raise ValidationError("page_size must be in 1..100")
        if self.min_stars < 0:
            raise ValidationError("min_stars must be non-negative")


class ApiClient(Protocol):
    def list_public(self, since: datetime, page: int, per_page: int) -> list[dict]: ...

    def fetch(self, gist_id: str) -> dict: ...


class HttpApiClient:
    """Live client for ``GET /gists/public`` and ``GET /gists/<id>``.

    The auth token is read from SNIPHARNESS_API_TOKEN unless given.
    """

    def __init__(self, base_url: str = "https://api.github.com", token: str | None = None):
        import requests

        self.base_url = base_url.rstrip("/")
        self.session = requests.Session()
        token = token or os.environ.get(API_TOKEN_ENV)
        if token:
            self.session.headers["Authorization"] = f"token {token}"
        self.session.headers["Accept"] = "application/vnd.github+json"

    def _get(self, path: str, params: dict | None = None):
        import requests

        try:
            response = self.session.get(self.base_url + path, params=params, timeout=30)
        except requests.RequestException as exc:
            raise MineError(f"request to {path} failed: {exc}") from exc
        if response.status_code in (403, 429):
            raise RateLimited(f"rate limited on {path} ({response.status_code})")
        if response.status_code >= 400:
            raise MineError(f"{path} returned HTTP {response.status_code}")
        return response.json()

    def list_public(self, since: datetime, page: int, per_page: int) -> list[dict]:
        return self._get(
            "/gists/public",
            {"since": since.isoformat(), "page": page, "per_page": per_page},
        )

    def fetch(self, gist_id: str) -> dict:
        return self._get(f"/gists/{gist_id}")


class RateLimited(MineError):
    """The API asked us to back off."""


class ReplayApiClient:
    """Deterministic client serving canned responses from a fixture directory.

    Fixtures are numbered JSON files, each holding one request/response
    pair: ``{"kind": "list_public", "since": ..., "page": ..., "body": [...]}``
    or ``{"kind": "fetch", "id": ..., "body": {...}}``.
    """

    def __init__(self, fixture_dir):
        self.fixture_dir = Path(fixture_dir)
        self.requests: list[tuple] = []
        self._lists: dict[tuple[str, int], list[dict]] = {}
        self._fetches: dict[str, dict] = {}
        for path in sorted(self.fixture_dir.glob("*.json")):
            data = json.loads(path.read_text(encoding="utf-8"))
            if data.get("kind") == "list_public":
                key = (data["since"], int(data["page"]))
                self._lists[key] = data["body"]
            elif data.get("kind") == "fetch":
                self._fetches[data["id"]] = data["body"]
            else:
                raise ValidationError(f"{path}: unknown fixture kind {data.get('kind')!r}")

    def list_public(self, since: datetime, page: int, per_page: int) -> list[dict]:
        self.requests.append(("list_public", since.isoformat(), page))
        key = (since.isoformat(), page)
        if key not in self._lists:
            return []
        return self._lists[key]

    def fetch(self, gist_id: str) -> dict:
        self.requests.append(("fetch", gist_id))
        try:
            return self._fetches[gist_id]
        except KeyError:
            raise MineError(f"no replay fixture for gist {gist_id!r}") from None


def _single_file(gist: dict) -> dict | None:
    files = gist.get("files") or {}
    if len(files) != 1:
        return None
    return next(iter(files.values()))


def record_from_gist(gist: dict, language_tag: str) -> SnippetRecord:
    """Build a record from a gist payload; the stored file name is
    normalized to ``snippet.<ext>``."""
    info = _single_file(gist)
    if info is None:
        raise ValidationError("gist does not contain exactly one file")
    original = info.get("filename", "snippet.py")
    extension = Path(original).suffix or LANGUAGE_EXTENSIONS.get(language_tag.lower(), "")
    return SnippetRecord(
        id=sanitize_id(str(gist["id"])),
        filename=f"snippet{extension}",
        source=info.get("content", ""),
        language_tag=language_tag,
        stars=int(gist.get("stars", gist.get("stargazers_count", 0)) or 0),
        created_at=parse_timestamp(gist["created_at"]),
        origin_url=gist.get("html_url", ""),
    )


def apply_filters(candidates: list[dict], query: MineQuery) -> list[SnippetRecord]:
    """Keep single-file, language-matching, star-passing gists, in order.

    The file extension is checked in addition to the language tag to
    defend against mislabeled gists.
    """
    extension = LANGUAGE_EXTENSIONS.get(query.language_tag.lower())
    records = []
    for gist in candidates:
        info = _single_file(gist)
        if info is None:
            continue
        if (info.get("language") or "").lower() != query.language_tag.lower():
            continue
        if extension and not str(info.get("filename", "")).endswith(extension):
            continue
        stars = int(gist.get("stars", gist.get("stargazers_count", 0)) or 0)
        if stars < query.min_stars:
            continue
        records.append(record_from_gist(gist, query.language_tag))
    return records


def _with_retries(call, *, retries: int, backoff: float, sleep):
    attempt = 0
    while True:
        try:
            return call()
        except RateLimited:
            if attempt >= retries:
                raise
            sleep(backoff * (2**attempt))
            attempt += 1
        except MineError:
            if attempt >= retries:
                raise
            sleep(backoff * (2**attempt))
            attempt += 1


def enumerate_window(
    query: MineQuery,
    client: ApiClient,
    *,
    ceiling: int = PAGINATION_CEILING,
    retries: int = 3,
    backoff: float = 1.0,
    sleep=time.sleep,
) -> list[SnippetRecord]:
    """Enumerate records created inside the query window.

    Windows whose listing hits the pagination ceiling are bisected, so
    recursion depth is bounded by log2(window span / 1 second).
    """
    records: list[SnippetRecord] = []
    seen: set[str] = set()

    def collect(start: datetime, end: datetime) -> None:
        if len(records) >= query.max_records:
            return
        summaries: list[dict] = []
        page = 1
        hit_ceiling = False
        while True:
            try:
                batch = _with_retries(
                    lambda: client.list_public(start, page, query.page_size),
                    retries=retries,
                    backoff=backoff,
                    sleep=sleep,
                )
            except MineError as exc:
                exc.partial = records
                raise
            if not batch:
                break
            done = False
            for gist in batch:
                created = parse_timestamp(gist["created_at"])
                if created < start:
                    continue
                if created >= end:
                    done = True
                    break
                summaries.append(gist)
                if len(summaries) >= ceiling:
                    hit_ceiling = True
                    break
            if done or hit_ceiling or len(batch) < query.page_size:
                break
            page += 1

        if hit_ceiling:
            span = end - start
            if span <= timedelta(seconds=1):
                warnings.warn(
                    f"window [{start.isoformat()}, {end.isoformat()}) cannot be "
                    f"bisected further; accepting a truncated listing",
                    stacklevel=2,
                )
            else:
                midpoint = start + span / 2
                collect(start, midpoint)
                collect(midpoint, end)
                return

        for record in _hydrate(summaries, query, retries=retries, backoff=backoff, sleep=sleep):
            if record.id in seen or len(records) >= query.max_records:
                continue
            seen.add(record.id)
            records.append(record)

    def _hydrate(summaries, query, *, retries, backoff, sleep):
        filtered = apply_filters(summaries, query)
        needs_fetch = {r.id for r in filtered if not r.source}
        for record in filtered:
            if record.id in needs_fetch:
                try:
                    full = _with_retries(
                        lambda: client.fetch(record.id),
                        retries=retries,
                        backoff=backoff,
                        sleep=sleep,
                    )
                except MineError as exc:
                    exc.partial = records
                    raise
                record = record_from_gist(full, query.language_tag)
            yield record

    collect(query.window_start, query.window_end)
    return records[: query.max_records]


def scrape_search_ui(query: MineQuery, store):
    """Strategy slot for mining via a search-UI scraper.

    Intentionally unimplemented: the search UI caps results per query and
    depends on rotating search terms, which cannot be replayed
    deterministically. Date-window enumeration is the supported strategy.
    """
    raise NotImplementedError(
        "UI scraping is a strategy slot only; use enumerate_window/mine"
    )


def mine(query: MineQuery, client: ApiClient, store, **kwargs) -> int:
    """Enumerate, filter, and persist; returns the number stored.

    Reruns with the same fixtures are idempotent (same ids overwrite).
    """
    records = enumerate_window(query, client, **kwargs)
    stored = 0
    for record in records:
        try:
            store.put_snippet(record)
        except Exception as exc:
            raise MineError(
                f"store failed after {stored} record(s): {exc}", stored=stored
            ) from exc
        stored += 1
    return stored
