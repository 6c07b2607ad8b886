"""
OEIS lookups with a disk cache and a bundled offline snapshot.

Modes:

``live``     query the server, store the raw response in the cache
``cached``   replay a cached response when present, otherwise query live
``offline``  consult only the bundled snapshot

Lookups are advisory; nothing in the enumeration core depends on them.
The server base URL comes from ``BIVINC_OEIS_URL`` and the cache directory
from ``BIVINC_CACHE_DIR``.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
import time
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

DEFAULT_URL = "https://oeis.org"
MODES = ("live", "cached", "offline")
MIN_TERMS = 4
_ID_RE = re.compile(r"^A\d{6}$")

SNAPSHOT_MISS = "snapshot-miss"

# cited ids that disagree with the term lookup
ID_NOTES = {
    "A000744": "cited once for the class of 123|X=0|Y=1, whose terms "
    "1,2,5,17,74,394,... match A000774, the id the term lookup returns",
}
# conflicting citation -> id resolved by term lookup
RESOLVED_IDS = {"A000744": "A000774"}


class OeisError(Exception):
    """Base class for lookup failures."""


class MalformedIdError(OeisError, ValueError):
    pass


class NotFoundError(OeisError, LookupError):
    pass


class OeisNetworkError(OeisError):
    def __init__(self, message: str):
        super().__init__(
            f"{message}; retry later, or use --offline to consult the bundled snapshot"
        )


@dataclass(frozen=True)
class OeisEntry:
    id: str
    name: str
    terms: tuple[int, ...]

    def __post_init__(self):
        if not _ID_RE.match(self.id):
            raise MalformedIdError(f"malformed OEIS id {self.id!r}")

    def contains_run(self, terms) -> bool:
        terms = tuple(terms)
        m = len(terms)
        return any(self.terms[i : i + m] == terms for i in range(len(self.terms) - m + 1))


@dataclass
class LookupResult:
    entries: list[OeisEntry] = field(default_factory=list)
    source: str = "offline"
    marker: str | None = None
    notes: list[str] = field(default_factory=list)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def ids(self) -> list[str]:
        return [e.id for e in self.entries]


def check_id(id: str) -> str:
    if not isinstance(id, str) or not _ID_RE.match(id):
        raise MalformedIdError(f"malformed OEIS id {id!r}; expected 'A' followed by 6 digits")
    return id


# -- snapshot -------------------------------------------------------------------


@lru_cache(maxsize=1)
def load_snapshot() -> tuple[OeisEntry, ...]:
    text = resources.files("bivinc").joinpath("data/oeis_snapshot.json").read_text("utf-8")
    return tuple(OeisEntry(d["id"], d["name"], tuple(d["terms"])) for d in json.loads(text))


def _notes_for(hits) -> list[str]:
    found = {e.id for e in hits}
    return [ID_NOTES[c] for c, r in RESOLVED_IDS.items() if r in found]


def _snapshot_by_terms(terms) -> LookupResult:
    hits = [e for e in load_snapshot() if e.contains_run(terms)]
    return LookupResult(hits, "offline", None if hits else SNAPSHOT_MISS, _notes_for(hits))


# -- cache ----------------------------------------------------------------------


def cache_dir() -> Path:
    env = os.environ.get("BIVINC_CACHE_DIR")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "bivinc" / "oeis"


def base_url() -> str:
    return os.environ.get("BIVINC_OEIS_URL", DEFAULT_URL).rstrip("/")


def _cache_path(query: str) -> Path:
    return cache_dir() / (hashlib.sha256(query.encode("utf-8")).hexdigest() + ".json")


def _cache_read(query: str) -> bytes | None:
    try:
        return _cache_path(query).read_bytes()
    except FileNotFoundError:
        return None


def _cache_write(query: str, body: bytes) -> None:
    # write to a temporary file and rename, so readers never see a torn file
    path = _cache_path(query)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(body)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- network ----------------------------------------------------------------------


def _fetch(query: str, retries: int = 2, timeout: float = 10.0) -> bytes:
    url = f"{base_url()}/search?{urllib.parse.urlencode({'q': query, 'fmt': 'json'})}"
    delay = 0.5
    for attempt in range(retries + 1):
        try:
            with urllib.request.urlopen(url, timeout=timeout) as resp:
                return resp.read()
        except (urllib.error.URLError, TimeoutError, ConnectionError) as exc:
            if attempt == retries:
                raise OeisNetworkError(f"could not reach {base_url()}: {exc}") from exc
            time.sleep(delay)
            delay *= 2
    raise AssertionError("unreachable")


def raw_query(query: str, mode: str = "cached") -> bytes:
    """Response body for ``query``, from the cache or the server."""
    if mode not in ("live", "cached"):
        raise ValueError(f"raw queries need mode 'live' or 'cached', got {mode!r}")
    if mode == "cached":
        body = _cache_read(query)
        if body is not None:
            return body
    body = _fetch(query)
    _cache_write(query, body)
    return body


def parse_response(body: bytes) -> list[OeisEntry]:
    doc = json.loads(body.decode("utf-8"))
    if isinstance(doc, dict):
        doc = doc.get("results") or []
    out = []
    for r in doc or []:
        data = r.get("data", "")
        terms = tuple(int(t) for t in data.split(",") if t.strip())
        out.append(OeisEntry(f"A{int(r['number']):06d}", r.get("name", ""), terms))
    return out


# -- public API -------------------------------------------------------------------


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {', '.join(MODES)}, got {mode!r}")


def lookup_by_terms(terms, mode: str = "offline") -> LookupResult:
    """Entries whose terms contain ``terms`` as a contiguous run."""
    _check_mode(mode)
    terms = tuple(int(t) for t in terms)
    if len(terms) < MIN_TERMS:
        raise ValueError(f"need at least {MIN_TERMS} terms, got {len(terms)}")
    if mode == "offline":
        return _snapshot_by_terms(terms)
    body = raw_query(",".join(map(str, terms)), mode)
    hits = [e for e in parse_response(body) if e.contains_run(terms)]
    return LookupResult(hits, mode, notes=_notes_for(hits))


def lookup_by_id(id: str, mode: str = "offline") -> OeisEntry:
    _check_mode(mode)
    check_id(id)
    if mode == "offline":
        for e in load_snapshot():
            if e.id == id:
                return e
        note = f" ({ID_NOTES[id]})" if id in ID_NOTES else ""
        raise NotFoundError(f"{id} is not in the offline snapshot{note}")
    for e in parse_response(raw_query(f"id:{id}", mode)):
        if e.id == id:
            return e
    raise NotFoundError(f"{id} not found")
