"""OEIS b-file client: fetch, cache, parse, and compare.

b-files are the OEIS long-prefix format: one ``n a(n)`` pair per line,
``#`` comments and blank lines allowed.  Files are cached byte-verbatim
and re-parsed on read.  The HTTP transport is injectable so every test
(and the default verification path) runs with no network access at all:
fixtures for the ten supported sequences ship inside the package.
"""

from __future__ import annotations

import os
import re
import tempfile
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Optional

from latticepaths.catalog import Family, terms

__all__ = [
    "BFile",
    "CompareReport",
    "BFileParseError",
    "FetchError",
    "CACHE_ENV_VAR",
    "bfile_url",
    "bfile_filename",
    "parse_bfile",
    "serialize_bfile",
    "fetch",
    "compare",
]

CACHE_ENV_VAR = "LATTICE_CACHE_DIR"

_ID_PATTERN = re.compile(r"\AA\d{6}\Z")


class BFileParseError(ValueError):
    """The b-file text (or its indexing) is malformed."""


class FetchError(RuntimeError):
    """The b-file could not be retrieved over the network."""


@dataclass
class BFile:
    """A parsed b-file: contiguous ``n -> a(n)`` entries.

    ``source`` records where the bytes came from: ``"fetched"`` for a
    live network download, ``"fixture"`` for a cache hit or a packaged
    fixture file.
    """

    oeis_id: str
    entries: dict[int, int]
    source: str

    @property
    def first_index(self) -> int:
        return next(iter(self.entries))

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class CompareReport:
    """Outcome of checking computed terms against a b-file."""

    family: str
    oeis_id: str
    requested: int
    checked: int
    agree: bool
    source: str
    first_mismatch: Optional[tuple[int, int, int]] = None  # (n, reference, computed)
    note: str = ""


def _validate_id(oeis_id: str) -> str:
    if not _ID_PATTERN.match(oeis_id):
        raise ValueError(f"invalid OEIS id {oeis_id!r}; expected 'A' followed by six digits")
    return oeis_id


def bfile_filename(oeis_id: str) -> str:
    return f"b{_validate_id(oeis_id)[1:]}.txt"


def bfile_url(oeis_id: str) -> str:
    oeis_id = _validate_id(oeis_id)
    return f"https://oeis.org/{oeis_id}/{bfile_filename(oeis_id)}"


def parse_bfile(oeis_id: str, text: str) -> dict[int, int]:
    """Parse b-file text into an ordered ``n -> a(n)`` mapping.

    Data lines are two decimal integers; indices must increase by one.
    Comments (leading ``#``) and blank lines are skipped; anything else
    is a :class:`BFileParseError`.
    """
    entries: dict[int, int] = {}
    previous = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(f"{oeis_id} line {lineno}: expected 'n a(n)', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(
                f"{oeis_id} line {lineno}: non-integer field in {raw!r}"
            ) from None
        if previous is not None and index != previous + 1:
            raise BFileParseError(
                f"{oeis_id} line {lineno}: index {index} does not follow {previous}"
            )
        entries[index] = value
        previous = index
    if not entries:
        raise BFileParseError(f"{oeis_id}: no data lines found")
    return entries


def serialize_bfile(bfile: BFile) -> str:
    """Render entries back to b-file text (one ``n a(n)`` per line)."""
    return "".join(f"{n} {v}\n" for n, v in bfile.entries.items())


def _default_transport(url: str) -> str:
    import httpx

    try:
        response = httpx.get(url, timeout=30.0, follow_redirects=True)
        response.raise_for_status()
    except httpx.HTTPError as exc:
        raise FetchError(f"could not fetch {url}: {exc}") from exc
    return response.text


def _fixture_text(oeis_id: str) -> Optional[str]:
    resource = resources.files("latticepaths").joinpath(f"data/bfiles/{bfile_filename(oeis_id)}")
    if resource.is_file():
        return resource.read_text(encoding="ascii")
    return None


def fetch(
    oeis_id: str,
    cache_dir: Optional[str | Path] = None,
    transport: Optional[Callable[[str], str]] = None,
    refresh: bool = False,
) -> BFile:
    """Return the b-file for ``oeis_id``, preferring local copies.

    Lookup order: the cache directory, the packaged fixtures, then the
    network (``refresh=True`` skips straight to the network).  A fresh
    download is parsed first and only then written to the cache
    atomically, so failed fetches and malformed payloads never leave
    anything behind.
    """
    oeis_id = _validate_id(oeis_id)
    cache_path = Path(cache_dir) / bfile_filename(oeis_id) if cache_dir else None

    if not refresh:
        if cache_path is not None and cache_path.is_file():
            text = cache_path.read_text(encoding="ascii")
            return BFile(oeis_id, parse_bfile(oeis_id, text), source="fixture")
        packaged = _fixture_text(oeis_id)
        if packaged is not None:
            return BFile(oeis_id, parse_bfile(oeis_id, packaged), source="fixture")

    get = transport or _default_transport
    text = get(bfile_url(oeis_id))
    entries = parse_bfile(oeis_id, text)
    if cache_path is not None:
        cache_path.parent.mkdir(parents=True, exist_ok=True)
        handle, tmp_name = tempfile.mkstemp(dir=cache_path.parent, suffix=".tmp")
        try:
            with os.fdopen(handle, "w", encoding="ascii") as fh:
                fh.write(text)
            os.replace(tmp_name, cache_path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
    return BFile(oeis_id, entries, source="fetched")


def compare(
    family: Family,
    k: int,
    cache_dir: Optional[str | Path] = None,
    transport: Optional[Callable[[str], str]] = None,
    refresh: bool = False,
) -> CompareReport:
    """Check the first ``k`` computed terms against the family's b-file.

    A b-file holding fewer than ``k`` terms yields a partial comparison
    (noted, not failed).  The b-file must start exactly at the family's
    configured offset; anything else is a configuration error.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    bfile = fetch(family.oeis_id, cache_dir=cache_dir, transport=transport, refresh=refresh)
    if bfile.first_index != family.offset:
        raise BFileParseError(
            f"{family.oeis_id}: b-file starts at n={bfile.first_index} "
            f"but the family offset is {family.offset}"
        )
    available = len(bfile)
    checked = min(k, available)
    note = ""
    if available < k:
        note = f"b-file provides only {available} of {k} requested terms"
    computed = terms(family, checked, method="formula")
    for i in range(checked):
        n = family.offset + i
        if bfile.entries[n] != computed[i]:
            return CompareReport(
                family=family.key,
                oeis_id=family.oeis_id,
                requested=k,
                checked=checked,
                agree=False,
                source=bfile.source,
                first_mismatch=(n, bfile.entries[n], computed[i]),
                note=note,
            )
    return CompareReport(
        family=family.key,
        oeis_id=family.oeis_id,
        requested=k,
        checked=checked,
        agree=True,
        source=bfile.source,
        note=note,
    )
