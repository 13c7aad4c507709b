"""OEIS b-file parsing, serialization, cross-checking, and offline-first retrieval.

A b-file is plain text with one "<index> <value>" pair per line; '#' lines are
comments.  The package bundles fixture b-files for every sequence it
generates, so everything here works with no network access.  Fetching from
oeis.org is opt-in and falls back to the local cache and then to the bundled
fixtures.
"""

from __future__ import annotations

import importlib.resources
import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path

from .catalogue import SequenceDescriptor

_ID_PATTERN = re.compile(r"\AA(\d{6})\Z")
_FIXTURE_PACKAGE = "seqparity"


class BFileFormatError(ValueError):
    """Raised when b-file text violates the format or the table invariants."""


class BFileUnavailableError(RuntimeError):
    """Raised when no source (cache, network, fixture) can produce a b-file."""


class OffsetMismatchError(ValueError):
    """Raised when a table's first index disagrees with the descriptor offset."""


@dataclass(frozen=True)
class BFileTable:
    """Parsed b-file: a sequence id plus contiguous (index, value) rows."""

    sequence_id: str
    rows: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for position, (index, value) in enumerate(self.rows):
            if value < 0:
                raise BFileFormatError(
                    f"negative value {value} at index {index}; "
                    "all catalogued sequences are non-negative"
                )
            if position > 0 and index != self.rows[position - 1][0] + 1:
                raise BFileFormatError(
                    f"index gap: {self.rows[position - 1][0]} followed by {index}"
                )

    def __len__(self) -> int:
        return len(self.rows)


def bfile_name(sequence_id: str) -> str:
    """Canonical b-file filename for an OEIS id, e.g. A061297 -> b061297.txt."""
    match = _ID_PATTERN.match(sequence_id)
    if match is None:
        raise ValueError(f"{sequence_id!r} is not an OEIS sequence id")
    return f"b{match.group(1)}.txt"


def bfile_url(sequence_id: str) -> str:
    """Public URL for a sequence's b-file."""
    return f"https://oeis.org/{sequence_id}/{bfile_name(sequence_id)}"


def parse_bfile(text: str, sequence_id: str = "") -> BFileTable:
    """Parse b-file text; blank lines and '#' comments are skipped."""
    rows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise BFileFormatError(
                f"line {lineno}: expected '<index> <value>', got {raw!r}"
            )
        try:
            index, value = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise BFileFormatError(
                f"line {lineno}: non-integer token in {raw!r}"
            ) from None
        rows.append((index, value))
    return BFileTable(sequence_id=sequence_id, rows=tuple(rows))


def serialize_bfile(table: BFileTable) -> str:
    """Emit one '<index> <value>' line per row; parses back to the same table."""
    return "".join(f"{index} {value}\n" for index, value in table.rows)


def cross_check(
    seq: SequenceDescriptor, table: BFileTable, limit: int
) -> list[tuple[int, int, int]]:
    """Compare generated terms against table rows.

    Returns (index, expected, actual) triples where `expected` is the table's
    value (the external reference) and `actual` is the generator's output.
    """
    if table.sequence_id and table.sequence_id != seq.id:
        raise ValueError(
            f"table is for {table.sequence_id!r}, descriptor is {seq.id!r}"
        )
    if not table.rows:
        return []
    first_index = table.rows[0][0]
    if first_index != seq.offset:
        raise OffsetMismatchError(
            f"{seq.id}: table starts at index {first_index}, "
            f"catalogue offset is {seq.offset}"
        )
    count = min(limit, len(table.rows))
    generated = seq.terms(count)
    return [
        (index, value, generated[i])
        for i, (index, value) in enumerate(table.rows[:count])
        if generated[i] != value
    ]


def fixture_table(sequence_id: str) -> BFileTable:
    """The bundled b-file for a sequence id."""
    name = bfile_name(sequence_id)
    resource = importlib.resources.files(_FIXTURE_PACKAGE) / "fixtures" / name
    try:
        text = resource.read_text(encoding="ascii")
    except FileNotFoundError:
        raise BFileUnavailableError(
            f"no bundled fixture for {sequence_id}"
        ) from None
    return parse_bfile(text, sequence_id)


def default_cache_dir() -> Path:
    """Cache directory: $SEQPARITY_CACHE_DIR, else ~/.cache/seqparity."""
    env = os.environ.get("SEQPARITY_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "seqparity"


def _download(url: str, timeout: float) -> str:
    with urllib.request.urlopen(url, timeout=timeout) as response:
        return response.read().decode("utf-8")


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    handle = tempfile.NamedTemporaryFile(
        mode="w", dir=path.parent, suffix=".tmp", delete=False
    )
    try:
        with handle:
            handle.write(text)
        os.replace(handle.name, path)
    except BaseException:
        os.unlink(handle.name)
        raise


def fetch_bfile(
    sequence_id: str,
    cache_dir: str | Path | None = None,
    *,
    offline: bool = True,
    timeout: float = 10.0,
) -> BFileTable:
    """Return the b-file table for an id: cache first, then network, then fixture.

    Offline mode (the default) never touches the network; the result is then a
    pure function of the cache contents and the bundled fixtures.  A network
    fetch retries once on transient failure and caches the raw text with a
    write-to-temporary-then-rename so concurrent readers never see a partial
    file.
    """
    cache_path = Path(cache_dir if cache_dir is not None else default_cache_dir())
    cached = cache_path / bfile_name(sequence_id)
    if cached.exists():
        return parse_bfile(cached.read_text(encoding="utf-8"), sequence_id)
    if not offline:
        url = bfile_url(sequence_id)
        text = None
        for attempt in (0, 1):
            try:
                text = _download(url, timeout)
                break
            except (urllib.error.URLError, TimeoutError, ConnectionError):
                if attempt == 1:
                    text = None
        if text is not None:
            table = parse_bfile(text, sequence_id)  # validate before caching
            _write_atomic(cached, text)
            return table
    try:
        return fixture_table(sequence_id)
    except (BFileUnavailableError, ValueError):
        raise BFileUnavailableError(
            f"no source for {sequence_id}: cache miss"
            + ("" if offline else ", network failed")
            + ", no bundled fixture"
        ) from None
