"""OEIS b-file ingestion and per-index cross-validation.

A b-file is plain text, one "index value" pair per line, '#' comments and
blank lines ignored.  Some files start at index 0 or elsewhere, so the first
index encountered is taken as the base; indices must then ascend by one.
"""

import os
from dataclasses import dataclass
from pathlib import Path

from .derivation import DerivedSequence
from .errors import BFileParseError


@dataclass(frozen=True)
class BFileEntry:
    index: int
    value: int


def parse_bfile_text(text: str) -> list[BFileEntry]:
    entries: list[BFileEntry] = []
    for line_no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise BFileParseError(f"expected 'index value', got {s!r}", line_no)
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(f"non-integer field in {s!r}", line_no) from None
        if entries and idx != entries[-1].index + 1:
            raise BFileParseError(
                f"index {idx} not consecutive after {entries[-1].index}", line_no
            )
        entries.append(BFileEntry(idx, val))
    return entries


def parse_bfile(path: str | os.PathLike) -> list[BFileEntry]:
    return parse_bfile_text(Path(path).read_text())


def crosscheck(seq: DerivedSequence, entries: list[BFileEntry], max_n: int | None = None) -> dict:
    """Per-index comparison of certified terms against b-file values.

    Only certified terms are compared, so a truncated sieve can never be
    mistaken for a sequence mismatch.
    """
    if not entries:
        return {"checked": 0, "mismatches": [], "base_index": None}
    base = entries[0].index
    n_cmp = min(len(entries), seq.certified_count, len(seq.elements))
    if max_n is not None:
        n_cmp = min(n_cmp, max_n)
    mismatches = []
    for i in range(n_cmp):
        ours = int(seq.elements[i])
        theirs = entries[i].value
        if ours != theirs:
            mismatches.append({"n": base + i, "computed": ours, "bfile": theirs})
    return {"checked": n_cmp, "mismatches": mismatches, "base_index": base}
