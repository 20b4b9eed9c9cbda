"""Versioned binary cache for derived sequences.

Layout, all little-endian:

    offset  size  field
    0       4     magic "RKSQ"
    4       2     format version (= 1)
    6       2     level
    8       8     source_limit
    16      8     certified_count
    24      8     element_count
    32      8*N   elements, unsigned 64-bit each

Writing the same sequence twice produces byte-identical files.  Reads
validate magic, version, count consistency and strict monotonicity, and
report the byte offset of the first violation.
"""

import os
import struct
from pathlib import Path

import numpy as np

from .derivation import DerivedSequence
from .errors import CacheIoError, CorruptCache

MAGIC = b"RKSQ"
VERSION = 1
_HEADER = struct.Struct("<4sHHQQQ")

CACHE_DIR_ENV = "RKIT_CACHE_DIR"


def cache_dir() -> Path:
    """Directory for named caches and saved reports (RKIT_CACHE_DIR or cwd)."""
    return Path(os.environ.get(CACHE_DIR_ENV, "."))


def resolve_cache_path(name: str | os.PathLike) -> Path:
    """Bare file names land in the cache dir; paths are taken as given."""
    p = Path(name)
    if p.is_absolute() or len(p.parts) > 1:
        return p
    return cache_dir() / p


def cache_write(seq: DerivedSequence, path: str | os.PathLike) -> Path:
    target = resolve_cache_path(path)
    header = _HEADER.pack(
        MAGIC, VERSION, seq.level, seq.source_limit, seq.certified_count, len(seq.elements)
    )
    body = np.asarray(seq.elements, dtype="<u8").tobytes()
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "wb") as fh:
            fh.write(header)
            fh.write(body)
    except OSError as exc:
        raise CacheIoError(f"cannot write cache {target}: {exc}") from exc
    return target


def cache_read(path: str | os.PathLike) -> DerivedSequence:
    source = resolve_cache_path(path)
    try:
        raw = source.read_bytes()
    except OSError as exc:
        raise CacheIoError(f"cannot read cache {source}: {exc}") from exc
    if len(raw) < _HEADER.size:
        raise CorruptCache("truncated header", offset=len(raw))
    magic, version, level, source_limit, certified, count = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise CorruptCache(f"bad magic {magic!r}", offset=0)
    if version != VERSION:
        raise CorruptCache(f"unsupported version {version}", offset=4)
    if certified > count:
        raise CorruptCache(
            f"certified_count {certified} exceeds element_count {count}", offset=16
        )
    expected = _HEADER.size + 8 * count
    if len(raw) < expected:
        raise CorruptCache("truncated element payload", offset=len(raw))
    if len(raw) > expected:
        raise CorruptCache("trailing bytes after payload", offset=expected)
    elements_u64 = np.frombuffer(raw, dtype="<u8", offset=_HEADER.size, count=count)
    if count and int(elements_u64.max()) >= 1 << 63:
        bad = int(np.argmax(elements_u64 >= 1 << 63))
        raise CorruptCache("element exceeds signed 64-bit range", offset=_HEADER.size + 8 * bad)
    elements = elements_u64.astype(np.int64)
    if count > 1:
        steps = np.diff(elements)
        if (steps <= 0).any():
            bad = int(np.argmax(steps <= 0)) + 1
            raise CorruptCache(
                "elements not strictly increasing", offset=_HEADER.size + 8 * bad
            )
    return DerivedSequence(
        level=level,
        elements=elements,
        certified_count=certified,
        source_limit=source_limit,
    )
