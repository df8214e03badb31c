"""Persistent invariant cache keyed by canonical expression digests.

Entries are versioned little-endian binaries of bitsets; a stored entry
is used only when the table checksum of the compiled ring matches, so a
builder change silently invalidates old entries instead of poisoning
results. Any malformed or mismatched file is a silent miss.
"""

from __future__ import annotations

import hashlib
import os
import struct
import tempfile
from pathlib import Path

import numpy as np

from .core import ElemSet, TableRing
from .subsets import InvariantBundle, compute_bundle

MAGIC = b"RGLB"
FORMAT_VERSION = 2
_NO_INVERSE = 0xFFFFFFFF

_SETS = ("units", "idempotents", "nilpotents", "center", "jacobson", "jsharp", "prime_radical")


def cache_dir() -> Path:
    env = os.environ.get("RINGLAB_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "ringlab"


def table_checksum(ring: TableRing) -> bytes:
    h = hashlib.sha256()
    h.update(struct.pack("<IIII", ring.order, ring.zero, ring.one, 0))
    h.update(ring.add.astype("<i4").tobytes())
    h.update(ring.mul.astype("<i4").tobytes())
    return h.digest()


def _entry_path(ring: TableRing) -> Path | None:
    if not ring.expr_text:
        return None
    digest = hashlib.sha256(ring.expr_text.encode("ascii")).hexdigest()
    return cache_dir() / f"{digest}.v{FORMAT_VERSION}.bin"


def _pack_set(es: ElemSet | None, order: int) -> bytes:
    nbytes = (order + 7) // 8
    if es is None:
        return struct.pack("<B", 0) + b"\x00" * nbytes
    bits = 0
    for i in es.members:
        bits |= 1 << i
    return struct.pack("<B", 1) + bits.to_bytes(nbytes, "little")


def _unpack_set(data: bytes, offset: int, ring: TableRing) -> tuple[ElemSet | None, int]:
    nbytes = (ring.order + 7) // 8
    present = data[offset]
    raw = data[offset + 1 : offset + 1 + nbytes]
    offset += 1 + nbytes
    if not present:
        return None, offset
    bits = int.from_bytes(raw, "little")
    members = frozenset(i for i in range(ring.order) if bits >> i & 1)
    return ElemSet(ring, members), offset


def serialize_bundle(bundle: InvariantBundle) -> bytes:
    ring = bundle.ring
    out = [MAGIC, struct.pack("<HI", FORMAT_VERSION, ring.order), table_checksum(ring)]
    for name in _SETS:
        out.append(_pack_set(getattr(bundle, name), ring.order))
    inv = np.full(ring.order, _NO_INVERSE, dtype="<u4")
    for a, b in bundle.inverse_map.items():
        inv[a] = b
    out.append(inv.tobytes())
    return b"".join(out)


def deserialize_bundle(data: bytes, ring: TableRing) -> InvariantBundle | None:
    head = len(MAGIC) + 6 + 32
    if len(data) < head or data[:4] != MAGIC:
        return None
    version, order = struct.unpack_from("<HI", data, 4)
    if version != FORMAT_VERSION or order != ring.order:
        return None
    if data[10:42] != table_checksum(ring):
        return None
    offset = 42
    sets = {}
    for name in _SETS:
        es, offset = _unpack_set(data, offset, ring)
        sets[name] = es
    inv_raw = np.frombuffer(data, dtype="<u4", count=ring.order, offset=offset)
    if any(sets[name] is None for name in _SETS[:-1]):
        return None
    inverse_map = {int(a): int(v) for a, v in enumerate(inv_raw) if v != _NO_INVERSE}
    flags = frozenset(name for name in _SETS if sets[name] is not None)
    return InvariantBundle(ring=ring, inverse_map=inverse_map, computed_flags=flags, **sets)


def load_bundle(ring: TableRing) -> InvariantBundle | None:
    path = _entry_path(ring)
    if path is None:
        return None
    try:
        data = path.read_bytes()
    except OSError:
        return None
    try:
        return deserialize_bundle(data, ring)
    except Exception:
        return None


def save_bundle(bundle: InvariantBundle) -> None:
    path = _entry_path(bundle.ring)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    data = serialize_bundle(bundle)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".bin")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)  # atomic publish; concurrent writers race benignly
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass


def get_or_compute(ring: TableRing) -> InvariantBundle:
    cached = load_bundle(ring)
    if cached is not None:
        return cached
    bundle = compute_bundle(ring)
    save_bundle(bundle)
    return bundle


def stats() -> dict:
    directory = cache_dir()
    entries = 0
    total = 0
    if directory.is_dir():
        for p in directory.iterdir():
            if p.suffix == ".bin" and not p.name.startswith(".tmp-"):
                entries += 1
                total += p.stat().st_size
    return {"path": str(directory), "entries": entries, "bytes": total}


def clear() -> int:
    directory = cache_dir()
    removed = 0
    if directory.is_dir():
        for p in directory.iterdir():
            if p.suffix == ".bin":
                try:
                    p.unlink()
                    removed += 1
                except OSError:
                    pass
    return removed
