"""Table-backed finite rings: validation, element arithmetic, subsets.

A ring of order n stores dense n x n addition and multiplication tables
over element indices 0..n-1 together with the distinguished `zero` and
`one` indices. Every constructor in this package funnels its tables
through `validate_ring`, so a `TableRing` in hand always satisfies the
ring axioms (exhaustively checked up to order 64, sampled above; the
`validation` attribute records which).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .groups import GroupTable

DEFAULT_MAX_ORDER = 4096
EXHAUSTIVE_LIMIT = 64
_SAMPLE_TRIPLES = 20000
_SAMPLE_SEED = 0x52494E47


class RingError(Exception):
    """Base class for ring construction and arithmetic errors."""


class OutOfCapError(RingError):
    """A construction would exceed the configured order cap."""


class ElementIndexError(RingError, IndexError):
    """An element index is outside 0..order-1."""


@dataclass(frozen=True)
class Violation:
    """One failed ring axiom with its first witness tuple."""

    kind: str  # NonAssociative | NonDistributive | NoIdentity | NotAbelianGroup | ZeroRing
    witness: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}{self.witness}"


class RingValidationError(RingError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(map(str, violations)))


# ---------------------------------------------------------------------------
# construction metadata
#
# `TableRing.meta` optionally carries one of these records so that
# operations which need the construction shape (augmentation maps, factor
# decodes, embedding maps) can recover it without re-deriving anything.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZmodMeta:
    n: int


@dataclass(frozen=True)
class GaloisMeta:
    q: int
    char: int
    degree: int
    modulus: tuple[int, ...] | None  # little-endian coefficients, monic


@dataclass(frozen=True, eq=False)
class MatrixMeta:
    base: "TableRing"
    size: int


@dataclass(frozen=True, eq=False)
class TriangularMeta:
    base: "TableRing"
    size: int
    positions: tuple[tuple[int, int], ...]  # stored (row, col) cells, row-major


@dataclass(frozen=True, eq=False)
class ProductMeta:
    factors: tuple["TableRing", ...]


@dataclass(frozen=True, eq=False)
class QuotientMeta:
    parent: "TableRing"
    ideal: tuple[int, ...]
    projection: np.ndarray  # parent index -> coset index


@dataclass(frozen=True, eq=False)
class CornerMeta:
    parent: "TableRing"
    idempotent: int
    embedding: np.ndarray  # corner index -> parent index


@dataclass(frozen=True, eq=False)
class TrivialExtMeta:
    base: "TableRing"


@dataclass(frozen=True, eq=False)
class GroupRingMeta:
    base: "TableRing"
    group: "GroupTable"
    digits: np.ndarray  # (order, |G|): coefficient index per group element


@dataclass(frozen=True, eq=False)
class SkewPolyMeta:
    base: "TableRing"
    endo_name: str
    endo_map: np.ndarray
    k: int
    digits: np.ndarray  # (order, k): coefficient of x^j


class TableRing:
    """A validated finite unital ring over element indices.

    Immutable after construction; all operations are pure lookups, so a
    ring can be shared freely across threads.
    """

    __slots__ = ("order", "add", "mul", "neg", "zero", "one", "names", "meta", "validation", "expr_text")

    def __init__(self, order, add, mul, neg, zero, one, names, meta, validation):
        self.order = order
        self.add = add
        self.mul = mul
        self.neg = neg
        self.zero = zero
        self.one = one
        self.names = names
        self.meta = meta
        self.validation = validation
        self.expr_text: str | None = None

    def __repr__(self) -> str:
        tag = self.expr_text or f"order={self.order}"
        return f"TableRing({tag})"

    def name_of(self, a: int) -> str:
        return self.names[a]

    def describe(self, a: int) -> str:
        return f"{self.names[a]} (#{a})"

    def check_index(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise ElementIndexError(f"element index {a} out of range 0..{self.order - 1}")

    def tables_equal(self, other: "TableRing") -> bool:
        return (
            self.order == other.order
            and self.zero == other.zero
            and self.one == other.one
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )


def elem_add(ring: TableRing, a: int, b: int) -> int:
    ring.check_index(a)
    ring.check_index(b)
    return int(ring.add[a, b])


def elem_mul(ring: TableRing, a: int, b: int) -> int:
    ring.check_index(a)
    ring.check_index(b)
    return int(ring.mul[a, b])


def elem_neg(ring: TableRing, a: int) -> int:
    ring.check_index(a)
    return int(ring.neg[a])


def elem_sub(ring: TableRing, a: int, b: int) -> int:
    ring.check_index(a)
    ring.check_index(b)
    return int(ring.add[a, ring.neg[b]])


def elem_pow(ring: TableRing, a: int, k: int) -> int:
    """a**k by repeated squaring; a**0 is 1."""
    ring.check_index(a)
    if k < 0:
        raise ValueError("exponent must be >= 0")
    result = ring.one
    base = a
    mul = ring.mul
    while k:
        if k & 1:
            result = int(mul[result, base])
        base = int(mul[base, base])
        k >>= 1
    return result


def power_orbit(ring: TableRing, a: int) -> tuple[list[int], int]:
    """Distinct powers a^1, a^2, ... and the orbit position re-entered.

    Returns `(orbit, cycle_start)` where `orbit[cycle_start]` equals the
    first repeated power. The orbit never exceeds the ring order, so any
    power of `a` is one of its members.
    """
    ring.check_index(a)
    mul = ring.mul
    orbit: list[int] = []
    position = {}
    x = a
    while x not in position:
        position[x] = len(orbit)
        orbit.append(x)
        x = int(mul[x, a])
    return orbit, position[x]


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _triple_samples(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    rng = np.random.default_rng(_SAMPLE_SEED)
    return tuple(rng.integers(0, n, size=_SAMPLE_TRIPLES) for _ in range(3))


def scan_axioms(add, mul, zero: int, one: int, neg=None) -> tuple[list[Violation], str]:
    """Scan the ring axioms, returning violations and the scan mode."""
    add = np.asarray(add)
    mul = np.asarray(mul)
    n = add.shape[0]
    violations: list[Violation] = []

    if n < 2 or zero == one:
        return [Violation("ZeroRing", (zero, one))], "exhaustive"

    # commutativity of addition (always exhaustive: O(n^2))
    diff = np.argwhere(add != add.T)
    if len(diff):
        a, b = map(int, diff[0])
        violations.append(Violation("NotAbelianGroup", (a, b)))

    # additive identity and inverses
    idx = np.arange(n)
    if not np.array_equal(add[zero, :], idx):
        a = int(np.argwhere(add[zero, :] != idx)[0][0])
        violations.append(Violation("NotAbelianGroup", (zero, a)))
    if neg is not None:
        neg = np.asarray(neg)
        bad = np.where(add[idx, neg] != zero)[0]
        if len(bad):
            violations.append(Violation("NotAbelianGroup", (int(bad[0]), int(neg[bad[0]]))))
    else:
        has_inv = (add == zero).any(axis=1)
        if not has_inv.all():
            violations.append(Violation("NotAbelianGroup", (int(np.where(~has_inv)[0][0]),)))

    # multiplicative identity
    if not (np.array_equal(mul[one, :], idx) and np.array_equal(mul[:, one], idx)):
        bad = np.argwhere(mul[one, :] != idx)
        a = int(bad[0][0]) if len(bad) else int(np.argwhere(mul[:, one] != idx)[0][0])
        violations.append(Violation("NoIdentity", (a,)))

    if n <= EXHAUSTIVE_LIMIT:
        mode = "exhaustive"
        addassoc_l = add[add, :]  # (a+b)+c at axes (a,b,c)
        addassoc_r = add[:, add]  # a+(b+c)
        bad = np.argwhere(addassoc_l != addassoc_r)
        if len(bad):
            violations.append(Violation("NotAbelianGroup", tuple(map(int, bad[0]))))
        assoc_l = mul[mul, :]
        assoc_r = mul[:, mul]
        bad = np.argwhere(assoc_l != assoc_r)
        if len(bad):
            violations.append(Violation("NonAssociative", tuple(map(int, bad[0]))))
        ldist_l = mul[:, add]  # a*(b+c), axes (a,b,c)
        ldist_r = add[mul[:, :, None], mul[:, None, :]]
        bad = np.argwhere(ldist_l != ldist_r)
        if len(bad):
            violations.append(Violation("NonDistributive", tuple(map(int, bad[0]))))
        rdist_l = mul[add, :]  # (b+c)*a with axes (b,c,a)
        rdist_r = add[mul[:, None, :], mul[None, :, :]]  # b*a + c*a, axes (b,c,a)
        bad = np.argwhere(rdist_l != rdist_r)
        if len(bad):
            b, c, a = map(int, bad[0])
            violations.append(Violation("NonDistributive", (a, b, c)))
    else:
        mode = "sampled"
        sa, sb, sc = _triple_samples(n)
        bad = np.where(add[add[sa, sb], sc] != add[sa, add[sb, sc]])[0]
        if len(bad):
            i = bad[0]
            violations.append(Violation("NotAbelianGroup", (int(sa[i]), int(sb[i]), int(sc[i]))))
        bad = np.where(mul[mul[sa, sb], sc] != mul[sa, mul[sb, sc]])[0]
        if len(bad):
            i = bad[0]
            violations.append(Violation("NonAssociative", (int(sa[i]), int(sb[i]), int(sc[i]))))
        bad = np.where(mul[sa, add[sb, sc]] != add[mul[sa, sb], mul[sa, sc]])[0]
        if len(bad):
            i = bad[0]
            violations.append(Violation("NonDistributive", (int(sa[i]), int(sb[i]), int(sc[i]))))
        bad = np.where(mul[add[sb, sc], sa] != add[mul[sb, sa], mul[sc, sa]])[0]
        if len(bad):
            i = bad[0]
            violations.append(Violation("NonDistributive", (int(sa[i]), int(sb[i]), int(sc[i]))))
    return violations, mode


def validate_ring(add, mul, zero: int, one: int, neg=None, names=None, meta=None) -> TableRing:
    """Build a TableRing from raw tables, or raise RingValidationError.

    `neg` is derived from the addition table when omitted.
    """
    add = np.ascontiguousarray(np.asarray(add, dtype=np.int32))
    mul = np.ascontiguousarray(np.asarray(mul, dtype=np.int32))
    if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
        raise ValueError("tables must be square and of equal size")
    n = add.shape[0]
    if not (0 <= zero < n and 0 <= one < n):
        raise ValueError("zero/one index out of range")
    if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
        raise ValueError("table entry out of range")

    violations, mode = scan_axioms(add, mul, zero, one, neg)
    if violations:
        raise RingValidationError(violations)

    if neg is None:
        neg = np.argmax(add == zero, axis=1).astype(np.int32)
    else:
        neg = np.ascontiguousarray(np.asarray(neg, dtype=np.int32))
    if names is None:
        names = tuple(str(i) for i in range(n))
    else:
        names = tuple(names)
        if len(names) != n:
            raise ValueError("names length mismatch")
    add.setflags(write=False)
    mul.setflags(write=False)
    neg.setflags(write=False)
    return TableRing(n, add, mul, neg, zero, one, names, meta, mode)


# ---------------------------------------------------------------------------
# element subsets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ElemSet:
    """A subset of a ring's element indices (bitmask semantics).

    Identity is the (ring, members) pair; set algebra is only defined
    between subsets of the same ring.
    """

    ring: TableRing
    members: frozenset[int]

    @staticmethod
    def of(ring: TableRing, items) -> "ElemSet":
        members = frozenset(int(i) for i in items)
        for i in members:
            ring.check_index(i)
        return ElemSet(ring, members)

    @staticmethod
    def from_mask(ring: TableRing, mask) -> "ElemSet":
        return ElemSet(ring, frozenset(int(i) for i in np.where(mask)[0]))

    def _check_same(self, other: "ElemSet") -> None:
        if self.ring is not other.ring:
            raise ValueError("set algebra requires subsets of the same ring")

    def union(self, other: "ElemSet") -> "ElemSet":
        self._check_same(other)
        return ElemSet(self.ring, self.members | other.members)

    def intersection(self, other: "ElemSet") -> "ElemSet":
        self._check_same(other)
        return ElemSet(self.ring, self.members & other.members)

    def difference(self, other: "ElemSet") -> "ElemSet":
        self._check_same(other)
        return ElemSet(self.ring, self.members - other.members)

    def complement(self) -> "ElemSet":
        return ElemSet(self.ring, frozenset(range(self.ring.order)) - self.members)

    def mask(self) -> np.ndarray:
        out = np.zeros(self.ring.order, dtype=bool)
        out[list(self.members)] = True
        return out

    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, a: int) -> bool:
        return int(a) in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)
