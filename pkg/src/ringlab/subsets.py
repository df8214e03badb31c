"""Structural subsets of a finite ring: U, Id, Nil, Z, J, J#, Nil*.

The Jacobson radical is computed by the quasi-regularity criterion
(j is in J iff 1 - r*j is a unit for every r); the maximal-left-ideal
intersection is kept only as a cross-check oracle for small orders.
J# membership scans the power orbit, whose cycle bounds the exponent
search. The prime radical Nil* is the set of strongly nilpotent
elements, computed by pruning the reachability graph x -> x*r*x.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import ElemSet, GroupRingMeta, RingError, TableRing


class NotAGroupRingError(RingError):
    """Augmentation requested on a ring without group-ring structure."""


def units(ring: TableRing) -> tuple[ElemSet, dict[int, int]]:
    """The unit group and the (total on units) inverse map."""
    one_hits = ring.mul == ring.one
    two_sided = one_hits & one_hits.T
    has_inv = two_sided.any(axis=1)
    inverse = {int(a): int(np.argmax(two_sided[a])) for a in np.where(has_inv)[0]}
    return ElemSet.from_mask(ring, has_inv), inverse


def idempotents(ring: TableRing) -> ElemSet:
    idx = np.arange(ring.order)
    return ElemSet.from_mask(ring, ring.mul[idx, idx] == idx)


def _orbit_masks(ring: TableRing, targets: np.ndarray) -> np.ndarray:
    """For each element a: does some positive power of a land in `targets`?"""
    n = ring.order
    idx = np.arange(n)
    hit = np.zeros(n, dtype=bool)
    power = idx.copy()  # a^1
    for _ in range(n):
        hit |= targets[power]
        power = ring.mul[power, idx]
    return hit


def nilpotents(ring: TableRing) -> ElemSet:
    targets = np.zeros(ring.order, dtype=bool)
    targets[ring.zero] = True
    return ElemSet.from_mask(ring, _orbit_masks(ring, targets))


def center(ring: TableRing) -> ElemSet:
    return ElemSet.from_mask(ring, (ring.mul == ring.mul.T).all(axis=1))


def jacobson_radical(ring: TableRing, unit_mask: np.ndarray | None = None) -> ElemSet:
    """J(R) = {j : 1 - r*j is a unit for all r}; verified two-sided ideal."""
    if unit_mask is None:
        unit_mask = units(ring)[0].mask()
    one_minus = ring.add[ring.one, ring.neg[ring.mul]]  # (r, j) -> 1 - r*j
    jmask = unit_mask[one_minus].all(axis=0)
    jac = ElemSet.from_mask(ring, jmask)
    ok, witness = is_two_sided_ideal(ring, jac)
    if not ok:  # unreachable on a valid ring; guards table corruption
        raise RingError(f"radical failed the ideal check at {witness}")
    return jac


def jsharp(ring: TableRing, jacobson: ElemSet) -> ElemSet:
    """Elements with some power inside J(R)."""
    return ElemSet.from_mask(ring, _orbit_masks(ring, jacobson.mask()))


def prime_radical(ring: TableRing) -> ElemSet:
    """Strongly nilpotent elements.

    A nonzero element escapes Nil* exactly when the graph x -> x*r*x
    (nonzero vertices only) gives it an infinite walk, i.e. when it can
    reach a nonzero cycle; iterated sink-pruning finds those vertices.
    """
    n = ring.order
    mul = ring.mul
    zero = ring.zero
    idx = np.arange(n)
    succ: list[np.ndarray] = []
    for v in range(n):
        succ.append(np.unique(mul[v, mul[idx, v]]))  # {v*r*v : r in R}
    alive = np.ones(n, dtype=bool)
    alive[zero] = False
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if not alive[v]:
                continue
            nxt = succ[v]
            if not alive[nxt].any():
                alive[v] = False
                changed = True
    return ElemSet.from_mask(ring, ~alive)


def is_two_sided_ideal(ring: TableRing, subset: ElemSet) -> tuple[bool, tuple | None]:
    """Additive-subgroup plus two-sided absorption check, with witness."""
    members = sorted(subset.members)
    if ring.zero not in subset.members:
        return False, ("zero", ring.zero)
    mask = subset.mask()
    arr = np.array(members, dtype=np.int64)
    sums = ring.add[np.ix_(arr, arr)]
    bad = np.argwhere(~mask[sums])
    if len(bad):
        i, j = bad[0]
        return False, ("add", members[int(i)], members[int(j)])
    left = ring.mul[:, arr]
    bad = np.argwhere(~mask[left])
    if len(bad):
        r, i = bad[0]
        return False, ("left", int(r), members[int(i)])
    right = ring.mul[arr, :]
    bad = np.argwhere(~mask[right])
    if len(bad):
        i, r = bad[0]
        return False, ("right", members[int(i)], int(r))
    return True, None


# ---------------------------------------------------------------------------
# group-ring specifics
# ---------------------------------------------------------------------------


def _group_ring_meta(ring: TableRing) -> GroupRingMeta:
    if not isinstance(ring.meta, GroupRingMeta):
        raise NotAGroupRingError("ring was not built as a group ring")
    return ring.meta


def augmentation(ring: TableRing, a: int) -> int:
    """Coefficient sum of a group-ring element, landing in the base ring."""
    meta = _group_ring_meta(ring)
    ring.check_index(a)
    total = meta.base.zero
    for c in meta.digits[a]:
        total = int(meta.base.add[total, int(c)])
    return total


def augmentation_ideal(ring: TableRing) -> ElemSet:
    meta = _group_ring_meta(ring)
    base = meta.base
    eps = np.full(ring.order, base.zero, dtype=np.int32)
    for g in range(meta.group.order):
        eps = base.add[eps, meta.digits[:, g]]
    return ElemSet.from_mask(ring, eps == base.zero)


# ---------------------------------------------------------------------------
# aggregated bundle
# ---------------------------------------------------------------------------


@dataclass
class InvariantBundle:
    """All structural subsets of one ring, computed once and then shared."""

    ring: TableRing
    units: ElemSet
    inverse_map: dict[int, int]
    idempotents: ElemSet
    nilpotents: ElemSet
    center: ElemSet
    jacobson: ElemSet
    jsharp: ElemSet
    prime_radical: ElemSet | None = None
    computed_flags: frozenset[str] = field(default_factory=frozenset)

    def require_prime_radical(self) -> ElemSet:
        if self.prime_radical is None:
            self.prime_radical = prime_radical(self.ring)
            self.computed_flags = self.computed_flags | {"prime_radical"}
        return self.prime_radical


def compute_bundle(ring: TableRing, with_prime_radical: bool = True) -> InvariantBundle:
    u, inv = units(ring)
    jac = jacobson_radical(ring, u.mask())
    bundle = InvariantBundle(
        ring=ring,
        units=u,
        inverse_map=inv,
        idempotents=idempotents(ring),
        nilpotents=nilpotents(ring),
        center=center(ring),
        jacobson=jac,
        jsharp=jsharp(ring, jac),
        prime_radical=prime_radical(ring) if with_prime_radical else None,
        computed_flags=frozenset(
            ["units", "idempotents", "nilpotents", "center", "jacobson", "jsharp"]
            + (["prime_radical"] if with_prime_radical else [])
        ),
    )
    _assert_bundle_sanity(bundle)
    return bundle


def _assert_bundle_sanity(b: InvariantBundle) -> None:
    ring = b.ring
    assert ring.one in b.units and ring.zero not in b.units
    assert ring.zero in b.idempotents and ring.one in b.idempotents
    assert ring.zero in b.nilpotents and ring.zero in b.jacobson
    assert b.jacobson.members <= b.jsharp.members
    assert b.nilpotents.members <= b.jsharp.members
    one_plus_j = {int(ring.add[ring.one, j]) for j in b.jacobson}
    assert one_plus_j <= b.units.members
    if b.prime_radical is not None:
        assert b.prime_radical.members <= b.nilpotents.members


# ---------------------------------------------------------------------------
# desk oracles (ideal enumeration; exponential in general, small orders only)
# ---------------------------------------------------------------------------


def left_ideals(ring: TableRing) -> list[frozenset[int]]:
    """All left ideals, as the join-closure of the principal ones."""
    principal = {frozenset(int(x) for x in ring.mul[:, a]) for a in range(ring.order)}
    ideals = set(principal)
    frontier = list(principal)
    while frontier:
        nxt = []
        for i in frontier:
            ia = np.array(sorted(i), dtype=np.int64)
            for j in principal:
                ja = np.array(sorted(j), dtype=np.int64)
                s = frozenset(int(x) for x in ring.add[np.ix_(ia, ja)].ravel())
                if s not in ideals:
                    ideals.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(ideals, key=lambda s: (len(s), sorted(s)))


def jacobson_radical_maximal_ideal_oracle(ring: TableRing) -> ElemSet:
    """Intersection of the maximal left ideals (desk oracle, small orders)."""
    proper = [i for i in left_ideals(ring) if len(i) < ring.order]
    maximal = [i for i in proper if not any(i < j for j in proper)]
    inter = frozenset(range(ring.order))
    for m in maximal:
        inter &= m
    return ElemSet(ring, inter)


def two_sided_ideals(ring: TableRing) -> list[frozenset[int]]:
    """All two-sided ideals via join-closure of principal ones."""
    from .construct import ideal_closure  # local import; construct sits above

    principal = {
        frozenset(ideal_closure(ring, ElemSet.of(ring, [a]), "two-sided").members) for a in range(ring.order)
    }
    ideals = set(principal)
    frontier = list(principal)
    while frontier:
        nxt = []
        for i in frontier:
            ia = np.array(sorted(i), dtype=np.int64)
            for j in principal:
                ja = np.array(sorted(j), dtype=np.int64)
                s = frozenset(int(x) for x in ring.add[np.ix_(ia, ja)].ravel())
                if s not in ideals:
                    ideals.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(ideals, key=lambda s: (len(s), sorted(s)))


def prime_radical_ideal_oracle(ring: TableRing) -> ElemSet:
    """Intersection of all prime ideals (desk oracle, small orders)."""
    n = ring.order
    mul = ring.mul
    primes = []
    for ideal in two_sided_ideals(ring):
        if len(ideal) == n:
            continue
        outside = [a for a in range(n) if a not in ideal]
        is_prime = True
        for a in outside:
            arow = mul[a, :]
            for b in outside:
                # a*R*b subset of P forces a or b inside a prime P
                if all(int(mul[int(ar), b]) in ideal for ar in arow):
                    is_prime = False
                    break
            if not is_prime:
                break
        if is_prime:
            primes.append(ideal)
    inter = frozenset(range(n))
    for p in primes:
        inter &= p
    return ElemSet(ring, inter)
