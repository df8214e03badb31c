"""Builders compiling ring constructions to validated TableRings.

Element encodings are deterministic and documented per builder so that
witnesses and cached results are reproducible:

* ``zmod(n)``: index = residue.
* ``gf(q)``: coefficient vector over the prime field in a fixed modulus,
  index = little-endian digit value (c0 + p*c1 + ...).
* ``matrix(k, R)`` / ``triangular(k, R)``: stored cells row-major, index =
  little-endian base-|R| digits over those cells.
* ``product``: mixed radix, first factor least significant.
* ``quotient``: cosets sorted by smallest member index.
* ``corner``: elements of eRe sorted by parent index.
* ``trivial extension``: pair (r, m) at index r*|R| + m.
* ``group ring``: coefficient of group element i is digit i, index =
  little-endian base-|R| value.
* ``truncated skew polynomials``: coefficient of x^j is digit j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_MAX_ORDER,
    ElemSet,
    GaloisMeta,
    GroupRingMeta,
    MatrixMeta,
    OutOfCapError,
    ProductMeta,
    QuotientMeta,
    CornerMeta,
    RingError,
    SkewPolyMeta,
    TableRing,
    TriangularMeta,
    TrivialExtMeta,
    ZmodMeta,
    elem_pow,
    validate_ring,
)
from .groups import GroupTable
from .subsets import is_two_sided_ideal

GF_MODULI = {
    # q: (p, little-endian monic modulus), fixed so encodings never drift
    4: (2, (1, 1, 1)),       # x^2 + x + 1
    8: (2, (1, 1, 0, 1)),    # x^3 + x + 1
    9: (3, (2, 2, 1)),       # x^2 + 2x + 2
}
SUPPORTED_GF = (2, 3, 4, 5, 7, 8, 9)


class UnsupportedOrderError(RingError):
    """Requested Galois field order is outside the supported list."""


class NotAnIdealError(RingError):
    pass


class ImproperIdealError(RingError):
    pass


class NotIdempotentError(RingError):
    pass


class ZeroCornerError(RingError):
    pass


class InvalidEndomorphismError(RingError):
    pass


def _check_cap(order: int, cap: int | None) -> None:
    cap = DEFAULT_MAX_ORDER if cap is None else cap
    if order > cap:
        raise OutOfCapError(f"order {order} exceeds cap {cap}")


# ---------------------------------------------------------------------------
# base rings
# ---------------------------------------------------------------------------


def build_zmod(n: int, cap: int | None = None) -> TableRing:
    """Z/n with index = residue."""
    if n < 2:
        raise ValueError("zmod requires n >= 2")
    _check_cap(n, cap)
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return validate_ring(add, mul, 0, 1, meta=ZmodMeta(n))


def _poly_index(coeffs, p: int) -> int:
    x = 0
    for c in reversed(list(coeffs)):
        x = x * p + int(c)
    return x


def _poly_digits(x: int, p: int, d: int) -> tuple[int, ...]:
    out = []
    for _ in range(d):
        x, r = divmod(x, p)
        out.append(r)
    return tuple(out)


def _poly_name(digits, symbol: str = "a") -> str:
    terms = []
    for i in range(len(digits) - 1, -1, -1):
        c = digits[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            var = symbol if i == 1 else f"{symbol}^{i}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms) or "0"


def build_gf(q: int, cap: int | None = None) -> TableRing:
    """The field of order q for q in {2,3,4,5,7,8,9}."""
    if q not in SUPPORTED_GF:
        raise UnsupportedOrderError(f"GF({q}) is not in the supported list {SUPPORTED_GF}")
    _check_cap(q, cap)
    if q in (2, 3, 5, 7):
        base = build_zmod(q, cap)
        return validate_ring(base.add, base.mul, 0, 1, names=base.names, meta=GaloisMeta(q, q, 1, None))
    p, modulus = GF_MODULI[q]
    d = len(modulus) - 1
    # x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
    reduction = tuple((-m) % p for m in modulus[:-1])
    elements = [_poly_digits(i, p, d) for i in range(q)]

    def mul_polys(a, b):
        raw = [0] * (2 * d - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                raw[i + j] = (raw[i + j] + ca * cb) % p
        for k in range(2 * d - 2, d - 1, -1):
            c = raw[k]
            if c == 0:
                continue
            raw[k] = 0
            for t, m in enumerate(reduction):
                raw[k - d + t] = (raw[k - d + t] + c * m) % p
        return tuple(raw[:d])

    add = np.zeros((q, q), dtype=np.int32)
    mul = np.zeros((q, q), dtype=np.int32)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            add[i, j] = _poly_index(((ca + cb) % p for ca, cb in zip(a, b)), p)
            mul[i, j] = _poly_index(mul_polys(a, b), p)
    names = tuple(_poly_name(e) for e in elements)
    return validate_ring(add, mul, 0, 1, names=names, meta=GaloisMeta(q, p, d, modulus))


# ---------------------------------------------------------------------------
# digit-vector helpers shared by the compound builders
# ---------------------------------------------------------------------------


def _all_digits(order: int, radix: int, width: int) -> np.ndarray:
    digits = np.zeros((order, width), dtype=np.int32)
    x = np.arange(order)
    for j in range(width):
        digits[:, j] = x % radix
        x //= radix
    return digits


def _encode_digits(digits: np.ndarray, radix: int) -> np.ndarray:
    out = np.zeros(digits.shape[:-1], dtype=np.int64)
    for j in range(digits.shape[-1] - 1, -1, -1):
        out = out * radix + digits[..., j]
    return out.astype(np.int32)


def _componentwise_add(base: TableRing, digits: np.ndarray) -> np.ndarray:
    """Addition table for digit-vector elements over one base ring."""
    n = digits.shape[0]
    add = np.zeros((n, n), dtype=np.int32)
    for a in range(n):
        add[a, :] = _encode_digits(base.add[digits[a][None, :], digits], base.order)
    return add


# ---------------------------------------------------------------------------
# matrices and triangular matrices
# ---------------------------------------------------------------------------


def _matrix_like(base: TableRing, k: int, positions: list[tuple[int, int]], cap: int | None):
    width = len(positions)
    order = base.order**width
    _check_cap(order, cap)
    digits = _all_digits(order, base.order, width)
    pos_index = {pos: w for w, pos in enumerate(positions)}
    add = _componentwise_add(base, digits)

    mul = np.zeros((order, order), dtype=np.int32)
    badd, bmul = base.add, base.mul
    for a in range(order):
        da = digits[a]
        acc = np.zeros((order, width), dtype=np.int32)
        acc[:, :] = base.zero
        for w, (i, j) in enumerate(positions):
            for l in range(k):
                wa = pos_index.get((i, l))
                wb = pos_index.get((l, j))
                if wa is None or wb is None:
                    continue  # structural zero below the diagonal
                term = bmul[da[wa], digits[:, wb]]
                acc[:, w] = badd[acc[:, w], term]
        mul[a, :] = _encode_digits(acc, base.order)

    one_digits = [base.zero] * width
    for w, (i, j) in enumerate(positions):
        if i == j:
            one_digits[w] = base.one
    one = int(_poly_index(one_digits, base.order))

    def name(a: int) -> str:
        grid = [[base.names[base.zero]] * k for _ in range(k)]
        for w, (i, j) in enumerate(positions):
            grid[i][j] = base.names[digits[a][w]]
        return "[" + ",".join("[" + ",".join(row) + "]" for row in grid) + "]"

    names = tuple(name(a) for a in range(order))
    return add, mul, one, names, digits


def build_matrix(base: TableRing, k: int, cap: int | None = None) -> TableRing:
    """k x k matrices over `base`; cells row-major, little-endian digits."""
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    positions = [(i, j) for i in range(k) for j in range(k)]
    add, mul, one, names, _ = _matrix_like(base, k, positions, cap)
    return validate_ring(add, mul, 0, one, names=names, meta=MatrixMeta(base, k))


def build_triangular(base: TableRing, k: int, cap: int | None = None) -> TableRing:
    """Upper-triangular k x k matrices over `base`."""
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    positions = [(i, j) for i in range(k) for j in range(i, k)]
    add, mul, one, names, _ = _matrix_like(base, k, positions, cap)
    return validate_ring(add, mul, 0, one, names=names, meta=TriangularMeta(base, k, tuple(positions)))


def matrix_unit_index(ring: TableRing, i: int, j: int) -> int:
    """Index of the matrix unit E_ij in a matrix/triangular ring."""
    meta = ring.meta
    if isinstance(meta, MatrixMeta):
        positions = [(r, c) for r in range(meta.size) for c in range(meta.size)]
        base = meta.base
    elif isinstance(meta, TriangularMeta):
        positions = list(meta.positions)
        base = meta.base
    else:
        raise RingError("not a matrix-backed ring")
    w = positions.index((i, j))
    return int(base.one) * base.order**w


# ---------------------------------------------------------------------------
# products, quotients, corners, extensions
# ---------------------------------------------------------------------------


def build_product(factors: list[TableRing], cap: int | None = None) -> TableRing:
    """Direct product, first factor least significant in the index."""
    if not factors:
        raise ValueError("product needs at least one factor")
    order = 1
    for f in factors:
        order *= f.order
    _check_cap(order, cap)

    def decode(x: int) -> tuple[int, ...]:
        out = []
        for f in factors:
            x, r = divmod(x, f.order)
            out.append(r)
        return tuple(out)

    radices = [f.order for f in factors]
    decoded = np.array([decode(x) for x in range(order)], dtype=np.int32)

    def table(kind: str) -> np.ndarray:
        out = np.zeros((order, order), dtype=np.int32)
        for a in range(order):
            comps = []
            for fi, f in enumerate(factors):
                t = f.add if kind == "add" else f.mul
                comps.append(t[decoded[a, fi], decoded[:, fi]])
            enc = np.zeros(order, dtype=np.int64)
            for fi in range(len(factors) - 1, -1, -1):
                enc = enc * radices[fi] + comps[fi]
            out[a, :] = enc
        return out

    zero = 0
    one_parts = [f.one for f in factors]
    one = 0
    for fi in range(len(factors) - 1, -1, -1):
        one = one * radices[fi] + one_parts[fi]
    names = tuple(
        "(" + ", ".join(f.names[decoded[x, fi]] for fi, f in enumerate(factors)) + ")" for x in range(order)
    )
    return validate_ring(table("add"), table("mul"), zero, int(one), names=names, meta=ProductMeta(tuple(factors)))


def ideal_closure(ring: TableRing, gens: ElemSet, side: str = "two-sided") -> ElemSet:
    """Smallest one- or two-sided ideal containing `gens` (fixpoint)."""
    if side not in ("left", "right", "two-sided"):
        raise ValueError("side must be left, right or two-sided")
    add, mul = ring.add, ring.mul
    n = ring.order
    members = {ring.zero}
    frontier = list(gens.members)
    for g in frontier:
        members.add(g)
    while frontier:
        x = frontier.pop()
        new = set()
        arr = np.array(sorted(members), dtype=np.int64)
        new.update(int(v) for v in add[x, arr])
        if side in ("left", "two-sided"):
            new.update(int(v) for v in mul[:, x])
        if side in ("right", "two-sided"):
            new.update(int(v) for v in mul[x, :])
        fresh = new - members
        members |= fresh
        frontier.extend(fresh)
        if len(members) == n:
            break
    # ensure additive closure after the generator sweep
    changed = True
    while changed:
        arr = np.array(sorted(members), dtype=np.int64)
        total = {int(v) for v in add[np.ix_(arr, arr)].ravel()}
        changed = not total <= members
        members |= total
    return ElemSet.of(ring, members)


def build_quotient(ring: TableRing, ideal: ElemSet, cap: int | None = None) -> tuple[TableRing, np.ndarray]:
    """R/I for a proper two-sided ideal; returns (quotient, projection).

    Cosets are indexed in ascending order of their smallest member.
    """
    ok, witness = is_two_sided_ideal(ring, ideal)
    if not ok:
        raise NotAnIdealError(f"generating set is not a two-sided ideal: {witness}")
    if len(ideal) == ring.order:
        raise ImproperIdealError("quotient by the whole ring is the zero ring")
    n = ring.order
    members = np.array(sorted(ideal.members), dtype=np.int64)
    rep = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        if rep[x] >= 0:
            continue
        coset = ring.add[x, members]
        smallest = int(coset.min())
        rep[coset] = smallest
    reps = np.unique(rep)
    coset_index = {int(r): i for i, r in enumerate(reps)}
    projection = np.array([coset_index[int(r)] for r in rep], dtype=np.int32)
    m = len(reps)
    _check_cap(m, cap)
    add = np.zeros((m, m), dtype=np.int32)
    mul = np.zeros((m, m), dtype=np.int32)
    for i, a in enumerate(reps):
        add[i, :] = projection[ring.add[a, reps]]
        mul[i, :] = projection[ring.mul[a, reps]]
    names = tuple(f"[{ring.names[int(r)]}]" for r in reps)
    meta = QuotientMeta(ring, tuple(sorted(ideal.members)), projection)
    out = validate_ring(add, mul, int(projection[ring.zero]), int(projection[ring.one]), names=names, meta=meta)
    return out, projection


def build_corner(ring: TableRing, e: int, cap: int | None = None) -> tuple[TableRing, np.ndarray]:
    """The corner eRe with identity e; returns (corner, embedding)."""
    ring.check_index(e)
    if int(ring.mul[e, e]) != e:
        raise NotIdempotentError(f"element {e} is not idempotent")
    if e == ring.zero:
        raise ZeroCornerError("corner at zero is the zero ring")
    exe = np.unique(ring.mul[e, ring.mul[:, e]])
    embedding = exe.astype(np.int32)
    _check_cap(len(exe), cap)
    back = {int(p): i for i, p in enumerate(exe)}
    m = len(exe)
    add = np.zeros((m, m), dtype=np.int32)
    mul = np.zeros((m, m), dtype=np.int32)
    for i, p in enumerate(exe):
        add[i, :] = [back[int(v)] for v in ring.add[int(p), exe]]
        mul[i, :] = [back[int(v)] for v in ring.mul[int(p), exe]]
    names = tuple(ring.names[int(p)] for p in exe)
    meta = CornerMeta(ring, e, embedding)
    out = validate_ring(add, mul, back[ring.zero], back[e], names=names, meta=meta)
    return out, embedding


def build_trivial_extension(ring: TableRing, cap: int | None = None) -> TableRing:
    """T(R, R): pairs (r, m) with (r,m)(s,n) = (rs, rn + ms); index r*|R|+m."""
    n = ring.order
    order = n * n
    _check_cap(order, cap)
    r_part, m_part = np.divmod(np.arange(order), n)
    add = np.zeros((order, order), dtype=np.int32)
    mul = np.zeros((order, order), dtype=np.int32)
    for a in range(order):
        ra, ma = int(r_part[a]), int(m_part[a])
        add[a, :] = ring.add[ra, r_part] * n + ring.add[ma, m_part]
        mul[a, :] = ring.mul[ra, r_part] * n + ring.add[ring.mul[ra, m_part], ring.mul[ma, r_part]]
    names = tuple(f"({ring.names[int(r_part[a])]}, {ring.names[int(m_part[a])]})" for a in range(order))
    return validate_ring(add, mul, 0, ring.one * n, names=names, meta=TrivialExtMeta(ring))


# ---------------------------------------------------------------------------
# group rings
# ---------------------------------------------------------------------------


def build_group_ring(base: TableRing, group: GroupTable, cap: int | None = None) -> TableRing:
    """R[G]: functions G -> R with convolution product."""
    order = base.order**group.order
    _check_cap(order, cap)
    gsize = group.order
    digits = _all_digits(order, base.order, gsize)
    add = _componentwise_add(base, digits)

    mul = np.zeros((order, order), dtype=np.int32)
    badd, bmul = base.add, base.mul
    for a in range(order):
        da = digits[a]
        acc = np.full((order, gsize), base.zero, dtype=np.int32)
        for gi in range(gsize):
            ca = da[gi]
            if ca == base.zero:
                continue
            for gj in range(gsize):
                gk = int(group.op[gi, gj])
                acc[:, gk] = badd[acc[:, gk], bmul[ca, digits[:, gj]]]
        mul[a, :] = _encode_digits(acc, base.order)

    one = int(base.one) * base.order**group.identity
    zero = 0

    def name(a: int) -> str:
        terms = []
        for gi in range(gsize):
            c = int(digits[a, gi])
            if c == base.zero:
                continue
            cname = base.names[c]
            gname = group.names[gi]
            if gi == group.identity:
                terms.append(cname)
            elif c == base.one:
                terms.append(gname)
            elif any(ch in cname for ch in "+- "):
                terms.append(f"({cname}){gname}")
            else:
                terms.append(f"{cname}{gname}")
        return "+".join(terms) or base.names[base.zero]

    names = tuple(name(a) for a in range(order))
    meta = GroupRingMeta(base, group, digits)
    return validate_ring(add, mul, zero, one, names=names, meta=meta)


# ---------------------------------------------------------------------------
# endomorphisms and truncated skew polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Endomorphism:
    """A validated unital ring endomorphism given by an image table."""

    ring: TableRing
    map: np.ndarray
    name: str = "endo"


def validate_endomorphism(ring: TableRing, mapping, name: str = "endo") -> Endomorphism:
    arr = np.asarray(mapping, dtype=np.int32)
    if arr.shape != (ring.order,):
        raise InvalidEndomorphismError("image table must list one image per element")
    if arr.min() < 0 or arr.max() >= ring.order:
        raise InvalidEndomorphismError("image out of range")
    if int(arr[ring.zero]) != ring.zero or int(arr[ring.one]) != ring.one:
        raise InvalidEndomorphismError("map must fix 0 and 1")
    if not np.array_equal(arr[ring.add], ring.add[arr[:, None], arr[None, :]]):
        raise InvalidEndomorphismError("map does not preserve addition")
    if not np.array_equal(arr[ring.mul], ring.mul[arr[:, None], arr[None, :]]):
        raise InvalidEndomorphismError("map does not preserve multiplication")
    arr.setflags(write=False)
    return Endomorphism(ring, arr, name)


def identity_endo(ring: TableRing) -> Endomorphism:
    return validate_endomorphism(ring, np.arange(ring.order), "id")


def frobenius_endo(ring: TableRing) -> Endomorphism:
    meta = ring.meta
    if not isinstance(meta, GaloisMeta):
        raise InvalidEndomorphismError("frob is only defined on Galois fields")
    images = [elem_pow(ring, a, meta.char) for a in range(ring.order)]
    return validate_endomorphism(ring, images, "frob")


def endomorphism_from_text(ring: TableRing, text: str, name: str = "endo") -> Endomorphism:
    """Parse the endomorphism file format: `order n` then lines `i -> j`."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].lower().startswith("order"):
        raise InvalidEndomorphismError("expected an 'order n' header line")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise InvalidEndomorphismError(f"bad header: {exc}") from exc
    if n != ring.order:
        raise InvalidEndomorphismError(f"order {n} does not match ring order {ring.order}")
    images = np.full(n, -1, dtype=np.int32)
    for ln in lines[1:]:
        parts = [p.strip() for p in ln.split("->")]
        if len(parts) != 2:
            raise InvalidEndomorphismError(f"bad mapping line: {ln!r}")
        images[int(parts[0])] = int(parts[1])
    if (images < 0).any():
        raise InvalidEndomorphismError("mapping is not total")
    return validate_endomorphism(ring, images, name)


def endomorphism_from_file(ring: TableRing, path, name: str = "endo") -> Endomorphism:
    with open(path, "r", encoding="utf-8") as fh:
        return endomorphism_from_text(ring, fh.read(), name)


def check_alpha_compatible(ring: TableRing, alpha: Endomorphism) -> tuple[bool, tuple[int, int] | None]:
    """True iff a*b = 0 exactly when a*alpha(b) = 0, else a witness pair."""
    zero_ab = ring.mul == ring.zero
    zero_aalpha = ring.mul[:, alpha.map] == ring.zero
    diff = np.argwhere(zero_ab != zero_aalpha)
    if len(diff):
        a, b = map(int, diff[0])
        return False, (a, b)
    return True, None


def build_truncated_skew_poly(
    base: TableRing, alpha: Endomorphism, k: int, cap: int | None = None
) -> TableRing:
    """R[x; alpha]/(x^k): degree-<k coefficient vectors with x*r = alpha(r)*x.

    The ideal generated by x is nilpotent, so it sits inside the radical
    and the quotient by it recovers R.
    """
    if k < 1:
        raise ValueError("truncation exponent must be >= 1")
    if alpha.ring is not base:
        raise InvalidEndomorphismError("endomorphism belongs to a different ring")
    order = base.order**k
    _check_cap(order, cap)
    digits = _all_digits(order, base.order, k)
    add = _componentwise_add(base, digits)

    # alpha^i applied to every base element, i < k
    powers = [np.arange(base.order, dtype=np.int32)]
    for _ in range(1, k):
        powers.append(alpha.map[powers[-1]])

    mul = np.zeros((order, order), dtype=np.int32)
    badd, bmul = base.add, base.mul
    for a in range(order):
        da = digits[a]
        acc = np.full((order, k), base.zero, dtype=np.int32)
        for i in range(k):
            ca = da[i]
            if ca == base.zero:
                continue
            for j in range(k - i):
                term = bmul[ca, powers[i][digits[:, j]]]  # a_i x^i * b_j x^j = a_i alpha^i(b_j) x^(i+j)
                acc[:, i + j] = badd[acc[:, i + j], term]
        mul[a, :] = _encode_digits(acc, base.order)

    def name(a: int) -> str:
        terms = []
        for i in range(k):
            c = int(digits[a, i])
            if c == base.zero:
                continue
            cname = base.names[c]
            if i == 0:
                terms.append(cname)
                continue
            var = "x" if i == 1 else f"x^{i}"
            if c == base.one:
                terms.append(var)
            elif any(ch in cname for ch in "+- "):
                terms.append(f"({cname}){var}")
            else:
                terms.append(f"{cname}{var}")
        return "+".join(terms) or base.names[base.zero]

    names = tuple(name(a) for a in range(order))
    meta = SkewPolyMeta(base, alpha.name, alpha.map, k, digits)
    return validate_ring(add, mul, 0, int(base.one), names=names, meta=meta)
