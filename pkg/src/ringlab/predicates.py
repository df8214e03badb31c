"""Ring-class predicates and element-wise decomposition searches.

Every verdict is decision-procedure grade: searches are exhaustive over
the relevant subsets, and a False verdict always carries a witness that
re-evaluating the defining formula would confirm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ElemSet, TableRing
from .construct import build_quotient
from .subsets import InvariantBundle, compute_bundle


@dataclass(frozen=True)
class Verdict:
    value: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.value


def _first(iterable):
    for x in iterable:
        return x
    return None


# ---------------------------------------------------------------------------
# unit-versus-radical classes
# ---------------------------------------------------------------------------


def is_ujsharp(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    """Every unit is 1 + (element whose power orbit meets the radical)."""
    jsharp = bundle.jsharp.members
    for u in bundle.units:
        if int(ring.add[u, ring.neg[ring.one]]) not in jsharp:
            return Verdict(False, f"unit u = {ring.describe(u)} has u-1 outside J#")
    return Verdict(True)


def is_uj(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    jac = bundle.jacobson.members
    for u in bundle.units:
        if int(ring.add[u, ring.neg[ring.one]]) not in jac:
            return Verdict(False, f"unit u = {ring.describe(u)} has u-1 outside J")
    return Verdict(True)


def is_uu(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    nil = bundle.nilpotents.members
    for u in bundle.units:
        if int(ring.add[u, ring.neg[ring.one]]) not in nil:
            return Verdict(False, f"unit u = {ring.describe(u)} has u-1 outside Nil")
    return Verdict(True)


def is_boolean(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    bad = _first(a for a in range(ring.order) if int(ring.mul[a, a]) != a)
    if bad is None:
        return Verdict(True)
    return Verdict(False, f"{ring.describe(bad)} is not idempotent")


def is_local(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    """Nonunits coincide with the radical."""
    nonunits = frozenset(range(ring.order)) - bundle.units.members
    if nonunits == bundle.jacobson.members:
        return Verdict(True)
    off = _first(sorted(nonunits ^ bundle.jacobson.members))
    return Verdict(False, f"nonunits differ from J at {ring.describe(off)}")


def is_division(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    nonzero = frozenset(range(ring.order)) - {ring.zero}
    if nonzero == bundle.units.members:
        return Verdict(True)
    off = _first(sorted(nonzero - bundle.units.members))
    return Verdict(False, f"{ring.describe(off)} is a nonzero nonunit")


def is_dedekind_finite(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    """ab = 1 forces ba = 1 (pigeonhole guarantees this on finite rings)."""
    one_ab = ring.mul == ring.one
    bad = np.argwhere(one_ab & ~one_ab.T)
    if len(bad):
        a, b = map(int, bad[0])
        return Verdict(False, f"ab = 1 but ba != 1 for a = {ring.describe(a)}, b = {ring.describe(b)}")
    return Verdict(True)


def is_2primal(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    nilstar = bundle.require_prime_radical().members
    nil = bundle.nilpotents.members
    if nilstar == nil:
        return Verdict(True)
    off = _first(sorted(nil - nilstar))
    return Verdict(False, f"nilpotent {ring.describe(off)} is not strongly nilpotent")


# ---------------------------------------------------------------------------
# idempotent-richness classes
# ---------------------------------------------------------------------------


def is_semipotent(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    """Every one-sided ideal not inside J contains a nonzero idempotent.

    Checking the principal ideals Ra and aR for a outside J suffices:
    any offending ideal contains such an a, hence such a principal one.
    """
    idem = bundle.idempotents.mask()
    idem[ring.zero] = False
    jac = bundle.jacobson.members
    for a in range(ring.order):
        if a in jac:
            continue
        if not idem[ring.mul[:, a]].any():
            return Verdict(False, f"left ideal R*{ring.describe(a)} has no nonzero idempotent")
        if not idem[ring.mul[a, :]].any():
            return Verdict(False, f"right ideal {ring.describe(a)}*R has no nonzero idempotent")
    return Verdict(True)


def idempotents_lift(ring: TableRing, bundle: InvariantBundle, ideal: ElemSet) -> Verdict:
    """Every idempotent of R/I is the image of an idempotent of R."""
    quotient, projection = build_quotient(ring, ideal)
    qidem = {int(q) for q in np.where(quotient.mul[np.arange(quotient.order), np.arange(quotient.order)] == np.arange(quotient.order))[0]}
    lifted = {int(projection[e]) for e in bundle.idempotents}
    missing = sorted(qidem - lifted)
    if missing:
        return Verdict(False, f"coset {quotient.describe(missing[0])} lifts to no idempotent")
    return Verdict(True)


def is_potent(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    semi = is_semipotent(ring, bundle)
    if not semi:
        return semi
    return idempotents_lift(ring, bundle, bundle.jacobson)


def is_regular(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    """von Neumann regular: for each a some x has axa = a."""
    for a in range(ring.order):
        row = ring.mul[ring.mul[a, :], a]  # (a*x)*a over all x
        if not (row == a).any():
            return Verdict(False, f"no x with axa = a for a = {ring.describe(a)}")
    return Verdict(True)


def is_exchange(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    """For each a: some idempotent e in aR with 1 - e in (1-a)R.

    This idempotent-splitting formulation agrees with the module-theoretic
    definitions on finite rings.
    """
    idem = sorted(bundle.idempotents.members)
    for a in range(ring.order):
        in_aR = np.zeros(ring.order, dtype=bool)
        in_aR[ring.mul[a, :]] = True
        b = int(ring.add[ring.one, ring.neg[a]])
        in_bR = np.zeros(ring.order, dtype=bool)
        in_bR[ring.mul[b, :]] = True
        hit = _first(e for e in idem if in_aR[e] and in_bR[int(ring.add[ring.one, ring.neg[e]])])
        if hit is None:
            return Verdict(False, f"no exchange idempotent for a = {ring.describe(a)}")
    return Verdict(True)


def _radical_quotient(ring: TableRing, bundle: InvariantBundle):
    quotient, projection = build_quotient(ring, bundle.jacobson)
    return quotient, projection, compute_bundle(quotient, with_prime_radical=False)


def is_semiregular(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    """R/J regular and idempotents lift modulo J."""
    quotient, _, qbundle = _radical_quotient(ring, bundle)
    reg = is_regular(quotient, qbundle)
    if not reg:
        return Verdict(False, f"R/J not regular: {reg.witness}")
    return idempotents_lift(ring, bundle, bundle.jacobson)


def is_semiboolean(ring: TableRing, bundle: InvariantBundle) -> Verdict:
    """R/J Boolean and idempotents lift modulo J."""
    quotient, _, qbundle = _radical_quotient(ring, bundle)
    boo = is_boolean(quotient, qbundle)
    if not boo:
        return Verdict(False, f"R/J not Boolean: {boo.witness}")
    return idempotents_lift(ring, bundle, bundle.jacobson)


# ---------------------------------------------------------------------------
# clean decompositions
# ---------------------------------------------------------------------------


def _decomposition(ring: TableRing, bundle: InvariantBundle, a: int, pool: frozenset[int], commuting: bool):
    """First (e, w) with e idempotent, w = a - e in pool, optionally ea = ae."""
    for e in sorted(bundle.idempotents.members):
        w = int(ring.add[a, ring.neg[e]])
        if w not in pool:
            continue
        if commuting and int(ring.mul[e, a]) != int(ring.mul[a, e]):
            continue
        return e, w
    return None


def clean_witness(ring, bundle, a):
    return _decomposition(ring, bundle, a, bundle.units.members, False)


def strongly_clean_witness(ring, bundle, a):
    return _decomposition(ring, bundle, a, bundle.units.members, True)


def jsharp_clean_witness(ring, bundle, a):
    return _decomposition(ring, bundle, a, bundle.jsharp.members, False)


def strongly_jsharp_clean_witness(ring, bundle, a):
    return _decomposition(ring, bundle, a, bundle.jsharp.members, True)


def strongly_nil_clean_witness(ring, bundle, a):
    return _decomposition(ring, bundle, a, bundle.nilpotents.members, True)


def clean_decomposition_count(ring: TableRing, bundle: InvariantBundle, a: int) -> int:
    """Number of ordered pairs (e, u) with e idempotent, u a unit, a = e + u."""
    count = 0
    for e in bundle.idempotents:
        if int(ring.add[a, ring.neg[e]]) in bundle.units.members:
            count += 1
    return count


_CLEAN_SEARCHES = {
    "clean": clean_witness,
    "strongly_clean": strongly_clean_witness,
    "jsharp_clean": jsharp_clean_witness,
    "strongly_jsharp_clean": strongly_jsharp_clean_witness,
    "strongly_nil_clean": strongly_nil_clean_witness,
}


def clean_family(ring: TableRing, bundle: InvariantBundle) -> dict[str, Verdict]:
    """Ring-level verdicts for the clean-style decomposition classes."""
    out: dict[str, Verdict] = {}
    for name, search in _CLEAN_SEARCHES.items():
        bad = _first(a for a in range(ring.order) if search(ring, bundle, a) is None)
        if bad is None:
            out[name] = Verdict(True)
        else:
            out[name] = Verdict(False, f"{ring.describe(bad)} has no {name.replace('_', ' ')} decomposition")
    bad = _first(a for a in range(ring.order) if clean_decomposition_count(ring, bundle, a) != 1)
    if bad is None:
        out["uniquely_clean"] = Verdict(True)
    else:
        k = clean_decomposition_count(ring, bundle, bad)
        out["uniquely_clean"] = Verdict(False, f"{ring.describe(bad)} has {k} clean decompositions")
    return out


# ---------------------------------------------------------------------------
# the full report
# ---------------------------------------------------------------------------

PREDICATE_NAMES = (
    "ujsharp",
    "uj",
    "uu",
    "boolean",
    "local",
    "division",
    "dedekind_finite",
    "two_primal",
    "semipotent",
    "potent",
    "regular",
    "exchange",
    "semiregular",
    "semiboolean",
    "clean",
    "strongly_clean",
    "jsharp_clean",
    "strongly_jsharp_clean",
    "strongly_nil_clean",
    "uniquely_clean",
)


def classify(ring: TableRing, bundle: InvariantBundle) -> dict[str, Verdict]:
    """Evaluate every ring-class predicate once."""
    out = {
        "ujsharp": is_ujsharp(ring, bundle),
        "uj": is_uj(ring, bundle),
        "uu": is_uu(ring, bundle),
        "boolean": is_boolean(ring, bundle),
        "local": is_local(ring, bundle),
        "division": is_division(ring, bundle),
        "dedekind_finite": is_dedekind_finite(ring, bundle),
        "two_primal": is_2primal(ring, bundle),
        "semipotent": is_semipotent(ring, bundle),
        "potent": is_potent(ring, bundle),
        "regular": is_regular(ring, bundle),
        "exchange": is_exchange(ring, bundle),
        "semiregular": is_semiregular(ring, bundle),
        "semiboolean": is_semiboolean(ring, bundle),
    }
    out.update(clean_family(ring, bundle))
    # implication lattice; a violation here is a computation bug
    assert not out["uj"].value or out["ujsharp"].value
    assert not out["uu"].value or out["ujsharp"].value
    assert not out["boolean"].value or out["uu"].value
    assert not out["local"].value or out["clean"].value
    return out
