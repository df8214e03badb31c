import numpy as np
import pytest

from ringlab import ElemSet, OutOfCapError, compile_text
from ringlab.construct import (
    GF_MODULI,
    Endomorphism,
    InvalidEndomorphismError,
    NotAnIdealError,
    NotIdempotentError,
    UnsupportedOrderError,
    ZeroCornerError,
    build_corner,
    build_gf,
    build_group_ring,
    build_matrix,
    build_product,
    build_quotient,
    build_triangular,
    build_trivial_extension,
    build_truncated_skew_poly,
    build_zmod,
    check_alpha_compatible,
    endomorphism_from_text,
    frobenius_endo,
    ideal_closure,
    identity_endo,
    matrix_unit_index,
    validate_endomorphism,
)
from ringlab.groups import cyclic, quaternion8
from ringlab.subsets import compute_bundle, is_two_sided_ideal


def brute_force_units(ring):
    """Independent unit scan: two-sided inverse by direct pair search."""
    out = set()
    for a in range(ring.order):
        for b in range(ring.order):
            if int(ring.mul[a, b]) == ring.one and int(ring.mul[b, a]) == ring.one:
                out.add(a)
                break
    return out


def test_zmod_basics():
    z2 = build_zmod(2)
    assert z2.order == 2 and z2.zero == 0 and z2.one == 1
    z8 = build_zmod(8)
    assert brute_force_units(z8) == {1, 3, 5, 7}


def test_zmod_unit_count_matches_euler_phi():
    # phi(12) = 4, cross-checked by the brute-force inverse search
    z12 = build_zmod(12)
    units = brute_force_units(z12)
    assert len(units) == 4
    assert units == {1, 5, 7, 11}


def test_zmod_range():
    with pytest.raises(ValueError):
        build_zmod(1)
    with pytest.raises(OutOfCapError):
        build_zmod(100, cap=64)


def test_gf_orders_and_units():
    assert build_gf(2).tables_equal(build_zmod(2))
    gf4 = build_gf(4)
    assert gf4.order == 4
    assert brute_force_units(gf4) == {1, 2, 3}
    # every nonidentity unit u has u - 1 invertible again
    for u in (2, 3):
        um1 = int(gf4.add[u, gf4.neg[1]])
        assert um1 in brute_force_units(gf4)
    for q in (8, 9):
        gfq = build_gf(q)
        assert gfq.order == q
        assert len(brute_force_units(gfq)) == q - 1


def test_gf_moduli_are_fixed():
    assert GF_MODULI[4] == (2, (1, 1, 1))
    gf4 = build_gf(4)
    assert gf4.names == ("0", "1", "a", "a+1")
    # a * a = a + 1 under x^2 + x + 1
    assert int(gf4.mul[2, 2]) == 3


def test_gf_unsupported():
    with pytest.raises(UnsupportedOrderError):
        build_gf(6)
    with pytest.raises(UnsupportedOrderError):
        build_gf(16)


def test_matrix_ring():
    m2 = build_matrix(build_zmod(2), 2)
    assert m2.order == 16
    u = 2 + 4 + 8  # [[0,1],[1,1]]
    assert u in brute_force_units(m2)
    assert len(brute_force_units(m2)) == 6  # |GL_2(F_2)|


def test_matrix_units_identity():
    for base, k in ((build_zmod(2), 2), (build_zmod(3), 2)):
        ring = build_matrix(base, k)
        for i in range(k):
            for j in range(k):
                for s in range(k):
                    for t in range(k):
                        eij = matrix_unit_index(ring, i, j)
                        est = matrix_unit_index(ring, s, t)
                        expected = matrix_unit_index(ring, i, t) if j == s else ring.zero
                        assert int(ring.mul[eij, est]) == expected


def test_triangular_ring():
    t2 = build_triangular(build_zmod(2), 2)
    assert t2.order == 8
    bundle = compute_bundle(t2)
    e12 = matrix_unit_index(t2, 0, 1)
    assert bundle.jacobson.indices() == (t2.zero, e12) == (0, 2)


def test_product_ring():
    boole = build_product([build_zmod(2), build_zmod(2)])
    assert boole.order == 4
    idx = np.arange(4)
    assert np.array_equal(boole.mul[idx, idx], idx)  # Boolean: x^2 = x
    mixed = build_product([build_zmod(2), build_gf(4)])
    assert mixed.order == 8
    assert len(brute_force_units(mixed)) == 3


def test_ideal_closure_zmod():
    z8 = build_zmod(8)
    closed = ideal_closure(z8, ElemSet.of(z8, [2]), "two-sided")
    assert closed.indices() == (0, 2, 4, 6)


def test_ideal_closure_matrix():
    def fixpoint_oracle(ring, gens, left, right):
        members = {ring.zero} | set(gens)
        while True:
            new = set(members)
            for x in list(members):
                for y in members:
                    new.add(int(ring.add[x, y]))
                for r in range(ring.order):
                    if left:
                        new.add(int(ring.mul[r, x]))
                    if right:
                        new.add(int(ring.mul[x, r]))
            if new == members:
                return frozenset(members)
            members = new

    m2 = build_matrix(build_zmod(2), 2)
    e12 = matrix_unit_index(m2, 0, 1)
    two_sided = ideal_closure(m2, ElemSet.of(m2, [e12]), "two-sided")
    assert two_sided.members == fixpoint_oracle(m2, [e12], True, True)
    assert len(two_sided) == 16  # simple ring
    left = ideal_closure(m2, ElemSet.of(m2, [e12]), "left")
    assert left.members == fixpoint_oracle(m2, [e12], True, False)
    assert left.indices() == (0, 2, 8, 10)  # column ideal of order 4
    right = ideal_closure(m2, ElemSet.of(m2, [e12]), "right")
    assert right.members == fixpoint_oracle(m2, [e12], False, True)


def test_quotient_z8():
    z8 = build_zmod(8)
    ideal = ideal_closure(z8, ElemSet.of(z8, [4]), "two-sided")
    quotient, projection = build_quotient(z8, ideal)
    assert quotient.order == 4
    assert projection[0] == projection[4]
    jac = compute_bundle(z8).jacobson
    small, _ = build_quotient(z8, jac)
    assert small.order == 2


def test_quotient_t2_is_boolean():
    t2 = build_triangular(build_zmod(2), 2)
    bundle = compute_bundle(t2)
    quotient, _ = build_quotient(t2, bundle.jacobson)
    assert quotient.order == 4
    idx = np.arange(4)
    assert np.array_equal(quotient.mul[idx, idx], idx)


def test_quotient_rejects_non_ideals():
    z8 = build_zmod(8)
    with pytest.raises(NotAnIdealError):
        build_quotient(z8, ElemSet.of(z8, [0, 1]))
    m2 = build_matrix(build_zmod(2), 2)
    jsharp = compute_bundle(m2).jsharp
    ok, witness = is_two_sided_ideal(m2, jsharp)
    assert not ok and witness is not None
    with pytest.raises(NotAnIdealError):
        build_quotient(m2, jsharp)


def test_quotient_by_whole_ring_rejected():
    from ringlab.construct import ImproperIdealError

    z8 = build_zmod(8)
    everything = ideal_closure(z8, ElemSet.of(z8, [1]), "two-sided")
    assert len(everything) == 8
    with pytest.raises(ImproperIdealError):
        build_quotient(z8, everything)


def test_quotient_by_zero_is_identity():
    z8 = build_zmod(8)
    quotient, projection = build_quotient(z8, ElemSet.of(z8, [0]))
    assert quotient.tables_equal(z8)
    assert np.array_equal(projection, np.arange(8))


def test_unit_counts_saturate_radical_fibers(corpus_bundles):
    # |U(R/I)| = |U(R)| / |I| whenever I sits inside J, over the whole corpus
    for text, ring, bundle in corpus_bundles:
        for members in ({ring.zero}, bundle.jacobson.members):
            ideal = ElemSet.of(ring, members)
            quotient, _ = build_quotient(ring, ideal)
            qunits = compute_bundle(quotient, with_prime_radical=False).units
            assert len(qunits) * len(ideal) == len(bundle.units), text


def test_corner_at_identity_is_the_ring():
    m2 = build_matrix(build_zmod(2), 2)
    corner, embedding = build_corner(m2, m2.one)
    assert corner.tables_equal(m2)
    assert np.array_equal(embedding, np.arange(16))


def test_corner_at_e11():
    m2 = build_matrix(build_zmod(2), 2)
    e11 = matrix_unit_index(m2, 0, 0)
    corner, embedding = build_corner(m2, e11)
    assert corner.order == 2
    assert set(map(int, embedding)) == {0, e11}
    t2 = build_triangular(build_zmod(2), 2)
    ce, _ = build_corner(t2, matrix_unit_index(t2, 0, 0))
    assert ce.order == 2


def test_corner_errors():
    z8 = build_zmod(8)
    with pytest.raises(NotIdempotentError):
        build_corner(z8, 2)
    with pytest.raises(ZeroCornerError):
        build_corner(z8, 0)


def test_trivial_extension():
    t = build_trivial_extension(build_zmod(2))
    assert t.order == 4
    x = 1  # (0, 1)
    assert int(t.mul[x, x]) == t.zero  # x^2 = 0
    z4 = build_zmod(4)
    t4 = build_trivial_extension(z4)
    units = brute_force_units(t4)
    assert units == {r * 4 + m for r in (1, 3) for m in range(4)}  # U(T(R,R)) = T(U(R), R)


def test_group_ring_f2c2():
    ring = build_group_ring(build_zmod(2), cyclic(2))
    assert ring.order == 4
    bundle = compute_bundle(ring)
    assert bundle.jacobson.indices() == (0, 3)  # {0, 1+g}
    one_plus_g = 3
    assert int(ring.mul[one_plus_g, one_plus_g]) == ring.zero


def test_group_ring_trivial_group_is_base():
    z4 = build_zmod(4)
    ring = build_group_ring(z4, cyclic(1))
    assert ring.tables_equal(z4)


def test_group_ring_q8_order():
    ring = build_group_ring(build_zmod(2), quaternion8())
    assert ring.order == 256
    assert ring.validation == "sampled"


def test_group_ring_with_nonzero_identity_index():
    from ringlab.groups import group_from_text

    # C3 presented with its identity at index 1
    g = group_from_text("order 3\nidentity 1\n2 0 1\n0 1 2\n1 2 0\n")
    ring = build_group_ring(build_zmod(2), g)
    assert ring.order == 8
    assert ring.one == 2  # coefficient 1 on the identity group element
    bundle = compute_bundle(ring)
    # canonical embedding r -> r * |R|^identity meets J(RG) in J(R) = {0}
    embedded = {r * 2**g.identity for r in range(2)}
    assert embedded & bundle.jacobson.members == {0}


def test_skew_poly_k1_is_base():
    gf4 = build_gf(4)
    ring = build_truncated_skew_poly(gf4, identity_endo(gf4), 1)
    assert ring.tables_equal(gf4)


def test_skew_poly_frobenius_relation():
    gf4 = build_gf(4)
    frob = frobenius_endo(gf4)
    ring = build_truncated_skew_poly(gf4, frob, 2)
    x = gf4.order  # coefficient 1 at degree 1
    for a in range(gf4.order):
        assert int(ring.mul[x, a]) == int(ring.mul[int(frob.map[a]), x])


def test_poly_quotient_matches_trivial_extension_invariants():
    z2 = build_zmod(2)
    poly = build_truncated_skew_poly(z2, identity_endo(z2), 2)
    triv = build_trivial_extension(z2)
    assert poly.order == triv.order
    assert len(brute_force_units(poly)) == len(brute_force_units(triv))


def test_frobenius_requires_galois_field():
    with pytest.raises(InvalidEndomorphismError):
        frobenius_endo(build_zmod(6))


def test_validate_endomorphism_rejects_non_hom():
    z4 = build_zmod(4)
    with pytest.raises(InvalidEndomorphismError):
        validate_endomorphism(z4, [0, 1, 3, 2])  # 2 -> 3 breaks additivity
    ident = validate_endomorphism(z4, [0, 1, 2, 3])
    assert isinstance(ident, Endomorphism)


def test_endomorphism_file_format():
    gf4 = build_gf(4)
    frob = frobenius_endo(gf4)
    text = "order 4\n" + "\n".join(f"{i} -> {int(frob.map[i])}" for i in range(4))
    parsed = endomorphism_from_text(gf4, text)
    assert np.array_equal(parsed.map, frob.map)
    with pytest.raises(InvalidEndomorphismError):
        endomorphism_from_text(gf4, "order 3\n0 -> 0")


def test_alpha_compatibility():
    gf4 = build_gf(4)
    ok, witness = check_alpha_compatible(gf4, identity_endo(gf4))
    assert ok and witness is None
    ok, witness = check_alpha_compatible(gf4, frobenius_endo(gf4))
    assert ok
    # swap endomorphism on Z/2 x Z/2 is not compatible
    boole = build_product([build_zmod(2), build_zmod(2)])
    swap = validate_endomorphism(boole, [0, 2, 1, 3])
    ok, witness = check_alpha_compatible(boole, swap)
    assert not ok
    a, b = witness
    lhs_zero = int(boole.mul[a, b]) == boole.zero
    rhs_zero = int(boole.mul[a, int(swap.map[b])]) == boole.zero
    assert lhs_zero != rhs_zero
    assert (a, b) == (1, 1)  # (1,0) * (1,0) = (1,0) but (1,0) * (0,1) = 0


def test_caps_respected():
    z2 = build_zmod(2)
    with pytest.raises(OutOfCapError):
        build_matrix(z2, 4, cap=4096 - 1)  # 2^16 > cap
    with pytest.raises(OutOfCapError):
        build_group_ring(build_zmod(4), cyclic(8), cap=4096)


def test_every_builder_output_is_validated():
    for text in ("z(6)", "gf(9)", "m(2,z(2))", "t(2,z(2))", "prod(z(2),z(3))", "triv(z(2))", "poly(z(2),3)"):
        ring = compile_text(text)
        assert ring.validation == "exhaustive"
