"""Twisted representations: basis, constructions, kernel solver, real forms."""

from __future__ import annotations

from fractions import Fraction

import pytest
from conftest import oracle_kernel_grid, random_lambda_reps

from quasik import (
    Cyc,
    LambdaRep,
    NotRealizableError,
    QuasiError,
    TwistedIrrep,
    character_table,
    class_function_from_element_values,
    commuting_tuples,
    cyclic_group,
    dual,
    external_sum,
    fixed_part_rep,
    fixed_space_dimension,
    fs_indicator,
    hom_from_images,
    is_faithful,
    kernel,
    lambda_basis,
    lambda_desc,
    q_twist,
    real_basis,
    real_v_sigma,
    restrict_lambda,
    v_sigma,
)

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def _faithful_linear(table, generator=1):
    """Index of the linear character sending the generator to zeta_k."""
    k = table.group.order_of(generator)
    return next(
        i
        for i in range(len(table.rows))
        if table.value_at_element(i, generator) == Cyc.zeta(k)
    )


def test_lambda_desc_examples(s3):
    z2 = cyclic_group(2)
    d = lambda_desc(z2, (1,))
    assert d.centralizer.order == 2
    assert d.orders == (2,)

    d12 = lambda_desc(s3, (s3.index_of("(12)"),))
    assert d12.centralizer.order == 2
    d123 = lambda_desc(s3, (s3.index_of("(123)"),))
    assert d123.centralizer.order == 3


def test_lambda_basis_examples(s3):
    z2 = cyclic_group(2)
    d = lambda_desc(z2, (1,))
    basis = lambda_basis(d)
    assert sorted(b.weight[0] for b in basis) == [HALF, 1]

    d_e = lambda_desc(s3, (s3.identity,))
    basis_e = lambda_basis(d_e)
    assert len(basis_e) == 3
    assert all(b.weight == (Fraction(1),) for b in basis_e)

    d3 = lambda_desc(s3, (s3.index_of("(123)"),))
    assert sorted(b.weight[0] for b in lambda_basis(d3)) == [THIRD, Fraction(2, 3), 1]


def test_lambda_basis_count_and_scalar_consistency(s3, d4, q8):
    for G in (s3, d4, q8, cyclic_group(6)):
        for n in (1, 2):
            for orbit in commuting_tuples(G, n):
                d = lambda_desc(G, orbit.representative)
                basis = lambda_basis(d)
                assert len(basis) == len(d.table.rows)
                for b in basis:
                    deg = d.table.degrees[b.lam]
                    for i, w in enumerate(b.weight):
                        l = d.orders[i]
                        m = w * l
                        assert m.denominator == 1 and 0 < m <= l
                        # the tuple entry really acts by that scalar
                        val = d.table.value_at_element(b.lam, d.sigma_in_cent[i])
                        assert val == Cyc.zeta(l) ** int(m) * deg


def test_v_sigma_examples(s3):
    z4 = cyclic_group(4)
    t4 = character_table(z4)
    chi1 = _faithful_linear(t4)
    d = lambda_desc(z4, (2,))
    rep = v_sigma(t4.irreducible(chi1), d)
    assert rep.components == ((TwistedIrrep(chi1, (HALF,)), 1),)

    triv = t4.irreducible(t4.trivial_index())
    rep_t = v_sigma(triv, d)
    ((comp, mult),) = rep_t.components
    assert mult == 1 and comp.weight == (Fraction(1),)
    assert d.table.degrees[comp.lam] == 1

    t3 = character_table(s3)
    d12 = lambda_desc(s3, (s3.index_of("(12)"),))
    rep_reg = v_sigma(t3.regular_character(), d12)
    assert {(c.weight[0], m) for c, m in rep_reg.components} == {(Fraction(1), 3), (HALF, 3)}
    assert rep_reg.dimension() == 6


def test_v_sigma_rejects_virtual(s3):
    t3 = character_table(s3)
    d = lambda_desc(s3, (s3.identity,))
    bad = class_function_from_element_values(t3, [-1] * 6)
    with pytest.raises(QuasiError):
        v_sigma(bad, d)


def test_q_twist(s3):
    z2 = cyclic_group(2)
    d = lambda_desc(z2, (1,))
    sign = character_table(z2).irreducible(1)
    rep = v_sigma(sign, d)
    assert q_twist(rep, 0) == rep
    shifted = q_twist(rep, -1)
    assert shifted.components[0][0].weight == (-HALF,)
    assert q_twist(q_twist(rep, 2), -2) == rep


def test_dual(s3):
    z3 = cyclic_group(3)
    t3 = character_table(z3)
    d = lambda_desc(z3, (1,))
    chi = _faithful_linear(t3)
    rep = v_sigma(t3.irreducible(chi), d)
    dd = dual(rep)
    ((comp, _),) = dd.components
    assert comp.lam == t3.conjugate_row(chi)
    assert comp.weight == (-THIRD,)
    assert dual(dd) == rep

    triv_rep = v_sigma(t3.irreducible(t3.trivial_index()), d)
    assert dual(triv_rep).components[0][0].weight == (Fraction(-1),)


def test_fixed_part_rep(s3):
    z2 = cyclic_group(2)
    t2 = character_table(z2)
    d = lambda_desc(z2, (1,))
    reg = t2.regular_character()
    rep = fixed_part_rep(reg, d)
    assert rep.components == ((TwistedIrrep(t2.trivial_index(), (Fraction(0),)), 1),)
    assert rep.dimension() == 1 == fixed_space_dimension(reg, d)

    sign = t2.irreducible(1)
    assert fixed_part_rep(sign, d).is_empty
    assert fixed_space_dimension(sign, d) == 0

    d_e = lambda_desc(s3, (s3.identity,))
    t3 = character_table(s3)
    rep_e = fixed_part_rep(t3.regular_character(), d_e)
    assert rep_e.dimension() == 6 == fixed_space_dimension(t3.regular_character(), d_e)
    assert all(c.weight == (Fraction(0),) for c, _ in rep_e.components)


def test_fixed_dimension_matches_averaging(s3, d4, q8):
    for G in (s3, d4, q8):
        table = character_table(G)
        reg = table.regular_character()
        for orbit in commuting_tuples(G, 2):
            d = lambda_desc(G, orbit.representative)
            assert fixed_part_rep(reg, d).dimension() == fixed_space_dimension(reg, d)


def test_weight_compatibility_enforced():
    z2 = cyclic_group(2)
    d = lambda_desc(z2, (1,))
    sign_row = 1
    with pytest.raises(QuasiError):
        LambdaRep(d, [(TwistedIrrep(sign_row, (Fraction(1),)), 1)])  # sign needs 1/2 mod 1
    with pytest.raises(QuasiError):
        LambdaRep(d, [(TwistedIrrep(0, (HALF, HALF)), 1)])  # wrong arity


def test_kernel_witness_z4():
    z4 = cyclic_group(4)
    t4 = character_table(z4)
    chi1 = _faithful_linear(t4)
    d = lambda_desc(z4, (2,))
    rep = v_sigma(t4.irreducible(chi1), d)
    ker = kernel(rep)
    assert ker.torus_rank == 0 and not ker.full_group
    assert ker.finite_points == ((3, (HALF,)),)
    assert d.cent_group.label(3) == "g3"
    assert not is_faithful(rep)

    both = rep + q_twist(rep, -1)
    assert kernel(both).is_trivial
    assert is_faithful(both)


def test_kernel_trivial_action():
    z2 = cyclic_group(2)
    t2 = character_table(z2)
    d = lambda_desc(z2, (0,))
    rep = fixed_part_rep(t2.irreducible(t2.trivial_index()), d)
    ker = kernel(rep)
    assert ker.full_group and ker.torus_rank == 1
    assert not ker.is_trivial

    empty = LambdaRep(d, [])
    ker2 = kernel(empty)
    assert ker2.full_group and ker2.torus_rank == 1


def test_faithfulness_constructions_sample(s3, d4, q8):
    for G in (s3, d4, q8, cyclic_group(6)):
        table = character_table(G)
        reg = table.regular_character()
        for orbit in commuting_tuples(G, 1):
            d = lambda_desc(G, orbit.representative)
            base = v_sigma(reg, d)
            assert is_faithful(base + q_twist(base, -1))
            assert is_faithful(base + fixed_part_rep(reg, d))
            assert is_faithful(real_v_sigma(reg, d))


def test_multi_index_twist_needs_coordinates():
    # with a 2-tuple, shifting the whole weight vector by -1 leaves the
    # difference lattice degenerate; per-coordinate shifts restore rank
    z2 = cyclic_group(2)
    t2 = character_table(z2)
    reg = t2.regular_character()
    d = lambda_desc(z2, (1, 1))
    base = v_sigma(reg, d)
    diagonal = base + q_twist(base, -1)
    assert kernel(diagonal).torus_rank == 1
    assert not is_faithful(diagonal)
    per_coordinate = base + q_twist(base, (-1, 0)) + q_twist(base, (0, -1))
    assert is_faithful(per_coordinate)
    # the fixed-part pairing degenerates the same way at n = 2
    assert not is_faithful(base + fixed_part_rep(reg, d))


def test_kernel_solver_matches_oracle_randomized():
    for rep in random_lambda_reps(20, seed=977):
        ker = kernel(rep)
        rank_deficient, points, _, total = oracle_kernel_grid(rep)
        if ker.full_group:
            assert len(points) == total - 1  # everything but the identity pair
        elif ker.torus_rank > 0:
            assert rank_deficient
            assert points  # a nontrivial kernel point always lands on the grid
        else:
            assert not rank_deficient
            assert points == ker.finite_points
        assert is_faithful(rep) == (ker.torus_rank == 0 and not points and not ker.full_group)


def test_external_sum_examples():
    z2 = cyclic_group(2)
    t2 = character_table(z2)
    sign = t2.irreducible(1)
    d = lambda_desc(z2, (1,))
    r = v_sigma(sign, d)
    s = external_sum(r, r)
    assert s.dimension() == 2
    assert sorted(c.weight[0] for c, _ in s.components) == [HALF, HALF]

    # multiset equality with the direct-sum construction
    P = s.desc.group
    tp = character_table(P)
    vals = []
    for x in range(P.order):
        a, b = divmod(x, z2.order)
        vals.append(sign.value_at_element(a) + sign.value_at_element(b))
    direct = v_sigma(class_function_from_element_values(tp, vals), s.desc)
    assert s == direct

    # regular (+) regular over Z/2 x Z/2
    reg = t2.regular_character()
    r_reg = v_sigma(reg, d)
    s_reg = external_sum(r_reg, r_reg)
    assert s_reg.desc.group is P  # products are shared per factor pair
    vals = []
    for x in range(P.order):
        a, b = divmod(x, z2.order)
        vals.append(reg.value_at_element(a) + reg.value_at_element(b))
    assert s_reg == v_sigma(class_function_from_element_values(tp, vals), s_reg.desc)

    # trivial second factor: an isomorphic copy
    one = cyclic_group(1)
    t1 = character_table(one)
    d1 = lambda_desc(one, (0,))
    empty_side = v_sigma(t1.irreducible(0), d1)
    s2 = external_sum(r, empty_side)
    assert s2.dimension() == r.dimension() + 1
    assert sorted(c.weight[0] for c, _ in s2.components) == [HALF, 1]


def test_external_sum_arity_mismatch():
    z2 = cyclic_group(2)
    t2 = character_table(z2)
    sign = t2.irreducible(1)
    r1 = v_sigma(sign, lambda_desc(z2, (1,)))
    r2 = v_sigma(sign, lambda_desc(z2, (1, 1)))
    with pytest.raises(QuasiError):
        external_sum(r1, r2)


def test_restrict_lambda_examples(s3):
    z2 = cyclic_group(2)
    z4 = cyclic_group(4)
    t4 = character_table(z4)
    chi1 = _faithful_linear(t4)
    phi = hom_from_images(z2, [1], [2], z4)  # s -> g^2
    pulled, direct, equal = restrict_lambda(phi, (1,), t4.irreducible(chi1))
    assert equal and pulled == direct
    ((comp, mult),) = pulled.components
    assert mult == 1 and comp.weight == (HALF,)

    # identity homomorphism: trivially equal
    ident = hom_from_images(z4, [1], [1], z4)
    _, _, equal = restrict_lambda(ident, (1,), t4.irreducible(chi1))
    assert equal

    # tau = identity tuple: both sides are the restriction at weight 1
    pulled, direct, equal = restrict_lambda(phi, (z2.identity,), t4.irreducible(chi1))
    assert equal
    assert all(c.weight == (Fraction(1),) for c, _ in pulled.components)

    # a non-injective map: Z/4 -> Z/2 -> S3 style collapse
    t2 = character_table(z2)
    psi = hom_from_images(z4, [1], [1], z2)
    for lam in range(2):
        _, _, equal = restrict_lambda(psi, (1,), t2.irreducible(lam))
        assert equal

    # into a nonabelian group
    t3 = character_table(s3)
    std = next(i for i in range(3) if t3.degrees[i] == 2)
    incl = hom_from_images(z2, [1], [s3.index_of("(12)")], s3)
    pulled, direct, equal = restrict_lambda(incl, (1,), t3.irreducible(std))
    assert equal and pulled.dimension() == 2


def test_restrict_lambda_nonabelian_centralizer(q8):
    # phi: Z/4 -> Q8 sending g to i; tau = (g^2) maps to sigma = (-1), whose
    # centralizer is all of Q8, so the pullback decomposes a 2-dim irreducible
    z4 = cyclic_group(4)
    phi = hom_from_images(z4, [1], [q8.index_of("i")], q8)
    tq = character_table(q8)
    for chi in [tq.regular_character()] + [tq.irreducible(i) for i in range(5)]:
        pulled, direct, equal = restrict_lambda(phi, (2,), chi)
        assert equal
        assert pulled.dimension() == int(chi.degree.rational_value())
    # tau = (g): sigma = (i) with centralizer Z/4 inside Q8
    pulled, direct, equal = restrict_lambda(phi, (1,), tq.regular_character())
    assert equal and pulled.dimension() == 8
    two_dim = next(i for i in range(5) if tq.degrees[i] == 2)
    pulled, _, equal = restrict_lambda(phi, (1,), tq.irreducible(two_dim))
    assert equal
    # the 2-dim irreducible restricts to two components with quarter twists
    assert sorted(w for c, _ in pulled.components for w in c.weight) == [
        Fraction(1, 4),
        Fraction(3, 4),
    ]


def test_real_v_sigma_examples():
    z2 = cyclic_group(2)
    t2 = character_table(z2)
    d = lambda_desc(z2, (1,))
    rep = real_v_sigma(t2.irreducible(1), d)
    assert sorted(c.weight[0] for c, _ in rep.components) == [-HALF, HALF]
    assert rep.dimension() == 2

    triv = real_v_sigma(t2.irreducible(t2.trivial_index()), d)
    assert sorted(c.weight[0] for c, _ in triv.components) == [-1, 1]

    z3 = cyclic_group(3)
    t3 = character_table(z3)
    rot = t3.irreducible(1) + t3.irreducible(2)
    d3 = lambda_desc(z3, (1,))
    rep3 = real_v_sigma(rot, d3)
    assert rep3.dimension() == 4
    assert sorted(w for c, _ in rep3.components for w in c.weight) == [
        Fraction(-2, 3),
        -THIRD,
        THIRD,
        Fraction(2, 3),
    ]


def test_real_v_sigma_rejects_non_self_dual():
    z3 = cyclic_group(3)
    t3 = character_table(z3)
    d = lambda_desc(z3, (1,))
    with pytest.raises(NotRealizableError):
        real_v_sigma(t3.irreducible(1), d)


def test_real_v_sigma_rejects_odd_quaternionic(q8):
    tq = character_table(q8)
    two_dim = next(i for i in range(5) if tq.degrees[i] == 2)
    d = lambda_desc(q8, (q8.index_of("-1"),))
    with pytest.raises(NotRealizableError):
        real_v_sigma(tq.irreducible(two_dim), d)
    doubled = tq.irreducible(two_dim).scale(2)
    rep = real_v_sigma(doubled, d)
    assert rep.dimension() == 8


def test_real_basis_examples(q8):
    z2 = cyclic_group(2)
    d = lambda_desc(z2, (1,))
    entries = real_basis(d)
    assert [e.dimension for e in entries] == [2, 2]

    d_e = lambda_desc(z2, (0,))
    entries_e = real_basis(d_e)
    assert [e.dimension for e in entries_e] == [1, 1]  # unchanged for trivial tuple

    z3 = cyclic_group(3)
    d3 = lambda_desc(z3, (1,))
    entries3 = real_basis(d3)
    assert sorted(e.dimension for e in entries3) == [2, 4]
    assert sorted(e.indicator for e in entries3) == [0, 1]

    dq = lambda_desc(q8, (q8.index_of("-1"),))
    entriesq = real_basis(dq)
    # real irreducibles of Q8: four 1-dim real + one quaternionic
    assert len(entriesq) == 5
    quat = next(e for e in entriesq if e.indicator == -1)
    assert quat.dimension == 8  # 2 * dim(2 * lambda)


def test_real_basis_counts_match_real_irreducibles(s3, d4, q8):
    for G in (s3, d4, q8, cyclic_group(6)):
        table = character_table(G)
        expected = 0
        for i in range(len(table.rows)):
            ind = fs_indicator(table, i)
            if ind == 0:
                expected += 1  # counted once per conjugate pair
            else:
                expected += 2
        expected //= 2
        for orbit in commuting_tuples(G, 1):
            d = lambda_desc(G, orbit.representative)
            assert len(real_basis(lambda_desc(G, orbit.representative))) == len(
                real_basis(d)
            )
        d_id = lambda_desc(G, (G.identity,))
        assert len(real_basis(d_id)) == expected
