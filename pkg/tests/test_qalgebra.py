import random
from fractions import Fraction

import pytest

from ordroots.ordercore import order_from_poly
from ordroots.polyfactor import euler_phi, qp, qp_divmod
from ordroots.qalgebra import (
    AlgebraError,
    QAlgebra,
    decompose,
    mu_dlog,
    mu_dlog_explain,
    mu_presentation,
)


def poly_algebra(f):
    return order_from_poly(f).algebra


def test_validation_catches_bad_tables():
    # non-commutative: e0*e1 != e1*e0
    with pytest.raises(AlgebraError, match="commutative"):
        QAlgebra([[[1, 0], [0, 1]], [[1, 0], [0, 1]]])
    # no identity: multiplication identically zero
    with pytest.raises(AlgebraError, match="identity"):
        QAlgebra([[[0]]])
    # non-associative: (e1 e1) e2 = 0 but e1 (e1 e2) = e1
    with pytest.raises(AlgebraError, match="associative"):
        QAlgebra([
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
            [[0, 0, 1], [1, 0, 0], [0, 0, 0]],
        ])


def test_identity_found():
    E = poly_algebra([-1, 0, 0, 0, 1])
    assert E.one == (1, 0, 0, 0)
    x = (0, 1, 0, 0)
    assert E.mul(E.one, x) == x


def test_decompose_x4_minus_1():
    E = poly_algebra([-1, 0, 0, 0, 1])
    dec = decompose(E)
    assert sorted(K.deg for K in dec.components) == [1, 1, 2]
    assert dec.nil_basis == []
    assert dec.sep_dim == 4


def test_decompose_nilpotent_case():
    E = poly_algebra([0, 0, 1])  # Q[X]/(X^2)
    dec = decompose(E)
    assert [K.deg for K in dec.components] == [1]
    assert len(dec.nil_basis) == 1
    # the nilpotent direction is spanned by X
    assert dec.nil_basis[0] in ([0, 1], [0, -1])
    assert dec.is_separable_element((3, 0))
    assert not dec.is_separable_element((0, 1))


def test_decompose_x12():
    E = poly_algebra([-1] + [0] * 11 + [1])
    dec = decompose(E)
    assert sorted(K.deg for K in dec.components) == [1, 1, 2, 2, 2, 4]


def test_decompose_mixed_nilpotents():
    # Q[X]/(X^2 (X^2+1)): separable part of dim 3, nil of dim 1
    f = qp_divmod(qp([0, 0, 1, 0, 1, 0, 0]), qp([1]))[0]
    E = poly_algebra([0, 0, 1, 0, 1])  # X^2 + X^4 = X^2(1+X^2)
    dec = decompose(E)
    assert len(dec.nil_basis) == 1
    assert sorted(K.deg for K in dec.components) == [1, 2]


def test_projection_identities():
    E = poly_algebra([-1] + [0] * 5 + [1])  # X^6 - 1
    dec = decompose(E)
    rng = random.Random(4)
    for _ in range(20):
        x = tuple(rng.randint(-3, 3) for _ in range(6))
        y = tuple(rng.randint(-3, 3) for _ in range(6))
        # pi1 respects multiplication (projection onto the separable part)
        lhs = dec.separable_projection(E.mul(x, y))
        rhs = E.mul(dec.separable_projection(x), dec.separable_projection(y))
        assert tuple(lhs) == tuple(rhs)
        # components reassemble through the section
        assert dec.from_components(dec.to_components(x)) == dec.separable_projection(x)


def test_nilpotent_iff_fixed_by_nil_projection():
    E = poly_algebra([0, 0, 0, 1])  # Q[X]/(X^3)
    dec = decompose(E)
    rng = random.Random(9)
    for _ in range(30):
        x = tuple(Fraction(rng.randint(-4, 4)) for _ in range(3))
        fixed = tuple(dec.nil_projection(x)) == tuple(Fraction(c) for c in x)
        power = E.power(x, 4)
        nilpotent = all(c == 0 for c in power)
        assert fixed == nilpotent


def test_mu_presentation_q():
    E = poly_algebra([-1, 1])  # the rationals
    tor = mu_presentation(E)
    assert len(tor.pres.gens) == 1
    assert tor.pres.gens[0] == (-1,)
    assert tor.component_orders == [2]


def test_mu_presentation_gaussian():
    E = poly_algebra([1, 0, 1])
    tor = mu_presentation(E)
    assert tor.component_orders == [4]
    g = tor.pres.gens[0]
    assert E.power(g, 4) == E.one and E.power(g, 2) != E.one


def test_mu_presentation_x4():
    E = poly_algebra([-1, 0, 0, 0, 1])
    tor = mu_presentation(E)
    assert sorted(tor.component_orders) == [2, 2, 4]
    for g, w in zip(tor.pres.gens, tor.component_orders):
        assert E.power(g, w) == E.one
        assert euler_phi(w) <= 4


def test_mu_dlog_cases():
    E = poly_algebra([-1, 0, 0, 0, 1])
    tor = mu_presentation(E)
    assert mu_dlog(tor, E.one) == [0, 0, 0]
    v = mu_dlog(tor, (0, 0, -1, 0))
    assert v is not None
    assert tor.pres.evaluate(v) == (0, 0, -1, 0)
    out, reason = mu_dlog_explain(tor, (1, 1, 0, 0))
    assert out is None and reason == "component-not-root-of-unity"
    # nilpotent-contaminated element
    E2 = poly_algebra([0, 0, 1])
    tor2 = mu_presentation(E2)
    out, reason = mu_dlog_explain(tor2, (1, 1))
    assert out is None and reason == "not-separable"
    assert mu_dlog(tor2, (-1, 0)) == [1]


def test_component_groups_cyclic():
    # all roots of unity found in a component are powers of its generator
    E = poly_algebra([-1] + [0] * 11 + [1])
    tor = mu_presentation(E)
    for K, zeta, w in zip(tor.dec.components, tor.component_roots,
                          tor.component_orders):
        seen = set()
        acc = K.one()
        for _ in range(w):
            seen.add(acc)
            acc = K.mul(acc, zeta)
        assert len(seen) == w
        assert euler_phi(w) <= K.deg


def test_rank_zero_algebra():
    E = QAlgebra([])
    dec = decompose(E)
    assert dec.components == [] and dec.nil_basis == []


def test_minimal_polynomial():
    from ordroots.qalgebra import minimal_polynomial

    E = poly_algebra([2, 0, 1, 1])  # irreducible cubic (no rational root)
    x = (0, 1, 0)
    assert minimal_polynomial(E, x) == qp([2, 0, 1, 1])
    assert minimal_polynomial(E, E.one) == qp([-1, 1])
    # in a split algebra the minimal polynomial of X has the full degree
    # but factors
    E4 = poly_algebra([-1, 0, 0, 0, 1])
    assert minimal_polynomial(E4, (0, 1, 0, 0)) == qp([-1, 0, 0, 0, 1])
