"""Inner products, bilinear forms, boundary data, Gram matrices."""
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from genjacobi.algebra import InvalidParam, Poly, X_MINUS_1, X_PLUS_1
from genjacobi.genjacobi import Params, gen_jacobi
from genjacobi.inner import (BoundaryValues, InnerProductResult, bilinear_U,
                             bilinear_V, bilinear_Vt, bilinear_W,
                             boundary_closed_forms, boundary_values,
                             gram_matrix, h_norm, h_norm_integral,
                             inner_product, integrate, mass_constant_identity,
                             symmetry_defect, weighted_integral)
from genjacobi.jacobi import jacobi_poly
from genjacobi.operators import (apply_L2, apply_Lfull, apply_Lhat,
                                 apply_Ltilde, const_b, const_c)

F = Fraction

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=8)
polys = st.lists(rationals, min_size=0, max_size=6).map(Poly)


def test_integrate_monomials():
    assert integrate(Poly([1])) == 2
    assert integrate(Poly.x()) == 0
    assert integrate(Poly.monomial(2)) == F(2, 3)
    assert integrate(Poly.monomial(7)) == 0
    assert integrate(Poly([1, 2, 3])) == 4


def test_h_norm_anchors_and_integral_oracle():
    assert h_norm(0, 0) == 2
    assert h_norm(1, 1) == F(4, 3)
    assert h_norm(2, 0) == F(8, 3)
    for a, b in product(range(5), range(5)):
        assert h_norm(a, b) == h_norm_integral(a, b)


def test_weighted_integral_normalization():
    for a, b in product(range(4), range(4)):
        assert weighted_integral(Poly([1]), a, b) == 1
    assert weighted_integral(Poly.monomial(2), 0, 0) == F(1, 3)


def test_classical_orthogonality():
    p1, p2 = jacobi_poly(1, 0, 0), jacobi_poly(2, 0, 0)
    assert weighted_integral(p1 * p2, 0, 0) == 0
    for a, b in product(range(3), range(3)):
        for n, m in ((0, 1), (1, 2), (0, 3), (2, 4)):
            f = jacobi_poly(n, a, b) * jacobi_poly(m, a, b)
            assert weighted_integral(f, a, b) == 0


def test_inner_product_split_and_total():
    pr = Params(0, 0, F(1, 3), 2)
    one = Poly([1])
    r = inner_product(one, one, pr)
    assert isinstance(r, InnerProductResult)
    assert r.integral_part == 1
    assert r.mass_neg1 == F(1, 3)
    assert r.mass_pos1 == 2
    assert r.total == 1 + F(1, 3) + 2
    r = inner_product(Poly.x(), one, pr)
    assert r.total == 0 - F(1, 3) + 2


def test_inner_product_symmetric():
    pr = Params(1, 2, 1, F(1, 2))
    f, g = Poly([1, -2, 0, 3]), Poly([F(1, 3), 4])
    assert inner_product(f, g, pr).total == inner_product(g, f, pr).total


def test_bilinear_U_anchors():
    assert bilinear_U(Poly([1]), Poly([5, 1, 1]), 0, 0) == 0
    assert bilinear_U(Poly.x(), Poly.x(), 0, 0) == F(2, 3)


@settings(max_examples=25, deadline=None)
@given(polys, polys)
def test_forms_are_symmetric(f, g):
    for form in (bilinear_U, bilinear_Vt, bilinear_V, bilinear_W):
        assert form(f, g, 1, 2) == form(g, f, 1, 2)


def test_form_pairings_with_boundary_corrections():
    # each form equals the weighted product of the matching operator output
    # with the second argument, up to the stated boundary corrections
    from genjacobi.algebra import pochhammer
    a, b = 1, 2
    f = Poly([2, -1, 0, 3, 1])
    g = Poly([-1, 4, 2])
    w = lambda p, q: weighted_integral(p * q, a, b)
    assert w(apply_L2(f, a, b), g) == bilinear_U(f, g, a, b)
    corr_t = 2 * (b + 1) * const_b(b, a) * f.derive().eval(-1) * g.eval(-1)
    assert w(apply_Ltilde(f, a, b), g) == bilinear_Vt(f, g, a, b) + corr_t
    corr_h = 2 * (a + 1) * const_b(a, b) * f.derive().eval(1) * g.eval(1)
    assert w(apply_Lhat(f, a, b), g) == bilinear_V(f, g, a, b) - corr_h
    corr_neg = (const_c(a, b) / const_b(a, b) * 2 * pochhammer(b + 1, a + 2)
                * (X_MINUS_1 ** (a + 1) * f).derive(a + 2).eval(-1) * g.eval(-1))
    corr_pos = (const_c(a, b) / const_b(b, a) * 2 * pochhammer(a + 1, b + 2)
                * (X_PLUS_1 ** (b + 1) * f).derive(b + 2).eval(1) * g.eval(1))
    assert (w(apply_Lfull(f, a, b), g)
            == bilinear_W(f, g, a, b) + corr_neg - corr_pos)


def test_boundary_values_anchors():
    bv = boundary_values(Poly.x(), 0, 0)
    assert bv.l2_neg1 == -2
    assert bv.l2_pos1 == 2
    assert bv.lfull_neg1 == 0
    assert bv.lfull_pos1 == 0
    # multiples of (x+1)^2 flatten the mass(-1) operator at its own endpoint
    bv = boundary_values(X_PLUS_1 * X_PLUS_1, 0, 0)
    assert bv.ltilde_neg1 == 0
    bv = boundary_values(X_MINUS_1 * X_MINUS_1, 0, 0)
    assert bv.lhat_pos1 == 0


def test_boundary_first_derivative_forms():
    for a, b in product(range(3), range(3)):
        f = Poly([1, 2, -3, 1])
        bv = boundary_values(f, a, b)
        assert bv.l2_neg1 == -2 * (b + 1) * f.derive().eval(-1)
        assert bv.l2_pos1 == 2 * (a + 1) * f.derive().eval(1)
        assert bv.ltilde_neg1 == 0
        assert bv.lhat_pos1 == 0


def test_boundary_closed_forms_match_operator_route():
    for a, b in ((0, 0), (1, 0), (1, 2)):
        for f in (Poly([1, 2, -3, 1]), Poly([0, 0, 1, 1, F(1, 2)])):
            assert boundary_values(f, a, b) == boundary_closed_forms(f, a, b)


def test_boundary_values_is_eightfold():
    bv = boundary_closed_forms(Poly.x(), 1, 1)
    assert isinstance(bv, BoundaryValues)
    assert len(bv.__dataclass_fields__) == 8


def test_mass_constant_identity():
    for a, b in product(range(4), range(4)):
        direct, via_pos, via_neg = mass_constant_identity(a, b)
        assert direct == via_pos == via_neg


def test_symmetry_defect_zero():
    pr = Params(1, 1, F(1, 3), 2)
    f, g = Poly([1, 0, 0, 1]), Poly([-2, 1])
    assert symmetry_defect(f, g, pr) == 0
    assert symmetry_defect(f, f, pr) == 0


@settings(max_examples=20, deadline=None)
@given(polys, polys)
def test_symmetry_defect_zero_random(f, g):
    pr = Params(0, 1, 1, F(1, 2))
    assert symmetry_defect(f, g, pr) == 0


def test_gram_matrix_orthogonality():
    pr = Params(0, 0, 1, 1)
    G = gram_matrix(10, pr)
    for i in range(11):
        for j in range(11):
            if i == j:
                assert G[i][j] > 0
            else:
                assert G[i][j] == 0
    assert G[0][0] == 1 + pr.M + pr.N


def test_gram_matrix_rational_masses():
    pr = Params(1, 2, F(1, 3), F(7, 5))
    G = gram_matrix(6, pr)
    for i in range(7):
        for j in range(i):
            assert G[i][j] == 0
        assert G[i][i] > 0


def test_gram_matrix_validation():
    with pytest.raises(InvalidParam):
        gram_matrix(-1, Params(0, 0, 0, 0))
