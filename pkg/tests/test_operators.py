"""Differential operators: elementary, factorized, and expanded forms."""
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from genjacobi.algebra import InvalidParam, Poly, X_MINUS_1, X_PLUS_1, X2_MINUS_1
from genjacobi.genjacobi import Params, gen_jacobi, poly_Q, poly_R, poly_S
from genjacobi.jacobi import jacobi_poly
from genjacobi.operators import (DiffOperator, EigenValue, InconsistentExpansion,
                                 apply_L2, apply_L2_conjugated, apply_Lfull,
                                 apply_Lhat, apply_Ltilde, apply_combined,
                                 apply_duran, apply_factorized, const_b, const_c,
                                 eigen_combined, eigen_high, eigen_lambda2,
                                 expand_operator)

F = Fraction

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=8)
polys = st.lists(rationals, min_size=0, max_size=7).map(Poly)


def test_l2_anchors():
    assert apply_L2(Poly([5]), 0, 0).is_zero
    assert apply_L2(Poly.x(), 1, 2) == Poly([-1, 5])
    assert apply_L2(jacobi_poly(2, 0, 0), 0, 0) == 6 * jacobi_poly(2, 0, 0)


def test_l2_eigen_equation_rational_params():
    for g, d in ((0, 0), (F(1, 2), F(1, 3)), (2, F(-1, 2))):
        for n in range(9):
            p = jacobi_poly(n, g, d)
            lam = n * (n + g + d + 1)
            assert apply_L2(p, g, d) == lam * p


def test_l2_conjugated_agrees():
    for a, b in product(range(3), range(3)):
        for n in range(7):
            p = jacobi_poly(n, a, b)
            assert apply_L2_conjugated(p, a, b) == apply_L2(p, a, b)


def test_ltilde_lhat_anchors():
    assert apply_Ltilde(X_PLUS_1, 0, 0) == 4 * X_PLUS_1
    assert apply_Lhat(X_MINUS_1, 0, 0) == 4 * X_MINUS_1
    # constants are annihilated
    for a, b in product(range(3), range(3)):
        assert apply_Ltilde(Poly([7]), a, b).is_zero
        assert apply_Lhat(Poly([7]), a, b).is_zero


def test_side_operator_eigen_equations():
    for a, b in product(range(3), range(3)):
        for n in range(1, 8):
            q = poly_Q(n, a, b)
            lam = eigen_high("side", n, b, a).value
            assert apply_Ltilde(q, a, b) == lam * q
            r = poly_R(n, a, b)
            mu = eigen_high("side", n, a, b).value
            assert apply_Lhat(r, a, b) == mu * r


def test_lfull_anchors():
    s = poly_S(2, 0, 0)
    assert s == 18 * X2_MINUS_1
    assert apply_Lfull(s, 0, 0) == 144 * s
    # degree <= 1 lies in the kernel
    for a, b in product(range(3), range(3)):
        assert apply_Lfull(Poly([3, -2]), a, b).is_zero


def test_lfull_eigen_equation():
    for a, b in product(range(3), range(3)):
        for n in range(2, 7):
            s = poly_S(n, a, b)
            lam = eigen_high("full", n, a, b).value
            assert apply_Lfull(s, a, b) == lam * s


def test_eigen_anchors():
    assert eigen_lambda2(2, 0, 0).value == 6
    assert eigen_lambda2(1, 1, 2).value == 5
    assert eigen_high("side", 1, 0, 0).value == 4
    assert eigen_high("full", 2, 0, 0).value == 144
    assert eigen_high("full", 1, 0, 0).value == 0
    assert eigen_high("full", 1, 2, 3).value == 0
    with pytest.raises(InvalidParam):
        eigen_high("diag", 1, 0, 0)


def test_constants():
    assert const_b(0, 0) == 2
    assert const_b(1, 0) == 12
    assert const_b(0, 1) == 4
    assert const_c(0, 0) == 3
    assert const_c(1, 1) == 720


def test_combined_reduces_to_l2():
    pr = Params(1, 2, 0, 0)
    for n in range(7):
        p = jacobi_poly(n, 1, 2)
        assert apply_combined(p, pr) == apply_L2(p, 1, 2)


def test_combined_eigen_equation():
    for a, b in ((0, 0), (1, 2), (2, 2)):
        for M, N in ((1, 1), (F(1, 3), 2), (0, F(1, 2))):
            pr = Params(a, b, M, N)
            for n in range(8):
                p = gen_jacobi(n, pr)
                lam = eigen_combined(n, pr).value
                assert apply_combined(p, pr) == lam * p


def test_factorized_matches_elementary():
    for a, b in product(range(3), range(3)):
        for n in range(1, 6):
            q = poly_Q(n, a, b)
            assert apply_factorized("A", q, a, b) == apply_Ltilde(q, a, b)
        assert apply_factorized("A", X_PLUS_1, a, b) == apply_Ltilde(X_PLUS_1, a, b)


def test_factorized_anchor():
    assert apply_factorized("A", X_PLUS_1, 0, 0) == 4 * X_PLUS_1


@settings(max_examples=25, deadline=None)
@given(polys)
def test_factorized_A_on_multiples_of_x_plus_1(p):
    y = X_PLUS_1 * p
    assert apply_factorized("A", y, 1, 1) == apply_Ltilde(y, 1, 1)


@settings(max_examples=25, deadline=None)
@given(polys)
def test_factorized_B_on_multiples_of_x_minus_1(p):
    y = X_MINUS_1 * p
    assert apply_factorized("B", y, 1, 2) == apply_Lhat(y, 1, 2)


def test_factorized_C_eigen():
    for a, b in product(range(3), range(3)):
        for n in range(2, 6):
            s = poly_S(n, a, b)
            lam = eigen_high("full", n, a, b).value
            assert apply_factorized("C", s, a, b) == lam * s


def test_factorized_rejects_unknown_kind():
    with pytest.raises(InvalidParam):
        apply_factorized("D", X_PLUS_1, 0, 0)


def test_duran_annihilates_constants():
    for a, b in product(range(4), range(4)):
        assert apply_duran(Poly([9]), a, b).is_zero


def test_duran_equals_side_operator():
    # the product form is the same operator, monomial by monomial
    for a, b in product(range(3), range(3)):
        for k in range(2 * b + 9):
            m = Poly.monomial(k)
            assert apply_duran(m, a, b) == apply_Ltilde(m, a, b)
        for n in range(1, 6):
            q = poly_Q(n, a, b)
            assert apply_duran(q, a, b) == eigen_high("side", n, b, a).value * q


def test_expand_l2_coefficients():
    for a, b in ((0, 0), (1, 2)):
        op = expand_operator("L2", Params(a, b, 0, 0))
        assert [t[0] for t in op.terms] == [1, 2]
        coeffs = dict(op.terms)
        assert coeffs[1] == Poly([a - b, a + b + 2])
        assert coeffs[2] == X2_MINUS_1


def test_expand_effective_orders_and_top_coefficients():
    for a, b in ((0, 0), (1, 0), (1, 2)):
        pr = Params(a, b, 1, 1)
        op = expand_operator("Ltilde", pr)
        assert op.effective_order == 2 * b + 4
        assert dict(op.terms)[2 * b + 4] == X2_MINUS_1 ** (b + 2)
        op = expand_operator("Lhat", pr)
        assert op.effective_order == 2 * a + 4
        assert dict(op.terms)[2 * a + 4] == X2_MINUS_1 ** (a + 2)
        op = expand_operator("Lfull", pr)
        assert op.effective_order == 2 * a + 2 * b + 6
        assert dict(op.terms)[2 * a + 2 * b + 6] == X2_MINUS_1 ** (a + b + 3)


def test_expand_combined_orders():
    assert expand_operator("Combined", Params(1, 2, 0, 0)).effective_order == 2
    assert expand_operator("Combined", Params(0, 0, 1, 0)).effective_order == 4
    assert expand_operator("Combined", Params(0, 0, 1, 1)).effective_order == 6
    assert expand_operator("Combined", Params(1, 1, 0, 2)).effective_order == 6


def test_expand_rejects_unknown_kind():
    with pytest.raises(InvalidParam):
        expand_operator("L3", Params(0, 0, 0, 0))


@settings(max_examples=20, deadline=None)
@given(polys)
def test_expanded_operator_reproduces_direct_application(y):
    pr = Params(1, 1, F(1, 3), 2)
    ops = {
        "L2": lambda p: apply_L2(p, 1, 1),
        "Ltilde": lambda p: apply_Ltilde(p, 1, 1),
        "Lhat": lambda p: apply_Lhat(p, 1, 1),
        "Lfull": lambda p: apply_Lfull(p, 1, 1),
        "Combined": lambda p: apply_combined(p, pr),
    }
    for kind, direct in ops.items():
        op = expand_operator(kind, pr)
        assert op.apply(y) == direct(y)


@settings(max_examples=25, deadline=None)
@given(polys, polys, rationals, rationals)
def test_operators_are_linear(f, g, c1, c2):
    combo = c1 * f + c2 * g
    for op in (lambda p: apply_L2(p, 1, 2),
               lambda p: apply_Ltilde(p, 0, 1),
               lambda p: apply_Lhat(p, 1, 0),
               lambda p: apply_Lfull(p, 0, 0),
               lambda p: apply_duran(p, 1, 1)):
        assert op(combo) == c1 * op(f) + c2 * op(g)


def test_diffoperator_validation():
    with pytest.raises(InvalidParam):
        DiffOperator(terms=((0, Poly([1])),))  # order must be >= 1
    with pytest.raises(InvalidParam):
        DiffOperator(terms=((2, Poly([1])), (1, Poly.x())))  # not increasing
    with pytest.raises(InvalidParam):
        DiffOperator(terms=((1, Poly.zero()),))  # zero coefficient


def test_diffoperator_apply():
    op = DiffOperator(terms=((1, Poly([0, 2])), (2, X2_MINUS_1)))
    y = Poly.monomial(3)
    assert op.apply(y) == Poly([0, 2]) * (3 * Poly.monomial(2)) + X2_MINUS_1 * Poly([0, 6])


def test_eigenvalue_wraps_exact_rationals():
    ev = EigenValue(value=F(7, 3))
    assert ev.value == F(7, 3)
    with pytest.raises(InvalidParam):
        EigenValue(value=0.5)
