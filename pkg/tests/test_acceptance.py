"""Acceptance gate: eleven criteria, all exact (tolerance 0).

Every comparison below is exact rational or polynomial equality; there is
no epsilon anywhere.  Each test prints one pass line with its runtime so a
verbose run reads as a per-criterion checklist.  Criteria 1, 2, 3, and 9
carry hard runtime caps and fail if exceeded.
"""
import time
from fractions import Fraction
from itertools import product

from genjacobi.algebra import Poly, X_MINUS_1, X_PLUS_1, X2_MINUS_1, pochhammer
from genjacobi.genjacobi import (Params, coeff_q, gen_jacobi, poly_Q, poly_R,
                                 poly_S)
from genjacobi.inner import gram_matrix, h_norm, h_norm_integral
from genjacobi.jacobi import jacobi_poly, jacobi_recurrence
from genjacobi.operators import (apply_combined, apply_duran, apply_factorized,
                                 apply_L2, apply_Lfull, apply_Lhat,
                                 apply_Ltilde, const_b, const_c,
                                 eigen_combined, eigen_high, eigen_lambda2,
                                 expand_operator)
from genjacobi.verify import _point_seed, verify_symmetry

F = Fraction
AB_GRID = list(product(range(4), range(4)))
MASS_GRID = (F(0), F(1, 3), F(1), F(2))


def _done(tag: str, t0: float, cap: float = None) -> None:
    elapsed = time.perf_counter() - t0
    line = f"[PASS] {tag} ({elapsed:.2f}s"
    line += f", cap {cap:.0f}s)" if cap else ")"
    print(line)
    if cap is not None:
        assert elapsed < cap, f"{tag} exceeded {cap}s cap: {elapsed:.2f}s"


def test_criterion_01_classical_eigen_equation():
    t0 = time.perf_counter()
    for a, b in AB_GRID:
        for n in range(13):
            p = jacobi_poly(n, a, b)
            res = apply_L2(p, a, b) - eigen_lambda2(n, a, b).value * p
            assert res.is_zero, (a, b, n)
    _done("criterion 1: classical second-order eigen-equation", t0, cap=1.0)


def test_criterion_02_block_eigen_equations():
    t0 = time.perf_counter()
    # hand-checked anchors first
    assert apply_Ltilde(X_PLUS_1, 0, 0) == 4 * X_PLUS_1
    s = 18 * X2_MINUS_1
    assert poly_S(2, 0, 0) == s
    assert apply_Lfull(s, 0, 0) == 144 * s
    for a, b in AB_GRID:
        for n in range(13):
            q = poly_Q(n, a, b)
            res = apply_Ltilde(q, a, b) - eigen_high("side", n, b, a).value * q
            assert res.is_zero, ("Q", a, b, n)
            r = poly_R(n, a, b)
            res = apply_Lhat(r, a, b) - eigen_high("side", n, a, b).value * r
            assert res.is_zero, ("R", a, b, n)
            sp = poly_S(n, a, b)
            res = apply_Lfull(sp, a, b) - eigen_high("full", n, a, b).value * sp
            assert res.is_zero, ("S", a, b, n)
    _done("criterion 2: block eigen-equations with anchors", t0, cap=10.0)


def test_criterion_03_combined_eigen_equation():
    t0 = time.perf_counter()
    for a, b in AB_GRID:
        for M in MASS_GRID:
            for N in MASS_GRID:
                pr = Params(a, b, M, N)
                for n in range(13):
                    y = gen_jacobi(n, pr)
                    res = apply_combined(y, pr) - eigen_combined(n, pr).value * y
                    assert res.is_zero, (a, b, M, N, n)
    _done("criterion 3: combined eigen-equation over the mass grid", t0, cap=60.0)


def test_criterion_04_expansion_orders_and_top_coefficients():
    t0 = time.perf_counter()
    for a, b in AB_GRID:
        pr = Params(a, b)
        for kind, order, top in (
                ("Ltilde", 2 * b + 4, X2_MINUS_1 ** (b + 2)),
                ("Lhat", 2 * a + 4, X2_MINUS_1 ** (a + 2)),
                ("Lfull", 2 * a + 2 * b + 6, X2_MINUS_1 ** (a + b + 3))):
            op = expand_operator(kind, pr)
            assert op.effective_order == order, (kind, a, b)
            assert op.terms[-1][1] == top, (kind, a, b)
    _done("criterion 4: expansion effective orders and top coefficients", t0)


def test_criterion_05_factorized_equals_elementary():
    t0 = time.perf_counter()
    for a, b in product(range(3), range(3)):
        probes = {
            "A": (X_PLUS_1, apply_Ltilde, 2 * b + 4),
            "B": (X_MINUS_1, apply_Lhat, 2 * a + 4),
            "C": (X2_MINUS_1, apply_Lfull, 2 * a + 2 * b + 6),
        }
        for kind, (factor, elementary, order) in probes.items():
            for k in range(order + 5):
                y = factor * Poly.monomial(k)
                assert apply_factorized(kind, y, a, b) == elementary(y, a, b), \
                    (kind, a, b, k)
        for n in range(1, 9):
            q = poly_Q(n, a, b)
            assert apply_factorized("A", q, a, b) == apply_Ltilde(q, a, b)
            r = poly_R(n, a, b)
            assert apply_factorized("B", r, a, b) == apply_Lhat(r, a, b)
            sp = poly_S(n, a, b)
            assert apply_factorized("C", sp, a, b) == apply_Lfull(sp, a, b)
    _done("criterion 5: factorized operators equal elementary operators", t0)


def test_criterion_06_sixth_order_special_case_literal():
    t0 = time.perf_counter()
    for M, N in ((F(1), F(1)), (F(1, 2), F(7, 3)), (F(2), F(0))):
        pr = Params(0, 0, M, N)
        for n in range(11):
            y = gen_jacobi(n, pr)
            lhs = (X2_MINUS_1 * y.derive()).derive()
            lhs = lhs + M / 2 * X_PLUS_1 * (X_MINUS_1 ** 2
                                            * (X_PLUS_1 * y).derive(2)).derive(2)
            lhs = lhs + N / 2 * X_MINUS_1 * (X_PLUS_1 ** 2
                                             * (X_MINUS_1 * y).derive(2)).derive(2)
            lhs = lhs + M * N / 3 * X2_MINUS_1 * (X2_MINUS_1
                                                  * (X2_MINUS_1 * y).derive(3)).derive(3)
            scale = pochhammer(n, 2) * (1 + (M + N) / 2 * pochhammer(n, 2)
                                        + M * N / 3 * pochhammer(n - 1, 4))
            assert lhs == scale * y, (M, N, n)
    _done("criterion 6: literal sixth-order equation, both masses", t0)


def test_criterion_07_cross_identities():
    t0 = time.perf_counter()
    for a, b in product(range(3), range(3)):
        inv_bq = 1 / const_b(b, a)
        inv_br = 1 / const_b(a, b)
        inv_c = 1 / const_c(a, b)
        for n in range(11):
            P = jacobi_poly(n, a, b)
            Q, R, S = poly_Q(n, a, b), poly_R(n, a, b), poly_S(n, a, b)
            d2 = lambda y: apply_L2(y, a, b) - eigen_lambda2(n, a, b).value * y
            dq = lambda y: (apply_Ltilde(y, a, b)
                            - eigen_high("side", n, b, a).value * y)
            dr = lambda y: (apply_Lhat(y, a, b)
                            - eigen_high("side", n, a, b).value * y)
            ds = lambda y: (apply_Lfull(y, a, b)
                            - eigen_high("full", n, a, b).value * y)
            assert (d2(Q) + inv_bq * dq(P)).is_zero, ("P/Q", a, b, n)
            assert (d2(R) + inv_br * dr(P)).is_zero, ("P/R", a, b, n)
            assert (inv_bq * dq(S) + inv_c * ds(Q)).is_zero, ("Q/S", a, b, n)
            assert (inv_br * dr(S) + inv_c * ds(R)).is_zero, ("R/S", a, b, n)
            assert (d2(S) + inv_bq * dq(R) + inv_br * dr(Q)
                    + inv_c * ds(P)).is_zero, ("4-term", a, b, n)
    _done("criterion 7: cross identities between the four blocks", t0)


def test_criterion_08_product_form_agreement():
    t0 = time.perf_counter()
    for a, b in AB_GRID:
        for k in range(2 * b + 9):
            m = Poly.monomial(k)
            assert apply_duran(m, a, b) == apply_Ltilde(m, a, b), (a, b, k)
        for n in range(1, 11):
            qn = coeff_q(n, a, b)
            lhs = qn * X_PLUS_1 * jacobi_poly(n - 1, a, b + 2)
            rhs = qn * (2 * (n + b + 1) * jacobi_poly(n - 1, a, b + 1)
                        + 2 * n * jacobi_poly(n, a, b + 1)) / (2 * n + a + b + 1)
            assert lhs == rhs, (a, b, n)
    _done("criterion 8: alternative product form of the mass(-1) operator", t0)


def test_criterion_09_symmetry_of_combined_operator():
    t0 = time.perf_counter()
    idx = 0
    for a, b in product(range(3), range(3)):
        for M in (F(1, 3), F(2)):
            for N in (F(1, 3), F(2)):
                pr = Params(a, b, M, N)
                rep = verify_symmetry(50, 2 * a + 2 * b + 8, pr,
                                      seed=_point_seed(0, idx))
                assert rep.all_pass, rep.to_plain()
                # 50 pairs, 6 exact checks each, plus the 2 constant rows
                assert len(rep.cases) == 50 * 6 + 2
                idx += 1
    _done("criterion 9: symmetry defect zero on 50 random pairs per point",
          t0, cap=120.0)


def test_criterion_10_orthogonality_and_eigenvalue_growth():
    t0 = time.perf_counter()
    for a, b in AB_GRID:
        for M in MASS_GRID:
            for N in MASS_GRID:
                pr = Params(a, b, M, N)
                G = gram_matrix(10, pr)
                for i in range(11):
                    assert G[i][i] > 0, (a, b, M, N, i)
                    for j in range(i):
                        assert G[i][j] == 0, (a, b, M, N, i, j)
                lams = [eigen_combined(n, pr).value for n in range(31)]
                for n in range(30):
                    assert lams[n] < lams[n + 1], (a, b, M, N, n)
    _done("criterion 10: diagonal Gram matrices and increasing eigenvalues", t0)


def test_criterion_11_reflection_and_dual_paths():
    t0 = time.perf_counter()
    for a, b in AB_GRID:
        for M in MASS_GRID:
            for N in MASS_GRID:
                pr = Params(a, b, M, N)
                sw = pr.swapped()
                for n in range(13):
                    assert gen_jacobi(n, pr) == (-1) ** n * gen_jacobi(n, sw).reflect()
        for n in range(13):
            assert jacobi_poly(n, a, b) == jacobi_recurrence(n, a, b)
        assert h_norm(a, b) == h_norm_integral(a, b)
    _done("criterion 11: reflection symmetry and dual construction paths", t0)
