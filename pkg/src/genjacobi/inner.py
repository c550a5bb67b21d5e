"""Exact weighted inner products with endpoint point masses.

Every integral here is a polynomial integral over [-1, 1], computed by
binomial expansion and exact monomial integration; there is no quadrature
and no tolerance.  The module provides the normalized Jacobi weight
integral, the mass-augmented scalar product split into its three parts, the
four symmetric bilinear forms that mirror the operators under that scalar
product, closed-form boundary values of the operators, the symmetry defect
of the combined operator, and Gram matrices of the generalized polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import (InvalidParam, ONE_MINUS_X, Poly, X_MINUS_1, X_PLUS_1,
                      pochhammer)
from .genjacobi import Params, gen_jacobi
from .operators import (apply_combined, apply_L2, apply_Lfull, apply_Lhat,
                        apply_Ltilde, const_b, const_c, _nonneg_int)


def integrate(f: Poly) -> Fraction:
    """Integral of f over [-1, 1]: odd monomials drop, x^k gives 2/(k+1)."""
    total = Fraction(0)
    for k, c in enumerate(f.coeffs):
        if k % 2 == 0 and c:
            total += 2 * c / (k + 1)
    return total


def h_norm(alpha: int, beta: int) -> Fraction:
    """Total mass of the weight (1-x)^alpha (1+x)^beta over [-1, 1].

    Closed form 2^(alpha+beta+1) * alpha! * beta! / (alpha+beta+1)!; the
    direct integral of the expanded weight is kept as a test oracle in
    h_norm_integral.
    """
    a = _nonneg_int("alpha", alpha)
    b = _nonneg_int("beta", beta)
    return Fraction(2 ** (a + b + 1) * factorial(a) * factorial(b), factorial(a + b + 1))


def h_norm_integral(alpha: int, beta: int) -> Fraction:
    """Oracle path for h_norm: expand the weight and integrate it."""
    return integrate(weight_poly(alpha, beta))


def weight_poly(alpha: int, beta: int) -> Poly:
    """(1-x)^alpha (1+x)^beta as an explicit polynomial."""
    a = _nonneg_int("alpha", alpha)
    b = _nonneg_int("beta", beta)
    return ONE_MINUS_X ** a * X_PLUS_1 ** b


def weighted_integral(f: Poly, alpha: int, beta: int) -> Fraction:
    """Normalized weight integral of f: h_norm(1) = 1 by construction."""
    return integrate(f * weight_poly(alpha, beta)) / h_norm(alpha, beta)


@dataclass(frozen=True)
class InnerProductResult:
    """Scalar product split into weight integral and the two mass terms."""

    integral_part: Fraction
    mass_neg1: Fraction
    mass_pos1: Fraction

    @property
    def total(self) -> Fraction:
        return self.integral_part + self.mass_neg1 + self.mass_pos1


def inner_product(f: Poly, g: Poly, params: Params) -> InnerProductResult:
    """Weighted product of f and g plus M f(-1)g(-1) and N f(1)g(1)."""
    return InnerProductResult(
        weighted_integral(f * g, params.alpha, params.beta),
        params.M * f.eval(-1) * g.eval(-1),
        params.N * f.eval(1) * g.eval(1),
    )


# ---------------- symmetric bilinear forms ----------------

def bilinear_U(f: Poly, g: Poly, alpha: int, beta: int) -> Fraction:
    """Form mirroring the second-order operator: integral of f'g' against
    the weight with both exponents raised by one."""
    fg = f.derive() * g.derive() * X_MINUS_1 * X_PLUS_1 * Fraction(-1)
    return weighted_integral(fg, alpha, beta)


def bilinear_Vt(f: Poly, g: Poly, alpha: int, beta: int) -> Fraction:
    """Form mirroring the mass operator at x = -1."""
    a = _nonneg_int("alpha", alpha)
    b = _nonneg_int("beta", beta)
    df = (X_PLUS_1 ** (b + 1) * f).derive(b + 2)
    dg = (X_PLUS_1 ** (b + 1) * g).derive(b + 2)
    return integrate(df * dg * ONE_MINUS_X ** (a + b + 2)) / h_norm(a, b)


def bilinear_V(f: Poly, g: Poly, alpha: int, beta: int) -> Fraction:
    """Form mirroring the mass operator at x = +1."""
    a = _nonneg_int("alpha", alpha)
    b = _nonneg_int("beta", beta)
    df = (X_MINUS_1 ** (a + 1) * f).derive(a + 2)
    dg = (X_MINUS_1 ** (a + 1) * g).derive(a + 2)
    return integrate(df * dg * X_PLUS_1 ** (a + b + 2)) / h_norm(a, b)


def bilinear_W(f: Poly, g: Poly, alpha: int, beta: int) -> Fraction:
    """Form mirroring the two-mass operator."""
    a = _nonneg_int("alpha", alpha)
    b = _nonneg_int("beta", beta)
    vf = X_MINUS_1 ** (a + 1) * X_PLUS_1 ** (b + 1)
    df = (vf * f).derive(a + b + 3)
    dg = (vf * g).derive(a + b + 3)
    return integrate(df * dg * ONE_MINUS_X ** (b + 1) * X_PLUS_1 ** (a + 1)) / h_norm(a, b)


# ---------------- boundary behaviour ----------------

@dataclass(frozen=True)
class BoundaryValues:
    """The four operators applied to f, evaluated at both endpoints."""

    l2_neg1: Fraction
    l2_pos1: Fraction
    ltilde_neg1: Fraction
    ltilde_pos1: Fraction
    lhat_neg1: Fraction
    lhat_pos1: Fraction
    lfull_neg1: Fraction
    lfull_pos1: Fraction


def boundary_closed_forms(f: Poly, alpha: int, beta: int) -> BoundaryValues:
    """Predicted endpoint values without applying any operator.

    The second-order operator reduces to a first-derivative multiple at each
    endpoint; the mass operator for one endpoint vanishes there and has a
    weighted-derivative value at the opposite endpoint; the two-mass
    operator vanishes at both.
    """
    a = _nonneg_int("alpha", alpha)
    b = _nonneg_int("beta", beta)
    df = f.derive()
    return BoundaryValues(
        l2_neg1=-2 * (b + 1) * df.eval(-1),
        l2_pos1=2 * (a + 1) * df.eval(1),
        ltilde_neg1=Fraction(0),
        ltilde_pos1=2 * pochhammer(a + 1, b + 2)
        * (X_PLUS_1 ** (b + 1) * f).derive(b + 2).eval(1),
        lhat_neg1=-2 * pochhammer(b + 1, a + 2)
        * (X_MINUS_1 ** (a + 1) * f).derive(a + 2).eval(-1),
        lhat_pos1=Fraction(0),
        lfull_neg1=Fraction(0),
        lfull_pos1=Fraction(0),
    )


def boundary_values(f: Poly, alpha: int, beta: int) -> BoundaryValues:
    """Endpoint values of the four operators applied to f.

    Each value is cross-checked against its closed form; a mismatch raises
    ArithmeticError because it can only mean an implementation bug.
    """
    l2 = apply_L2(f, alpha, beta)
    lt = apply_Ltilde(f, alpha, beta)
    lh = apply_Lhat(f, alpha, beta)
    lf = apply_Lfull(f, alpha, beta)
    got = BoundaryValues(
        l2_neg1=l2.eval(-1), l2_pos1=l2.eval(1),
        ltilde_neg1=lt.eval(-1), ltilde_pos1=lt.eval(1),
        lhat_neg1=lh.eval(-1), lhat_pos1=lh.eval(1),
        lfull_neg1=lf.eval(-1), lfull_pos1=lf.eval(1),
    )
    want = boundary_closed_forms(f, alpha, beta)
    if got != want:
        raise ArithmeticError(
            f"boundary closed forms violated for alpha={alpha}, beta={beta}: "
            f"{got} != {want}")
    return got


def mass_constant_identity(alpha: int, beta: int) -> tuple:
    """Three routes to the same constant tying the masses to the forms.

    Returns (direct, via_pos1_normalization, via_neg1_normalization); all
    three must be equal.
    """
    a = _nonneg_int("alpha", alpha)
    b = _nonneg_int("beta", beta)
    direct = (Fraction(2 ** (a + b + 2)) * factorial(a + 1) * factorial(b + 1)
              * factorial(a + b + 3) / h_norm(a, b))
    via_pos = const_c(a, b) / const_b(a, b) * 2 * pochhammer(b + 1, a + 2) * factorial(a + 2)
    via_neg = const_c(a, b) / const_b(b, a) * 2 * pochhammer(a + 1, b + 2) * factorial(b + 2)
    return direct, via_pos, via_neg


def symmetry_defect(f: Poly, g: Poly, params: Params) -> Fraction:
    """(Lf, g) - (f, Lg) under the mass-augmented product; must be 0."""
    lhs = inner_product(apply_combined(f, params), g, params).total
    rhs = inner_product(f, apply_combined(g, params), params).total
    return lhs - rhs


def gram_matrix(nmax: int, params: Params) -> list:
    """Pairwise scalar products of gen_jacobi(0..nmax); diagonal iff the
    polynomials are orthogonal for these weight data."""
    if nmax < 0:
        raise InvalidParam(f"nmax must be >= 0, got {nmax}")
    polys = [gen_jacobi(n, params) for n in range(nmax + 1)]
    out = []
    for i, f in enumerate(polys):
        row = []
        for j, g in enumerate(polys):
            if j < i:
                row.append(out[j][i])
            else:
                row.append(inner_product(f, g, params).total)
        out.append(row)
    return out
