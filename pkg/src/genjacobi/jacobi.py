"""Classical Jacobi polynomials with exact rational parameters.

Two independent construction routes are provided: the terminating
hypergeometric sum (primary) and the three-term recurrence (oracle).  They
must agree coefficient for coefficient; the test suite enforces this.

Parameters stay rational (not just integer) because the differentiation
identities shift them by one in each direction and the polynomials remain
exact for any rational parameter > -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import (InvalidParam, Poly, Rational, RationalLike, X_MINUS_1,
                      X_PLUS_1, X2_MINUS_1, as_rational, pochhammer)
from .report import Case, VerifyReport, params_str


@dataclass(frozen=True)
class JacobiParams:
    """Validated exponent pair for the weight (1-x)^gamma (1+x)^delta."""

    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "gamma", as_rational(self.gamma))
        object.__setattr__(self, "delta", as_rational(self.delta))
        if self.gamma <= -1:
            raise InvalidParam(f"gamma must exceed -1, got {self.gamma}")
        if self.delta <= -1:
            raise InvalidParam(f"delta must exceed -1, got {self.delta}")


def jacobi_poly(n: int, gamma: RationalLike, delta: RationalLike) -> Poly:
    """Degree-n Jacobi polynomial for weight exponents (gamma, delta).

    Evaluates the terminating hypergeometric sum exactly.  The leading
    coefficient is (n+gamma+delta+1)_n / (2^n n!).
    """
    if n < 0:
        raise InvalidParam(f"polynomial index must be >= 0, got {n}")
    p = JacobiParams(as_rational(gamma), as_rational(delta))
    return _jacobi_hyp(n, p.gamma, p.delta)


@lru_cache(maxsize=None)
def _jacobi_hyp(n: int, gamma: Fraction, delta: Fraction) -> Poly:
    # sum_k (-n)_k (n+gamma+delta+1)_k / ((gamma+1)_k k!) * ((1-x)/2)^k,
    # scaled by (gamma+1)_n / n!; the ratio of consecutive terms is rational
    half_shift = Poly([Fraction(1, 2), Fraction(-1, 2)])  # (1-x)/2
    acc = Poly.zero()
    power = Poly.one()
    c = Fraction(1)
    for k in range(n + 1):
        acc = acc + c * power
        c *= Fraction(k - n) * (n + gamma + delta + 1 + k) / ((gamma + 1 + k) * (k + 1))
        power = power * half_shift
    return acc * (pochhammer(gamma + 1, n) / factorial(n))


def jacobi_recurrence(n: int, gamma: RationalLike, delta: RationalLike) -> Poly:
    """Same polynomial via the three-term recurrence (independent oracle)."""
    if n < 0:
        raise InvalidParam(f"polynomial index must be >= 0, got {n}")
    p = JacobiParams(as_rational(gamma), as_rational(delta))
    g, d = p.gamma, p.delta
    prev = Poly.one()
    if n == 0:
        return prev
    cur = Poly([(g - d) / 2, (g + d + 2) / 2])
    for m in range(2, n + 1):
        a = 2 * m * (m + g + d) * (2 * m + g + d - 2)
        b_x = (2 * m + g + d - 1) * (2 * m + g + d) * (2 * m + g + d - 2)
        b_1 = (2 * m + g + d - 1) * (g * g - d * d)
        c = 2 * (m + g - 1) * (m + d - 1) * (2 * m + g + d)
        nxt = (Poly([b_1, b_x]) * cur - c * prev) * (Fraction(1) / a)
        prev, cur = cur, nxt
    return cur


def leading_coeff(n: int, gamma: RationalLike, delta: RationalLike) -> Fraction:
    """Closed form for the x^n coefficient of jacobi_poly(n, gamma, delta)."""
    g, d = as_rational(gamma), as_rational(delta)
    return pochhammer(n + g + d + 1, n) / (Fraction(2) ** n * factorial(n))


def verify_diff_identities(n: int, gamma: RationalLike, delta: RationalLike) -> VerifyReport:
    """Check the four derivative/parameter-shift identities at one point.

    Each identity is checked in cofactor form: the common weight factor
    (x-1)^(gamma-1) (x+1)^(delta-1) is stripped from both sides first, so the
    check stays inside exact polynomial arithmetic even for fractional
    parameters.  Identities whose parameter constraint fails are recorded as
    skipped with the violated constraint.
    """
    g, d = as_rational(gamma), as_rational(delta)
    pstr = params_str(gamma=g, delta=d)
    report = VerifyReport("diff-identities", grid={"n": str(n), **pstr})
    P = jacobi_poly(n, g, d)
    dP = P.derive()

    # plain derivative: lowers the degree, raises both parameters
    rhs = jacobi_poly(n - 1, g + 1, d + 1) if n >= 1 else Poly.zero()
    res = dP - Fraction(n + g + d + 1, 2) * rhs
    report.add(Case.check("derivative raises both parameters", pstr, n, res))

    # derivative of the fully weighted polynomial: raises degree, lowers both
    if g > 0 and d > 0:
        lhs = g * X_PLUS_1 * P + d * X_MINUS_1 * P + X2_MINUS_1 * dP
        res = lhs - 2 * (n + 1) * jacobi_poly(n + 1, g - 1, d - 1)
        report.add(Case.check("weighted derivative, both endpoint factors", pstr, n, res))
    else:
        report.add(Case.skip("weighted derivative, both endpoint factors", pstr, n,
                             "needs gamma > 0 and delta > 0"))

    # derivative through the (x-1)^gamma factor alone
    if g > 0:
        lhs = g * P + X_MINUS_1 * dP
        res = lhs - (n + g) * jacobi_poly(n, g - 1, d + 1)
        report.add(Case.check("weighted derivative, x=1 factor", pstr, n, res))
    else:
        report.add(Case.skip("weighted derivative, x=1 factor", pstr, n, "needs gamma > 0"))

    # derivative through the (x+1)^delta factor alone
    if d > 0:
        lhs = d * P + X_PLUS_1 * dP
        res = lhs - (n + d) * jacobi_poly(n, g + 1, d - 1)
        report.add(Case.check("weighted derivative, x=-1 factor", pstr, n, res))
    else:
        report.add(Case.skip("weighted derivative, x=-1 factor", pstr, n, "needs delta > 0"))

    return report
