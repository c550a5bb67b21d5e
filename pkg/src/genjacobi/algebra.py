"""Exact rational scalars and dense univariate polynomial arithmetic.

Scalars are stdlib ``fractions.Fraction`` values (arbitrary-precision,
always normalized).  A :class:`Poly` is a dense polynomial in one variable x
with rational coefficients, stored as an integer coefficient vector over a
single positive denominator:

    p(x) = (nums[0] + nums[1]*x + ... + nums[d]*x^d) / den

with gcd(nums..., den) == 1 and no trailing zero coefficient (the zero
polynomial has an empty vector).  The shared denominator keeps the hot loops
(convolution, scaled addition, gcd normalization) in pure integer arithmetic;
those loops live in :mod:`genjacobi.kernel`.

There is no floating point anywhere: every operation is exact, and exact
division fails loudly when the remainder is nonzero.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd, lcm, perm
from typing import Iterable, Sequence, Union

from . import kernel

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class NotDivisible(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class InvalidParam(ValueError):
    """A parameter is outside the domain of the requested operation."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or 'p/q' string to Fraction.

    Floats are rejected: they would silently break exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise InvalidParam(f"not an exact rational: {value!r} (floats are not accepted)")


def pochhammer(a: RationalLike, k: int) -> Fraction:
    """Shifted factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise InvalidParam(f"pochhammer needs k >= 0, got {k}")
    a = as_rational(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def _canonical(nums: list, den: int) -> tuple:
    """Normalize a raw (nums, den) pair to the class invariant."""
    while nums and nums[-1] == 0:
        nums.pop()
    if not nums:
        return (), 1
    if den < 0:
        den = -den
        nums = [-n for n in nums]
    g = gcd(kernel.vec_gcd(nums), den)
    if g > 1:
        den //= g
        nums = [n // g for n in nums]
    return tuple(nums), den


class Poly:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("nums", "den")

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        den = lcm(*(c.denominator for c in cs)) if cs else 1
        nums = [c.numerator * (den // c.denominator) for c in cs]
        nums, den = _canonical(nums, den)
        object.__setattr__(self, "nums", nums)
        object.__setattr__(self, "den", den)

    @classmethod
    def _raw(cls, nums: tuple, den: int) -> "Poly":
        """Trusted constructor: (nums, den) must already be canonical."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "nums", nums)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def _norm(cls, nums: list, den: int) -> "Poly":
        return cls._raw(*_canonical(nums, den))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly._raw, (self.nums, self.den))

    # ---------------- constructors ----------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw((), 1)

    @classmethod
    def one(cls) -> "Poly":
        return cls._raw((1,), 1)

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw((0, 1), 1)

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "Poly":
        """c * x^k."""
        c = as_rational(c)
        if c == 0:
            return cls.zero()
        return cls._raw((0,) * k + (c.numerator,), c.denominator)

    # ---------------- inspection ----------------

    @property
    def is_zero(self) -> bool:
        return not self.nums

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.nums) - 1

    @property
    def coeffs(self) -> tuple:
        """Coefficients ascending by degree, as Fractions."""
        return tuple(Fraction(n, self.den) for n in self.nums)

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x^k (0 beyond the degree)."""
        if 0 <= k < len(self.nums):
            return Fraction(self.nums[k], self.den)
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.nums:
            return Fraction(0)
        return Fraction(self.nums[-1], self.den)

    def __bool__(self) -> bool:
        return bool(self.nums)

    def __hash__(self):
        return hash((self.nums, self.den))

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nums == other.nums and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    # ---------------- arithmetic ----------------

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        g = gcd(self.den, other.den)
        den = self.den // g * other.den
        nums = kernel.add_scaled(list(self.nums), other.den // g, list(other.nums), self.den // g)
        return Poly._norm(nums, den)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-n for n in self.nums), self.den)

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly.zero()
            nums = kernel.conv(list(self.nums), list(other.nums))
            return Poly._norm(nums, self.den * other.den)
        if isinstance(other, (int, Fraction)):
            s = as_rational(other)
            if s == 0 or self.is_zero:
                return Poly.zero()
            return Poly._norm([n * s.numerator for n in self.nums], self.den * s.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise InvalidParam("negative polynomial power")
        out = Poly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return self.exact_div(other)
        if isinstance(other, (int, Fraction)):
            s = as_rational(other)
            if s == 0:
                raise ZeroDivisionError("division of Poly by zero scalar")
            return self * (1 / s)
        return NotImplemented

    def derive(self, k: int = 1) -> "Poly":
        """k-fold derivative (k = 0 is the identity)."""
        if k < 0:
            raise InvalidParam("negative derivative order")
        if k == 0:
            return self
        if k > self.degree:
            return Poly.zero()
        nums = [self.nums[i + k] * perm(i + k, k) for i in range(len(self.nums) - k)]
        return Poly._norm(nums, self.den)

    def reflect(self) -> "Poly":
        """p(-x): negate odd-degree coefficients."""
        nums = tuple(-n if i & 1 else n for i, n in enumerate(self.nums))
        return Poly._raw(nums, self.den)

    def exact_div(self, d: "Poly") -> "Poly":
        """Quotient q with self == q * d exactly; NotDivisible otherwise."""
        if d.is_zero:
            raise ZeroDivisionError("division of Poly by zero polynomial")
        if self.is_zero:
            return Poly.zero()
        if self.degree < d.degree:
            raise NotDivisible(f"degree {self.degree} < divisor degree {d.degree}")
        if d.den == 1 and d.nums[-1] == 1:
            return self._div_monic_int(d)
        return self._div_general(d)

    def _div_monic_int(self, d: "Poly") -> "Poly":
        # all-integer synthetic division by a monic divisor
        r = list(self.nums)
        dn = d.nums
        dd = len(dn) - 1
        q = [0] * (len(r) - dd)
        for i in range(len(r) - 1, dd - 1, -1):
            c = r[i]
            if c:
                q[i - dd] = c
                for j in range(dd + 1):
                    r[i - dd + j] -= c * dn[j]
        if any(r[:dd]):
            raise NotDivisible(f"remainder {Poly._norm(r[:dd], self.den)!r} dividing by {d!r}")
        return Poly._norm(q, self.den)

    def _div_general(self, d: "Poly") -> "Poly":
        r = list(self.coeffs)
        dc = d.coeffs
        dd = len(dc) - 1
        lead = dc[-1]
        q = [Fraction(0)] * (len(r) - dd)
        for i in range(len(r) - 1, dd - 1, -1):
            c = r[i] / lead
            if c:
                q[i - dd] = c
                for j in range(dd + 1):
                    r[i - dd + j] -= c * dc[j]
        if any(r[:dd]):
            raise NotDivisible(f"remainder {Poly(r[:dd])!r} dividing by {d!r}")
        return Poly(q)

    def eval(self, x: RationalLike) -> Fraction:
        """Exact value at a rational point (integer Horner, one reduction)."""
        if self.is_zero:
            return Fraction(0)
        x = as_rational(x)
        p, q = x.numerator, x.denominator
        acc, qq = 0, 1
        for c in reversed(self.nums):
            acc = acc * p + c * qq
            qq *= q
        return Fraction(acc, self.den * q ** (len(self.nums) - 1))

    # ---------------- rendering ----------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.nums) - 1, -1, -1):
            c = Fraction(self.nums[k], self.den)
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                if mag == 1:
                    body = xs
                elif mag.denominator == 1:
                    body = f"{mag}{xs}"
                else:
                    body = f"({format_rational(mag)}){xs}"
            parts.append(f"{sign}{body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly('{self}')"


def format_rational(value: RationalLike) -> str:
    """Exact rendering: 'p/q', or just 'p' when the denominator is 1."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# handy fixed polynomials
X = Poly.x()
X_PLUS_1 = Poly([1, 1])
X_MINUS_1 = Poly([-1, 1])
X2_MINUS_1 = Poly([-1, 0, 1])
ONE_MINUS_X = Poly([1, -1])


def factorial_r(n: int) -> Fraction:
    """n! as a Fraction (n >= 0)."""
    if n < 0:
        raise InvalidParam(f"factorial of negative {n}")
    return Fraction(factorial(n))
