"""Exact univariate and two-variable polynomial arithmetic over the rationals.

``Rational`` is an alias for :class:`fractions.Fraction`: arbitrary precision,
always stored gcd-reduced with a positive denominator, so equality is
structural.  ``Poly`` is a dense univariate polynomial over ``Rational`` with
an abstract indeterminate (used for X, T and s in different contexts).
``BiPoly`` is a sparse polynomial in two variables U, V.

Everything here is immutable and safe to share between threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

#: degree of the zero polynomial
NEG_INFINITY = -math.inf


def binomial(n: int, k: int) -> Fraction:
    """Exact binomial coefficient, zero outside the triangle (k < 0 or k > n)."""
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def factorial(n: int) -> Fraction:
    return Fraction(math.factorial(n))


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Poly:
    """Dense univariate polynomial with Fraction coefficients.

    Coefficients are indexed by exponent; the highest stored coefficient is
    nonzero (the zero polynomial stores an empty tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly([1])

    @staticmethod
    def const(c: Fraction | int) -> "Poly":
        return Poly([c])

    @staticmethod
    def monomial(exponent: int, coeff: Fraction | int = 1) -> "Poly":
        if exponent < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return Poly([0] * exponent + [coeff])

    @staticmethod
    def X() -> "Poly":
        return Poly([0, 1])

    @property
    def degree(self) -> int | float:
        """Degree, with -inf as the marker for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, exponent: int) -> Fraction:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Poly":
        scalar = _as_fraction(scalar)
        if scalar == 0:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return Poly([c / scalar for c in self.coeffs])

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division: self = other * quot + rem, deg rem < deg other."""
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - dq - 1, -1, -1):
            c = rem[i + dq]
            if c == 0:
                continue
            q = c / lead
            quot[i] = q
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= q * b
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        """Division that must leave no remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def compose_power(self, ell: int) -> "Poly":
        """Substitute X -> X^ell."""
        if ell < 1:
            raise ValueError("compose_power requires ell >= 1")
        if ell == 1 or not self.coeffs:
            return self
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * ell + 1)
        for i, c in enumerate(self.coeffs):
            out[i * ell] = c
        return Poly(out)

    def __call__(self, x: Fraction | int) -> Fraction:
        """Horner evaluation at an exact rational point."""
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def integral(self) -> "Poly":
        """Antiderivative with zero constant term."""
        return Poly([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def shift(self, k: int) -> "Poly":
        """Multiply by X^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.leading

    def trailing_valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient (0 for the zero poly)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"


def gcd_ext(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (g, u, v) with g = gcd(p, q) monic and u*p + v*q = g."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    r0, r1 = p, q
    u0, u1 = Poly.one(), Poly.zero()
    v0, v1 = Poly.zero(), Poly.one()
    while not r1.is_zero():
        quot, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - quot * u1
        v0, v1 = v1, v0 - quot * v1
    lead = r0.leading
    return r0 / lead, u0 / lead, v0 / lead


def cyclotomic_sum(n: int) -> Poly:
    """1 + X + ... + X^(n-1), the quotient (X^n - 1)/(X - 1)."""
    if n < 1:
        raise ValueError("cyclotomic_sum requires n >= 1")
    return Poly([1] * n)


def x_power_minus_one(n: int) -> Poly:
    """X^n - 1."""
    if n < 1:
        raise ValueError("x_power_minus_one requires n >= 1")
    return Poly([-1] + [0] * (n - 1) + [1])


def format_rational(x: Fraction) -> str:
    return str(x)


def format_poly(p: Poly, var: str = "X") -> str:
    """Render ascending by exponent, e.g. ``-1/2 + 1/3*X^2``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            xpow = var if i == 1 else f"{var}^{i}"
            term = f"{mag}{xpow}"
            if c < 0:
                term = "-" + term
        if parts and not term.startswith("-"):
            parts.append("+ " + term)
        elif parts:
            parts.append("- " + term[1:])
        else:
            parts.append(term)
    return " ".join(parts)


class BiPoly:
    """Sparse polynomial in two variables U, V over the rationals.

    Stored as a map from (u_exponent, v_exponent) to a nonzero coefficient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        cleaned = {}
        if terms:
            for (i, j), c in terms.items():
                c = _as_fraction(c)
                if c != 0:
                    if i < 0 or j < 0:
                        raise ValueError("BiPoly exponents must be nonnegative")
                    cleaned[(i, j)] = c
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def monomial(i: int, j: int, coeff: Fraction | int = 1) -> "BiPoly":
        return BiPoly({(i, j): _as_fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(("BiPoly", frozenset(self.terms.items())))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return BiPoly({key: c * other for key, c in self.terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def d_u(self) -> "BiPoly":
        return BiPoly({(i - 1, j): i * c for (i, j), c in self.terms.items() if i > 0})

    def d_v(self) -> "BiPoly":
        return BiPoly({(i, j - 1): j * c for (i, j), c in self.terms.items() if j > 0})

    def shift(self, du: int, dv: int) -> "BiPoly":
        """Multiply by U^du * V^dv."""
        return BiPoly({(i + du, j + dv): c for (i, j), c in self.terms.items()})

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def sorted_terms(self) -> Sequence[tuple[tuple[int, int], Fraction]]:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "BiPoly(0)"
        bits = []
        for (i, j), c in self.sorted_terms():
            bits.append(f"{c}*U^{i}*V^{j}")
        return "BiPoly(" + " + ".join(bits) + ")"
