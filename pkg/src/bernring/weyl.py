"""Normal-form operators in the Weyl algebra Q<T, d/dT> and their actions.

An operator is kept as sum f_k(T) * d^k with the polynomial parts on the left,
so equality of operators is structural equality of the normal form.  Products
are normalized with the commutation rule d * f(T) = f'(T) + f(T) * d.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .elements import Atom, BElement
from .polys import Poly, binomial, format_poly
from .series import TruncatedSeries


class WeylOp:
    """Element of the Weyl algebra in normal form {derivative order: Poly in T}."""

    __slots__ = ("parts",)

    def __init__(self, parts: Mapping[int, Poly] | None = None):
        cleaned: dict[int, Poly] = {}
        if parts:
            for k, f in parts.items():
                if k < 0:
                    raise ValueError("derivative order must be nonnegative")
                if not isinstance(f, Poly):
                    f = Poly.const(f)
                if not f.is_zero():
                    cleaned[k] = f
        object.__setattr__(self, "parts", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("WeylOp is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero() -> "WeylOp":
        return WeylOp()

    @staticmethod
    def identity() -> "WeylOp":
        return WeylOp({0: Poly.one()})

    @staticmethod
    def from_poly(p: Poly) -> "WeylOp":
        return WeylOp({0: p})

    @staticmethod
    def d(order: int = 1) -> "WeylOp":
        return WeylOp({order: Poly.one()})

    @staticmethod
    def t_power(k: int) -> "WeylOp":
        return WeylOp({0: Poly.monomial(k)})

    # -- algebra -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.parts

    def order(self) -> int:
        return max(self.parts) if self.parts else -1

    def coeff(self, k: int) -> Poly:
        return self.parts.get(k, Poly.zero())

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(frozenset(self.parts.items()))

    def __add__(self, other: "WeylOp") -> "WeylOp":
        out = dict(self.parts)
        for k, f in other.parts.items():
            out[k] = out.get(k, Poly.zero()) + f
        return WeylOp(out)

    def __neg__(self) -> "WeylOp":
        return WeylOp({k: -f for k, f in self.parts.items()})

    def __sub__(self, other: "WeylOp") -> "WeylOp":
        return self + (-other)

    def scale(self, c) -> "WeylOp":
        return WeylOp({k: f * c for k, f in self.parts.items()})

    def __mul__(self, other: "WeylOp") -> "WeylOp":
        """Noncommutative product, renormalized with d^i f = sum C(i,r) f^(r) d^(i-r)."""
        if not isinstance(other, WeylOp):
            return NotImplemented
        out: dict[int, Poly] = {}
        for i, f in self.parts.items():
            for j, g in other.parts.items():
                deriv = g
                for r in range(i + 1):
                    if deriv.is_zero():
                        break
                    key = i - r + j
                    contrib = f * deriv * binomial(i, r)
                    out[key] = out.get(key, Poly.zero()) + contrib
                    deriv = deriv.derivative()
        return WeylOp(out)

    def left_divide_t_power(self, k: int) -> "WeylOp | None":
        """Factor self = T^k * rest if possible, else None."""
        if k == 0:
            return self
        out = {}
        for order, f in self.parts.items():
            if f.trailing_valuation() < k and not f.is_zero():
                return None
            out[order] = Poly(f.coeffs[k:])
        return WeylOp(out)

    # -- actions -------------------------------------------------------------

    def apply_series(self, x: TruncatedSeries) -> TruncatedSeries:
        """Left-module action on a truncated series, with exact bound tracking."""
        max_order = self.order()
        if max_order < 0:
            return TruncatedSeries.zero(x.bound, x.ring)
        acc = None
        deriv = x
        for k in range(max_order + 1):
            f = self.parts.get(k)
            if f is not None:
                term = deriv.mul_poly_in_t(f)
                acc = term if acc is None else acc + term
            if k < max_order:
                deriv = deriv.derivative()
        return acc

    def apply_element(self, x: BElement) -> BElement:
        """Action on symbolic elements; stays inside the generated subspace."""
        max_order = self.order()
        if max_order < 0:
            return BElement.zero()
        acc = BElement.zero()
        deriv = x
        for k in range(max_order + 1):
            f = self.parts.get(k)
            if f is not None:
                for d, c in enumerate(f.coeffs):
                    if c != 0:
                        acc = acc + deriv.mul_monomial(d).scale(c)
            if k < max_order:
                deriv = derivative_of_element(deriv)
        return acc

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        if not self.parts:
            return "0"
        chunks = []
        for k in sorted(self.parts):
            f = self.parts[k]
            if k == 0:
                chunks.append(format_poly(f, var="T"))
                continue
            dpart = "d" if k == 1 else f"d^{k}"
            if f == Poly.one():
                chunks.append(dpart)
            elif f == -Poly.one():
                chunks.append(f"-{dpart}")
            elif len([c for c in f.coeffs if c != 0]) == 1:
                chunks.append(f"{format_poly(f, var='T')}*{dpart}")
            else:
                chunks.append(f"({format_poly(f, var='T')})*{dpart}")
        text = chunks[0]
        for chunk in chunks[1:]:
            if chunk.startswith("-"):
                text += " - " + chunk[1:]
            else:
                text += " + " + chunk
        return text

    def __repr__(self) -> str:
        return f"<WeylOp {self.render()}>"


def derivative_of_atom(at: Atom) -> BElement:
    """d/dT of one generator, as an element.

    Uses the first-order derivative formula for B(bT)^n e^{aT} (which produces
    the n/T, -nb and -(n/T) B^(n+1) terms) together with the product rule for
    the T^m prefactor.
    """
    terms: dict[Atom, Fraction] = {}

    def put(m: int, n: int, b: Fraction, coeff: Fraction):
        if coeff == 0:
            return
        key = Atom(b=b if n else Fraction(1), n=n, m=m, a=at.a)
        terms[key] = terms.get(key, Fraction(0)) + coeff

    if at.m != 0:
        put(at.m - 1, at.n, at.b, Fraction(at.m))
    if at.a != 0:
        put(at.m, at.n, at.b, at.a)
    if at.n >= 1:
        n = Fraction(at.n)
        put(at.m - 1, at.n, at.b, n)
        put(at.m, at.n, at.b, -n * at.b)
        put(at.m - 1, at.n + 1, at.b, -n)
    return BElement(terms)


def derivative_of_element(x: BElement) -> BElement:
    acc = BElement.zero()
    for at, c in x.terms.items():
        acc = acc + derivative_of_atom(at).scale(c)
    return acc
