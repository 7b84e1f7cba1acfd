"""Symbolic linear combinations of the generators T^m * B(bT)^n * e^{aT}.

A :class:`BElement` is a finite Q-linear combination of :class:`Atom` terms.
Atoms are kept with a positive argument scale b; constructing one with b < 0
rewrites it through B(-T) = B(T) + T, so every stored atom is in the regime
the product-reduction algorithms expect.

Equality of elements is semantic, not structural: distinct atom combinations
can denote the same Laurent series (e.g. B*e^T and B + T).  The exact zero
test multiplies by enough factors of (e^{bT} - 1) to clear every B and then
checks the resulting exponential polynomial, whose vanishing is decidable
because distinct exponentials are linearly independent over Q(T).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .polys import binomial
from .series import (
    RING_Q,
    TruncatedSeries,
    bernoulli_power_series,
    exp_series,
)


@dataclass(frozen=True, order=True)
class Atom:
    """One generator T^m * B(bT)^n * e^{aT}.

    Ordering (b, n, m, a) is the deterministic rendering order.
    """

    b: Fraction
    n: int
    m: int
    a: Fraction

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("B-power must be nonnegative")
        if self.b <= 0:
            raise ValueError("stored atoms must have positive argument scale")
        if self.n == 0 and self.b != 1:
            raise ValueError("scale is meaningless for n = 0 atoms; use b = 1")

    def key(self) -> tuple:
        return (self.b, self.n, self.m, self.a)


def _make_atom(m: int, n: int, b, a) -> Atom:
    return Atom(b=Fraction(b), n=n, m=m, a=Fraction(a))


class BElement:
    """Finite Q-linear combination of atoms; the empty combination is zero."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Atom, Fraction] | None = None):
        cleaned: dict[Atom, Fraction] = {}
        if terms:
            for at, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    cleaned[at] = c
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("BElement is immutable")

    # -- vector-space structure ---------------------------------------------

    @staticmethod
    def zero() -> "BElement":
        return BElement()

    def is_structurally_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "BElement") -> "BElement":
        out = dict(self.terms)
        for at, c in other.terms.items():
            out[at] = out.get(at, Fraction(0)) + c
        return BElement(out)

    def __neg__(self) -> "BElement":
        return BElement({at: -c for at, c in self.terms.items()})

    def __sub__(self, other: "BElement") -> "BElement":
        return self + (-other)

    def scale(self, c) -> "BElement":
        c = Fraction(c)
        return BElement({at: c * v for at, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        """Structural equality (same atoms, same coefficients); use equals() for semantic."""
        if not isinstance(other, BElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def mul_monomial(self, k: int, a_shift=0) -> "BElement":
        """Multiply by T^k * e^{a_shift * T}: a pure shift of every atom."""
        a_shift = Fraction(a_shift)
        return BElement(
            {
                Atom(b=at.b, n=at.n, m=at.m + k, a=at.a + a_shift): c
                for at, c in self.terms.items()
            }
        )

    def atoms(self) -> Iterator[tuple[Atom, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda item: item[0].key()))

    # -- semantics -----------------------------------------------------------

    def expand(self, bound: int) -> TruncatedSeries:
        """The Laurent series of this element, exact to the given bound."""
        acc = TruncatedSeries.zero(bound)
        for at, c in self.terms.items():
            acc = acc + _atom_series(at, bound).scale(c)
        return acc

    def to_exp_poly(self) -> tuple["ExpPoly", str]:
        """Clear all B-factors and return the resulting exponential polynomial.

        Multiplies by D = prod over distinct scales b of (e^{bT}-1)^{M_b} with
        M_b the largest B-power at that scale; returns (expansion of self*D,
        human-readable description of D).  D is a unit multiple of a monomial
        in the Laurent field, so self == 0 iff the expansion is empty.
        """
        max_power: dict[Fraction, int] = {}
        for at in self.terms:
            if at.n >= 1:
                max_power[at.b] = max(max_power.get(at.b, 0), at.n)
        epoly: dict[Fraction, dict[int, Fraction]] = {}
        for at, c in self.terms.items():
            # B(bT)^n * (e^{bT}-1)^n = (bT)^n; leftover factors expand binomially
            tpow = at.m + at.n
            base: dict[Fraction, Fraction] = {at.a: c * at.b**at.n}
            for scale, mult in max_power.items():
                k = mult - at.n if (at.n >= 1 and scale == at.b) else mult
                if k == 0:
                    continue
                grown: dict[Fraction, Fraction] = {}
                for r in range(k + 1):
                    w = binomial(k, r) * (-1) ** (k - r)
                    for shift, coeff in base.items():
                        key = shift + r * scale
                        grown[key] = grown.get(key, Fraction(0)) + w * coeff
                base = grown
            for shift, coeff in base.items():
                if coeff == 0:
                    continue
                row = epoly.setdefault(shift, {})
                row[tpow] = row.get(tpow, Fraction(0)) + coeff
        desc = " * ".join(
            f"(e^{{{scale}T}}-1)^{mult}" for scale, mult in sorted(max_power.items())
        )
        return ExpPoly.from_terms(epoly), (desc or "1")

    def is_zero(self) -> bool:
        """Exact zero test (sound and complete on the whole space)."""
        if not self.terms:
            return True
        epoly, _ = self.to_exp_poly()
        return epoly.is_zero()

    def equals(self, other: "BElement") -> bool:
        """Semantic equality: the two elements denote the same Laurent series."""
        return (self - other).is_zero()

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for at, c in self.atoms():
            body = _render_atom(at)
            mag = abs(c)
            if body == "1":
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not chunks:
                chunks.append(text if c > 0 else f"-{text}")
            else:
                chunks.append(("+ " if c > 0 else "- ") + text)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"<BElement {self.render()}>"


def _render_scalar_times_t(value: Fraction) -> str:
    return "T" if value == 1 else f"{value}T" if value > 0 else f"-{abs(value)}T"


def _render_atom(at: Atom) -> str:
    factors = []
    if at.m == 1:
        factors.append("T")
    elif at.m != 0:
        factors.append(f"T^{at.m}")
    if at.n >= 1:
        b_part = "B" if at.b == 1 else f"B({_render_scalar_times_t(at.b)})"
        factors.append(b_part if at.n == 1 else f"{b_part}^{at.n}")
    if at.a != 0:
        factors.append(f"e^{{{_render_scalar_times_t(at.a)}}}")
    return "*".join(factors) if factors else "1"


class ExpPoly:
    """Exponential polynomial sum_c p_c(T) e^{cT} with Laurent-monomial support.

    Zero iff no terms survive pruning: distinct exponentials are linearly
    independent over the field of rational functions in T.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Fraction, dict[int, Fraction]]):
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    @staticmethod
    def from_terms(raw: dict[Fraction, dict[int, Fraction]]) -> "ExpPoly":
        cleaned = {}
        for shift, row in raw.items():
            pruned = {e: c for e, c in row.items() if c != 0}
            if pruned:
                cleaned[shift] = pruned
        return ExpPoly(cleaned)

    def is_zero(self) -> bool:
        return not self.terms

    def exponents(self) -> list[Fraction]:
        return sorted(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "<ExpPoly 0>"
        bits = []
        for shift in self.exponents():
            row = self.terms[shift]
            poly = " + ".join(f"{c}*T^{e}" for e, c in sorted(row.items()))
            bits.append(f"({poly})*e^{{{shift}T}}")
        return "<ExpPoly " + " + ".join(bits) + ">"


# -- construction ------------------------------------------------------------


def atom(m: int, n: int, b, a=0) -> BElement:
    """Element for T^m * B(bT)^n * e^{aT}, normalizing negative scales away.

    For b < 0 the identity B(-T) = B(T) + T turns B(bT)^n into the binomial
    expansion of (B(|b|T) + |b|T)^n, so the result may have several atoms.
    """
    b = Fraction(b)
    a = Fraction(a)
    if b == 0:
        raise ValueError("argument scale b must be nonzero")
    if n == 0:
        return BElement({_make_atom(m, 0, 1, a): Fraction(1)})
    if b > 0:
        return BElement({_make_atom(m, n, b, a): Fraction(1)})
    mag = -b
    terms: dict[Atom, Fraction] = {}
    for j in range(n + 1):
        at = _make_atom(m + n - j, j, mag if j else Fraction(1), a)
        terms[at] = terms.get(at, Fraction(0)) + binomial(n, j) * mag ** (n - j)
    return BElement(terms)


def from_scalar(c) -> BElement:
    return BElement({_make_atom(0, 0, 1, 0): Fraction(c)})


def b_element() -> BElement:
    """The series B itself as an element."""
    return atom(0, 1, 1)


def t_element(power: int = 1) -> BElement:
    return atom(power, 0, 1)


# -- series cache ------------------------------------------------------------

_SCALED_POWER_CACHE: dict[tuple[Fraction, int], TruncatedSeries] = {}
_EXP_CACHE: dict[Fraction, TruncatedSeries] = {}


def _scaled_power(b: Fraction, n: int, bound: int) -> TruncatedSeries:
    cached = _SCALED_POWER_CACHE.get((b, n))
    if cached is None or cached.bound < bound:
        work = max(bound, 32)
        cached = bernoulli_power_series(n, work).scale_arg(b)
        _SCALED_POWER_CACHE[(b, n)] = cached
    return cached.truncate(bound)


def _exp_cached(a: Fraction, bound: int) -> TruncatedSeries:
    cached = _EXP_CACHE.get(a)
    if cached is None or cached.bound < bound:
        work = max(bound, 32)
        cached = exp_series(a, work)
        _EXP_CACHE[a] = cached
    return cached.truncate(bound)


def _atom_series(at: Atom, bound: int) -> TruncatedSeries:
    work = bound - at.m
    ser = _scaled_power(at.b, at.n, work) if at.n >= 1 else TruncatedSeries.one(work)
    if at.a != 0:
        ser = ser * _exp_cached(at.a, work)
    return ser.shift(at.m)
