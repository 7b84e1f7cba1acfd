"""Derivation and exact verification of Bernoulli-number/polynomial identities.

Each ``verify_*`` function checks one named identity at given parameters with
exact rational arithmetic and returns an :class:`IdentityReport`; a report is
``verified`` iff both sides are equal as rationals (or coefficient-wise for the
series-shaped identities, whose report values collapse to a fingerprint pair
that provably differs when verification fails).

``coefficient_identity`` is the derivation half: it equates the coefficient of
a chosen power of T on an element (or a formal product of elements) against a
first-order operator combination, emitting both sides as sums of symbolic
Bernoulli values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .elements import Atom, BElement
from .polys import Poly, binomial, factorial
from .reduction import (
    DCombination,
    derivative_power_element,
    f_n_closed,
    negative_power_expand,
    product_reduce,
    stirling,
)
from .series import (
    RING_QS,
    TruncatedSeries,
    bernoulli_number,
    bernoulli_number_order,
    bernoulli_poly_value,
    bernoulli_series,
    default_bound,
    exp_series,
    harmonic,
)
from .weyl import WeylOp


# -- symbolic identities -------------------------------------------------------


@dataclass(frozen=True)
class BernSymbol:
    """Symbolic value scale^index * B^(order)_index(argument)."""

    order: int
    index: int
    argument: Fraction
    scale: Fraction

    def value(self) -> Fraction:
        return self.scale**self.index * bernoulli_poly_value(self.order, self.index, self.argument)

    def render(self) -> str:
        sup = f"^({self.order})" if self.order != 1 else ""
        arg = f"({self.argument})" if self.argument != 0 else ""
        pre = f"{self.scale}^{self.index}*" if self.scale != 1 else ""
        return f"{pre}B{sup}_{self.index}{arg}"

    def sort_key(self):
        return (self.order, self.index, self.argument, self.scale)


@dataclass(frozen=True)
class IdentityTerm:
    coeff: Fraction
    factors: tuple[BernSymbol, ...]

    def value(self) -> Fraction:
        v = self.coeff
        for s in self.factors:
            v *= s.value()
        return v


@dataclass(frozen=True)
class CoefficientIdentity:
    """An exact identity between two sums of Bernoulli-symbol products."""

    lhs: tuple[IdentityTerm, ...]
    rhs: tuple[IdentityTerm, ...]
    order: int
    provenance: str

    def lhs_value(self) -> Fraction:
        return sum((t.value() for t in self.lhs), Fraction(0))

    def rhs_value(self) -> Fraction:
        return sum((t.value() for t in self.rhs), Fraction(0))


def _combine_terms(raw: Iterable[tuple[Fraction, tuple[BernSymbol, ...]]]) -> tuple[IdentityTerm, ...]:
    merged: dict[tuple, tuple[Fraction, tuple[BernSymbol, ...]]] = {}
    for coeff, factors in raw:
        factors = tuple(sorted(factors, key=lambda s: s.sort_key()))
        key = factors
        if key in merged:
            merged[key] = (merged[key][0] + coeff, factors)
        else:
            merged[key] = (coeff, factors)
    out = [
        IdentityTerm(coeff=c, factors=f)
        for c, f in merged.values()
        if c != 0
    ]
    out.sort(key=lambda t: tuple(s.sort_key() for s in t.factors))
    return tuple(out)


def _compositions(total: int, parts: int):
    """All tuples of nonnegative integers of the given length summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _lhs_terms_for_product(atoms: Sequence[tuple[Atom, Fraction]], m: int):
    """Symbolic coefficient of T^m (times m!) of a product of atoms."""
    coeff = Fraction(1)
    shift = 0
    exp_total = Fraction(0)
    b_scales: list[Fraction] = []
    for at, c in atoms:
        coeff *= c
        shift += at.m
        exp_total += at.a
        b_scales.extend([at.b] * at.n)
    rem = m - shift
    if rem < 0:
        return
    slots = len(b_scales) + (1 if exp_total != 0 else 0)
    for combo in _compositions(rem, slots):
        term_coeff = coeff * factorial(m)
        factors = []
        for idx, scale in zip(combo, b_scales):
            term_coeff /= factorial(idx)
            factors.append(BernSymbol(order=1, index=idx, argument=Fraction(0), scale=scale))
        if exp_total != 0:
            i_e = combo[-1]
            term_coeff /= factorial(i_e)
            factors.append(BernSymbol(order=0, index=i_e, argument=exp_total, scale=Fraction(1)))
        yield term_coeff, tuple(factors)


def _rhs_terms_for_combination(dc: DCombination, m: int):
    """Symbolic coefficient of T^m (times m!) of a first-order combination."""
    for gen, op in dc.entries.items():
        eff = m - gen.m
        for k, f in op.parts.items():
            for d, fd in enumerate(f.coeffs):
                if fd == 0:
                    continue
                idx = eff - d + k
                if idx < 0 or eff - d < 0:
                    continue
                coeff = factorial(m) * fd / factorial(eff - d)
                sym = BernSymbol(
                    order=gen.n,
                    index=idx,
                    argument=gen.a / gen.b if gen.n else gen.a,
                    scale=gen.b,
                )
                yield coeff, (sym,)


def coefficient_identity(
    lhs: BElement | Sequence[BElement],
    rhs: DCombination,
    m: int,
    provenance: str = "",
) -> CoefficientIdentity:
    """Equate the coefficient of T^m across an element product and a combination.

    Both sides are normalized by m!, so order-one products come out in the
    familiar binomial-convolution shape.  The two inputs must denote the same
    series; symbolic sides are additionally evaluated and compared exactly.
    """
    factors = [lhs] if isinstance(lhs, BElement) else list(lhs)
    product = factors[0]
    for extra in factors[1:]:
        product = product_reduce(product, extra)
    if not product.equals(rhs.semantic_element()):
        raise ValueError("left and right sides are not semantically equal")
    raw_lhs = []
    for chosen in itertools.product(*(f.atoms() for f in factors)):
        raw_lhs.extend(_lhs_terms_for_product(chosen, m))
    lhs_terms = _combine_terms(raw_lhs)
    rhs_terms = _combine_terms(_rhs_terms_for_combination(rhs, m))
    ident = CoefficientIdentity(lhs=lhs_terms, rhs=rhs_terms, order=m, provenance=provenance)
    if ident.lhs_value() != ident.rhs_value():
        raise ValueError("internal error: emitted identity does not evaluate equal")
    return ident


# -- verification reports -------------------------------------------------------


def _latex_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


@dataclass(frozen=True)
class IdentityReport:
    """Exact verification record for one identity instance."""

    name: str
    params: tuple[tuple[str, Fraction], ...]
    lhs_value: Fraction
    rhs_value: Fraction
    verified: bool
    degenerate: bool = False
    machine: CoefficientIdentity | None = field(default=None, compare=False)

    @property
    def latex(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params)
        rel = "=" if self.verified else "\\neq"
        return (
            f"\\mathrm{{{self.name}}}({args}):\\ "
            f"{_latex_rational(self.lhs_value)} {rel} {_latex_rational(self.rhs_value)}"
        )

    def to_json_dict(self) -> dict:
        out = {
            "name": self.name,
            "params": [{"name": k, "value": str(v)} for k, v in self.params],
            "lhs": str(self.lhs_value),
            "rhs": str(self.rhs_value),
            "verified": self.verified,
            "latex": self.latex,
        }
        if self.degenerate:
            out["degenerate"] = True
        return out


def _report(name, params, lhs, rhs, degenerate=False, machine=None) -> IdentityReport:
    return IdentityReport(
        name=name,
        params=tuple((k, Fraction(v)) for k, v in params),
        lhs_value=lhs,
        rhs_value=rhs,
        verified=(lhs == rhs),
        degenerate=degenerate,
        machine=machine,
    )


def verify_euler(m: int) -> IdentityReport:
    """sum_{i=1}^{m-1} C(2m,2i) B_2i B_{2m-2i} = -(2m+1) B_2m for m >= 2."""
    if m < 2:
        raise ValueError("Euler identity requires m >= 2")
    lhs = sum(
        (binomial(2 * m, 2 * i) * bernoulli_number(2 * i) * bernoulli_number(2 * m - 2 * i)
         for i in range(1, m)),
        Fraction(0),
    )
    rhs = -(2 * m + 1) * bernoulli_number(2 * m)
    return _report("euler", [("m", m)], lhs, rhs)


def verify_recurrence(n: int) -> IdentityReport:
    """sum C(n,i) B_i = (-1)^n B_n; equal to B_n itself once n >= 2."""
    total = sum((binomial(n, i) * bernoulli_number(i) for i in range(n + 1)), Fraction(0))
    signed = Fraction((-1) ** n) * bernoulli_number(n)
    ok_plain = total == bernoulli_number(n) if n >= 2 else True
    report = _report("recurrence", [("n", n)], total, signed)
    if not ok_plain:
        return IdentityReport(
            name=report.name, params=report.params,
            lhs_value=total, rhs_value=bernoulli_number(n), verified=False,
        )
    return report


def verify_multiplication(m: int, n: int, a) -> IdentityReport:
    """sum_{i<n} B_m(a + i/n) = n^(1-m) B_m(n a)."""
    if n < 1:
        raise ValueError("multiplication theorem requires n >= 1")
    a = Fraction(a)
    lhs = sum(
        (bernoulli_poly_value(1, m, a + Fraction(i, n)) for i in range(n)), Fraction(0)
    )
    rhs = Fraction(n) ** (1 - m) * bernoulli_poly_value(1, m, n * a)
    return _report("multiplication", [("m", m), ("n", n), ("a", a)], lhs, rhs)


def verify_lowering(n: int, i: int, a) -> IdentityReport:
    """B^(n+1)_i(a) = (1 - i/n) B^(n)_i(a) + (a - n)(i/n) B^(n)_{i-1}(a)."""
    if n < 1 or i < 1:
        raise ValueError("order lowering requires n >= 1 and i >= 1")
    a = Fraction(a)
    lhs = bernoulli_poly_value(n + 1, i, a)
    rhs = (1 - Fraction(i, n)) * bernoulli_poly_value(n, i, a) + (a - n) * Fraction(
        i, n
    ) * bernoulli_poly_value(n, i - 1, a)
    return _report("lowering", [("n", n), ("i", i), ("a", a)], lhs, rhs)


def verify_euler_polynomial(n: int, a, b) -> IdentityReport:
    """sum C(n,i) B_i(a) B_{n-i}(b) = (1-n) B_n(a+b) + n(a+b-1) B_{n-1}(a+b)."""
    if n < 1:
        raise ValueError("polynomial form requires n >= 1")
    a, b = Fraction(a), Fraction(b)
    lhs = sum(
        (
            binomial(n, i) * bernoulli_poly_value(1, i, a) * bernoulli_poly_value(1, n - i, b)
            for i in range(n + 1)
        ),
        Fraction(0),
    )
    s = a + b
    rhs = (1 - n) * bernoulli_poly_value(1, n, s) + n * (s - 1) * bernoulli_poly_value(1, n - 1, s)
    return _report("euler-polynomial", [("n", n), ("a", a), ("b", b)], lhs, rhs)


def verify_agoh_dilcher_example(n: int) -> IdentityReport:
    """sum C(n,i) B_{1+i} B_{1+n-i} = (n-1)/6 B_n - B_{n+1} - (n+3)/6 B_{n+2}."""
    lhs = sum(
        (binomial(n, i) * bernoulli_number(1 + i) * bernoulli_number(1 + n - i)
         for i in range(n + 1)),
        Fraction(0),
    )
    rhs = (
        Fraction(n - 1, 6) * bernoulli_number(n)
        - bernoulli_number(n + 1)
        - Fraction(n + 3, 6) * bernoulli_number(n + 2)
    )
    return _report("agoh-dilcher", [("n", n)], lhs, rhs)


def verify_rademacher(n: int) -> IdentityReport:
    """The weighted convolution of B_{2i}/2i equaling -(2n+1)(n-3)/(6n) B_2n.

    n = 3 is the degenerate instance: the sum is empty and the right side
    carries the factor n - 3 = 0.
    """
    if n < 3:
        raise ValueError("identity stated for n >= 4 (n = 3 degenerates to 0 = 0)")
    lhs = Fraction(0)
    for i in range(2, n - 1):
        w = factorial(2 * n - 2) / (factorial(2 * i - 2) * factorial(2 * n - 2 * i - 2))
        lhs += w * bernoulli_number(2 * i) / (2 * i) * bernoulli_number(2 * n - 2 * i) / (2 * n - 2 * i)
    rhs = -Fraction((2 * n + 1) * (n - 3), 6 * n) * bernoulli_number(2 * n)
    return _report("rademacher", [("n", n)], lhs, rhs, degenerate=(n == 3))


def verify_23(n: int) -> IdentityReport:
    """sum 3^i 2^(n-i) C(n,i) B_i B_{n-i} against the scaled-argument right side."""
    if n < 1:
        raise ValueError("requires n >= 1")
    lhs = sum(
        (
            Fraction(3) ** i * Fraction(2) ** (n - i) * binomial(n, i)
            * bernoulli_number(i) * bernoulli_number(n - i)
            for i in range(n + 1)
        ),
        Fraction(0),
    )
    p3 = 2 * n * Fraction(3) ** (n - 2)
    p2 = 3 * n * Fraction(2) ** (n - 2)
    rhs = (
        p3 * bernoulli_poly_value(1, n - 1, Fraction(1, 3))
        - (p3 + p2 + n) * bernoulli_number(n - 1)
        + (1 - n) * bernoulli_number(n)
    )
    return _report("product-23", [("n", n)], lhs, rhs)


def verify_23_even(n: int) -> IdentityReport:
    """The even-index restriction of the 2,3-product identity (n >= 2)."""
    if n < 2:
        raise ValueError("even form stated for n >= 2")
    lhs = sum(
        (
            Fraction(3) ** (2 * i) * Fraction(2) ** (2 * n - 2 * i) * binomial(2 * n, 2 * i)
            * bernoulli_number(2 * i) * bernoulli_number(2 * n - 2 * i)
            for i in range(n + 1)
        ),
        Fraction(0),
    )
    rhs = 4 * n * Fraction(3) ** (2 * n - 2) * bernoulli_poly_value(
        1, 2 * n - 1, Fraction(1, 3)
    ) + (1 - 2 * n) * bernoulli_number(2 * n)
    return _report("product-23-even", [("n", n)], lhs, rhs)


def verify_235(n: int) -> IdentityReport:
    """The multinomial identity from the 2*3*5 product reduction (n >= 2)."""
    if n < 2:
        raise ValueError("requires n >= 2")
    lhs = Fraction(0)
    for i in range(n + 1):
        for j in range(n - i + 1):
            k = n - i - j
            w = factorial(n) / (factorial(i) * factorial(j) * factorial(k))
            lhs += (
                w
                * Fraction(2) ** i * Fraction(3) ** j * Fraction(5) ** k
                * bernoulli_number(i) * bernoulli_number(j) * bernoulli_number(k)
            )
    nn = Fraction(n)
    rhs = (
        Fraction(1, 2) * (nn - 1) * (nn - 2) * bernoulli_number(n)
        + 5 * nn * (nn - 2) * bernoulli_number(n - 1)
        + (
            Fraction(9, 2)
            + Fraction(15, 4) * Fraction(2) ** (n - 2)
            + Fraction(18, 5) * Fraction(5) ** (n - 2)
        )
        * nn * (nn - 1) * bernoulli_number(n - 2)
        - Fraction(10, 3) * nn * (nn - 1) * Fraction(3) ** (n - 2)
        * bernoulli_poly_value(1, n - 2, Fraction(1, 3))
        + Fraction(6, 5) * nn * (nn - 1) * Fraction(5) ** (n - 2)
        * (
            bernoulli_poly_value(1, n - 2, Fraction(2, 5))
            + bernoulli_poly_value(1, n - 2, Fraction(3, 5))
        )
    )
    return _report("product-235", [("n", n)], lhs, rhs)


def verify_miki(n: int) -> IdentityReport:
    """Miki's identity for n >= 4 (odd n degenerates to 0 = 0)."""
    if n < 4:
        raise ValueError("Miki's identity requires n >= 4")
    lhs = sum(
        (
            bernoulli_number(i) / i * bernoulli_number(n - i) / (n - i)
            for i in range(2, n - 1)
        ),
        Fraction(0),
    )
    rhs = Fraction(2, n) * harmonic(n) * bernoulli_number(n) + sum(
        (
            binomial(n, k) * bernoulli_number(k) / k * bernoulli_number(n - k) / (n - k)
            for k in range(2, n - 1)
        ),
        Fraction(0),
    )
    return _report("miki", [("n", n)], lhs, rhs, degenerate=(n % 2 == 1))


# -- series-shaped identities ----------------------------------------------------


def _poly_s() -> Poly:
    return Poly.X()


def _witness_values(lhs_items, rhs_items) -> tuple[Fraction, Fraction, bool]:
    """Collapse two coefficient lists to a fingerprint pair.

    Equal lists produce equal values; differing lists produce provably
    different values (the first differing coefficients, evaluated at a point
    separating them when they are polynomials).
    """
    verified = lhs_items == rhs_items
    if verified:
        total = Fraction(0)
        for c in lhs_items:
            total += c(Fraction(1)) if isinstance(c, Poly) else c
        return total, total, True
    for left, right in zip(lhs_items, rhs_items):
        if left == right:
            continue
        if isinstance(left, Poly) or isinstance(right, Poly):
            lp = left if isinstance(left, Poly) else Poly.const(left)
            rp = right if isinstance(right, Poly) else Poly.const(right)
            point = 0
            while lp(point) == rp(point):
                point += 1
            return lp(Fraction(point)), rp(Fraction(point)), False
        return left, right, False
    raise AssertionError("lists compared unequal but no differing entry found")


def verify_miki_s_relation(order: int) -> IdentityReport:
    """The parameterized product relation, checked with polynomial coefficients.

    B(sT) B((1-s)T) = (1-s)(B(sT) + sT/2) B + s(B((1-s)T) + (1-s)T/2) B,
    as an identity of series whose coefficients are exact polynomials in s.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    s = _poly_s()
    one_minus_s = Poly.one() - s
    base = bernoulli_series(order).to_poly_coeffs()
    b_s = base.scale_arg(s)
    b_1ms = base.scale_arg(one_minus_s)
    t_ser = TruncatedSeries.monomial(1, 1, order, RING_QS)
    lhs = b_s * b_1ms
    rhs = ((b_s + t_ser.scale(s / 2)) * base).scale(one_minus_s) + (
        (b_1ms + t_ser.scale(one_minus_s / 2)) * base
    ).scale(s)
    bound = min(lhs.bound, rhs.bound)
    lhs_list = [lhs.coeff(i) for i in range(bound + 1)]
    rhs_list = [rhs.coeff(i) for i in range(bound + 1)]
    lv, rv, ok = _witness_values(lhs_list, rhs_list)
    return IdentityReport(
        name="miki-s-relation", params=(("N", Fraction(order)),),
        lhs_value=lv, rhs_value=rv, verified=ok,
    )


def miki_s_coefficient_sides(n: int) -> tuple[Poly, Poly]:
    """Both sides of the T^n coefficient identity of the s-relation, in Q[s]."""
    s = _poly_s()
    one_minus_s = Poly.one() - s
    lhs = Poly.zero()
    for i in range(1, n):
        j = n - i
        coeff = bernoulli_number(i) / factorial(i) * bernoulli_number(j) / factorial(j)
        lhs = lhs + s**i * one_minus_s**j * coeff
    rhs = Poly.zero()
    for k in range(1, n // 2 + 1):
        ell = n - 2 * k
        weight = one_minus_s * s ** (2 * k) + s * one_minus_s ** (2 * k)
        rhs = rhs + weight * (
            bernoulli_number(ell) / factorial(ell) * bernoulli_number(2 * k) / factorial(2 * k)
        )
    rhs = rhs + (Poly.one() - s**n - one_minus_s**n) * (bernoulli_number(n) / factorial(n))
    return lhs, rhs


def beta_integral(i: int, j: int) -> Fraction:
    """The exact Beta value: integral of s^i (1-s)^j / (s(1-s)) over [0, 1]."""
    if i < 1 or j < 1:
        raise ValueError("both exponents must be at least 1")
    return factorial(i - 1) * factorial(j - 1) / factorial(i + j - 1)


def beta_integral_by_quadrature(i: int, j: int) -> Fraction:
    """Same value by exact polynomial integration (the independent route)."""
    if i < 1 or j < 1:
        raise ValueError("both exponents must be at least 1")
    s = _poly_s()
    integrand = s ** (i - 1) * (Poly.one() - s) ** (j - 1)
    return integrand.integral()(1)


def harmonic_integral(n: int) -> Fraction:
    """integral of (1 - s^n - (1-s)^n)/(s(1-s)) over [0, 1], equal to 2 H_{n-1}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    s = _poly_s()
    numerator = Poly.one() - s**n - (Poly.one() - s) ** n
    integrand = numerator.exact_div(s * (Poly.one() - s)) if not numerator.is_zero() else Poly.zero()
    return integrand.integral()(1)


def kaneko_operator(k: int) -> WeylOp:
    """(k+1) d^k + T d^(k+1): the normal form of d^(k+1) composed with (T *)."""
    return WeylOp({k: Poly.const(k + 1), k + 1: Poly.monomial(1)})


def verify_kaneko(k: int) -> IdentityReport:
    """Both routes to the vanishing sum sum C(k+1,j) (k+j+1) B_{k+j} = 0.

    The direct route evaluates the sum; the operator route reads the
    coefficient of T^(k+1) in e^T applied after the Kaneko operator on B.
    Verification requires both to be zero (they are equal by construction).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    direct = sum(
        (binomial(k + 1, j) * (k + j + 1) * bernoulli_number(k + j) for j in range(k + 2)),
        Fraction(0),
    )
    bound = default_bound(k + 1)
    acted = kaneko_operator(k).apply_series(bernoulli_series(bound))
    coeff = (exp_series(1, bound) * acted).coeff(k + 1)
    operator_route = factorial(k + 1) * coeff
    return IdentityReport(
        name="kaneko", params=(("k", Fraction(k)),),
        lhs_value=direct, rhs_value=operator_route,
        verified=(direct == 0 and operator_route == 0),
    )


def verify_stirling_gf(n: int, k: int) -> IdentityReport:
    """S(n,k)/n! equals the T^n coefficient of (T^k/k!) B^-k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lhs = Fraction(stirling(n, k)) / factorial(n)
    gf = negative_power_expand(k).mul_monomial(k).scale(1 / factorial(k))
    rhs = gf.expand(n).coeff(n)
    return _report("stirling-gf", [("n", n), ("k", k)], lhs, rhs)


def verify_f_derivative(n: int, order: int = 30) -> IdentityReport:
    """d^n B/dT^n = T^-n f_n(T, B), compared as series to the given order."""
    direct = bernoulli_series(order + n)
    for _ in range(n):
        direct = direct.derivative()
    via_f = derivative_power_element(n).expand(order)
    lo = min(direct.low, via_f.low, -n)
    lhs_list = [direct.coeff(i) for i in range(lo, order + 1)]
    rhs_list = [via_f.coeff(i) for i in range(lo, order + 1)]
    lv, rv, ok = _witness_values(lhs_list, rhs_list)
    return IdentityReport(
        name="f-derivative", params=(("n", Fraction(n)),),
        lhs_value=lv, rhs_value=rv, verified=ok,
    )


def rademacher_operator(n: int) -> WeylOp:
    """The combined operator with T^2 (B')^2 - (2n-1) B^2 = op(B)."""
    squared = WeylOp(
        {
            3: Poly.monomial(3, Fraction(-1, 6)),
            2: Poly.monomial(2, Fraction(-1, 2)),
            1: Poly.monomial(3, Fraction(1, 6)) - Poly.monomial(2),
            0: Poly.monomial(2, Fraction(-1, 6)),
        }
    )
    lowering = WeylOp({0: Poly([1, -1]), 1: Poly.monomial(1, -1)})
    return squared - lowering.scale(2 * n - 1)


# -- registry ---------------------------------------------------------------------

#: identity name -> (callable, parameter names); used by the CLI front end.
IDENTITY_REGISTRY = {
    "euler": (verify_euler, ("m",)),
    "recurrence": (verify_recurrence, ("n",)),
    "multiplication": (verify_multiplication, ("m", "n", "a")),
    "lowering": (verify_lowering, ("n", "i", "a")),
    "euler-polynomial": (verify_euler_polynomial, ("n", "a", "b")),
    "agoh-dilcher": (verify_agoh_dilcher_example, ("n",)),
    "rademacher": (verify_rademacher, ("n",)),
    "product-23": (verify_23, ("n",)),
    "product-23-even": (verify_23_even, ("n",)),
    "product-235": (verify_235, ("n",)),
    "miki": (verify_miki, ("n",)),
    "miki-s-relation": (verify_miki_s_relation, ("N",)),
    "kaneko": (verify_kaneko, ("k",)),
    "stirling-gf": (verify_stirling_gf, ("n", "k")),
    "f-derivative": (verify_f_derivative, ("n",)),
}
