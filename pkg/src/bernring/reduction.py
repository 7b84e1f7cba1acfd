"""Rewriting algorithms on B-elements.

* ``lower_order`` / ``reduce_to_first_order``: express higher B-powers through
  first-order generators with Weyl operators in front (order lowering).
* ``product_reduce``: the exact ring product of two elements, written again as
  an element.  Distinct argument scales are rescaled to a least common
  denominator and then eliminated pairwise through the two partial-fraction
  identities (divisor scales first, then general pairs through the gcd scale);
  a strictly decreasing measure is asserted at every rewrite.
* ``negative_power_expand``: B^-k as a combination of pure T/exponential atoms,
  which also encodes the Stirling-number generating function.
* ``f_n_closed`` / ``f_n_inductive``: the integer polynomials f_n(U, V) with
  T^-n f_n(T, B) = n-th derivative of B, by closed Stirling form and by the
  first-order recursion; the two must agree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping

from .elements import Atom, BElement
from .partfrac import g_pair, h_f
from .polys import BiPoly, Poly, binomial, factorial
from .weyl import WeylOp


class ReductionError(Exception):
    """A rewriting step violated its invariants."""


# -- Stirling numbers of the second kind -------------------------------------

_STIRLING_ROWS: list[list[int]] = [[1]]


def stirling(n: int, j: int) -> int:
    """S(n, j) by the triangular recurrence S(n+1,j) = S(n,j-1) + j*S(n,j).

    The table grows on demand; rows are appended whole, so concurrent readers
    see either the old or the new table, never a partial row.
    """
    if n < 0 or j < 0:
        return 0
    while len(_STIRLING_ROWS) <= n:
        prev = _STIRLING_ROWS[-1]
        top = len(prev) - 1
        row = [0] * (top + 2)
        for jj in range(top + 2):
            left = prev[jj - 1] if 1 <= jj <= top + 1 else 0
            right = jj * prev[jj] if jj <= top else 0
            row[jj] = left + right
        _STIRLING_ROWS.append(row)
    row = _STIRLING_ROWS[n]
    return row[j] if j < len(row) else 0


# -- order lowering -----------------------------------------------------------


def lowering_op(n: int, b: Fraction, a: Fraction) -> WeylOp:
    """The operator carrying B^n(bT)e^{aT} to B^(n+1)(bT)e^{aT}: 1 - bT + aT/n - (T/n)d."""
    if n < 1:
        raise ValueError("lowering operator defined for source order >= 1")
    return WeylOp(
        {
            0: Poly([Fraction(1), Fraction(a, n) - Fraction(b)]),
            1: Poly([Fraction(0), Fraction(-1, n)]),
        }
    )


def lower_order(at: Atom) -> BElement:
    """Apply the lowering operator for an atom with B-power n >= 2.

    Computes (1 - bT + aT/(n-1) - (T/(n-1)) d) applied to the power-(n-1)
    base element.  Note that at the element level this application is a fixed
    point: the derivative of B^(n-1) contributes a B^n term that cancels the
    rest, so the returned element is the input atom again (the identity is
    circular once the derivative is evaluated).  Genuine order lowering keeps
    the operator unapplied; see :func:`reduce_to_first_order`, which chains
    the same operators symbolically.
    """
    if at.n < 2:
        raise ValueError("lower_order needs B-power at least 2")
    op = lowering_op(at.n - 1, at.b, at.a)
    base = BElement({Atom(b=at.b, n=at.n - 1, m=0, a=at.a): Fraction(1)})
    return op.apply_element(base).mul_monomial(at.m)


def _lowering_chain(n: int, b: Fraction, a: Fraction) -> WeylOp:
    """Product of lowering operators carrying B(bT)e^{aT} all the way to B^n(bT)e^{aT}."""
    chain = WeylOp.identity()
    for j in range(n - 1, 0, -1):
        chain = chain * lowering_op(j, b, a)
    return chain


class DCombination:
    """D-linear combination over first-order generators.

    Keys are atoms with n in {0, 1}; the value of an entry (gen -> op) is
    T^gen.m * op(B^gen.n(gen.b T) e^{gen.a T}).  Generators carry m = 0
    whenever the T-powers can be absorbed into the operator; a negative m
    survives only when the combination genuinely needs a T-pole in front.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[Atom, WeylOp] | None = None):
        cleaned: dict[Atom, WeylOp] = {}
        if entries:
            for gen, op in entries.items():
                if gen.n not in (0, 1):
                    raise ValueError("generators must have B-power 0 or 1")
                if not op.is_zero():
                    cleaned[gen] = op
        object.__setattr__(self, "entries", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("DCombination is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, DCombination):
            return NotImplemented
        return self.entries == other.entries

    def op_for(self, n: int, b, a, m: int = 0) -> WeylOp:
        gen = Atom(b=Fraction(b) if n else Fraction(1), n=n, m=m, a=Fraction(a))
        return self.entries.get(gen, WeylOp.zero())

    def semantic_element(self) -> BElement:
        acc = BElement.zero()
        for gen, op in self.entries.items():
            base = BElement({Atom(b=gen.b, n=gen.n, m=0, a=gen.a): Fraction(1)})
            acc = acc + op.apply_element(base).mul_monomial(gen.m)
        return acc

    def expand(self, bound: int):
        return self.semantic_element().expand(bound)

    def equals(self, other: "DCombination") -> bool:
        return self.semantic_element().equals(other.semantic_element())

    def render(self) -> str:
        if not self.entries:
            return "0"
        from .elements import _render_atom

        lines = []
        for gen in sorted(self.entries, key=lambda g: g.key()):
            lines.append(f"[{self.entries[gen].render()}] ({_render_atom(gen)})")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"<DCombination of {len(self.entries)} generators>"


def reduce_to_first_order(x: BElement) -> DCombination:
    """Rewrite an element as Weyl operators applied to first-order generators.

    All B-powers are lowered through the chain of lowering operators;
    coefficients and nonnegative T-powers fold into the operators.  Groups
    whose atoms carried negative T-powers are re-divided by the common pole:
    if every operator coefficient is divisible the pole disappears, otherwise
    it remains on the generator (it cannot live inside a polynomial-coefficient
    operator).
    """
    buckets: dict[tuple[int, Fraction, Fraction], dict[int, WeylOp]] = {}
    for at, c in x.terms.items():
        chain = _lowering_chain(at.n, at.b, at.a) if at.n >= 1 else WeylOp.identity()
        gen_n = 1 if at.n >= 1 else 0
        key = (gen_n, at.b if gen_n else Fraction(1), at.a)
        slot = buckets.setdefault(key, {})
        if at.m >= 0:
            op = WeylOp({0: Poly.monomial(at.m, c)}) * chain
            slot[0] = slot.get(0, WeylOp.zero()) + op
        else:
            slot[at.m] = slot.get(at.m, WeylOp.zero()) + chain.scale(c)
    entries: dict[Atom, WeylOp] = {}
    for (gen_n, b, a), slots in buckets.items():
        slots = {m: op for m, op in slots.items() if not op.is_zero()}
        if not slots:
            continue
        m_min = min(slots)
        if m_min >= 0:
            total, gen_m = slots[0], 0
        else:
            total = WeylOp.zero()
            for m, op in slots.items():
                total = total + WeylOp.t_power(m - m_min) * op
            divided = total.left_divide_t_power(-m_min)
            if divided is not None:
                total, gen_m = divided, 0
            else:
                gen_m = m_min
        if total.is_zero():
            continue
        entries[Atom(b=b, n=gen_n, m=gen_m, a=a)] = total
    return DCombination(entries)


# -- products -----------------------------------------------------------------


def product_reduce(x: BElement, y: BElement) -> BElement:
    """The exact product x*y in the Laurent field, expressed again as an element."""
    acc = BElement.zero()
    for at1, c1 in x.terms.items():
        for at2, c2 in y.terms.items():
            acc = acc + _atom_product(at1, at2, c1 * c2)
    return acc


def _measure(factors: dict[int, int]) -> int:
    return sum(p * n for p, n in factors.items())


def _atom_product(at1: Atom, at2: Atom, c: Fraction) -> BElement:
    m = at1.m + at2.m
    a = at1.a + at2.a
    if at1.n == 0 or at2.n == 0 or at1.b == at2.b:
        n = at1.n + at2.n
        b = at1.b if at1.n else at2.b
        return BElement({Atom(b=b if n else Fraction(1), n=n, m=m, a=a): c})
    q = math.lcm(at1.b.denominator, at2.b.denominator)
    p1 = int(at1.b * q)
    p2 = int(at2.b * q)
    done = []
    states = [(c, 0, 0, {p1: at1.n, p2: at2.n})]
    while states:
        state = states.pop()
        coeff, r, sigma, factors = state
        if len(factors) <= 1:
            done.append(state)
            continue
        measure = _measure(factors)
        new_states = _rewrite_step(coeff, r, sigma, factors)
        for ns in new_states:
            if _measure(ns[3]) >= measure:
                raise ReductionError("product-reduction measure failed to decrease")
        states.extend(new_states)
    out: dict[Atom, Fraction] = {}
    for coeff, r, sigma, factors in done:
        coeff = coeff * Fraction(1, q) ** r
        a_total = a + Fraction(sigma, q)
        m_total = m + r
        if factors:
            ((p, n),) = factors.items()
            key = Atom(b=Fraction(p, q), n=n, m=m_total, a=a_total)
        else:
            key = Atom(b=Fraction(1), n=0, m=m_total, a=a_total)
        out[key] = out.get(key, Fraction(0)) + coeff
    return BElement(out)


def _rewrite_step(coeff: Fraction, r: int, sigma: int, factors: dict[int, int]):
    """Eliminate one pair of distinct scales from a pending product term.

    Scales live in units of U = T/q; the state tracks the accumulated power of
    U (r), the integer exponential shift (sigma, in e^U units) and the multiset
    of remaining B-factors {scale: power}.
    """
    scales = sorted(factors)
    div_pair = None
    for small in scales:
        for big in scales:
            if small != big and big % small == 0:
                div_pair = (small, big)
                break
        if div_pair:
            break
    new_states = []
    if div_pair:
        # B^k(l U) B(n U) with l | n: raises the pole order at l, or trades
        # the whole B^k(l U) for a T-power in front of B(n U).
        ell, nsc = div_pair
        k = factors[ell]
        pair = h_f(k, ell, nsc)
        fa = dict(factors)
        del fa[ell]
        lead = coeff * Fraction(ell) ** k
        for d, fd in enumerate(pair.f.coeffs):
            if fd != 0:
                new_states.append((lead * fd, r + k, sigma + d, fa))
        fb = dict(factors)
        fb[ell] = k + 1
        fb[nsc] -= 1
        if fb[nsc] == 0:
            del fb[nsc]
        ratio = coeff * Fraction(nsc, ell)
        for d, hd in enumerate(pair.h.coeffs):
            if hd != 0:
                new_states.append((ratio * hd, r, sigma + d, fb))
    else:
        # incomparable pair: one B-factor of each combines into B^2 at the gcd
        # scale plus simple terms weighted by the g-polynomials.
        ps, pn = scales[0], scales[1]
        gp = g_pair(ps, pn)
        base = dict(factors)
        for p in (ps, pn):
            base[p] -= 1
            if base[p] == 0:
                del base[p]
        fa = dict(base)
        fa[gp.ell] = fa.get(gp.ell, 0) + 2
        new_states.append((coeff, r, sigma, fa))
        fb = dict(base)
        fb[pn] = fb.get(pn, 0) + 1
        for d, gd in enumerate(gp.g_nm.coeffs):
            if gd != 0:
                new_states.append((coeff * ps * gd, r + 1, sigma + d, fb))
        fc = dict(base)
        fc[ps] = fc.get(ps, 0) + 1
        for d, gd in enumerate(gp.g_mn.coeffs):
            if gd != 0:
                new_states.append((coeff * pn * gd, r + 1, sigma + d, fc))
    return new_states


def negative_power_expand(k: int) -> BElement:
    """B^-k = (T^-1 (e^T - 1))^k, expanded into n = 0 atoms."""
    if k < 1:
        raise ValueError("negative power must be at least 1")
    terms = {}
    for j in range(k + 1):
        terms[Atom(b=Fraction(1), n=0, m=-k, a=Fraction(j))] = binomial(k, j) * (-1) ** (k - j)
    return BElement(terms)


# -- derivative polynomials ----------------------------------------------------


def f_n_closed(n: int) -> BiPoly:
    """Closed form of f_n(U, V) from Stirling numbers of the second kind."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    sign = Fraction((-1) ** n)
    terms: dict[tuple[int, int], Fraction] = {}
    for j in range(1, n + 2):
        fac = factorial(j - 1)
        s_up = stirling(n + 1, j)
        if s_up:
            key = (n - j + 1, j)
            terms[key] = terms.get(key, Fraction(0)) + sign * fac * s_up
        s_curr = stirling(n, j)
        if n and s_curr:
            key = (n - j, j)
            terms[key] = terms.get(key, Fraction(0)) - sign * fac * n * s_curr
    return BiPoly(terms)


_F_INDUCTIVE_CACHE: list[BiPoly] = [BiPoly.monomial(0, 1)]


def f_n_inductive(n: int) -> BiPoly:
    """f_n by the first-order recursion f_n = (1-n + U d_U + (1 - U - V) V d_V) f_(n-1)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    while len(_F_INDUCTIVE_CACHE) <= n:
        k = len(_F_INDUCTIVE_CACHE)
        prev = _F_INDUCTIVE_CACHE[-1]
        dv = prev.d_v()
        nxt = (
            prev * (1 - k)
            + prev.d_u().shift(1, 0)
            + dv.shift(0, 1)
            - dv.shift(1, 1)
            - dv.shift(0, 2)
        )
        _F_INDUCTIVE_CACHE.append(nxt)
    return _F_INDUCTIVE_CACHE[n]


def element_from_bipoly(bp: BiPoly) -> BElement:
    """Substitute (U, V) -> (T, B): each monomial U^i V^j becomes T^i B^j."""
    return BElement(
        {
            Atom(b=Fraction(1), n=j, m=i, a=Fraction(0)): c
            for (i, j), c in bp.terms.items()
        }
    )


def derivative_power_element(n: int) -> BElement:
    """The n-th derivative of B as an element: T^-n f_n(T, B)."""
    return element_from_bipoly(f_n_closed(n)).mul_monomial(-n)


def agoh_dilcher_reduce(m: int, n: int) -> DCombination:
    """Write (d^m B/dT^m)(d^n B/dT^n) as an operator combination on B.

    The product equals T^-(m+n) f_m(T,B) f_n(T,B); lowering the B-powers and
    dividing out the T-pole leaves a single polynomial operator on B.
    """
    fp = f_n_closed(m) * f_n_closed(n)
    elem = element_from_bipoly(fp).mul_monomial(-(m + n))
    return reduce_to_first_order(elem)
