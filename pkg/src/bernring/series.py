"""Truncated Laurent series over Q, and over Q[s] for the parameterized variants.

A ``TruncatedSeries`` knows its coefficients exactly for every exponent up to
an explicit ``bound``; nothing beyond the bound is ever assumed.  Every
operation computes the guaranteed bound of its result, so precision loss is
always visible: reading a coefficient past the bound raises
:class:`InsufficientBoundError` instead of returning a silent zero.

The module also hosts the generating series B = T/(e^T - 1), e^{aT}, and the
Bernoulli numbers/polynomials of any order derived from them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polys import Poly, binomial, factorial

#: coefficient-domain tags
RING_Q = "Q"
RING_QS = "Q[s]"


class InsufficientBoundError(Exception):
    """A coefficient past the guaranteed order bound was requested."""


class CoefficientRingMismatch(TypeError):
    """Two series over different coefficient domains were combined."""


def _coerce(ring: str, value):
    if ring == RING_Q:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"Q-series coefficient must be rational, got {type(value).__name__}")
    if ring == RING_QS:
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return Poly.const(value)
        raise TypeError(f"Q[s]-series coefficient must be Poly, got {type(value).__name__}")
    raise ValueError(f"unknown coefficient ring {ring!r}")


def _zero(ring: str):
    return Fraction(0) if ring == RING_Q else Poly.zero()


def _is_zero(value) -> bool:
    return value == 0 if isinstance(value, Fraction) else value.is_zero()


class TruncatedSeries:
    """Laurent series with exact coefficients for exponents <= ``bound``.

    ``low`` is the exponent of the first stored coefficient and equals the
    valuation when the series is nonzero; a series that is known to vanish
    up to its bound stores no coefficients and has ``low == bound + 1``.
    """

    __slots__ = ("ring", "low", "coeffs", "bound")

    def __init__(self, ring: str, low: int, coeffs: Sequence, bound: int):
        coeffs = [_coerce(ring, c) for c in coeffs]
        if coeffs and low + len(coeffs) - 1 != bound:
            raise ValueError("coefficient window does not match bound")
        start = 0
        while start < len(coeffs) and _is_zero(coeffs[start]):
            start += 1
        coeffs = coeffs[start:]
        low += start
        if not coeffs:
            low = bound + 1
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "bound", bound)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(bound: int, ring: str = RING_Q) -> "TruncatedSeries":
        return TruncatedSeries(ring, bound + 1, (), bound)

    @staticmethod
    def one(bound: int, ring: str = RING_Q) -> "TruncatedSeries":
        return TruncatedSeries.monomial(0, 1, bound, ring)

    @staticmethod
    def monomial(exponent: int, coeff, bound: int, ring: str = RING_Q) -> "TruncatedSeries":
        if exponent > bound:
            raise ValueError("monomial exponent beyond requested bound")
        window = [_zero(ring)] * (bound - exponent + 1)
        window[0] = _coerce(ring, coeff)
        return TruncatedSeries(ring, exponent, window, bound)

    @staticmethod
    def from_coeffs(coeffs: Sequence, bound: int, ring: str = RING_Q, low: int = 0) -> "TruncatedSeries":
        """Series with the given window low .. low+len(coeffs)-1 == bound."""
        return TruncatedSeries(ring, low, coeffs, bound)

    # -- basic queries -----------------------------------------------------

    def is_known_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation_floor(self) -> int:
        """The valuation if nonzero, else bound+1 (true valuation is >= this)."""
        return self.low

    def coeff(self, exponent: int):
        """Exact coefficient of T^exponent; raises past the guaranteed bound."""
        if exponent > self.bound:
            raise InsufficientBoundError(
                f"coefficient of T^{exponent} requested but series is only exact to T^{self.bound}"
            )
        if exponent < self.low:
            return _zero(self.ring)
        return self.coeffs[exponent - self.low]

    def window(self, lo: int, hi: int) -> list:
        return [self.coeff(i) for i in range(lo, hi + 1)]

    def truncate(self, bound: int) -> "TruncatedSeries":
        if bound > self.bound:
            raise InsufficientBoundError("cannot raise a bound by truncation")
        if bound == self.bound:
            return self
        keep = max(0, bound - self.low + 1)
        return TruncatedSeries(self.ring, self.low, self.coeffs[:keep], bound)

    def same_up_to(self, other: "TruncatedSeries", bound: int) -> bool:
        """Coefficient-wise equality for all exponents <= bound (must be guaranteed)."""
        lo = min(self.low, other.low, 0)
        return all(self.coeff(i) == other.coeff(i) for i in range(lo, bound + 1))

    # -- ring operations ---------------------------------------------------

    def _check_ring(self, other: "TruncatedSeries"):
        if self.ring != other.ring:
            raise CoefficientRingMismatch(
                f"cannot combine series over {self.ring} with series over {other.ring}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_ring(other)
        bound = min(self.bound, other.bound)
        low = min(self.low, other.low)
        if low > bound:
            return TruncatedSeries.zero(bound, self.ring)
        window = [self.coeff(i) + other.coeff(i) for i in range(low, bound + 1)]
        return TruncatedSeries(self.ring, low, window, bound)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, self.low, [-c for c in self.coeffs], self.bound)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product; bound = min(N_x + v_y, N_y + v_x)."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_ring(other)
        bound = min(self.bound + other.low, other.bound + self.low)
        low = self.low + other.low
        if low > bound:
            return TruncatedSeries.zero(bound, self.ring)
        window = [_zero(self.ring)] * (bound - low + 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            ei = self.low + i
            jmax = min(len(other.coeffs) - 1, bound - ei - other.low)
            for j in range(jmax + 1):
                b = other.coeffs[j]
                if _is_zero(b):
                    continue
                window[ei + other.low + j - low] += a * b
        return TruncatedSeries(self.ring, low, window, bound)

    def scale(self, c) -> "TruncatedSeries":
        """Multiply by a scalar from the coefficient ring (exact, bound kept)."""
        c = _coerce(self.ring, c)
        if _is_zero(c):
            return TruncatedSeries.zero(self.bound, self.ring)
        return TruncatedSeries(self.ring, self.low, [a * c for a in self.coeffs], self.bound)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by T^k (exact; bound moves by k)."""
        return TruncatedSeries(self.ring, self.low + k, self.coeffs, self.bound + k)

    def mul_poly_in_t(self, p: Poly) -> "TruncatedSeries":
        """Multiply by a polynomial in T with rational coefficients (exact shift-and-add)."""
        if p.is_zero():
            # a zero multiplier is exact at every order; keep a conservative bound
            return TruncatedSeries.zero(self.bound, self.ring)
        val = p.trailing_valuation()
        acc = TruncatedSeries.zero(self.bound + val, self.ring)
        for d in range(val, p.degree + 1):
            c = p.coeff(d)
            if c == 0:
                continue
            acc = acc + self.shift(d).truncate(self.bound + val).scale(c)
        return acc

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires an invertible coefficient at the valuation."""
        if self.is_known_zero():
            raise ZeroDivisionError("cannot invert a series that vanishes up to its bound")
        lead = self.coeffs[0]
        if self.ring == RING_QS:
            if lead.degree not in (0,):
                raise ValueError("series over Q[s] invertible only with nonzero constant leading coefficient")
            inv_lead = Poly.const(1 / lead.coeff(0))
        else:
            inv_lead = 1 / lead
        v = self.low
        n_terms = self.bound - v + 1
        out = [_zero(self.ring)] * n_terms
        out[0] = inv_lead
        # y_k solves sum_{i=0..k} x_i * y_{k-i} = 0 for k >= 1 (indices relative to valuations)
        for k in range(1, n_terms):
            acc = _zero(self.ring)
            for i in range(1, k + 1):
                xi = self.coeffs[i] if i < len(self.coeffs) else _zero(self.ring)
                if _is_zero(xi):
                    continue
                acc = acc + xi * out[k - i]
            out[k] = -(acc * inv_lead)
        bound = self.bound - 2 * v
        return TruncatedSeries(self.ring, -v, out, bound)

    def scale_arg(self, b) -> "TruncatedSeries":
        """Substitute T -> b*T: the coefficient of T^i picks up a factor b^i."""
        b = _coerce(self.ring, b)
        if _is_zero(b):
            raise ValueError("argument scale must be nonzero")
        if self.low < 0 and self.ring == RING_QS:
            raise ValueError("negative-valuation argument scaling requires rational coefficients")
        power = b ** self.low if self.low >= 0 else Fraction(b) ** self.low
        out = []
        for c in self.coeffs:
            out.append(c * power)
            power = power * b
        return TruncatedSeries(self.ring, self.low, out, self.bound)

    def derivative(self) -> "TruncatedSeries":
        """Termwise d/dT; the guaranteed bound drops by one."""
        out = []
        for i, c in enumerate(self.coeffs):
            e = self.low + i
            out.append(c * e)
        if self.coeffs:
            ser = TruncatedSeries(self.ring, self.low - 1, out, self.low + len(out) - 2)
            return ser.truncate(self.bound - 1)
        return TruncatedSeries.zero(self.bound - 1, self.ring)

    def to_poly_coeffs(self) -> "TruncatedSeries":
        """Reinterpret a Q-series as a Q[s]-series with constant coefficients."""
        if self.ring == RING_QS:
            return self
        return TruncatedSeries(RING_QS, self.low, [Poly.const(c) for c in self.coeffs], self.bound)

    def __repr__(self) -> str:
        bits = []
        for i, c in enumerate(self.coeffs[:8]):
            bits.append(f"{c}*T^{self.low + i}")
        tail = " + ..." if len(self.coeffs) > 8 else ""
        body = " + ".join(bits) if bits else "0"
        return f"<series {body}{tail} (exact to T^{self.bound})>"


# -- generators ------------------------------------------------------------


def exp_series(a: Fraction | int, bound: int) -> TruncatedSeries:
    """e^{aT} = sum a^i T^i / i!, exact to the bound."""
    a = Fraction(a)
    coeffs = []
    power = Fraction(1)
    for i in range(bound + 1):
        coeffs.append(power / factorial(i))
        power *= a
    return TruncatedSeries(RING_Q, 0, coeffs, bound)


def exp_minus_one_over_t(bound: int) -> TruncatedSeries:
    """(e^T - 1)/T = sum_i T^i/(i+1)!."""
    return TruncatedSeries(RING_Q, 0, [Fraction(1, int(factorial(i + 1))) for i in range(bound + 1)], bound)


_B_CACHE: TruncatedSeries | None = None

#: Bernoulli numbers B_i; tests may tamper with this table to exercise selftest.
_BERNOULLI_TABLE: dict[int, Fraction] = {}


def bernoulli_series(bound: int) -> TruncatedSeries:
    """B(T) = T/(e^T - 1), exact to the bound."""
    global _B_CACHE
    if _B_CACHE is None or _B_CACHE.bound < bound:
        work = max(bound, 32)
        _B_CACHE = exp_minus_one_over_t(work).inverse()
    return _B_CACHE.truncate(bound)


def bernoulli_number(i: int) -> Fraction:
    """The classical Bernoulli number B_i (order one)."""
    if i < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if i not in _BERNOULLI_TABLE:
        ser = bernoulli_series(max(i, 2 * len(_BERNOULLI_TABLE) + 16))
        for j in range(ser.bound + 1):
            _BERNOULLI_TABLE.setdefault(j, ser.coeff(j) * factorial(j))
    return _BERNOULLI_TABLE[i]


_B_POWER_CACHE: dict[int, TruncatedSeries] = {}


def bernoulli_power_series(n: int, bound: int) -> TruncatedSeries:
    """B^n exact to the bound, memoized per order."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n == 0:
        return TruncatedSeries.one(bound)
    cached = _B_POWER_CACHE.get(n)
    if cached is None or cached.bound < bound:
        work = max(bound, 32)
        base = bernoulli_series(work)
        acc = base
        for _ in range(n - 1):
            acc = acc * base
        _B_POWER_CACHE[n] = cached = acc
    return cached.truncate(bound)


def bernoulli_number_order(n: int, i: int) -> Fraction:
    """B^(n)_i = i! * [T^i] B^n."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    return bernoulli_power_series(n, i).coeff(i) * factorial(i)


def bernoulli_poly_value(n: int, i: int, x: Fraction | int) -> Fraction:
    """B^(n)_i(x) = i! * [T^i] (B^n e^{xT}), via the binomial convolution."""
    x = Fraction(x)
    acc = Fraction(0)
    xpow = Fraction(1)
    for k in range(i, -1, -1):
        # term k of sum_k C(i,k) B^(n)_k x^(i-k), accumulating powers of x upward
        acc += binomial(i, k) * bernoulli_number_order(n, k) * xpow
        xpow *= x
    return acc


def bernoulli_polynomial(i: int) -> Poly:
    """The classical Bernoulli polynomial B_i(X) as an exact Poly."""
    coeffs = [Fraction(0)] * (i + 1)
    for k in range(i + 1):
        coeffs[i - k] = binomial(i, k) * bernoulli_number(k)
    return Poly(coeffs)


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n."""
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def default_bound(max_order: int) -> int:
    """Working series bound for verifying identities up to a given order."""
    return 2 * max_order + 8
