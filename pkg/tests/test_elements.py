import random
from fractions import Fraction

import pytest

from bernring.elements import Atom, BElement, atom, b_element, from_scalar, t_element
from bernring.series import bernoulli_poly_value, bernoulli_series, factorial
from bernring.selftest import COEFFS, SCALES, SHIFTS, random_element


class TestAtomNormalization:
    def test_positive_scale_passthrough(self):
        el = atom(0, 1, 1, 0)
        assert list(el.terms) == [Atom(b=Fraction(1), n=1, m=0, a=Fraction(0))]

    def test_negative_scale_order_one(self):
        assert atom(0, 1, -1, 0) == b_element() + t_element()

    def test_negative_scale_order_two(self):
        got = atom(0, 2, -1, 0)
        want = atom(0, 2, 1, 0) + atom(1, 1, 1, 0).scale(2) + atom(2, 0, 1, 0)
        assert got == want

    def test_rejects_zero_scale(self):
        with pytest.raises(ValueError):
            atom(0, 1, 0, 0)

    def test_normalization_matches_series(self, rng):
        from bernring.series import TruncatedSeries, exp_series

        for _ in range(25):
            m = rng.randint(-2, 2)
            n = rng.randint(0, 3)
            b = -rng.choice(SCALES)
            a = rng.choice(SHIFTS)
            el = atom(m, n, b, a)
            order = 24
            work = order - m
            ser = TruncatedSeries.one(work)
            for _ in range(n):
                ser = ser * bernoulli_series(work).scale_arg(b)
            ser = (ser * exp_series(a, work)).shift(m)
            assert el.expand(order).same_up_to(ser, min(order, ser.bound))


class TestVectorSpace:
    def test_additive_inverse(self):
        x = atom(1, 2, 2, 1).scale(Fraction(3, 7))
        assert (x + x.scale(-1)).is_structurally_zero()

    def test_zero_scale(self):
        assert b_element().scale(0).is_structurally_zero()

    def test_distinct_keys(self):
        two = b_element() + atom(1, 1, 1, 0)
        assert len(two.terms) == 2

    def test_mul_monomial(self):
        assert b_element().mul_monomial(2) == atom(2, 1, 1, 0)
        assert b_element().mul_monomial(0, 1) == atom(0, 1, 1, 1)
        x = atom(1, 2, 3, Fraction(1, 2))
        assert x.mul_monomial(0, 0) == x


class TestExpand:
    def test_b_expansion(self):
        assert b_element().expand(12).same_up_to(bernoulli_series(12), 12)

    def test_relation_collapses(self):
        rel = atom(0, 1, 1, 1) - b_element() - t_element()
        assert rel.expand(20).is_known_zero()

    def test_exponential_shift_gives_poly_values(self):
        for a in (Fraction(0), Fraction(1, 2), Fraction(-2)):
            ser = atom(0, 1, 1, a).expand(10)
            for i in range(11):
                assert ser.coeff(i) * factorial(i) == bernoulli_poly_value(1, i, a)


class TestExpPoly:
    def test_defining_identity(self):
        ep, desc = b_element().to_exp_poly()
        assert ep.terms == {Fraction(0): {1: Fraction(1)}}
        assert desc == "(e^{1T}-1)^1"

    def test_relation_clears_to_zero(self):
        rel = atom(0, 1, 1, 1) - b_element() - t_element()
        ep, _ = rel.to_exp_poly()
        assert ep.is_zero()

    def test_inverse_b_as_exponentials(self):
        el = atom(-1, 0, 1, 1) - atom(-1, 0, 1, 0)
        ep, desc = el.to_exp_poly()
        assert desc == "1"
        assert ep.exponents() == [Fraction(0), Fraction(1)]
        assert ep.terms[Fraction(1)] == {-1: Fraction(1)}


class TestZeroTest:
    def test_relation_zero(self):
        assert (atom(0, 1, 1, 1) - b_element() - t_element()).is_zero()

    def test_nonzero(self):
        assert not (b_element() - t_element()).is_zero()

    def test_multiplication_theorem(self):
        for n in range(2, 7):
            acc = b_element().scale(-n)
            for i in range(n):
                acc = acc + atom(0, 1, n, i)
            assert acc.is_zero()

    def test_elem_equal(self):
        x = atom(2, 1, 2, 1)
        assert x.equals(x)
        assert atom(0, 1, -1, 0).equals(b_element() + t_element())
        assert not b_element().equals(atom(0, 2, 1, 0))


class TestProperties:
    def test_expand_is_linear(self):
        rng = random.Random(777)
        order = 24
        for _ in range(200):
            x = random_element(rng)
            y = random_element(rng)
            c = rng.choice(COEFFS)
            left = (x + y).expand(order)
            right = x.expand(order) + y.expand(order)
            assert left.same_up_to(right, min(left.bound, right.bound))
            assert x.scale(c).expand(order).same_up_to(x.expand(order).scale(c), order - 2)

    def test_basis_independence(self):
        rng = random.Random(2024)
        basis = [(m, n) for m in range(-2, 3) for n in range(0, 5)]
        for _ in range(100):
            chosen = rng.sample(basis, rng.randint(1, 6))
            el = BElement.zero()
            for m, n in chosen:
                coeff = Fraction(0)
                while coeff == 0:
                    coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                el = el + atom(m, n, 1, 0).scale(coeff)
            assert not el.is_zero()

    def test_zero_test_agrees_with_series(self):
        from bernring.selftest import check_zero_test_agreement

        ok, detail = check_zero_test_agreement()
        assert ok, detail


class TestRendering:
    def test_deterministic_order(self):
        el = atom(1, 1, 2, 0) + b_element() + atom(0, 0, 1, 3).scale(-2) + from_scalar(7)
        assert el.render() == "7 - 2*e^{3T} + B + T*B(2T)"

    def test_zero_renders(self):
        assert BElement.zero().render() == "0"
