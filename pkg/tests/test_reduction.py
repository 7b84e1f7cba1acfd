import itertools
import random
from fractions import Fraction

import pytest

from bernring.elements import Atom, BElement, atom, b_element, from_scalar
from bernring.polys import Poly
from bernring.reduction import (
    DCombination,
    agoh_dilcher_reduce,
    derivative_power_element,
    element_from_bipoly,
    f_n_closed,
    f_n_inductive,
    lower_order,
    lowering_op,
    negative_power_expand,
    product_reduce,
    reduce_to_first_order,
    stirling,
)
from bernring.series import bernoulli_series, factorial
from bernring.selftest import (
    check_reduction_soundness,
    _golden_23,
    _golden_sq5,
    _golden_triple_combination,
)
from bernring.weyl import WeylOp, derivative_of_element

F = Fraction


def single_atom(m, n, b, a=0) -> Atom:
    ((key, _),) = atom(m, n, b, a).terms.items()
    return key


class TestLowerOrder:
    def test_square_to_first_order(self):
        got = lower_order(single_atom(0, 2, 1))
        want = b_element() - atom(1, 1, 1, 0) - derivative_of_element(b_element()).mul_monomial(1)
        assert got == want
        assert got.equals(atom(0, 2, 1, 0))

    def test_scaled_square(self):
        at = single_atom(0, 2, 2)
        assert lower_order(at).equals(atom(0, 2, 2, 0))

    def test_applied_lowering_is_a_fixed_point(self):
        # evaluating the derivative re-creates the higher power; the rewrite
        # only genuinely lowers in operator form (reduce_to_first_order)
        at = single_atom(1, 3, 2, Fraction(1, 2))
        assert lower_order(at) == BElement({at: Fraction(1)})
        combo = reduce_to_first_order(BElement({at: Fraction(1)}))
        assert all(gen.n <= 1 for gen in combo.entries)
        assert combo.semantic_element().equals(BElement({at: Fraction(1)}))

    def test_cube_via_operator_chain(self):
        combo = reduce_to_first_order(atom(0, 3, 1, 0))
        assert set(combo.entries) == {Atom(b=F(1), n=1, m=0, a=F(0))}
        assert combo.op_for(1, 1, 0).order() == 2
        assert combo.semantic_element().equals(atom(0, 3, 1, 0))

    def test_requires_n_at_least_two(self):
        with pytest.raises(ValueError):
            lower_order(single_atom(0, 1, 1))


class TestReduceToFirstOrder:
    def test_square(self):
        combo = reduce_to_first_order(atom(0, 2, 1, 0))
        assert combo.op_for(1, 1, 0) == WeylOp({0: Poly([1, -1]), 1: Poly.monomial(1, -1)})

    def test_derivative_square_golden(self):
        b_prime = derivative_of_element(b_element())
        squared = product_reduce(b_prime, b_prime)
        combo = reduce_to_first_order(squared)
        golden = WeylOp(
            {
                3: Poly.monomial(1, F(-1, 6)),
                2: Poly.const(F(-1, 2)),
                1: Poly([-1, F(1, 6)]),
                0: Poly.const(F(-1, 6)),
            }
        )
        assert combo.op_for(1, 1, 0) == golden
        assert len(combo.entries) == 1

    def test_triple_product_golden(self):
        triple = product_reduce(
            product_reduce(atom(0, 1, 2, 0), atom(0, 1, 3, 0)), atom(0, 1, 5, 0)
        )
        combo = reduce_to_first_order(triple)
        assert combo.equals(_golden_triple_combination())

    def test_negative_pole_stays_on_generator(self):
        el = atom(-1, 1, 1, 0)
        combo = reduce_to_first_order(el)
        gen = Atom(b=F(1), n=1, m=-1, a=F(0))
        assert combo.entries == {gen: WeylOp.identity()}
        assert combo.semantic_element().equals(el)


class TestProductReduce:
    def test_printed_23(self):
        got = product_reduce(atom(0, 1, 2, 0), atom(0, 1, 3, 0))
        assert got == _golden_23()

    def test_printed_square_times_5(self):
        got = product_reduce(atom(0, 2, 1, 0), atom(0, 1, 5, 0))
        assert got == _golden_sq5()

    def test_equal_scale_merge(self):
        assert product_reduce(b_element(), b_element()) == atom(0, 2, 1, 0)

    def test_unit(self):
        x = atom(1, 2, 3, F(1, 2)).scale(F(7, 3))
        assert product_reduce(x, from_scalar(1)) == x

    def test_rational_scales(self):
        x = atom(0, 1, F(1, 2), 0)
        y = atom(0, 1, F(3, 2), 0)
        prod = product_reduce(x, y)
        direct = x.expand(20) * y.expand(20)
        assert prod.expand(direct.bound).same_up_to(direct, direct.bound)
        scales = {at.b for at in prod.terms if at.n >= 1}
        assert scales <= {F(1, 2), F(3, 2), F(2, 2), F(1)}

    def test_soundness_suite(self):
        ok, detail = check_reduction_soundness()
        assert ok, detail


class TestNegativePowers:
    def test_inverse_of_b(self):
        got = negative_power_expand(1)
        assert got == atom(-1, 0, 1, 1) - atom(-1, 0, 1, 0)

    def test_inverse_times_b(self):
        assert product_reduce(negative_power_expand(1), b_element()).equals(from_scalar(1))

    def test_stirling_generating_function(self):
        for k in (1, 2, 3):
            gf = negative_power_expand(k).mul_monomial(k).scale(1 / factorial(k))
            ser = gf.expand(12)
            for n in range(13):
                assert ser.coeff(n) == Fraction(stirling(n, k)) / factorial(n)


class TestStirling:
    def test_diagonal_and_off_diagonal(self):
        for n in range(1, 12):
            assert stirling(n, n) == 1
            assert stirling(n, 1) == 1
            assert stirling(n, n + 1) == 0
        assert stirling(0, 0) == 1

    def test_against_partition_enumeration(self):
        def partitions(items):
            if not items:
                yield []
                return
            head, *tail = items
            for part in partitions(tail):
                for i in range(len(part)):
                    yield part[:i] + [part[i] + [head]] + part[i + 1 :]
                yield part + [[head]]

        for n in range(1, 7):
            counts = {}
            for part in partitions(list(range(n))):
                counts[len(part)] = counts.get(len(part), 0) + 1
            for k in range(1, n + 1):
                assert stirling(n, k) == counts.get(k, 0)
        assert stirling(4, 2) == 7

    def test_recurrence(self):
        for n in range(1, 15):
            for j in range(1, n + 2):
                assert stirling(n + 1, j) == stirling(n, j - 1) + j * stirling(n, j)


class TestDerivativePolynomials:
    def test_f0_f1(self):
        from bernring.polys import BiPoly

        assert f_n_closed(0) == BiPoly.monomial(0, 1)
        assert f_n_closed(1) == BiPoly({(0, 1): F(1), (1, 1): F(-1), (0, 2): F(-1)})

    def test_closed_matches_inductive(self):
        for n in range(13):
            assert f_n_closed(n) == f_n_inductive(n)

    def test_integrality(self):
        for n in range(13):
            assert f_n_closed(n).is_integral()

    def test_substitution_gives_derivatives(self):
        order = 30
        for n in range(11):
            ser = derivative_power_element(n).expand(order)
            direct = bernoulli_series(order + n)
            for _ in range(n):
                direct = direct.derivative()
            assert ser.same_up_to(direct, order)


class TestAgohDilcherReduce:
    def test_first_derivative_square(self):
        combo = agoh_dilcher_reduce(1, 1)
        golden = WeylOp(
            {
                3: Poly.monomial(1, F(-1, 6)),
                2: Poly.const(F(-1, 2)),
                1: Poly([-1, F(1, 6)]),
                0: Poly.const(F(-1, 6)),
            }
        )
        assert combo.entries == {Atom(b=F(1), n=1, m=0, a=F(0)): golden}

    def test_zeroth_case_is_square_operator(self):
        combo = agoh_dilcher_reduce(0, 0)
        assert combo.op_for(1, 1, 0) == WeylOp({0: Poly([1, -1]), 1: Poly.monomial(1, -1)})

    def test_mixed_orders_match_series(self):
        order = 30
        combo = agoh_dilcher_reduce(1, 2)
        lhs = combo.semantic_element().expand(order)
        b1 = bernoulli_series(order + 4).derivative()
        b2 = bernoulli_series(order + 4).derivative().derivative()
        rhs = b1 * b2
        assert lhs.same_up_to(rhs, min(order, rhs.bound))


class TestTermination:
    def test_stress_products_terminate(self):
        rng = random.Random(11)
        scales = [F(1), F(2), F(3), F(4), F(6), F(5, 2), F(7, 3)]
        for _ in range(60):
            x = atom(0, rng.randint(1, 3), rng.choice(scales), 0)
            y = atom(0, rng.randint(1, 3), rng.choice(scales), 0)
            product_reduce(x, y)

    def test_chained_triple_products(self):
        acc = b_element()
        for k in (2, 3, 4):
            acc = product_reduce(acc, atom(0, 1, k, 0))
        direct = bernoulli_series(16)
        for k in (2, 3, 4):
            direct = direct * bernoulli_series(16).scale_arg(k)
        assert acc.expand(12).same_up_to(direct.truncate(12), 12)
