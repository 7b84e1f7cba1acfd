import random
from fractions import Fraction

from bernring.elements import Atom, atom, b_element, t_element
from bernring.polys import Poly
from bernring.series import bernoulli_series
from bernring.selftest import check_weyl_representation, random_series, random_weyl_op
from bernring.weyl import WeylOp, derivative_of_atom, derivative_of_element

D = WeylOp.d()
T_OP = WeylOp.t_power(1)


class TestAlgebra:
    def test_add(self):
        assert D + T_OP * D == WeylOp({1: Poly([1, 1])})
        p = WeylOp({2: Poly([0, 3])})
        assert p + WeylOp.zero() == p
        assert (D - D).is_zero()

    def test_commutation(self):
        assert D * T_OP == WeylOp({0: Poly.one(), 1: Poly.monomial(1)})
        assert D * T_OP - T_OP * D == WeylOp.identity()

    def test_composition(self):
        td = T_OP * D
        assert td * td == WeylOp({1: Poly.monomial(1), 2: Poly.monomial(2)})
        p = WeylOp({0: Poly([1, -2]), 3: Poly([0, 0, Fraction(1, 2)])})
        assert p * WeylOp.identity() == p
        assert WeylOp.identity() * p == p

    def test_render(self):
        op = WeylOp({0: Poly([1, -1]), 1: Poly.monomial(1, -1)})
        assert op.render() == "1 - T - T*d"


class TestSeriesAction:
    def test_d_on_t(self):
        out = D.apply_series(t_ser(8))
        assert out.coeff(0) == 1 and all(out.coeff(i) == 0 for i in range(1, out.bound + 1))

    def test_lowering_gives_square(self):
        op = WeylOp({0: Poly([1, -1]), 1: Poly.monomial(1, -1)})
        n = 14
        lhs = op.apply_series(bernoulli_series(n))
        rhs = bernoulli_series(n) * bernoulli_series(n)
        assert lhs.same_up_to(rhs, min(lhs.bound, rhs.bound))

    def test_identity_action(self):
        x = bernoulli_series(9)
        assert WeylOp.identity().apply_series(x).same_up_to(x, 9)

    def test_representation_property(self):
        ok, detail = check_weyl_representation()
        assert ok, detail

    def test_bound_bookkeeping(self):
        x = bernoulli_series(10)
        assert D.apply_series(x).bound == 9
        assert WeylOp({2: Poly.one()}).apply_series(x).bound == 8


def t_ser(bound):
    from bernring.series import TruncatedSeries

    return TruncatedSeries.monomial(1, 1, bound)


class TestElementAction:
    def test_derivative_of_b(self):
        got = derivative_of_atom(Atom(b=Fraction(1), n=1, m=0, a=Fraction(0)))
        want = atom(-1, 1, 1, 0) - atom(0, 1, 1, 0) - atom(-1, 2, 1, 0)
        assert got == want

    def test_derivative_of_exponential(self):
        a = Fraction(5, 2)
        got = derivative_of_atom(Atom(b=Fraction(1), n=0, m=0, a=a))
        assert got == atom(0, 0, 1, a).scale(a)

    def test_product_rule_matches_series(self):
        el = atom(1, 1, 1, 0)
        got = derivative_of_element(el).expand(24)
        want = el.expand(25).derivative()
        assert got.same_up_to(want, 24)

    def test_apply_element_lowering(self):
        op = WeylOp({0: Poly([1, -1]), 1: Poly.monomial(1, -1)})
        assert op.apply_element(b_element()).equals(atom(0, 2, 1, 0))

    def test_apply_zero_and_t(self):
        assert WeylOp.zero().apply_element(b_element()).is_structurally_zero()
        assert T_OP.apply_element(b_element()) == atom(1, 1, 1, 0)

    def test_action_compatibility_random(self):
        rng = random.Random(5150)
        from bernring.selftest import random_element

        order = 16
        for _ in range(100):
            p = random_weyl_op(rng, max_order=3, max_degree=3)
            x = random_element(rng, max_atoms=2, max_n=2)
            lhs = p.apply_element(x).expand(order)
            rhs = p.apply_series(x.expand(order + p.order()))
            assert lhs.same_up_to(rhs, min(order, rhs.bound))

    def test_derivative_shapes_grid(self):
        order = 30
        for m in range(-2, 3):
            for n in range(0, 5):
                for b in (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3)):
                    for a in (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-1)):
                        at = Atom(b=b if n else Fraction(1), n=n, m=m, a=a)
                        got = derivative_of_atom(at).expand(order)
                        want = at_element(at).expand(order + 1).derivative()
                        assert got.same_up_to(want, order)


def at_element(at: Atom):
    from bernring.elements import BElement

    return BElement({at: Fraction(1)})
