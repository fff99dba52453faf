"""Scalars, sparse elements and monomial orders."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diamondlemma import (
    DiamondError,
    Element,
    Fp,
    FreeMonoidTheory,
    MonomialOrder,
    OrderError,
    OrderKind,
    PrecisionCutoff,
    PrimeField,
    RationalField,
    Rel,
    ScalarError,
    compare,
    leading_monomials,
)

from oracles import merge_terms

WORDS = st.tuples(*[st.sampled_from(("x", "y"))] * 2).map(tuple) | st.just(()) | st.tuples(
    st.sampled_from(("x", "y"))
)
COEFFS = st.fractions(min_value=-5, max_value=5, max_denominator=4)
TERMS = st.lists(st.tuples(WORDS, COEFFS), max_size=8)


def elem(*pairs) -> Element:
    return Element.from_dict({m: Fraction(c) for m, c in pairs})


class TestRationalField:
    def test_units(self):
        f = RationalField()
        assert f.zero == Fraction(0)
        assert f.one == Fraction(1)
        assert f.coeff(3) == Fraction(3)
        assert f.coeff(Fraction(1, 2)) == Fraction(1, 2)
        assert f.describe() == "QQ"


class TestPrimeField:
    def test_accepts_prime(self):
        f = PrimeField(7)
        assert f.one == Fp(1, 7)
        assert f.coeff(9) == Fp(2, 7)
        assert f.coeff(-1) == Fp(6, 7)

    def test_rejects_composite(self):
        with pytest.raises(ScalarError):
            PrimeField(4)

    def test_rejects_unit(self):
        with pytest.raises(ScalarError):
            PrimeField(1)

    def test_rejects_oversized(self):
        with pytest.raises(ScalarError):
            PrimeField(2**63 + 9)

    def test_large_prime_ok(self):
        PrimeField((1 << 61) - 1)

    @given(st.integers(0, 6), st.integers(0, 6))
    def test_arithmetic_matches_int_mod(self, a, b):
        p = 7
        x, y = Fp(a, p), Fp(b, p)
        assert (x + y).value == (a + b) % p
        assert (x - y).value == (a - b) % p
        assert (x * y).value == (a * b) % p
        assert (-x).value == (-a) % p
        if b % p:
            assert ((x / y) * y).value == a % p
        else:
            with pytest.raises(ZeroDivisionError):
                x / y

    def test_mixed_moduli_rejected(self):
        with pytest.raises(ScalarError):
            Fp(1, 7) + Fp(1, 5)

    def test_truthiness(self):
        assert not Fp(0, 7)
        assert Fp(3, 7)


class TestElement:
    def test_from_dict_purges_zeros(self):
        e = Element.from_dict({("x",): Fraction(0), ("y",): Fraction(2)})
        assert e.terms == ((("y",), Fraction(2)),)

    def test_zero(self):
        assert Element.zero().is_zero()
        assert not Element.zero()

    def test_coefficient_of(self):
        e = elem((("x",), 2), (("y",), -1))
        assert e.coefficient_of(("x",)) == 2
        assert e.coefficient_of(("x", "x")) is None

    def test_support_is_deterministic(self):
        e = elem((("y",), 1), (("x",), 1))
        assert e.support() == (("x",), ("y",))

    @given(TERMS, TERMS)
    def test_add_matches_merge_oracle(self, a, b):
        ea, eb = Element.from_dict(dict(merge_terms(a))), Element.from_dict(dict(merge_terms(b)))
        assert (ea + eb).terms == merge_terms(list(ea.terms) + list(eb.terms))

    @given(TERMS, TERMS)
    def test_sub_is_add_of_negation(self, a, b):
        ea, eb = Element.from_dict(dict(merge_terms(a))), Element.from_dict(dict(merge_terms(b)))
        assert ea - eb == ea + (-eb)

    @given(TERMS)
    def test_add_negation_is_zero(self, a):
        e = Element.from_dict(dict(merge_terms(a)))
        assert (e - e).is_zero()

    @given(TERMS, COEFFS)
    def test_scaled_matches_oracle(self, a, c):
        e = Element.from_dict(dict(merge_terms(a)))
        assert e.scaled(c).terms == merge_terms([(m, k * c) for m, k in e.terms])

    def test_scaled_by_zero(self):
        assert elem((("x",), 1)).scaled(Fraction(0)).is_zero()

    def test_as_dict_is_fresh(self):
        e = elem((("x",), 1))
        d = e.as_dict()
        d[("y",)] = Fraction(5)
        assert e.coefficient_of(("y",)) is None


class TestMonomialOrder:
    def setup_method(self):
        self.th = FreeMonoidTheory(("x", "y"))

    def test_deglex_degree_dominates(self):
        o = MonomialOrder(OrderKind.DEGLEX, self.th, ("x", "y"))
        assert compare(o, ("x", "y"), ("x",)) is Rel.GT

    def test_deglex_rank_breaks_ties(self):
        # Generators ascend, so y beats x at the first differing slot.
        o = MonomialOrder(OrderKind.DEGLEX, self.th, ("x", "y"))
        assert compare(o, ("x", "y"), ("x", "x")) is Rel.GT
        assert compare(o, ("x", "y"), ("x", "y")) is Rel.EQ

    def test_generator_list_must_match(self):
        with pytest.raises(OrderError):
            MonomialOrder(OrderKind.DEGLEX, self.th, ("x", "z"))

    def test_lex_needs_commutative(self):
        with pytest.raises(OrderError):
            MonomialOrder(OrderKind.LEX, self.th, ("x", "y"))

    def test_weights_only_for_weighted_kinds(self):
        with pytest.raises(OrderError):
            MonomialOrder(OrderKind.DEGLEX, self.th, ("x", "y"), ((("x"), Fraction(1)), ("y", Fraction(1))))

    def test_weighted_deglex_requires_positive_weights(self):
        with pytest.raises(OrderError):
            MonomialOrder(
                OrderKind.WEIGHTED_DEGLEX,
                self.th,
                ("x", "y"),
                (("x", Fraction(-1)), ("y", Fraction(1))),
            )

    def test_weight_vector_must_cover_generators(self):
        with pytest.raises(OrderError):
            MonomialOrder(OrderKind.SERIES_DEGLEX, self.th, ("x", "y"), (("x", Fraction(-1)),))

    def test_series_negative_weight_reverses_powers(self):
        th = FreeMonoidTheory(("x",))
        o = MonomialOrder(
            OrderKind.SERIES_DEGLEX, th, ("x",), (("x", Fraction(-1)),)
        )
        assert compare(o, ("x", "x"), ("x", "x", "x")) is Rel.GT
        assert not o.is_well_founded()

    def test_shipped_kinds_well_founded(self):
        o = MonomialOrder(OrderKind.DEGLEX, self.th, ("x", "y"))
        assert o.is_well_founded()

    def test_weight_of(self):
        o = MonomialOrder(
            OrderKind.WEIGHTED_DEGLEX, self.th, ("x", "y"), (("x", Fraction(2)), ("y", Fraction(1)))
        )
        assert o.weight_of("x") == 2
        with pytest.raises(OrderError):
            o.weight_of("z")

    @given(st.lists(st.sampled_from(("x", "y")), max_size=4).map(tuple),
           st.lists(st.sampled_from(("x", "y")), max_size=4).map(tuple))
    def test_compare_antisymmetric_total(self, a, b):
        o = MonomialOrder(OrderKind.DEGLEX, self.th, ("x", "y"))
        r, s = compare(o, a, b), compare(o, b, a)
        flip = {Rel.GT: Rel.LT, Rel.LT: Rel.GT, Rel.EQ: Rel.EQ}
        assert s is flip[r]
        assert (r is Rel.EQ) == (a == b)


class _DiscreteOrder(MonomialOrder):
    """Test double: no two distinct monomials are comparable."""

    uses_total_key = False

    def compare(self, a, b):
        return Rel.EQ if a == b else Rel.INCOMPARABLE


class TestLeadingMonomials:
    def test_total_order_single_maximum(self):
        th = FreeMonoidTheory(("x", "y"))
        o = MonomialOrder(OrderKind.DEGLEX, th, ("x", "y"))
        e = elem((("x",), 1), (("x", "x"), 3))
        assert leading_monomials(o, e) == frozenset({("x", "x")})

    def test_partial_order_keeps_all_maxima(self):
        th = FreeMonoidTheory(("x", "y"))
        o = _DiscreteOrder(OrderKind.DEGLEX, th, ("x", "y"))
        e = elem((("x",), 1), (("y",), 1))
        assert leading_monomials(o, e) == frozenset({("x",), ("y",)})

    def test_zero_has_no_maxima(self):
        th = FreeMonoidTheory(("x", "y"))
        o = MonomialOrder(OrderKind.DEGLEX, th, ("x", "y"))
        assert leading_monomials(o, Element.zero()) == frozenset()


class TestPrecisionCutoff:
    def test_accepts_positive(self):
        assert PrecisionCutoff(3).n == 3

    @pytest.mark.parametrize("bad", [0, -1, "3", 1.5])
    def test_rejects_non_positive(self, bad):
        with pytest.raises(DiamondError):
            PrecisionCutoff(bad)
