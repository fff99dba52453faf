"""Rule orientation and the reduction engine."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from diamondlemma import (
    CommutativeTheory,
    Element,
    ForbiddenFactorSet,
    FreeMonoidTheory,
    MonomialOrder,
    MultipleMaximaError,
    OrderKind,
    Rel,
    RewritingSystem,
    Rule,
    RuleError,
    StepBudgetExceededError,
    ZeroElementError,
    count_irreducible,
    irr_description,
    is_irreducible_monomial,
    normal_form,
    normal_form_with_trail,
    orient,
    reduce_once,
)

from oracles import all_normal_forms, random_strategy_normal_form

TH = FreeMonoidTheory(("x", "y"))
DEGLEX = MonomialOrder(OrderKind.DEGLEX, TH, ("x", "y"))


def elem(*pairs) -> Element:
    return Element.from_dict({m: Fraction(c) for m, c in pairs})


def weyl() -> RewritingSystem:
    # yx -> xy + 1
    return RewritingSystem(
        TH, DEGLEX, (Rule(("y", "x"), elem((("x", "y"), 1), ((), 1))),)
    )


def bergman() -> RewritingSystem:
    # x^2 -> 1, y^2 -> 1
    return RewritingSystem(
        TH,
        DEGLEX,
        (Rule(("x", "x"), elem(((), 1))), Rule(("y", "y"), elem(((), 1)))),
    )


class _DiscreteOrder(MonomialOrder):
    uses_total_key = False

    def compare(self, a, b):
        return Rel.EQ if a == b else Rel.INCOMPARABLE


class TestOrient:
    def test_scales_to_monic_and_flips_sign(self):
        rule = orient(DEGLEX, elem((("y", "x"), 2), (("x", "y"), -2)))
        assert rule.lead == ("y", "x")
        assert rule.lower == elem((("x", "y"), 1))

    def test_constant_tail(self):
        rule = orient(DEGLEX, elem((("x", "x"), 3), ((), -6)))
        assert rule.lead == ("x", "x")
        assert rule.lower == elem(((), 2))

    def test_zero_rejected(self):
        with pytest.raises(ZeroElementError):
            orient(DEGLEX, Element.zero())

    def test_ties_under_partial_order_rejected(self):
        o = _DiscreteOrder(OrderKind.DEGLEX, TH, ("x", "y"))
        with pytest.raises(MultipleMaximaError) as info:
            orient(o, elem((("x",), 1), (("y",), 1)))
        assert info.value.maxima == frozenset({("x",), ("y",)})


class TestSystemValidation:
    def test_rejects_lower_not_below_lead(self):
        with pytest.raises(RuleError):
            RewritingSystem(TH, DEGLEX, (Rule(("x",), elem((("x", "x"), 1))),))

    def test_rejects_equal_monomial(self):
        with pytest.raises(RuleError):
            RewritingSystem(TH, DEGLEX, (Rule(("x",), elem((("x",), 1))),))

    def test_rejects_foreign_order(self):
        other = CommutativeTheory(("x", "y"))
        o = MonomialOrder(OrderKind.DEGLEX, other, ("x", "y"))
        with pytest.raises(RuleError):
            RewritingSystem(TH, o, ())

    def test_rejects_non_uniform_path_rule(self):
        from diamondlemma import PathAlgebraTheory

        th = PathAlgebraTheory(("1", "2"), (("a", "1", "2"), ("b", "2", "1")))
        o = MonomialOrder(OrderKind.DEGLEX, th, ("a", "b"))
        with pytest.raises(RuleError):
            RewritingSystem(
                th, o, (Rule(th.path("a", "b"), Element(((th.path("a"), Fraction(1)),))),)
            )

    def test_series_rule_admitted_when_lower_is_below(self):
        th1 = FreeMonoidTheory(("x",))
        o = MonomialOrder(OrderKind.SERIES_DEGLEX, th1, ("x",), (("x", Fraction(-1)),))
        # x -> x^2 is a valid rule only under the series order.
        RewritingSystem(th1, o, (Rule(("x",), Element(((("x", "x"), Fraction(1)),))),))


class TestReduceOnce:
    def test_single_step(self):
        got, step = reduce_once(weyl(), elem((("y", "x"), 1)))
        assert got == elem((("x", "y"), 1), ((), 1))
        assert step.rule_index == 0
        assert step.monomial == ("y", "x")

    def test_irreducible_returns_none_step(self):
        e = elem((("x", "y"), 1))
        got, step = reduce_once(weyl(), e)
        assert got == e
        assert step is None

    def test_lowest_rule_index_wins(self):
        # x^2 -> y, xy -> 1: x^2*y is divisible by both leads; rule 0 acts.
        s = RewritingSystem(
            TH,
            DEGLEX,
            (Rule(("x", "x"), elem((("y",), 1))), Rule(("x", "y"), elem(((), 1)))),
        )
        got, step = reduce_once(s, elem((("x", "x", "y"), 1)))
        assert step.rule_index == 0
        assert got == elem((("y", "y"), 1))

    def test_greatest_monomial_first(self):
        got, step = reduce_once(weyl(), elem((("y", "x"), 1), (("y", "x", "x"), 1)))
        assert step.monomial == ("y", "x", "x")


class TestNormalForm:
    def test_weyl_frozen_example(self):
        assert normal_form(weyl(), elem((("y", "x", "x"), 1))) == elem(
            (("x", "x", "y"), 1), (("x",), 2)
        )

    def test_zero(self):
        assert normal_form(weyl(), Element.zero()).is_zero()

    def test_irreducible_fixed(self):
        e = elem((("x", "x", "y"), 1), ((), -3))
        assert normal_form(weyl(), e) == e

    def test_matches_exhaustive_oracle(self):
        e = elem((("y", "x", "y", "x"), 1))
        nfs = all_normal_forms(weyl(), e)
        assert nfs == {normal_form(weyl(), e)}

    def test_budget_exhaustion_raises(self):
        th1 = FreeMonoidTheory(("x",))
        o = MonomialOrder(OrderKind.SERIES_DEGLEX, th1, ("x",), (("x", Fraction(-1)),))
        s = RewritingSystem(th1, o, (Rule(("x",), Element(((("x", "x"), Fraction(1)),))),))
        with pytest.raises(StepBudgetExceededError):
            normal_form(s, Element(((("x",), Fraction(1)),)), max_steps=25)

    def test_trail_replays_to_normal_form(self):
        th = TH
        e = elem((("y", "y", "x", "x"), 1), (("y", "x"), 3))
        nf, trail = normal_form_with_trail(weyl(), e)
        replay = e
        for step in trail:
            image = th.apply_context_to_element(step.context, weyl().rules[step.rule_index].lower)
            replay = replay - Element(((step.monomial, step.coefficient),)) + image.scaled(
                step.coefficient
            )
        assert replay == nf

    def test_trail_empty_for_irreducible(self):
        nf, trail = normal_form_with_trail(weyl(), elem((("x",), 1)))
        assert trail == ()
        assert nf == elem((("x",), 1))


WEYL_ELEMENTS = st.lists(
    st.tuples(
        st.lists(st.sampled_from(("x", "y")), max_size=4).map(tuple),
        st.fractions(min_value=-4, max_value=4, max_denominator=3),
    ),
    max_size=4,
)


class TestReductionProperties:
    @given(WEYL_ELEMENTS)
    @settings(max_examples=60)
    def test_idempotent(self, pairs):
        s = weyl()
        e = Element.from_dict({})
        for m, c in pairs:
            e = e + elem((m, c))
        nf = normal_form(s, e)
        assert normal_form(s, nf) == nf

    @given(WEYL_ELEMENTS)
    @settings(max_examples=60)
    def test_linear_in_differences(self, pairs):
        # Reducing a sum and summing reductions agree on confluent systems.
        s = weyl()
        e = Element.from_dict({})
        for m, c in pairs:
            e = e + elem((m, c))
        parts = sum(
            (normal_form(s, elem((m, c))) for m, c in e.terms), Element.zero()
        )
        assert normal_form(s, e) == parts

    @given(WEYL_ELEMENTS, st.integers(0, 2**30))
    @settings(max_examples=40)
    def test_strategy_independence_on_confluent_system(self, pairs, seed):
        s = weyl()
        e = Element.from_dict({})
        for m, c in pairs:
            e = e + elem((m, c))
        rng = random.Random(seed)
        assert random_strategy_normal_form(s, e, rng, {}) == normal_form(s, e)

    @given(WEYL_ELEMENTS)
    @settings(max_examples=60)
    def test_result_is_irreducible(self, pairs):
        s = weyl()
        e = Element.from_dict({})
        for m, c in pairs:
            e = e + elem((m, c))
        nf = normal_form(s, e)
        for m in nf.support():
            assert is_irreducible_monomial(s, m)

    @given(WEYL_ELEMENTS)
    @settings(max_examples=40)
    def test_difference_of_step_reduces_to_zero(self, pairs):
        # a minus any one-step reduct of a lies in the kernel of nf.
        s = weyl()
        e = Element.from_dict({})
        for m, c in pairs:
            e = e + elem((m, c))
        reduct, step = reduce_once(s, e)
        if step is not None:
            assert normal_form(s, e - reduct).is_zero()


class TestIrreducibleMonomials:
    def test_is_irreducible_monomial(self):
        s = bergman()
        assert is_irreducible_monomial(s, ("x", "y", "x"))
        assert not is_irreducible_monomial(s, ("y", "x", "x"))

    def test_bergman_counts(self):
        assert count_irreducible(bergman(), 6) == [1, 2, 2, 2, 2, 2, 2]

    def test_weyl_counts(self):
        assert count_irreducible(weyl(), 6) == [1, 2, 3, 4, 5, 6, 7]

    def test_description_factor_semantics(self):
        desc = irr_description(bergman())
        assert isinstance(desc, ForbiddenFactorSet)
        assert desc.semantics == "factor"
        assert desc.leads == (("x", "x"), ("y", "y"))

    def test_description_divisor_semantics(self):
        th = CommutativeTheory(("x", "y"))
        o = MonomialOrder(OrderKind.DEGLEX, th, ("x", "y"))
        s = RewritingSystem(th, o, (Rule((2, 0), Element.zero()),))
        assert irr_description(s).semantics == "divisor"

    def test_counts_against_substring_oracle(self):
        from oracles import irreducible_by_substring, words_up_to

        s = bergman()
        leads = [r.lead for r in s.rules]
        for d in range(7):
            expect = sum(
                1 for w in words_up_to(("x", "y"), 6) if len(w) == d and irreducible_by_substring(w, leads)
            )
            assert count_irreducible(s, 6)[d] == expect
