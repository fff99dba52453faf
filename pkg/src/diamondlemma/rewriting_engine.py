"""Oriented rules, the reduction strategy and normal forms."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra_core import (
    DiamondError,
    Element,
    MonomialOrder,
    RationalField,
    Rel,
    leading_monomials,
)

DEFAULT_STEP_BUDGET = 10**6


class RuleError(DiamondError):
    """Raised when a rule violates compatibility or uniformity."""


class ZeroElementError(DiamondError):
    """Raised when orienting the zero element."""


class MultipleMaximaError(DiamondError):
    """Raised when an element has several incomparable leading monomials."""

    def __init__(self, element: Element, maxima) -> None:
        super().__init__("element has %d incomparable leading monomials" % len(maxima))
        self.element = element
        self.maxima = frozenset(maxima)


class StepBudgetExceededError(DiamondError):
    """Raised when a reduction exceeds its step budget."""


@dataclass(frozen=True)
class Rule:
    """Monic rewriting rule: lead rewrites to the lower-part element."""

    lead: object
    lower: Element


@dataclass(frozen=True)
class RewriteStep:
    """One applied reduction: which rule, at which monomial, in which context."""

    rule_index: int
    monomial: object
    context: object
    coefficient: object


@dataclass(frozen=True)
class RewritingSystem:
    """A theory, a monomial order and a tuple of compatible rules."""

    theory: object
    order: MonomialOrder
    rules: tuple
    field: object = field(default_factory=RationalField)

    def __post_init__(self) -> None:
        th, order = self.theory, self.order
        if order.theory != th:
            raise RuleError("order does not belong to the system's theory")
        for i, rule in enumerate(self.rules):
            th.check_monomial(rule.lead)
            for m, _ in rule.lower.terms:
                th.check_monomial(m)
                if order.compare(m, rule.lead) is not Rel.LT:
                    raise RuleError(
                        "rule %d: lower-part monomial %s is not below the lead %s"
                        % (i, th.serialize(m), th.serialize(rule.lead))
                    )
                if not th.uniform_equivalent(m, rule.lead):
                    raise RuleError(
                        "rule %d: non-uniform path rule (%s vs %s)"
                        % (i, th.serialize(m), th.serialize(rule.lead))
                    )


def orient(order: MonomialOrder, element: Element) -> Rule:
    """Turn an element into a monic rule with its greatest monomial as lead."""
    if element.is_zero():
        raise ZeroElementError("cannot orient the zero element")
    maxima = leading_monomials(order, element)
    if len(maxima) != 1:
        raise MultipleMaximaError(element, maxima)
    (lead,) = maxima
    c = element.coefficient_of(lead)
    lower = {}
    for m, k in element.terms:
        if m != lead:
            lower[m] = -(k / c)
    return Rule(lead, Element.from_dict(lower))


def _first_site(theory, rules, monomial, memo):
    """Find (rule index, first canonical context) or None, with memoization."""
    hit = memo.get(monomial, 0)
    if hit != 0:
        return hit
    site = None
    for i, rule in enumerate(rules):
        ctxs = theory.divisions(monomial, rule.lead)
        if ctxs:
            site = (i, ctxs[0])
            break
    memo[monomial] = site
    return site


def _pick_greatest(order, candidates, key_memo):
    """Select the P-greatest candidate, serialization breaking ties."""
    if getattr(order, "uses_total_key", True):
        best = None
        best_key = None
        for m in candidates:
            k = key_memo.get(m)
            if k is None:
                k = order.sort_key(m)
                key_memo[m] = k
            if best is None or k > best_key:
                best, best_key = m, k
        return best
    th = order.theory
    ordered = sorted(candidates, key=th.serialize)
    best = ordered[0]
    for m in ordered[1:]:
        rel = order.compare(m, best)
        if rel is Rel.GT:
            best = m
        elif rel is Rel.INCOMPARABLE and th.serialize(m) > th.serialize(best):
            best = m
    return best


def _reduce_loop(system, coeffs: dict, budget: int, keep=None, trail=None):
    """Rewrite the P-greatest reducible monomial until none remains."""
    th, order, rules = system.theory, system.order, system.rules
    site_memo: dict = {}
    key_memo: dict = {}
    steps = 0
    while True:
        candidates = [m for m in coeffs if _first_site(th, rules, m, site_memo)]
        if not candidates:
            return coeffs, steps
        if steps >= budget:
            raise StepBudgetExceededError("step budget of %d exceeded" % budget)
        m = _pick_greatest(order, candidates, key_memo)
        ridx, ctx = site_memo[m]
        c = coeffs.pop(m)
        for mm, cc in rules[ridx].lower.terms:
            image = th.apply_context(ctx, mm)
            if image is None:
                continue
            if keep is not None and not keep(image):
                continue
            add = cc * c
            prev = coeffs.get(image)
            s = add if prev is None else prev + add
            if s:
                coeffs[image] = s
            elif prev is not None:
                del coeffs[image]
        steps += 1
        if trail is not None:
            trail.append(RewriteStep(ridx, m, ctx, c))


def reduce_once(system, element: Element):
    """Apply one reduction step; irreducible input comes back with step None.

    Strategy: rewrite the P-greatest reducible support monomial, using the
    lowest rule index and the first canonical context.
    """
    th, rules = system.theory, system.rules
    site_memo: dict = {}
    candidates = [m for m, _ in element.terms if _first_site(th, rules, m, site_memo)]
    if not candidates:
        return element, None
    m = _pick_greatest(system.order, candidates, {})
    ridx, ctx = site_memo[m]
    c = element.coefficient_of(m)
    image = th.apply_context_to_element(ctx, rules[ridx].lower)
    result = element - Element(((m, c),)) + image.scaled(c)
    return result, RewriteStep(ridx, m, ctx, c)


def normal_form(system, element: Element, max_steps: int = DEFAULT_STEP_BUDGET) -> Element:
    """Reduce an element to its persistent normal form."""
    coeffs, _ = _reduce_loop(system, dict(element.terms), max_steps)
    return Element.from_dict(coeffs)


def normal_form_with_trail(system, element: Element, max_steps: int = DEFAULT_STEP_BUDGET):
    """Reduce to normal form and return the full rewrite trail."""
    trail: list = []
    coeffs, _ = _reduce_loop(system, dict(element.terms), max_steps, trail=trail)
    return Element.from_dict(coeffs), tuple(trail)


def is_irreducible_monomial(system, monomial) -> bool:
    """Decide whether no rule lead divides the monomial."""
    th = system.theory
    return all(not th.divisions(monomial, rule.lead) for rule in system.rules)


@dataclass(frozen=True)
class ForbiddenFactorSet:
    """Irreducible monomials are those avoiding these leads.

    ``semantics`` is "factor" when avoidance means containing no lead as a
    contiguous factor (words, mixed words, paths) and "divisor" when it means
    being divisible by no lead (power products, subtrees).
    """

    semantics: str
    leads: tuple


def irr_description(system) -> ForbiddenFactorSet:
    """Describe the irreducible monomials by their forbidden lead set."""
    th = system.theory
    kind = th.__class__.__name__
    semantics = "divisor" if kind in ("CommutativeTheory", "FreeMagmaTheory") else "factor"
    leads = sorted({rule.lead for rule in system.rules}, key=th.serialize)
    return ForbiddenFactorSet(semantics, tuple(leads))


def count_irreducible(system, max_degree: int) -> list:
    """Count irreducible monomials per degree from 0 to max_degree."""
    th = system.theory
    counts = []
    for d in range(max_degree + 1):
        counts.append(
            sum(1 for m in th.monomials_of_degree(d) if is_irreducible_monomial(system, m))
        )
    return counts
