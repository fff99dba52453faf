"""Confluence decisions, completion into confluent systems, redundancy removal."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum

from .algebra_core import DiamondError, Element
from .ambiguity import (
    ResolutionCertificate,
    _pair_ambiguities,
    critical_ambiguities,
    resolve,
    s_polynomial,
)
from .monomial_theories import PathAlgebraTheory
from .rewriting_engine import (
    DEFAULT_STEP_BUDGET,
    RewritingSystem,
    Rule,
    StepBudgetExceededError,
    normal_form,
    orient,
)


class ConfluenceStatus(Enum):
    CONFLUENT = "confluent"
    NOT_CONFLUENT = "not-confluent"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ConfluenceVerdict:
    """Outcome of resolving every critical ambiguity of a system."""

    status: ConfluenceStatus
    checked: int
    witness: ResolutionCertificate | None = None


def check_confluence(system, max_steps: int = DEFAULT_STEP_BUDGET) -> ConfluenceVerdict:
    """Resolve all critical ambiguities and report the verdict."""
    checked = 0
    for amb in critical_ambiguities(system):
        try:
            cert = resolve(system, amb, max_steps)
        except StepBudgetExceededError:
            return ConfluenceVerdict(ConfluenceStatus.INCONCLUSIVE, checked)
        checked += 1
        if not cert.resolved:
            return ConfluenceVerdict(ConfluenceStatus.NOT_CONFLUENT, checked, cert)
    return ConfluenceVerdict(ConfluenceStatus.CONFLUENT, checked)


class CompletionStatus(Enum):
    COMPLETE = "complete"
    DEGREE_CAPPED = "degree-capped"
    RULE_CAPPED = "rule-capped"


@dataclass(frozen=True)
class AddedRule:
    """A rule created during completion plus the ambiguity that forced it."""

    rule: Rule
    source: object


@dataclass(frozen=True)
class CompletionReport:
    """Result of the completion loop."""

    status: CompletionStatus
    system: RewritingSystem
    added: tuple
    dropped: tuple
    pairs_processed: int
    pairs_skipped: int


@dataclass
class _Working:
    """Unvalidated view with the attribute shape the engine expects."""

    theory: object
    order: object
    rules: object


def _uniform_components(theory, element: Element) -> list:
    """Split an element into rule-sized pieces; only paths need splitting."""
    if not isinstance(theory, PathAlgebraTheory):
        return [element]
    groups: dict = {}
    for m, c in element.terms:
        groups.setdefault((m[0], m[1]), []).append((m, c))
    return [Element(tuple(groups[k])) for k in sorted(groups)]


def _interreduce(theory, order, rules: list, max_steps: int) -> None:
    """Renormalize every rule's lower part against the other rules' leads."""
    for i in range(len(rules)):
        others = _Working(theory, order, tuple(rules[:i] + rules[i + 1 :]))
        lower = normal_form(others, rules[i].lower, max_steps)
        if lower != rules[i].lower:
            rules[i] = Rule(rules[i].lead, lower)


def complete(
    system,
    max_degree: int = 12,
    max_rules: int = 500,
    max_steps: int = DEFAULT_STEP_BUDGET,
) -> CompletionReport:
    """Saturate a system with oriented s-polynomial remainders.

    Pairs are processed FIFO by superposition degree then insertion order.
    Returns Complete when the queue empties, DegreeCapped when pairs above the
    degree cap were skipped and RuleCapped when the rule cap was reached.
    Orientation of an incomparable remainder raises MultipleMaximaError.
    """
    th, order = system.theory, system.order
    rules = list(system.rules)
    heap: list = []
    counter = 0

    def push_pairs(new_idx: int) -> None:
        nonlocal counter
        for j in range(new_idx + 1):
            for amb in _pair_ambiguities(th, j, rules[j].lead, new_idx, rules[new_idx].lead):
                heapq.heappush(heap, (th.degree(amb.superposition), counter, amb))
                counter += 1

    for idx in range(len(rules)):
        push_pairs(idx)

    processed = 0
    skipped = 0
    sources: list = []
    degree_capped = False
    rule_capped = False
    while heap:
        deg, _, amb = heapq.heappop(heap)
        if deg > max_degree:
            skipped += 1
            degree_capped = True
            continue
        work = _Working(th, order, tuple(rules))
        remainder = normal_form(work, s_polynomial(work, amb), max_steps)
        processed += 1
        if remainder.is_zero():
            continue
        for component in _uniform_components(th, remainder):
            rule = orient(order, component)
            rules.append(rule)
            sources.append(amb)
            if len(rules) > max_rules:
                rule_capped = True
                break
            push_pairs(len(rules) - 1)
            _interreduce(th, order, rules, max_steps)
        if rule_capped:
            break

    if rule_capped:
        status = CompletionStatus.RULE_CAPPED
    elif degree_capped:
        status = CompletionStatus.DEGREE_CAPPED
    else:
        status = CompletionStatus.COMPLETE

    base = len(system.rules)
    added = tuple(
        AddedRule(rules[base + k], sources[k]) for k in range(len(rules) - base)
    )
    dropped: tuple = ()
    if status is CompletionStatus.COMPLETE:
        rules, dropped = _drop_pass(th, order, rules, system.field, max_steps)
    final = RewritingSystem(th, order, tuple(rules), system.field)
    return CompletionReport(status, final, added, dropped, processed, skipped)


def _drop_pass(theory, order, rules, field, max_steps):
    """Greedily remove rules certified redundant by the remaining ones."""
    remaining = list(rules)
    dropped = []
    i = 0
    while i < len(remaining):
        rule = remaining[i]
        others = remaining[:i] + remaining[i + 1 :]
        if others and any(theory.divisions(rule.lead, o.lead) for o in others):
            defining = Element(((rule.lead, field.one),)) - rule.lower
            work = _Working(theory, order, tuple(others))
            try:
                residue = normal_form(work, defining, max_steps)
            except StepBudgetExceededError:
                residue = None
            if residue is not None and residue.is_zero():
                dropped.append(
                    (
                        rule,
                        "lead %s is reducible and the defining element reduces to zero"
                        % theory.serialize(rule.lead),
                    )
                )
                remaining.pop(i)
                continue
        i += 1
    return remaining, tuple(dropped)


def drop_redundant(system, max_steps: int = DEFAULT_STEP_BUDGET):
    """Remove redundant rules; returns the trimmed system and the drops."""
    remaining, dropped = _drop_pass(
        system.theory, system.order, list(system.rules), system.field, max_steps
    )
    trimmed = RewritingSystem(system.theory, system.order, tuple(remaining), system.field)
    return trimmed, dropped


class NotConfluentSystemError(DiamondError):
    """Raised when ideal membership is queried on a non-confluent system."""


_VERDICT_CACHE: dict = {}


def _cached_verdict(system) -> ConfluenceVerdict:
    verdict = _VERDICT_CACHE.get(system)
    if verdict is None:
        verdict = check_confluence(system)
        _VERDICT_CACHE[system] = verdict
    return verdict


def ideal_member(system, element: Element, max_steps: int = DEFAULT_STEP_BUDGET) -> bool:
    """Decide ideal membership by normal form; requires a confluent system."""
    verdict = _cached_verdict(system)
    if verdict.status is not ConfluenceStatus.CONFLUENT:
        raise NotConfluentSystemError(
            "membership test needs a confluent system; verdict was %s" % verdict.status.value
        )
    return normal_form(system, element, max_steps).is_zero()
