"""Critical ambiguities between rules and their resolution certificates."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra_core import DiamondError, Element
from .monomial_theories import CommutativeTheory, OverlapKind
from .rewriting_engine import DEFAULT_STEP_BUDGET, RewriteStep, normal_form_with_trail


@dataclass(frozen=True)
class Ambiguity:
    """Two rule applications meeting on one superposition monomial.

    Canonically oriented so that (rule1, context key) <= (rule2, context key);
    for inclusions ``inner`` names the slot whose lead occurs inside the other.
    """

    rule1: int
    ctx1: object
    rule2: int
    ctx2: object
    superposition: object
    kind: OverlapKind
    inner: int | None = None


def _make_ambiguity(i, ctx1, j, ctx2, superposition, kind, inner) -> Ambiguity:
    if (j, repr(ctx2)) < (i, repr(ctx1)):
        i, ctx1, j, ctx2 = j, ctx2, i, ctx1
        if inner is not None:
            inner = 3 - inner
    return Ambiguity(i, ctx1, j, ctx2, superposition, kind, inner)


def _pair_ambiguities(theory, i, lead_i, j, lead_j) -> list:
    """Enumerate the minimal ambiguities of one ordered rule pair."""
    out = []
    for datum in theory.overlaps(lead_i, lead_j):
        if i == j and datum.ctx1 == datum.ctx2:
            # Same rule applied identically is a single reduction, not an
            # ambiguity; this removes the identity inclusion of a self-pair.
            continue
        out.append(
            _make_ambiguity(
                i, datum.ctx1, j, datum.ctx2, datum.superposition, datum.kind, datum.inner
            )
        )
    return out


def _montage_ambiguities(theory, i, lead_i, j, lead_j) -> list:
    """Enumerate discarded coprime superpositions (commutative first criterion)."""
    if not isinstance(theory, CommutativeTheory):
        raise DiamondError("montage enumeration is only finite for the commutative theory")
    gcd = tuple(min(a, b) for a, b in zip(lead_i, lead_j))
    if any(gcd):
        return []
    if i == j:
        return []
    lcm, c1, c2 = theory.lcm_superposition(lead_i, lead_j)
    if lcm == lead_i:
        kind, inner = OverlapKind.INCLUSION, 2
    elif lcm == lead_j:
        kind, inner = OverlapKind.INCLUSION, 1
    else:
        kind, inner = OverlapKind.OVERLAP, None
    return [_make_ambiguity(i, c1, j, c2, lcm, kind, inner)]


def critical_ambiguities(system, include_montages: bool = False) -> tuple:
    """Enumerate the critical ambiguities of a system, montages discarded.

    With include_montages=True (commutative theory only) the coprime
    superpositions normally discarded by the first criterion are enumerated
    as well, which is useful for soundness experiments.
    """
    th = system.theory
    seen = {}
    n = len(system.rules)
    for i in range(n):
        for j in range(i, n):
            pair = _pair_ambiguities(th, i, system.rules[i].lead, j, system.rules[j].lead)
            if include_montages:
                pair += _montage_ambiguities(
                    th, i, system.rules[i].lead, j, system.rules[j].lead
                )
            for amb in pair:
                seen[(amb.rule1, repr(amb.ctx1), amb.rule2, repr(amb.ctx2), repr(amb.superposition))] = amb
    ambs = list(seen.values())
    ambs.sort(
        key=lambda a: (
            th.degree(a.superposition),
            th.serialize(a.superposition),
            a.rule1,
            a.rule2,
            repr(a.ctx1),
            repr(a.ctx2),
        )
    )
    return tuple(ambs)


def s_polynomial(system, amb: Ambiguity) -> Element:
    """Difference of the two one-step reductions of the superposition."""
    th = system.theory
    left = th.apply_context_to_element(amb.ctx1, system.rules[amb.rule1].lower)
    right = th.apply_context_to_element(amb.ctx2, system.rules[amb.rule2].lower)
    return left - right


@dataclass(frozen=True)
class ResolutionCertificate:
    """Outcome of reducing an ambiguity's s-polynomial to normal form."""

    ambiguity: Ambiguity
    resolved: bool
    remainder: Element
    trail: tuple


def resolve(system, amb: Ambiguity, max_steps: int = DEFAULT_STEP_BUDGET) -> ResolutionCertificate:
    """Reduce the s-polynomial and certify whether the ambiguity resolves."""
    spoly = s_polynomial(system, amb)
    remainder, trail = normal_form_with_trail(system, spoly, max_steps)
    return ResolutionCertificate(amb, remainder.is_zero(), remainder, trail)


def _exp_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def second_criterion_filter(system, ambiguities) -> tuple:
    """Drop chained commutative ambiguities certified by a third rule.

    An ambiguity of rules (i, j) at superposition m is dropped when some third
    rule's lead divides m and both chained superpositions lcm(i, k), lcm(k, j)
    properly divide m; the kept subset certifies the same confluence verdict.
    For other theories the filter is conservative and keeps everything.
    """
    th = system.theory
    if not isinstance(th, CommutativeTheory):
        return tuple(ambiguities)
    leads = [rule.lead for rule in system.rules]
    kept = []
    for amb in ambiguities:
        i, j, sup = amb.rule1, amb.rule2, amb.superposition
        droppable = False
        for k, lead_k in enumerate(leads):
            if k in (i, j) or not _exp_divides(lead_k, sup):
                continue
            lcm_ik = tuple(max(a, b) for a, b in zip(leads[i], lead_k))
            lcm_kj = tuple(max(a, b) for a, b in zip(lead_k, leads[j]))
            if lcm_ik != sup and lcm_kj != sup:
                droppable = True
                break
        if not droppable:
            kept.append(amb)
    return tuple(kept)
