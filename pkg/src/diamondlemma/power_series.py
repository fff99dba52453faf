"""Weighted norms, admission checks and precision-truncated normal forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra_core import DiamondError, Element, MonomialOrder, OrderKind, PrecisionCutoff
from .rewriting_engine import DEFAULT_STEP_BUDGET, _reduce_loop


@dataclass(frozen=True)
class WeightData:
    """Generator weights defining the ultrametric norm on elements.

    A monomial of weight sum w has norm 2^w, so negative weights shrink
    high powers; an element's norm is the maximum over its support.
    """

    theory: object
    weights: tuple

    def __post_init__(self) -> None:
        names = sorted(name for name, _ in self.weights)
        expected = sorted(self.theory.generator_names())
        if names != expected:
            raise DiamondError("weights must cover the generators exactly")
        converted = tuple((name, Fraction(value)) for name, value in self.weights)
        object.__setattr__(self, "weights", converted)

    def weight_of(self, name: str) -> Fraction:
        for key, value in self.weights:
            if key == name:
                return value
        raise DiamondError("no weight for generator %r" % name)

    def exponent(self, monomial) -> Fraction:
        """Weight sum of a monomial, i.e. the base-2 logarithm of its norm."""
        return self.theory.weight_sum(monomial, self)


def norm(element: Element, weight_data: WeightData):
    """Largest weight sum over the support; -inf for the zero element.

    The value is the base-2 logarithm of the ultranorm, kept exact; the
    float infinity only ever marks the zero element.
    """
    if element.is_zero():
        return float("-inf")
    return max(weight_data.exponent(m) for m in element.support())


@dataclass(frozen=True)
class EquicontinuityReport:
    """Per-rule norm comparison deciding series admission."""

    admitted: bool
    failures: tuple


def check_equicontinuity(system, weight_data: WeightData) -> EquicontinuityReport:
    """Admit a system when no rule's lower part outweighs its lead."""
    failures = []
    for index, rule in enumerate(system.rules):
        lead_exp = weight_data.exponent(rule.lead)
        lower_exp = norm(rule.lower, weight_data)
        if lower_exp > lead_exp:
            failures.append((index, lower_exp, lead_exp))
    return EquicontinuityReport(not failures, tuple(failures))


@dataclass(frozen=True)
class TdccReport:
    """Whether chains of descents are certified to terminate topologically."""

    certified: bool
    reason: str


def check_tdcc(order, weight_data: WeightData) -> TdccReport:
    """Certify descending chain termination from the order's structure.

    Only the shipped order class is inspected; subclasses may override the
    comparison, so they never get a structural certificate.
    """
    if type(order) is not MonomialOrder:
        return TdccReport(False, "custom order without a structural certificate")
    if order.kind is not OrderKind.SERIES_DEGLEX:
        return TdccReport(True, "well-founded order")
    if dict(order.weights) == dict(weight_data.weights):
        return TdccReport(True, "order weights agree with the norm weights")
    return TdccReport(False, "order weights differ from the norm weights")


class SeriesAdmissionError(DiamondError):
    """Raised when a system fails the admission checks for series reduction."""


@dataclass(frozen=True)
class SeriesNormalForm:
    """Truncated normal form plus the precision it is valid to."""

    representative: Element
    precision: int
    truncated: bool


def truncated_normal_form(
    system,
    weight_data: WeightData,
    element: Element,
    precision,
    max_steps: int = DEFAULT_STEP_BUDGET,
) -> SeriesNormalForm:
    """Reduce an element, discarding monomials below the precision ball.

    Monomials of norm below 2^(1-n) are dropped the moment they appear,
    which is what keeps reduction finitary when rules raise weight sums.
    """
    if isinstance(precision, PrecisionCutoff):
        n = precision.n
    else:
        n = int(precision)
        if n < 1:
            raise DiamondError("precision must be at least 1")
    eq = check_equicontinuity(system, weight_data)
    if not eq.admitted:
        raise SeriesAdmissionError(
            "system is not equicontinuous for these weights: %r" % (eq.failures,)
        )
    tdcc = check_tdcc(system.order, weight_data)
    if not tdcc.certified:
        raise SeriesAdmissionError("descending chains not certified: %s" % tdcc.reason)

    threshold = Fraction(1 - n)
    dropped = [False]

    def keep(monomial) -> bool:
        if weight_data.exponent(monomial) >= threshold:
            return True
        dropped[0] = True
        return False

    coeffs = {m: c for m, c in element.terms if keep(m)}
    coeffs, _ = _reduce_loop(system, coeffs, max_steps, keep=keep)
    return SeriesNormalForm(Element.from_dict(coeffs), n, dropped[0])
