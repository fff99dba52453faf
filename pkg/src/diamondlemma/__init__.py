"""Reduction systems, confluence and completion over five monomial theories."""

from .algebra_core import (
    DiamondError,
    Element,
    Fp,
    MonomialOrder,
    OrderError,
    OrderKind,
    PrecisionCutoff,
    PrimeField,
    RationalField,
    Rel,
    ScalarError,
    TheoryMismatchError,
    compare,
    leading_monomials,
)
from .ambiguity import (
    Ambiguity,
    ResolutionCertificate,
    critical_ambiguities,
    resolve,
    s_polynomial,
    second_criterion_filter,
)
from .cli_io import (
    ParseError,
    SystemFile,
    format_element,
    format_rule,
    format_scalar,
    format_system,
    main,
    parse_expression,
    parse_system,
    parse_system_file,
)
from .completion import (
    AddedRule,
    CompletionReport,
    CompletionStatus,
    ConfluenceStatus,
    ConfluenceVerdict,
    NotConfluentSystemError,
    check_confluence,
    complete,
    drop_redundant,
    ideal_member,
)
from .monomial_theories import (
    CommutativeTheory,
    FreeMagmaTheory,
    FreeMonoidTheory,
    MixedTheory,
    OverlapDatum,
    OverlapKind,
    PathAlgebraTheory,
    Theory,
    multiply_elements,
)
from .power_series import (
    EquicontinuityReport,
    SeriesAdmissionError,
    SeriesNormalForm,
    TdccReport,
    WeightData,
    check_equicontinuity,
    check_tdcc,
    norm,
    truncated_normal_form,
)
from .rewriting_engine import (
    DEFAULT_STEP_BUDGET,
    ForbiddenFactorSet,
    MultipleMaximaError,
    RewriteStep,
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

__version__ = "0.1.0"

__all__ = [
    "AddedRule",
    "Ambiguity",
    "CommutativeTheory",
    "CompletionReport",
    "CompletionStatus",
    "ConfluenceStatus",
    "ConfluenceVerdict",
    "DEFAULT_STEP_BUDGET",
    "DiamondError",
    "Element",
    "EquicontinuityReport",
    "ForbiddenFactorSet",
    "Fp",
    "FreeMagmaTheory",
    "FreeMonoidTheory",
    "MixedTheory",
    "MonomialOrder",
    "MultipleMaximaError",
    "NotConfluentSystemError",
    "OrderError",
    "OrderKind",
    "OverlapDatum",
    "OverlapKind",
    "ParseError",
    "PathAlgebraTheory",
    "PrecisionCutoff",
    "PrimeField",
    "RationalField",
    "Rel",
    "ResolutionCertificate",
    "RewriteStep",
    "RewritingSystem",
    "Rule",
    "RuleError",
    "ScalarError",
    "SeriesAdmissionError",
    "SeriesNormalForm",
    "StepBudgetExceededError",
    "SystemFile",
    "TdccReport",
    "Theory",
    "TheoryMismatchError",
    "WeightData",
    "ZeroElementError",
    "check_confluence",
    "check_equicontinuity",
    "check_tdcc",
    "compare",
    "complete",
    "count_irreducible",
    "critical_ambiguities",
    "drop_redundant",
    "format_element",
    "format_rule",
    "format_scalar",
    "format_system",
    "ideal_member",
    "irr_description",
    "is_irreducible_monomial",
    "leading_monomials",
    "main",
    "multiply_elements",
    "norm",
    "normal_form",
    "normal_form_with_trail",
    "orient",
    "parse_expression",
    "parse_system",
    "parse_system_file",
    "reduce_once",
    "resolve",
    "s_polynomial",
    "second_criterion_filter",
    "truncated_normal_form",
]
