"""System file parsing, expression syntax, formatting and the command line."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .algebra_core import (
    DiamondError,
    Element,
    Fp,
    MonomialOrder,
    OrderKind,
    PrimeField,
    RationalField,
    ScalarError,
)
from .ambiguity import OverlapKind, critical_ambiguities
from .completion import (
    CompletionStatus,
    ConfluenceStatus,
    NotConfluentSystemError,
    check_confluence,
    complete,
    ideal_member,
)
from .monomial_theories import (
    CommutativeTheory,
    FreeMagmaTheory,
    FreeMonoidTheory,
    MixedTheory,
    PathAlgebraTheory,
    multiply_elements,
)
from .power_series import (
    SeriesAdmissionError,
    WeightData,
    check_equicontinuity,
    truncated_normal_form,
)
from .rewriting_engine import (
    DEFAULT_STEP_BUDGET,
    MultipleMaximaError,
    RewritingSystem,
    Rule,
    RuleError,
    StepBudgetExceededError,
    count_irreducible,
    irr_description,
    normal_form,
    normal_form_with_trail,
)


class ParseError(DiamondError):
    """Syntax or validation error carrying a source position."""

    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__("line %d, col %d: %s" % (line, col, message))
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


_SYMBOLS = "+-*^()/"


def _tokenize(text: str, line: int, col0: int) -> list:
    """Split an expression into tokens; columns are 1-based within the line."""
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        col = col0 + i
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("num", text[i:j], line, col))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(_Token("name", text[i:j], line, col))
            i = j
            continue
        if ch in _SYMBOLS:
            out.append(_Token(ch, ch, line, col))
            i += 1
            continue
        raise ParseError("unexpected character %r" % ch, line, col)
    return out


def _monomial_for_name(theory, name: str):
    """Resolve an identifier to a monomial payload, or None when unknown."""
    if isinstance(theory, FreeMonoidTheory):
        if name in theory.letters:
            return (name,)
    elif isinstance(theory, CommutativeTheory):
        if name in theory.letters:
            return theory.monomial(**{name: 1})
    elif isinstance(theory, MixedTheory):
        if name in theory.commutative_letters:
            return theory.monomial(**{name: 1})
        if name in theory.word_letters:
            return theory.monomial(word=(name,))
    elif isinstance(theory, FreeMagmaTheory):
        if name in theory.letters:
            return name
    elif isinstance(theory, PathAlgebraTheory):
        for arrow, _, _ in theory.arrows:
            if arrow == name:
                return theory.path(name)
        if name.startswith("e") and name[1:] in theory.vertices:
            return theory.vertex_path(name[1:])
    return None


class _ExprParser:
    """Recursive-descent parser for linear combinations of monomials."""

    def __init__(self, tokens: list, theory, field, line: int, end_col: int) -> None:
        self.toks = tokens
        self.pos = 0
        self.theory = theory
        self.field = field
        self.line = line
        self.end_col = end_col

    def _peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def _take(self):
        tok = self._peek()
        if tok is not None:
            self.pos += 1
        return tok

    def _fail(self, message: str, tok=None):
        col = tok.col if tok is not None else self.end_col
        raise ParseError(message, self.line, col)

    def parse(self) -> Element:
        if not self.toks:
            self._fail("empty expression")
        value = self._expr()
        tok = self._peek()
        if tok is not None:
            self._fail("unexpected %r" % tok.text, tok)
        return self._to_element(value)

    def _to_element(self, value) -> Element:
        tag, payload = value
        if tag == "elem":
            return payload
        if not payload:
            return Element.zero()
        try:
            unit = self.theory.one()
        except DiamondError:
            self._fail("a bare scalar is not an element of this theory")
        return Element(((unit, payload),))

    def _expr(self):
        terms = []
        sign = 1
        tok = self._peek()
        if tok is not None and tok.kind in "+-":
            sign = -1 if tok.kind == "-" else 1
            self._take()
        terms.append((sign, self._term()))
        while True:
            tok = self._peek()
            if tok is None or tok.kind not in "+-":
                break
            self._take()
            terms.append((-1 if tok.kind == "-" else 1, self._term()))
        if all(tag == "scalar" for _, (tag, _) in terms):
            total = self.field.zero
            for s, (_, c) in terms:
                total = total + c if s > 0 else total - c
            return ("scalar", total)
        result = Element.zero()
        for s, value in terms:
            piece = self._to_element(value)
            result = result + piece if s > 0 else result - piece
        return ("elem", result)

    def _term(self):
        factors = [self._factor()]
        while True:
            tok = self._peek()
            if tok is None or tok.kind != "*":
                break
            star = self._take()
            factors.append(self._factor())
        scalar = self.field.one
        elems = []
        for tag, payload in factors:
            if tag == "scalar":
                scalar = scalar * payload
            else:
                elems.append(payload)
        if not elems:
            return ("scalar", scalar)
        if isinstance(self.theory, FreeMagmaTheory) and len(elems) > 2:
            self._fail("the product is nonassociative; parenthesize it explicitly")
        product = elems[0]
        for e in elems[1:]:
            product = multiply_elements(self.theory, product, e)
        return ("elem", product.scaled(scalar))

    def _factor(self):
        value = self._atom()
        tok = self._peek()
        if tok is None or tok.kind != "^":
            return value
        caret = self._take()
        num = self._take()
        if num is None or num.kind != "num":
            self._fail("'^' needs a nonnegative integer exponent", caret)
        k = int(num.text)
        tag, payload = value
        if tag == "scalar":
            result = self.field.one
            for _ in range(k):
                result = result * payload
            return ("scalar", result)
        if isinstance(self.theory, FreeMagmaTheory):
            self._fail("powers are ambiguous in a nonassociative product", caret)
        if k == 0:
            return ("elem", self._to_element(("scalar", self.field.one)))
        result = payload
        for _ in range(k - 1):
            result = multiply_elements(self.theory, result, payload)
        return ("elem", result)

    def _atom(self):
        tok = self._take()
        if tok is None:
            self._fail("unexpected end of expression")
        if tok.kind == "num":
            numerator = int(tok.text)
            denominator = 1
            nxt = self._peek()
            if nxt is not None and nxt.kind == "/":
                self._take()
                den = self._take()
                if den is None or den.kind != "num":
                    self._fail("expected a denominator", nxt)
                denominator = int(den.text)
                if denominator == 0:
                    self._fail("zero denominator", den)
            try:
                return ("scalar", self.field.coeff(Fraction(numerator, denominator)))
            except ScalarError as exc:
                self._fail(str(exc), tok)
        if tok.kind == "name":
            m = _monomial_for_name(self.theory, tok.text)
            if m is None:
                self._fail("unknown generator %r" % tok.text, tok)
            return ("elem", Element(((m, self.field.one),)))
        if tok.kind == "(":
            value = self._expr()
            closing = self._take()
            if closing is None or closing.kind != ")":
                self._fail("unbalanced parenthesis", tok)
            return value
        self._fail("unexpected %r" % tok.text, tok)


def parse_expression(text: str, theory, field, line: int = 1, col0: int = 1) -> Element:
    """Parse one expression into an element over the given theory and field."""
    tokens = _tokenize(text, line, col0)
    return _ExprParser(tokens, theory, field, line, col0 + len(text)).parse()


@dataclass(frozen=True)
class SystemFile:
    """A parsed system plus the optional norm weights declared alongside it."""

    system: RewritingSystem
    weight_data: WeightData | None


_ORDER_KEYWORDS = {
    "deglex": OrderKind.DEGLEX,
    "weighted-deglex": OrderKind.WEIGHTED_DEGLEX,
    "lex": OrderKind.LEX,
    "series": OrderKind.SERIES_DEGLEX,
    "series-deglex": OrderKind.SERIES_DEGLEX,
}

_ORDER_NAMES = {
    OrderKind.DEGLEX: "deglex",
    OrderKind.WEIGHTED_DEGLEX: "weighted-deglex",
    OrderKind.LEX: "lex",
    OrderKind.SERIES_DEGLEX: "series",
}


class _SystemBuilder:
    """Accumulates header statements and rules into a validated system."""

    def __init__(self) -> None:
        self.theory_kind = None
        self.vars: list = []
        self.cvars: list = []
        self.vertices: list = []
        self.arrows: list = []
        self.field = RationalField()
        self.weights: list = []
        self.weights_line = None
        self.order = None
        self.theory = None
        self.rules: list = []
        self.rule_lines: list = []

    def _require_theory(self, line: int, col: int):
        if self.theory is not None:
            return self.theory
        kind = self.theory_kind
        if kind is None:
            raise ParseError("no theory declared", line, col)
        try:
            if kind == "assoc":
                self._need(self.vars, "vars", line, col)
                self.theory = FreeMonoidTheory(tuple(self.vars))
            elif kind == "commutative":
                self._need(self.vars, "vars", line, col)
                self.theory = CommutativeTheory(tuple(self.vars))
            elif kind == "mixed":
                self._need(self.cvars, "cvars", line, col)
                self._need(self.vars, "vars", line, col)
                self.theory = MixedTheory(tuple(self.cvars), tuple(self.vars))
            elif kind == "magma":
                self._need(self.vars, "vars", line, col)
                self.theory = FreeMagmaTheory(tuple(self.vars))
            else:
                self._need(self.vertices, "vertices", line, col)
                self._need(self.arrows, "arrow", line, col)
                for name, src, tgt in self.arrows:
                    if src not in self.vertices or tgt not in self.vertices:
                        raise ParseError(
                            "arrow %s references an unknown vertex" % name, line, col
                        )
                self.theory = PathAlgebraTheory(tuple(self.vertices), tuple(self.arrows))
        except DiamondError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), line, col)
        return self.theory

    @staticmethod
    def _need(values, statement, line, col):
        if not values:
            raise ParseError("theory needs a %r statement" % statement, line, col)

    def statement(self, fragment: str, line: int, frag_col: int) -> None:
        stripped = fragment.strip()
        if not stripped:
            return
        col = frag_col + (len(fragment) - len(fragment.lstrip()))
        words = stripped.split()
        keyword = words[0]
        if keyword == "theory":
            if self.theory_kind is not None:
                raise ParseError("duplicate theory statement", line, col)
            if len(words) != 2 or words[1] not in ("assoc", "commutative", "mixed", "magma", "path"):
                raise ParseError(
                    "expected one of: theory assoc|commutative|mixed|magma|path", line, col
                )
            self.theory_kind = words[1]
        elif keyword in ("vars", "cvars", "vertices"):
            target = {"vars": self.vars, "cvars": self.cvars, "vertices": self.vertices}[keyword]
            if target:
                raise ParseError("duplicate %s statement" % keyword, line, col)
            names = words[1:]
            if not names or len(set(names)) != len(names):
                raise ParseError("%s needs distinct names" % keyword, line, col)
            target.extend(names)
        elif keyword == "arrow":
            parts = [w.rstrip(":") for w in words[1:] if w not in (":", "->")]
            parts = [p for p in parts if p]
            if len(parts) != 3:
                raise ParseError("expected: arrow <name> <source> <target>", line, col)
            name = parts[0]
            if any(name == existing for existing, _, _ in self.arrows):
                raise ParseError("duplicate arrow %r" % name, line, col)
            self.arrows.append((name, parts[1], parts[2]))
        elif keyword == "field":
            if len(words) != 2:
                raise ParseError("expected: field rational | field <prime>", line, col)
            if words[1] in ("rational", "QQ"):
                self.field = RationalField()
            elif words[1].isdigit():
                try:
                    self.field = PrimeField(int(words[1]))
                except ScalarError as exc:
                    raise ParseError(str(exc), line, col)
            else:
                raise ParseError("expected: field rational | field <prime>", line, col)
        elif keyword == "weights":
            if len(words) < 2:
                raise ParseError("weights needs name:value entries", line, col)
            for entry in words[1:]:
                name, sep, value = entry.partition(":")
                if not sep or not name:
                    raise ParseError("weight entries look like x:-1", line, col)
                if any(name == seen for seen, _ in self.weights):
                    raise ParseError("duplicate weight for %r" % name, line, col)
                try:
                    self.weights.append((name, Fraction(value)))
                except (ValueError, ZeroDivisionError):
                    raise ParseError("bad weight value %r" % value, line, col)
            if self.weights_line is None:
                self.weights_line = (line, col)
        elif keyword == "order":
            if self.order is not None:
                raise ParseError("duplicate order statement", line, col)
            if self.rules:
                raise ParseError("declare the order before rules", line, col)
            if len(words) < 2 or words[1] not in _ORDER_KEYWORDS:
                raise ParseError(
                    "expected one of: order deglex|weighted-deglex|lex|series", line, col
                )
            kind = _ORDER_KEYWORDS[words[1]]
            theory = self._require_theory(line, col)
            joined = "".join(words[2:])
            if "<" in joined:
                generators = tuple(joined.split("<"))
            elif ">" in joined:
                generators = tuple(reversed(joined.split(">")))
            elif words[2:]:
                generators = tuple(words[2:])
            else:
                generators = tuple(theory.generator_names())
            weights = ()
            if kind in (OrderKind.WEIGHTED_DEGLEX, OrderKind.SERIES_DEGLEX):
                if not self.weights:
                    raise ParseError(
                        "declare weights before a weighted order", line, col
                    )
                weights = tuple(self.weights)
            try:
                self.order = MonomialOrder(kind, theory, generators, weights)
            except DiamondError as exc:
                raise ParseError(str(exc), line, col)
        elif keyword == "rule":
            if self.order is None:
                self._default_order(line, col)
            body = stripped[len(keyword):]
            body_col = col + len(keyword)
            idx = body.find("->")
            if idx < 0:
                raise ParseError("a rule looks like: rule <lead> -> <element>", line, col)
            lead_elem = parse_expression(
                body[:idx], self.theory, self.field, line, body_col
            )
            lower = parse_expression(
                body[idx + 2 :], self.theory, self.field, line, body_col + idx + 2
            )
            if len(lead_elem.terms) != 1 or lead_elem.terms[0][1] != self.field.one:
                raise ParseError("rule lead must be a single monic monomial", line, col)
            rule = Rule(lead_elem.terms[0][0], lower)
            try:
                RewritingSystem(self.theory, self.order, (rule,), self.field)
            except RuleError as exc:
                message = str(exc)
                if message.startswith("rule 0: "):
                    message = message[len("rule 0: ") :]
                raise ParseError(message, line, col)
            self.rules.append(rule)
            self.rule_lines.append((line, col))
        else:
            raise ParseError("unknown statement %r" % keyword, line, col)

    def _default_order(self, line: int, col: int) -> None:
        """Fall back to deglex over the declaration order of the generators."""
        theory = self._require_theory(line, col)
        self.order = MonomialOrder(
            OrderKind.DEGLEX, theory, tuple(theory.generator_names())
        )

    def finish(self) -> SystemFile:
        if self.order is None:
            self._default_order(1, 1)
        system = RewritingSystem(self.theory, self.order, tuple(self.rules), self.field)
        weight_data = None
        if self.weights:
            w_line, w_col = self.weights_line
            try:
                weight_data = WeightData(self.theory, tuple(self.weights))
            except DiamondError as exc:
                raise ParseError(str(exc), w_line, w_col)
        if self.order.kind is OrderKind.SERIES_DEGLEX:
            report = check_equicontinuity(system, weight_data)
            if not report.admitted:
                index, lower_exp, lead_exp = report.failures[0]
                r_line, r_col = self.rule_lines[index]
                raise ParseError(
                    "inadmissible series rule: lower part has norm exponent %s, "
                    "lead only %s" % (lower_exp, lead_exp),
                    r_line,
                    r_col,
                )
        return SystemFile(system, weight_data)


def parse_system_file(text: str) -> SystemFile:
    """Parse the line-oriented system format; ';' also separates statements."""
    builder = _SystemBuilder()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        offset = 0
        for fragment in line.split(";"):
            builder.statement(fragment, line_no, offset + 1)
            offset += len(fragment) + 1
    return builder.finish()


def parse_system(text: str) -> RewritingSystem:
    """Parse the system format and return the validated system."""
    return parse_system_file(text).system


def format_scalar(c) -> str:
    """Render a coefficient canonically; residues print their representative."""
    if isinstance(c, Fp):
        return str(c.value)
    return str(c)


def _terms_descending(order, element: Element) -> list:
    # Display follows the written convention: highest degree first, the order
    # key breaking ties; series orders instead lead with the most significant
    # (highest-norm) term.
    th = order.theory
    if getattr(order, "uses_total_key", True):
        if getattr(order, "kind", None) is OrderKind.SERIES_DEGLEX:
            key = lambda t: order.sort_key(t[0])
        else:
            key = lambda t: (th.degree(t[0]), order.sort_key(t[0]))
        return sorted(element.terms, key=key, reverse=True)
    return sorted(element.terms, key=lambda t: (-th.degree(t[0]), th.serialize(t[0])))


def format_element(theory, order, element: Element) -> str:
    """Render an element with terms in descending order."""
    if element.is_zero():
        return "0"
    pieces = []
    for m, c in _terms_descending(order, element):
        mono = theory.serialize(m)
        if isinstance(c, Fp):
            sign, mag = "+", format_scalar(c)
            is_one = c.value == 1
        else:
            sign = "-" if c < 0 else "+"
            mag = format_scalar(-c if c < 0 else c)
            is_one = abs(c) == 1
        if mono == "1":
            body = mag
        elif is_one:
            body = mono
        else:
            body = "%s*%s" % (mag, mono)
        if not pieces:
            pieces.append(body if sign == "+" else "-%s" % body)
        else:
            pieces.append("%s %s" % (sign, body))
    return " ".join(pieces)


def format_rule(theory, order, rule: Rule) -> str:
    return "%s -> %s" % (theory.serialize(rule.lead), format_element(theory, order, rule.lower))


def format_system(system: RewritingSystem, weight_data: WeightData | None = None) -> str:
    """Render a system as parseable statements, one per line."""
    th = system.theory
    lines = []
    if isinstance(th, FreeMonoidTheory):
        lines.append("theory assoc")
        lines.append("vars %s" % " ".join(th.letters))
    elif isinstance(th, CommutativeTheory):
        lines.append("theory commutative")
        lines.append("vars %s" % " ".join(th.letters))
    elif isinstance(th, MixedTheory):
        lines.append("theory mixed")
        lines.append("cvars %s" % " ".join(th.commutative_letters))
        lines.append("vars %s" % " ".join(th.word_letters))
    elif isinstance(th, FreeMagmaTheory):
        lines.append("theory magma")
        lines.append("vars %s" % " ".join(th.letters))
    else:
        lines.append("theory path")
        lines.append("vertices %s" % " ".join(th.vertices))
        for name, src, tgt in th.arrows:
            lines.append("arrow %s %s %s" % (name, src, tgt))
    if isinstance(system.field, PrimeField):
        lines.append("field %d" % system.field.p)
    weights = weight_data.weights if weight_data is not None else system.order.weights
    if weights:
        lines.append("weights %s" % " ".join("%s:%s" % (n, w) for n, w in weights))
    lines.append(
        "order %s %s"
        % (_ORDER_NAMES[system.order.kind], "<".join(system.order.generators))
    )
    for rule in system.rules:
        lines.append("rule %s" % format_rule(th, system.order, rule))
    return "\n".join(lines) + "\n"


def _emit(records: list, args) -> None:
    if args.format == "json-lines":
        for record in records:
            print(json.dumps(record, sort_keys=True))
    else:
        for record in records:
            print(record["text"])


def _load(path: str) -> SystemFile:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_system_file(handle.read())


def _cmd_check(args) -> int:
    sf = _load(args.file)
    system = sf.system
    th, order = system.theory, system.order
    verdict = check_confluence(system, args.max_steps)
    if verdict.status is ConfluenceStatus.CONFLUENT:
        _emit(
            [
                {
                    "event": "verdict",
                    "status": "confluent",
                    "checked": verdict.checked,
                    "text": "confluent (%d ambiguities resolved)" % verdict.checked,
                }
            ],
            args,
        )
        return 0
    if verdict.status is ConfluenceStatus.NOT_CONFLUENT:
        cert = verdict.witness
        sup = th.serialize(cert.ambiguity.superposition)
        remainder = format_element(th, order, cert.remainder)
        _emit(
            [
                {
                    "event": "verdict",
                    "status": "not-confluent",
                    "checked": verdict.checked,
                    "superposition": sup,
                    "remainder": remainder,
                    "text": "not confluent: ambiguity at %s leaves %s" % (sup, remainder),
                }
            ],
            args,
        )
        return 1
    print("inconclusive: step budget exhausted after %d ambiguities" % verdict.checked, file=sys.stderr)
    return 2


def _cmd_complete(args) -> int:
    sf = _load(args.file)
    report = complete(sf.system, args.max_degree, args.max_rules, args.max_steps)
    system = report.system
    text = format_system(system, sf.weight_data)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    records = [
        {
            "event": "completion",
            "status": report.status.value,
            "rules": len(system.rules),
            "added": len(report.added),
            "dropped": len(report.dropped),
            "pairs_processed": report.pairs_processed,
            "pairs_skipped": report.pairs_skipped,
            "text": "status: %s (%d rules, %d added, %d dropped)"
            % (report.status.value, len(system.rules), len(report.added), len(report.dropped)),
        }
    ]
    th, order = system.theory, system.order
    for rule in system.rules:
        rendered = format_rule(th, order, rule)
        records.append({"event": "rule", "rule": rendered, "text": "rule %s" % rendered})
    _emit(records, args)
    return 0 if report.status is CompletionStatus.COMPLETE else 2


def _cmd_nf(args) -> int:
    sf = _load(args.file)
    system = sf.system
    th, order = system.theory, system.order
    element = parse_expression(args.expression, th, system.field)
    if args.precision is not None:
        if sf.weight_data is None:
            print("no weights declared in the system file", file=sys.stderr)
            return 3
        result = truncated_normal_form(
            system, sf.weight_data, element, args.precision, args.max_steps
        )
        rendered = format_element(th, order, result.representative)
        record = {
            "event": "normal-form",
            "result": rendered,
            "precision": result.precision,
            "truncated": result.truncated,
            "text": rendered,
        }
        _emit([record], args)
        return 0
    if not order.is_well_founded():
        print(
            "the order is not well-founded, so plain reduction may not terminate;"
            " pass --precision N",
            file=sys.stderr,
        )
        return 3
    records = []
    if args.trail:
        result, trail = normal_form_with_trail(system, element, args.max_steps)
        for i, step in enumerate(trail, start=1):
            mono = th.serialize(step.monomial)
            records.append(
                {
                    "event": "step",
                    "index": i,
                    "rule": step.rule_index,
                    "monomial": mono,
                    "text": "step %d: rule %d at %s" % (i, step.rule_index, mono),
                }
            )
    else:
        result = normal_form(system, element, args.max_steps)
    rendered = format_element(th, order, result)
    records.append({"event": "normal-form", "result": rendered, "text": rendered})
    _emit(records, args)
    return 0


def _cmd_pairs(args) -> int:
    sf = _load(args.file)
    system = sf.system
    th = system.theory
    records = []
    for amb in critical_ambiguities(system):
        sup = th.serialize(amb.superposition)
        kind = "overlap" if amb.kind is OverlapKind.OVERLAP else "inclusion"
        records.append(
            {
                "event": "pair",
                "kind": kind,
                "rules": [amb.rule1, amb.rule2],
                "superposition": sup,
                "text": "%s rules (%d, %d) at %s" % (kind, amb.rule1, amb.rule2, sup),
            }
        )
    records.append({"event": "total", "count": len(records), "text": "%d ambiguities" % len(records)})
    _emit(records, args)
    return 0


def _cmd_irr(args) -> int:
    sf = _load(args.file)
    system = sf.system
    th = system.theory
    description = irr_description(system)
    leads = [th.serialize(m) for m in description.leads]
    records = [
        {
            "event": "irr",
            "semantics": description.semantics,
            "forbidden": leads,
            "text": "forbidden %ss: %s" % (description.semantics, ", ".join(leads) or "none"),
        }
    ]
    for d, count in enumerate(count_irreducible(system, args.max_degree)):
        records.append(
            {"event": "count", "degree": d, "count": count, "text": "degree %d: %d" % (d, count)}
        )
    _emit(records, args)
    return 0


def _cmd_member(args) -> int:
    sf = _load(args.file)
    system = sf.system
    if not system.order.is_well_founded():
        print(
            "membership needs a well-founded order; this system reduces only"
            " to a precision",
            file=sys.stderr,
        )
        return 3
    element = parse_expression(args.expression, system.theory, system.field)
    verdict = ideal_member(system, element, args.max_steps)
    _emit(
        [
            {
                "event": "member",
                "value": verdict,
                "text": "member" if verdict else "not a member",
            }
        ],
        args,
    )
    return 0 if verdict else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diamond",
        description="Reduction systems, confluence checks and completion over five monomial theories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="system file")
        p.add_argument("--max-steps", type=int, default=DEFAULT_STEP_BUDGET)
        p.add_argument("--format", choices=("text", "json-lines"), default="text")

    p = sub.add_parser("check", help="decide confluence by resolving every ambiguity")
    common(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("complete", help="saturate the system with oriented remainders")
    common(p)
    p.add_argument("--max-degree", type=int, default=12)
    p.add_argument("--max-rules", type=int, default=500)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(handler=_cmd_complete)

    p = sub.add_parser("nf", help="reduce an expression to normal form")
    common(p)
    p.add_argument("expression")
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("--trail", action="store_true")
    p.set_defaults(handler=_cmd_nf)

    p = sub.add_parser("pairs", help="list the critical ambiguities")
    common(p)
    p.set_defaults(handler=_cmd_pairs)

    p = sub.add_parser("irr", help="describe and count irreducible monomials")
    common(p)
    p.add_argument("--max-degree", type=int, default=6)
    p.set_defaults(handler=_cmd_irr)

    p = sub.add_parser("member", help="decide ideal membership on a confluent system")
    common(p)
    p.add_argument("expression")
    p.set_defaults(handler=_cmd_member)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except StepBudgetExceededError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (NotConfluentSystemError, MultipleMaximaError) as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except SeriesAdmissionError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except DiamondError as exc:
        print(str(exc), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
