"""Five monomial theories: words, power products, their blend, trees and paths."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .algebra_core import DiamondError, Element, TheoryMismatchError


class OverlapKind(Enum):
    """Shape of a minimal superposition of two leading monomials."""

    OVERLAP = "overlap"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class OverlapDatum:
    """Minimal superposition with the two contexts placing each monomial.

    ``ctx1`` applied to the first monomial and ``ctx2`` applied to the second
    both give ``superposition``. For inclusions, ``inner`` names which argument
    (1 or 2) occurs inside the other's monomial.
    """

    superposition: object
    ctx1: object
    ctx2: object
    kind: OverlapKind
    inner: int | None = None


def _exp_gcd(a: tuple, b: tuple) -> tuple:
    return tuple(min(x, y) for x, y in zip(a, b))


def _exp_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _exp_sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _exp_add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _exp_le(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _word_occurrences(haystack: tuple, needle: tuple) -> list[int]:
    """List start positions of a contiguous factor, including the empty factor."""
    n, h = len(needle), len(haystack)
    return [i for i in range(h - n + 1) if haystack[i : i + n] == needle]


def multiply_elements(theory, a: Element, b: Element) -> Element:
    """Bilinear product of two elements, dropping vanishing monomial products."""
    out: dict = {}
    for m1, c1 in a.terms:
        for m2, c2 in b.terms:
            m = theory.multiply(m1, m2)
            if m is None:
                continue
            c = c1 * c2
            prev = out.get(m)
            s = c if prev is None else prev + c
            if s:
                out[m] = s
            elif prev is not None:
                del out[m]
    return Element.from_dict(out)


def _compositions(total: int, parts: int):
    """Yield tuples of nonnegative integers with the given sum."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


class Theory:
    """Shared behaviour; concrete theories implement the payload geometry."""

    def supports_lex(self) -> bool:
        return False

    def one(self):
        raise DiamondError("%s has no unit monomial" % self.describe())

    def multiply(self, a, b):
        """Product of two monomials; None when the product vanishes."""
        raise DiamondError("product is not defined for %s" % self.describe())

    def uniform_equivalent(self, a, b) -> bool:
        """Decide whether two monomials may appear in the same rule."""
        return True

    def lcm_superposition(self, a, b):
        raise DiamondError("lcm superposition is only defined for the commutative theory")

    def apply_context_to_element(self, ctx, element: Element) -> Element:
        """Apply a context to every term, dropping products that vanish."""
        out: dict = {}
        for m, c in element.terms:
            image = self.apply_context(ctx, m)
            if image is None:
                continue
            prev = out.get(image)
            s = c if prev is None else prev + c
            if s:
                out[image] = s
            elif prev is not None:
                del out[image]
        return Element.from_dict(out)

    def lex_encoding(self, m, order):
        raise DiamondError("lex is only well-founded for the commutative theory")

    def check_monomial(self, m) -> None:
        if not self.validate_monomial(m):
            raise TheoryMismatchError("monomial %r does not belong to %s" % (m, self.describe()))


@dataclass(frozen=True)
class FreeMonoidTheory(Theory):
    """Words over a finite alphabet under concatenation."""

    letters: tuple

    def describe(self) -> str:
        return "assoc(%s)" % ",".join(self.letters)

    def generator_names(self) -> tuple:
        return self.letters

    def one(self) -> tuple:
        return ()

    def word(self, *letters: str) -> tuple:
        m = tuple(letters)
        self.check_monomial(m)
        return m

    def multiply(self, a, b):
        return a + b

    def validate_monomial(self, m) -> bool:
        return isinstance(m, tuple) and all(x in self.letters for x in m)

    def degree(self, m) -> int:
        return len(m)

    def weight_sum(self, m, order) -> Fraction:
        return sum((order.weight_of(x) for x in m), Fraction(0))

    def rank_encoding(self, m, order) -> tuple:
        return tuple(order.rank(x) for x in m)

    def serialize(self, m) -> str:
        if not m:
            return "1"
        parts = []
        for letter, run in itertools.groupby(m):
            n = len(list(run))
            parts.append(letter if n == 1 else "%s^%d" % (letter, n))
        return "*".join(parts)

    def identity_context(self, m) -> tuple:
        return ((), ())

    def apply_context(self, ctx, m):
        left, right = ctx
        return left + m + right

    def compose_contexts(self, outer, inner):
        lo, ro = outer
        li, ri = inner
        return (lo + li, ri + ro)

    def divisions(self, mu, nu) -> list:
        return [(mu[:i], mu[i + len(nu) :]) for i in _word_occurrences(mu, nu)]

    def overlaps(self, mu1, mu2) -> list:
        data = []
        l1, l2 = len(mu1), len(mu2)
        if mu1 == mu2:
            ident = self.identity_context(mu1)
            data.append(OverlapDatum(mu1, ident, ident, OverlapKind.INCLUSION, inner=2))
            for t in range(1, l1):
                if mu1[l1 - t :] == mu1[:t]:
                    sup = mu1 + mu1[t:]
                    data.append(
                        OverlapDatum(sup, ((), mu1[t:]), (mu1[: l1 - t], ()), OverlapKind.OVERLAP)
                    )
            return data
        for t in range(1, min(l1, l2)):
            if mu1[l1 - t :] == mu2[:t]:
                sup = mu1 + mu2[t:]
                data.append(
                    OverlapDatum(sup, ((), mu2[t:]), (mu1[: l1 - t], ()), OverlapKind.OVERLAP)
                )
            if mu2[l2 - t :] == mu1[:t]:
                sup = mu2 + mu1[t:]
                data.append(
                    OverlapDatum(sup, (mu2[: l2 - t], ()), ((), mu1[t:]), OverlapKind.OVERLAP)
                )
        if l2 < l1:
            for ctx in self.divisions(mu1, mu2):
                data.append(
                    OverlapDatum(mu1, self.identity_context(mu1), ctx, OverlapKind.INCLUSION, inner=2)
                )
        elif l1 < l2:
            for ctx in self.divisions(mu2, mu1):
                data.append(
                    OverlapDatum(mu2, ctx, self.identity_context(mu2), OverlapKind.INCLUSION, inner=1)
                )
        return data

    def monomials_of_degree(self, d):
        return itertools.product(self.letters, repeat=d) if d >= 0 else iter(())


@dataclass(frozen=True)
class CommutativeTheory(Theory):
    """Power products over a finite variable set."""

    letters: tuple

    def describe(self) -> str:
        return "commutative(%s)" % ",".join(self.letters)

    def supports_lex(self) -> bool:
        return True

    def generator_names(self) -> tuple:
        return self.letters

    def one(self) -> tuple:
        return (0,) * len(self.letters)

    def monomial(self, **exponents: int) -> tuple:
        unknown = set(exponents) - set(self.letters)
        if unknown:
            raise TheoryMismatchError("unknown variables %s" % sorted(unknown))
        return tuple(exponents.get(x, 0) for x in self.letters)

    def multiply(self, a, b):
        return _exp_add(a, b)

    def validate_monomial(self, m) -> bool:
        return (
            isinstance(m, tuple)
            and len(m) == len(self.letters)
            and all(isinstance(e, int) and e >= 0 for e in m)
        )

    def degree(self, m) -> int:
        return sum(m)

    def weight_sum(self, m, order) -> Fraction:
        return sum(
            (order.weight_of(x) * e for x, e in zip(self.letters, m)), Fraction(0)
        )

    def _exps_by_falling_rank(self, m, order) -> tuple:
        index = {x: i for i, x in enumerate(self.letters)}
        return tuple(m[index[g]] for g in reversed(order.generators))

    def rank_encoding(self, m, order) -> tuple:
        return self._exps_by_falling_rank(m, order)

    def lex_encoding(self, m, order) -> tuple:
        return self._exps_by_falling_rank(m, order)

    def serialize(self, m) -> str:
        parts = []
        for x, e in zip(self.letters, m):
            if e == 1:
                parts.append(x)
            elif e > 1:
                parts.append("%s^%d" % (x, e))
        return "*".join(parts) if parts else "1"

    def identity_context(self, m) -> tuple:
        return self.one()

    def apply_context(self, ctx, m):
        return _exp_add(ctx, m)

    def compose_contexts(self, outer, inner):
        return _exp_add(outer, inner)

    def divisions(self, mu, nu) -> list:
        return [_exp_sub(mu, nu)] if _exp_le(nu, mu) else []

    def lcm_superposition(self, a, b):
        lcm = _exp_lcm(a, b)
        return lcm, _exp_sub(lcm, a), _exp_sub(lcm, b)

    def overlaps(self, mu1, mu2) -> list:
        gcd = _exp_gcd(mu1, mu2)
        if not any(gcd):
            return []
        lcm, c1, c2 = self.lcm_superposition(mu1, mu2)
        if lcm == mu1:
            kind, inner = OverlapKind.INCLUSION, 2
        elif lcm == mu2:
            kind, inner = OverlapKind.INCLUSION, 1
        else:
            kind, inner = OverlapKind.OVERLAP, None
        return [OverlapDatum(lcm, c1, c2, kind, inner=inner)]

    def monomials_of_degree(self, d):
        return _compositions(d, len(self.letters)) if d >= 0 else iter(())


@dataclass(frozen=True)
class MixedTheory(Theory):
    """Power products in central variables times words in free letters."""

    commutative_letters: tuple
    word_letters: tuple

    def describe(self) -> str:
        return "mixed(%s;%s)" % (
            ",".join(self.commutative_letters),
            ",".join(self.word_letters),
        )

    def generator_names(self) -> tuple:
        return self.commutative_letters + self.word_letters

    def one(self) -> tuple:
        return ((0,) * len(self.commutative_letters), ())

    def monomial(self, word=(), **exponents: int) -> tuple:
        unknown = set(exponents) - set(self.commutative_letters)
        if unknown:
            raise TheoryMismatchError("unknown central variables %s" % sorted(unknown))
        m = (
            tuple(exponents.get(x, 0) for x in self.commutative_letters),
            tuple(word),
        )
        self.check_monomial(m)
        return m

    def multiply(self, a, b):
        return (_exp_add(a[0], b[0]), a[1] + b[1])

    def validate_monomial(self, m) -> bool:
        if not (isinstance(m, tuple) and len(m) == 2):
            return False
        exps, word = m
        return (
            isinstance(exps, tuple)
            and len(exps) == len(self.commutative_letters)
            and all(isinstance(e, int) and e >= 0 for e in exps)
            and isinstance(word, tuple)
            and all(x in self.word_letters for x in word)
        )

    def degree(self, m) -> int:
        return sum(m[0]) + len(m[1])

    def weight_sum(self, m, order) -> Fraction:
        exps, word = m
        total = sum(
            (order.weight_of(x) * e for x, e in zip(self.commutative_letters, exps)),
            Fraction(0),
        )
        return total + sum((order.weight_of(x) for x in word), Fraction(0))

    def rank_encoding(self, m, order) -> tuple:
        exps, word = m
        index = {x: i for i, x in enumerate(self.commutative_letters)}
        comm = tuple(
            exps[index[g]] for g in reversed(order.generators) if g in index
        )
        return (len(word), tuple(order.rank(x) for x in word), comm)

    def serialize(self, m) -> str:
        exps, word = m
        parts = []
        for x, e in zip(self.commutative_letters, exps):
            if e == 1:
                parts.append(x)
            elif e > 1:
                parts.append("%s^%d" % (x, e))
        for letter, run in itertools.groupby(word):
            n = len(list(run))
            parts.append(letter if n == 1 else "%s^%d" % (letter, n))
        return "*".join(parts) if parts else "1"

    def identity_context(self, m) -> tuple:
        return ((0,) * len(self.commutative_letters), (), ())

    def apply_context(self, ctx, m):
        mult, left, right = ctx
        exps, word = m
        return (_exp_add(mult, exps), left + word + right)

    def compose_contexts(self, outer, inner):
        mo, lo, ro = outer
        mi, li, ri = inner
        return (_exp_add(mo, mi), lo + li, ri + ro)

    def divisions(self, mu, nu) -> list:
        (e1, w1), (e2, w2) = mu, nu
        if not _exp_le(e2, e1):
            return []
        mult = _exp_sub(e1, e2)
        return [(mult, w1[:i], w1[i + len(w2) :]) for i in _word_occurrences(w1, w2)]

    def overlaps(self, mu1, mu2) -> list:
        (c1, w1), (c2, w2) = mu1, mu2
        shared = _exp_gcd(c1, c2)
        lcm = _exp_lcm(c1, c2)
        m1, m2 = _exp_sub(lcm, c1), _exp_sub(lcm, c2)
        data = []

        def emit(word, ctx1_words, ctx2_words, kind, inner=None):
            sup = (lcm, word)
            ctx1 = (m1,) + ctx1_words
            ctx2 = (m2,) + ctx2_words
            data.append(OverlapDatum(sup, ctx1, ctx2, kind, inner=inner))

        if mu1 == mu2:
            emit(w1, ((), ()), ((), ()), OverlapKind.INCLUSION, inner=2)
            l1 = len(w1)
            for t in range(1, l1):
                if w1[l1 - t :] == w1[:t]:
                    emit(w1 + w1[t:], ((), w1[t:]), (w1[: l1 - t], ()), OverlapKind.OVERLAP)
            if w1 and any(shared):
                emit(w1 + w1, ((), w1), (w1, ()), OverlapKind.OVERLAP)
            return data

        l1, l2 = len(w1), len(w2)
        for t in range(1, min(l1, l2)):
            if w1[l1 - t :] == w2[:t]:
                emit(w1 + w2[t:], ((), w2[t:]), (w1[: l1 - t], ()), OverlapKind.OVERLAP)
            if w2[l2 - t :] == w1[:t]:
                emit(w2 + w1[t:], (w2[: l2 - t], ()), ((), w1[t:]), OverlapKind.OVERLAP)
        if w1 == w2:
            # Equal word parts with distinct central parts: one superposition.
            if _exp_le(c2, c1):
                emit(w1, ((), ()), ((), ()), OverlapKind.INCLUSION, inner=2)
            elif _exp_le(c1, c2):
                emit(w1, ((), ()), ((), ()), OverlapKind.INCLUSION, inner=1)
            else:
                emit(w1, ((), ()), ((), ()), OverlapKind.OVERLAP)
        elif l2 < l1 and (w2 or any(shared)):
            # Word inclusions; for an empty inner word the overlap is purely
            # central, so coprime central parts make it a discarded montage.
            for i in _word_occurrences(w1, w2):
                emit(w1, ((), ()), (w1[:i], w1[i + l2 :]), OverlapKind.INCLUSION, inner=2)
        elif l1 < l2 and (w1 or any(shared)):
            for i in _word_occurrences(w2, w1):
                emit(w2, (w2[:i], w2[i + l1 :]), ((), ()), OverlapKind.INCLUSION, inner=1)
        if w1 and w2 and any(shared):
            # Adjacent word placements still interact through shared central
            # variables; both adjacencies are minimal superpositions.
            emit(w1 + w2, ((), w2), (w1, ()), OverlapKind.OVERLAP)
            emit(w2 + w1, (w2, ()), ((), w1), OverlapKind.OVERLAP)
        return data

    def monomials_of_degree(self, d):
        for k in range(d + 1):
            for word in itertools.product(self.word_letters, repeat=d - k):
                for exps in _compositions(k, len(self.commutative_letters)):
                    yield (exps, word)


_HOLE = None


def _tree_leaves(tree) -> int:
    if isinstance(tree, str):
        return 1
    return _tree_leaves(tree[0]) + _tree_leaves(tree[1])


def _subtree_contexts(tree, target, build):
    """Collect contexts for occurrences of target inside tree, preorder."""
    found = []
    if tree == target:
        found.append(build(_HOLE))
    if not isinstance(tree, str):
        left, right = tree
        found.extend(_subtree_contexts(left, target, lambda hole: build((hole, right))))
        found.extend(_subtree_contexts(right, target, lambda hole: build((left, hole))))
    return found


def _plug(ctx, filler):
    if ctx is _HOLE:
        return filler
    left, right = ctx
    if _has_hole(left):
        return (_plug(left, filler), right)
    return (left, _plug(right, filler))


def _has_hole(ctx) -> bool:
    if ctx is _HOLE:
        return True
    if isinstance(ctx, str):
        return False
    return _has_hole(ctx[0]) or _has_hole(ctx[1])


@dataclass(frozen=True)
class FreeMagmaTheory(Theory):
    """Binary trees with labelled leaves under non-associative product."""

    letters: tuple

    def describe(self) -> str:
        return "magma(%s)" % ",".join(self.letters)

    def generator_names(self) -> tuple:
        return self.letters

    def leaf(self, letter: str):
        if letter not in self.letters:
            raise TheoryMismatchError("unknown letter %r" % letter)
        return letter

    def node(self, left, right):
        return (left, right)

    def multiply(self, a, b):
        return (a, b)

    def validate_monomial(self, m) -> bool:
        if isinstance(m, str):
            return m in self.letters
        return (
            isinstance(m, tuple)
            and len(m) == 2
            and self.validate_monomial(m[0])
            and self.validate_monomial(m[1])
        )

    def degree(self, m) -> int:
        return _tree_leaves(m)

    def weight_sum(self, m, order) -> Fraction:
        if isinstance(m, str):
            return order.weight_of(m)
        return self.weight_sum(m[0], order) + self.weight_sum(m[1], order)

    def rank_encoding(self, m, order) -> tuple:
        if isinstance(m, str):
            return (0, order.rank(m))
        return (1, self.rank_encoding(m[0], order), self.rank_encoding(m[1], order))

    def serialize(self, m) -> str:
        if isinstance(m, str):
            return m
        return "(%s*%s)" % (self.serialize(m[0]), self.serialize(m[1]))

    def identity_context(self, m):
        return _HOLE

    def apply_context(self, ctx, m):
        return _plug(ctx, m)

    def compose_contexts(self, outer, inner):
        return _plug(outer, inner) if inner is not _HOLE else outer

    def divisions(self, mu, nu) -> list:
        return _subtree_contexts(mu, nu, lambda hole: hole)

    def overlaps(self, mu1, mu2) -> list:
        data = []
        if mu1 == mu2:
            ident = _HOLE
            data.append(OverlapDatum(mu1, ident, ident, OverlapKind.INCLUSION, inner=2))
            return data
        if self.degree(mu2) < self.degree(mu1):
            for ctx in self.divisions(mu1, mu2):
                data.append(OverlapDatum(mu1, _HOLE, ctx, OverlapKind.INCLUSION, inner=2))
        elif self.degree(mu1) < self.degree(mu2):
            for ctx in self.divisions(mu2, mu1):
                data.append(OverlapDatum(mu2, ctx, _HOLE, OverlapKind.INCLUSION, inner=1))
        return data

    def monomials_of_degree(self, d):
        if d <= 0:
            return
        if d == 1:
            yield from self.letters
            return
        for k in range(1, d):
            for left in self.monomials_of_degree(k):
                for right in self.monomials_of_degree(d - k):
                    yield (left, right)


@dataclass(frozen=True)
class PathAlgebraTheory(Theory):
    """Paths in a finite quiver; products vanish on endpoint mismatch."""

    vertices: tuple
    arrows: tuple

    def describe(self) -> str:
        return "path(%s;%s)" % (
            ",".join(self.vertices),
            ",".join(name for name, _, _ in self.arrows),
        )

    def generator_names(self) -> tuple:
        return tuple(name for name, _, _ in self.arrows)

    def arrow_endpoints(self, name: str) -> tuple:
        for n, s, t in self.arrows:
            if n == name:
                return s, t
        raise TheoryMismatchError("unknown arrow %r" % name)

    def vertex_path(self, v: str) -> tuple:
        if v not in self.vertices:
            raise TheoryMismatchError("unknown vertex %r" % v)
        return (v, v, ())

    def path(self, *arrow_names: str) -> tuple:
        if not arrow_names:
            raise TheoryMismatchError("a path needs arrows; use vertex_path for idempotents")
        m = self._make(tuple(arrow_names))
        if m is None:
            raise TheoryMismatchError("arrows %r do not compose" % (arrow_names,))
        return m

    def multiply(self, a, b):
        if a[1] != b[0]:
            return None
        return (a[0], b[1], a[2] + b[2])

    def _make(self, arrow_names: tuple):
        src, _ = self.arrow_endpoints(arrow_names[0])
        cur = src
        for name in arrow_names:
            s, t = self.arrow_endpoints(name)
            if s != cur:
                return None
            cur = t
        return (src, cur, arrow_names)

    def validate_monomial(self, m) -> bool:
        if not (isinstance(m, tuple) and len(m) == 3):
            return False
        src, tgt, names = m
        if src not in self.vertices or tgt not in self.vertices:
            return False
        if not names:
            return src == tgt
        made = self._make(names) if all(
            any(n == name for name, _, _ in self.arrows) for n in names
        ) else None
        return made == m

    def visits(self, m) -> list:
        """List the vertices a path passes through, endpoints included."""
        src, _, names = m
        out = [src]
        for name in names:
            out.append(self.arrow_endpoints(name)[1])
        return out

    def degree(self, m) -> int:
        return len(m[2])

    def weight_sum(self, m, order) -> Fraction:
        return sum((order.weight_of(x) for x in m[2]), Fraction(0))

    def rank_encoding(self, m, order) -> tuple:
        return (
            tuple(order.rank(x) for x in m[2]),
            self.vertices.index(m[0]),
            self.vertices.index(m[1]),
        )

    def serialize(self, m) -> str:
        src, _, names = m
        if not names:
            return "e%s" % src
        return "*".join(names)

    def identity_context(self, m) -> tuple:
        return ((m[0], m[0], ()), (m[1], m[1], ()))

    def apply_context(self, ctx, m):
        left, right = ctx
        if left[1] != m[0] or m[1] != right[0]:
            return None
        return (left[0], right[1], left[2] + m[2] + right[2])

    def compose_contexts(self, outer, inner):
        lo, ro = outer
        li, ri = inner
        if lo[1] != li[0] or ri[1] != ro[0]:
            return None
        return ((lo[0], li[1], lo[2] + li[2]), (ri[0], ro[1], ri[2] + ro[2]))

    def divisions(self, mu, nu) -> list:
        src, tgt, names = mu
        nsrc, ntgt, nnames = nu
        vis = self.visits(mu)
        out = []
        n = len(nnames)
        for i in range(len(names) - n + 1):
            if names[i : i + n] == nnames and vis[i] == nsrc and vis[i + n] == ntgt:
                left = (src, nsrc, names[:i])
                right = (ntgt, tgt, names[i + n :])
                out.append((left, right))
        return out

    def overlaps(self, mu1, mu2) -> list:
        data = []
        a1, a2 = mu1[2], mu2[2]
        l1, l2 = len(a1), len(a2)
        vis1, vis2 = self.visits(mu1), self.visits(mu2)

        def seam(tail_of, head_of, t):
            # superposition = tail_of followed by head_of with overlap length t
            arrows = tail_of[2] + head_of[2][t:]
            return (tail_of[0], head_of[1], arrows)

        if mu1 == mu2:
            ident = self.identity_context(mu1)
            data.append(OverlapDatum(mu1, ident, ident, OverlapKind.INCLUSION, inner=2))
            for t in range(1, l1):
                if a1[l1 - t :] == a1[:t] and vis1[l1 - t] == vis1[0]:
                    sup = seam(mu1, mu1, t)
                    ctx1 = (self.vertex_path(mu1[0]), (vis1[t], sup[1], a1[t:]))
                    ctx2 = ((mu1[0], vis1[l1 - t], a1[: l1 - t]), self.vertex_path(mu1[1]))
                    data.append(OverlapDatum(sup, ctx1, ctx2, OverlapKind.OVERLAP))
            return data

        for t in range(1, min(l1, l2)):
            if a1[l1 - t :] == a2[:t] and vis1[l1 - t] == vis2[0]:
                sup = seam(mu1, mu2, t)
                ctx1 = (self.vertex_path(mu1[0]), (vis2[t], mu2[1], a2[t:]))
                ctx2 = ((mu1[0], vis1[l1 - t], a1[: l1 - t]), self.vertex_path(mu2[1]))
                data.append(OverlapDatum(sup, ctx1, ctx2, OverlapKind.OVERLAP))
            if a2[l2 - t :] == a1[:t] and vis2[l2 - t] == vis1[0]:
                sup = seam(mu2, mu1, t)
                ctx1 = ((mu2[0], vis2[l2 - t], a2[: l2 - t]), self.vertex_path(mu1[1]))
                ctx2 = (self.vertex_path(mu2[0]), (vis1[t], mu1[1], a1[t:]))
                data.append(OverlapDatum(sup, ctx1, ctx2, OverlapKind.OVERLAP))
        if l2 < l1:
            for ctx in self.divisions(mu1, mu2):
                data.append(
                    OverlapDatum(mu1, self.identity_context(mu1), ctx, OverlapKind.INCLUSION, inner=2)
                )
        elif l1 < l2:
            for ctx in self.divisions(mu2, mu1):
                data.append(
                    OverlapDatum(mu2, ctx, self.identity_context(mu2), OverlapKind.INCLUSION, inner=1)
                )
        return data

    def uniform_equivalent(self, a, b) -> bool:
        return a[0] == b[0] and a[1] == b[1]

    def monomials_of_degree(self, d):
        if d < 0:
            return
        if d == 0:
            for v in self.vertices:
                yield (v, v, ())
            return
        def extend(path):
            if len(path[2]) == d:
                yield path
                return
            for name, s, t in self.arrows:
                if s == path[1]:
                    yield from extend((path[0], t, path[2] + (name,)))
        for v in self.vertices:
            yield from extend((v, v, ()))
