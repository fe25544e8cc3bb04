"""Recognizer for the controlled language.

The grammar is deliberately ambiguous (a restriction may or may not carry an
indicator, combinations may juxtapose without a separator), so the parser is
a memoized backtracking recursive descent that returns every distinct
derivation, not a single preferred one.  Starred self-references in the
productions are parsed iteratively and kept flat in the tree nodes.

Extensions over the base productions, each guarded or marked below:
  - restrictions may drop their filler (``PROPERTY`` alone) unless a CLASS
    span follows directly, so intransitive predicates and coordinated verb
    phrases parse without inventing top-filler readings elsewhere;
  - a bare qualified cardinality ``PROPERTY CARDINALITY classComb`` ("has 4
    right angles") is read as an exact qualified cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .indicators import INDICATOR_PHRASES
from .lexicalize import EnumerationResult, PatternRule, enumerate_lexicalizations
from .model import (
    IndicatorKind,
    Lexicalization,
    SpanKind,
    TerminalSpan,
)
from .tagging import Tagger, RuleTagger

__all__ = [
    "ClassCombNode",
    "ComplementNode",
    "UniResNode",
    "ExistResNode",
    "CardRestrictionNode",
    "IndValueNode",
    "SelfValueNode",
    "ClsExpCombNode",
    "IntersectionNode",
    "UnionNode",
    "SentenceNode",
    "ClsExpNode",
    "leaf_spans",
    "recognize",
    "Diagnostics",
    "is_tedei_sentence",
    "grammar_bnf",
]


@dataclass(frozen=True)
class ClassCombNode:
    """CLASS (clsExpInd CLASS)*: concept names joined by and/or/comma."""

    members: tuple[TerminalSpan, ...]
    seps: tuple[TerminalSpan, ...]


@dataclass(frozen=True)
class ComplementNode:
    ind: TerminalSpan
    prop: TerminalSpan
    comb: ClassCombNode | None
    pre: bool  # indicator precedes the property ("does not eat ...")


@dataclass(frozen=True)
class UniResNode:
    prop: TerminalSpan
    ind: TerminalSpan
    comb: ClassCombNode
    ind_first: bool  # "only drinks water" vs "drinks only water"


@dataclass(frozen=True)
class ExistResNode:
    prop: TerminalSpan
    ind: TerminalSpan | None  # existential indicator, if present
    comb: ClassCombNode | None  # None: filler-less reading


@dataclass(frozen=True)
class CardRestrictionNode:
    op: str  # "min" | "max" | "exact"
    prop: TerminalSpan
    ind: TerminalSpan | None  # None only for the bare qualified form
    card: TerminalSpan
    comb: ClassCombNode | None  # None: unqualified
    post: bool  # indicator follows the numeral ("2 or more")

    @property
    def approximate(self) -> bool:
        return (
            self.ind is not None
            and self.ind.indicator_kind is IndicatorKind.AMBI_EXACT_CARD
        )


@dataclass(frozen=True)
class IndValueNode:
    prop: TerminalSpan
    individual: TerminalSpan


@dataclass(frozen=True)
class SelfValueNode:
    prop: TerminalSpan
    ind: TerminalSpan


ClsExpNode = Union[
    ComplementNode,
    UniResNode,
    ExistResNode,
    CardRestrictionNode,
    IndValueNode,
    SelfValueNode,
    ClassCombNode,
]


@dataclass(frozen=True)
class ClsExpCombNode:
    """clsExp (clsExpInd? clsExp)*: seps[k] joins items k and k+1, None for
    plain juxtaposition."""

    items: tuple[ClsExpNode, ...]
    seps: tuple[TerminalSpan | None, ...]


@dataclass(frozen=True)
class IntersectionNode:
    parts: tuple[ClsExpCombNode, ...]
    seps: tuple[TerminalSpan, ...]  # intersectionInd between parts


@dataclass(frozen=True)
class UnionNode:
    parts: tuple[IntersectionNode, ...]
    seps: tuple[TerminalSpan, ...]  # unionInd between parts


@dataclass(frozen=True)
class SentenceNode:
    """start: a subject terminal and a body; keeps its lexicalization so
    later stages can reach residue evidence and token positions."""

    subject: TerminalSpan
    body: UnionNode
    lex: Lexicalization


def leaf_spans(node) -> tuple[TerminalSpan, ...]:
    """Terminal spans of a (sub)tree in sentence order."""
    out: list[TerminalSpan] = []

    def walk(n) -> None:
        if isinstance(n, SentenceNode):
            out.append(n.subject)
            walk(n.body)
        elif isinstance(n, (UnionNode, IntersectionNode)):
            for i, part in enumerate(n.parts):
                walk(part)
                if i < len(n.seps):
                    out.append(n.seps[i])
        elif isinstance(n, ClsExpCombNode):
            for i, item in enumerate(n.items):
                walk(item)
                if i < len(n.seps) and n.seps[i] is not None:
                    out.append(n.seps[i])
        elif isinstance(n, ClassCombNode):
            for i, member in enumerate(n.members):
                out.append(member)
                if i < len(n.seps):
                    out.append(n.seps[i])
        elif isinstance(n, ComplementNode):
            if n.pre:
                out.append(n.ind)
                out.append(n.prop)
            else:
                out.append(n.prop)
                out.append(n.ind)
            if n.comb:
                walk(n.comb)
        elif isinstance(n, UniResNode):
            if n.ind_first:
                out.append(n.ind)
                out.append(n.prop)
            else:
                out.append(n.prop)
                out.append(n.ind)
            walk(n.comb)
        elif isinstance(n, ExistResNode):
            out.append(n.prop)
            if n.ind:
                out.append(n.ind)
            if n.comb:
                walk(n.comb)
        elif isinstance(n, CardRestrictionNode):
            out.append(n.prop)
            if n.post:
                out.append(n.card)
                if n.ind:
                    out.append(n.ind)
            else:
                if n.ind:
                    out.append(n.ind)
                out.append(n.card)
            if n.comb:
                walk(n.comb)
        elif isinstance(n, IndValueNode):
            out.append(n.prop)
            out.append(n.individual)
        elif isinstance(n, SelfValueNode):
            out.append(n.prop)
            out.append(n.ind)
        else:
            raise TypeError(f"unknown node {n!r}")

    walk(node)
    return tuple(out)


# ---------------------------------------------------------------------------
# The parser


def _dedup(results):
    seen = {}
    for item in results:
        seen.setdefault(item, None)
    return list(seen)


class _Parser:
    def __init__(self, spans: tuple[TerminalSpan, ...]):
        self.spans = spans
        self.n = len(spans)
        self.memo: dict[tuple[str, int], list] = {}
        self.frontier = 0  # furthest span index any attempt reached

    def _at(self, i: int) -> TerminalSpan | None:
        return self.spans[i] if i < self.n else None

    def _is_ind(self, i: int, kind: IndicatorKind) -> bool:
        s = self._at(i)
        return s is not None and s.kind is SpanKind.INDICATOR and s.indicator_kind is kind

    def _kind(self, i: int, kind: SpanKind) -> bool:
        s = self._at(i)
        return s is not None and s.kind is kind

    def _touch(self, i: int) -> None:
        if i > self.frontier:
            self.frontier = i

    # -- iteration helper for the starred productions

    def _sequence(
        self,
        parse_part: Callable[[int], list],
        i: int,
        sep_kinds: tuple[IndicatorKind, ...],
        optional_sep: bool,
    ) -> list[tuple[tuple, tuple, int]]:
        """All (parts, seps, end) readings with at least one part."""
        results: list[tuple[tuple, tuple, int]] = []

        def extend(parts: tuple, seps: tuple, j: int) -> None:
            results.append((parts, seps, j))
            s = self._at(j)
            if s is not None and s.kind is SpanKind.INDICATOR and s.indicator_kind in sep_kinds:
                for node, k in parse_part(j + 1):
                    extend(parts + (node,), seps + (s,), k)
            if optional_sep and s is not None:
                for node, k in parse_part(j):
                    extend(parts + (node,), seps + (None,), k)

        for node, j in parse_part(i):
            extend((node,), (), j)
        return results

    # -- productions

    def parse_classcomb(self, i: int) -> list[tuple[ClassCombNode, int]]:
        key = ("classcomb", i)
        if key in self.memo:
            return self.memo[key]
        self._touch(i)
        out: list[tuple[ClassCombNode, int]] = []
        if self._kind(i, SpanKind.CLASS):

            def part(j: int):
                self._touch(j)
                return [(self.spans[j], j + 1)] if self._kind(j, SpanKind.CLASS) else []

            for members, seps, end in self._sequence(
                part, i, (IndicatorKind.CLS_EXP,), optional_sep=False
            ):
                out.append((ClassCombNode(members, seps), end))
        self.memo[key] = _dedup(out)
        return self.memo[key]

    def parse_complement(self, i: int) -> list[tuple[ComplementNode, int]]:
        out = []
        # preComplementInd PROPERTY classComb?
        if self._is_ind(i, IndicatorKind.PRE_COMPLEMENT) and self._kind(i + 1, SpanKind.PROPERTY):
            ind, prop = self.spans[i], self.spans[i + 1]
            for comb, j in self.parse_classcomb(i + 2):
                out.append((ComplementNode(ind, prop, comb, pre=True), j))
            if not self._kind(i + 2, SpanKind.CLASS):
                out.append((ComplementNode(ind, prop, None, pre=True), i + 2))
        # PROPERTY postComplementInd classComb?
        if self._kind(i, SpanKind.PROPERTY) and self._is_ind(i + 1, IndicatorKind.POST_COMPLEMENT):
            prop, ind = self.spans[i], self.spans[i + 1]
            for comb, j in self.parse_classcomb(i + 2):
                out.append((ComplementNode(ind, prop, comb, pre=False), j))
            if not self._kind(i + 2, SpanKind.CLASS):
                out.append((ComplementNode(ind, prop, None, pre=False), i + 2))
        return out

    def parse_unires(self, i: int) -> list[tuple[UniResNode, int]]:
        out = []
        if self._kind(i, SpanKind.PROPERTY) and self._is_ind(i + 1, IndicatorKind.UNIVERSAL):
            for comb, j in self.parse_classcomb(i + 2):
                out.append((UniResNode(self.spans[i], self.spans[i + 1], comb, False), j))
        if self._is_ind(i, IndicatorKind.UNIVERSAL) and self._kind(i + 1, SpanKind.PROPERTY):
            for comb, j in self.parse_classcomb(i + 2):
                out.append((UniResNode(self.spans[i + 1], self.spans[i], comb, True), j))
        return out

    def parse_existres(self, i: int) -> list[tuple[ExistResNode, int]]:
        if not self._kind(i, SpanKind.PROPERTY):
            return []
        prop = self.spans[i]
        out = []
        if self._is_ind(i + 1, IndicatorKind.EXISTENTIAL):
            for comb, j in self.parse_classcomb(i + 2):
                out.append((ExistResNode(prop, self.spans[i + 1], comb), j))
        for comb, j in self.parse_classcomb(i + 1):
            out.append((ExistResNode(prop, None, comb), j))
        # filler-less reading, blocked when an explicit filler is adjacent
        if not self._kind(i + 1, SpanKind.CLASS):
            out.append((ExistResNode(prop, None, None), i + 1))
        return out

    def _parse_card(self, i: int, pre_kind, post_kind, op: str, qualified: bool):
        if not self._kind(i, SpanKind.PROPERTY):
            return []
        prop = self.spans[i]
        out = []
        pre_kinds = pre_kind if isinstance(pre_kind, tuple) else (pre_kind,)
        for kind in pre_kinds:
            if self._is_ind(i + 1, kind) and self._kind(i + 2, SpanKind.CARDINALITY):
                ind, card = self.spans[i + 1], self.spans[i + 2]
                if qualified:
                    for comb, j in self.parse_classcomb(i + 3):
                        out.append((CardRestrictionNode(op, prop, ind, card, comb, False), j))
                else:
                    out.append((CardRestrictionNode(op, prop, ind, card, None, False), i + 3))
        if post_kind is not None and self._kind(i + 1, SpanKind.CARDINALITY) and self._is_ind(
            i + 2, post_kind
        ):
            card, ind = self.spans[i + 1], self.spans[i + 2]
            if qualified:
                for comb, j in self.parse_classcomb(i + 3):
                    out.append((CardRestrictionNode(op, prop, ind, card, comb, True), j))
            else:
                out.append((CardRestrictionNode(op, prop, ind, card, None, True), i + 3))
        return out

    def parse_barequalcard(self, i: int) -> list[tuple[CardRestrictionNode, int]]:
        # extension: PROPERTY CARDINALITY classComb, read as exact count
        if not (self._kind(i, SpanKind.PROPERTY) and self._kind(i + 1, SpanKind.CARDINALITY)):
            return []
        out = []
        for comb, j in self.parse_classcomb(i + 2):
            out.append(
                (CardRestrictionNode("exact", self.spans[i], None, self.spans[i + 1], comb, False), j)
            )
        return out

    def parse_indvalue(self, i: int) -> list[tuple[IndValueNode, int]]:
        if self._kind(i, SpanKind.PROPERTY) and self._kind(i + 1, SpanKind.INDIVIDUAL):
            return [(IndValueNode(self.spans[i], self.spans[i + 1]), i + 2)]
        return []

    def parse_selfvalue(self, i: int) -> list[tuple[SelfValueNode, int]]:
        if self._kind(i, SpanKind.PROPERTY) and self._is_ind(i + 1, IndicatorKind.SELF):
            return [(SelfValueNode(self.spans[i], self.spans[i + 1]), i + 2)]
        return []

    def parse_clsexp(self, i: int) -> list[tuple[ClsExpNode, int]]:
        key = ("clsexp", i)
        if key in self.memo:
            return self.memo[key]
        self._touch(i)
        exact = (IndicatorKind.EXACT_CARD, IndicatorKind.AMBI_EXACT_CARD)
        out: list = []
        out += self.parse_complement(i)
        out += self.parse_unires(i)
        out += self.parse_existres(i)
        out += self._parse_card(i, exact, None, "exact", qualified=False)
        out += self._parse_card(i, IndicatorKind.PRE_MIN_CARD, IndicatorKind.POST_MIN_CARD, "min", qualified=False)
        out += self._parse_card(i, IndicatorKind.PRE_MAX_CARD, IndicatorKind.POST_MAX_CARD, "max", qualified=False)
        out += self._parse_card(i, exact, None, "exact", qualified=True)
        out += self._parse_card(i, IndicatorKind.PRE_MIN_CARD, IndicatorKind.POST_MIN_CARD, "min", qualified=True)
        out += self._parse_card(i, IndicatorKind.PRE_MAX_CARD, IndicatorKind.POST_MAX_CARD, "max", qualified=True)
        out += self.parse_barequalcard(i)
        out += self.parse_indvalue(i)
        out += self.parse_selfvalue(i)
        out += self.parse_classcomb(i)
        self.memo[key] = _dedup(out)
        return self.memo[key]

    def parse_clsexpcomb(self, i: int) -> list[tuple[ClsExpCombNode, int]]:
        key = ("clsexpcomb", i)
        if key in self.memo:
            return self.memo[key]
        self._touch(i)
        out = [
            (ClsExpCombNode(items, seps), end)
            for items, seps, end in self._sequence(
                self.parse_clsexp, i, (IndicatorKind.CLS_EXP,), optional_sep=True
            )
        ]
        self.memo[key] = _dedup(out)
        return self.memo[key]

    def parse_intersection(self, i: int) -> list[tuple[IntersectionNode, int]]:
        key = ("intersection", i)
        if key in self.memo:
            return self.memo[key]
        self._touch(i)
        out = [
            (IntersectionNode(parts, seps), end)
            for parts, seps, end in self._sequence(
                self.parse_clsexpcomb, i, (IndicatorKind.INTERSECTION,), optional_sep=False
            )
        ]
        self.memo[key] = _dedup(out)
        return self.memo[key]

    def parse_union(self, i: int) -> list[tuple[UnionNode, int]]:
        # A leading complement is reachable through intersection → clsExpComb
        # → clsExp, so a separate complement branch here would only duplicate
        # derivations.
        key = ("union", i)
        if key in self.memo:
            return self.memo[key]
        self._touch(i)
        out = [
            (UnionNode(parts, seps), end)
            for parts, seps, end in self._sequence(
                self.parse_intersection, i, (IndicatorKind.UNION,), optional_sep=False
            )
        ]
        self.memo[key] = _dedup(out)
        return self.memo[key]


def recognize(lex: Lexicalization) -> tuple[SentenceNode, ...]:
    """Every derivation of the lexicalization; empty when it is not in the
    language."""
    trees, _ = _recognize_with_frontier(lex)
    return trees


def _recognize_with_frontier(lex: Lexicalization) -> tuple[tuple[SentenceNode, ...], int]:
    spans = lex.spans
    if not spans or spans[0].kind not in (SpanKind.CLASS, SpanKind.INDIVIDUAL):
        return (), 0
    parser = _Parser(spans)
    trees = []
    for body, end in parser.parse_union(1):
        if end == len(spans):
            trees.append(SentenceNode(spans[0], body, lex))
    return tuple(_dedup(trees)), parser.frontier


# ---------------------------------------------------------------------------
# Sentence-level membership


@dataclass(frozen=True)
class Diagnostics:
    """Why a sentence was accepted or rejected, pointing at the furthest
    token position any segmentation-plus-parse attempt reached."""

    is_tedei: bool
    reason: str
    position: int | None = None
    token: str | None = None
    lexicalization_count: int = 0
    parsed_lexicalization_count: int = 0
    truncated: bool = False


def is_tedei_sentence(
    sentence: str,
    tagger: Tagger | None = None,
    rules: tuple[PatternRule, ...] | None = None,
    cap: int | None = None,
) -> tuple[bool, Diagnostics]:
    tagger = tagger or RuleTagger()
    tokens = tagger.tag(sentence)
    kwargs = {} if cap is None else {"cap": cap}
    enum: EnumerationResult = enumerate_lexicalizations(tokens, rules, **kwargs)
    if not enum.lexicalizations:
        pos = min(enum.frontier, len(tokens) - 1)
        return False, Diagnostics(
            False,
            "no segmentation covers the sentence; stuck at token "
            f"{pos} ({tokens[pos].surface!r})",
            position=pos,
            token=tokens[pos].surface,
            truncated=enum.truncated,
        )
    parsed = 0
    best_token_pos = 0
    for lex in enum.lexicalizations:
        trees, frontier = _recognize_with_frontier(lex)
        if trees:
            parsed += 1
        elif lex.spans:
            idx = min(frontier, len(lex.spans) - 1)
            best_token_pos = max(best_token_pos, lex.spans[idx].start)
    if parsed:
        return True, Diagnostics(
            True,
            "sentence is in the language",
            lexicalization_count=len(enum.lexicalizations),
            parsed_lexicalization_count=parsed,
            truncated=enum.truncated,
        )
    return False, Diagnostics(
        False,
        "no reading parses; furthest failure at token "
        f"{best_token_pos} ({tokens[best_token_pos].surface!r})",
        position=best_token_pos,
        token=tokens[best_token_pos].surface,
        lexicalization_count=len(enum.lexicalizations),
        truncated=enum.truncated,
    )


# ---------------------------------------------------------------------------
# Introspection


def grammar_bnf() -> str:
    """The grammar as BNF text, indicator tables inlined from the data."""
    lines = [
        "start        ::= lexpr rexpr",
        "lexpr        ::= CLASS | INDIVIDUAL",
        "rexpr        ::= union",
        "union        ::= intersection (unionInd intersection)*",
        "intersection ::= clsExpComb (intersectionInd clsExpComb)*",
        "clsExpComb   ::= clsExp (clsExpInd? clsExp)*",
        "clsExp       ::= complement | uniRes | existRes | exactCard | minCard",
        "               | maxCard | qualExactCard | qualMinCard | qualMaxCard",
        "               | bareQualCard | indValueRes | selfValueRes | classComb",
        "complement   ::= preComplementInd PROPERTY classComb?",
        "               | PROPERTY postComplementInd classComb?",
        "uniRes       ::= PROPERTY universalInd classComb",
        "               | universalInd PROPERTY classComb",
        "existRes     ::= PROPERTY existentialInd classComb",
        "               | PROPERTY classComb",
        "               | PROPERTY                      (filler-less; blocked before CLASS)",
        "exactCard    ::= PROPERTY exactCardinalityInd CARDINALITY",
        "               | PROPERTY ambiExactCardInd CARDINALITY",
        "minCard      ::= PROPERTY preMinCardInd CARDINALITY",
        "               | PROPERTY CARDINALITY postMinCardInd",
        "maxCard      ::= PROPERTY preMaxCardInd CARDINALITY",
        "               | PROPERTY CARDINALITY postMaxCardInd",
        "qualExactCard ::= PROPERTY (exactCardinalityInd | ambiExactCardInd) CARDINALITY classComb",
        "qualMinCard  ::= PROPERTY preMinCardInd CARDINALITY classComb",
        "               | PROPERTY CARDINALITY postMinCardInd classComb",
        "qualMaxCard  ::= PROPERTY preMaxCardInd CARDINALITY classComb",
        "               | PROPERTY CARDINALITY postMaxCardInd classComb",
        "bareQualCard ::= PROPERTY CARDINALITY classComb    (extension: exact reading)",
        "indValueRes  ::= PROPERTY INDIVIDUAL",
        "selfValueRes ::= PROPERTY selfInd",
        "classComb    ::= CLASS (clsExpInd CLASS)*",
        "",
    ]
    for kind, phrases in INDICATOR_PHRASES.items():
        words = " | ".join("'" + " ".join(p) + "'" for p in phrases)
        lines.append(f"{kind.value} ::= {words}")
    return "\n".join(lines)
