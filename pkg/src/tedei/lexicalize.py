"""Sentence segmentation into terminal spans.

A sentence rarely has one reading of where its identifiers start and stop
("vegetable pizza" vs "vegetable" + "pizza"), so this stage enumerates every
way of partitioning the token sequence into terminal spans plus residue.
Identifier shapes are regex-like rules over part-of-speech tags; keyword
spans come from the indicator tables; a handful of residue rules absorb the
subject determiner, copulas and final punctuation.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from importlib import resources

from .indicators import INDICATOR_PHRASES
from .model import (
    EmptySentenceError,
    IndicatorKind,
    Lexicalization,
    SpanKind,
    TerminalSpan,
    Token,
)

__all__ = [
    "PatternRule",
    "parse_patterns",
    "default_patterns",
    "extract_identifiers",
    "EnumerationResult",
    "enumerate_lexicalizations",
    "DEFAULT_CAP",
    "NUMBER_WORDS",
]

DEFAULT_CAP = 10000

NUMBER_WORDS = {
    "zero": 0, "one": 1, "two": 2, "three": 3, "four": 4, "five": 5,
    "six": 6, "seven": 7, "eight": 8, "nine": 9, "ten": 10, "eleven": 11,
    "twelve": 12, "thirteen": 13, "fourteen": 14, "fifteen": 15,
    "sixteen": 16, "seventeen": 17, "eighteen": 18, "nineteen": 19,
    "twenty": 20,
}

_SUBJECT_DETERMINERS = ("every", "a", "an", "all", "each")
_PUNCT_POS = {".", ",", ":", "(", ")"}


# ---------------------------------------------------------------------------
# A tiny regex engine over token sequences.
#
# Atoms are Penn tags (match a token's tag) or 'quoted' words (match its
# lemma); operators are | ( ) * + ?.  Patterns compile to a Thompson NFA so
# that, from any start token, every reachable match end can be reported, not
# just the longest one.


@dataclass(frozen=True)
class _Atom:
    kind: str  # "tag" or "lit"
    value: str

    def matches(self, token: Token) -> bool:
        if self.kind == "tag":
            return token.pos == self.value
        return token.lemma == self.value


_PATTERN_TOKEN = re.compile(r"\s*([A-Z][A-Z$]*|'[a-z]+'|[()|*+?])")


def _lex_pattern(src: str) -> list:
    out, pos = [], 0
    while pos < len(src):
        m = _PATTERN_TOKEN.match(src, pos)
        if not m:
            if src[pos:].strip():
                raise ValueError(f"bad pattern syntax at {src[pos:]!r}")
            break
        tok = m.group(1)
        if tok[0] == "'":
            out.append(_Atom("lit", tok[1:-1]))
        elif tok[0].isupper():
            out.append(_Atom("tag", tok))
        else:
            out.append(tok)
        pos = m.end()
    return out


def _parse_alt(toks: list, pos: int):
    node, pos = _parse_seq(toks, pos)
    branches = [node]
    while pos < len(toks) and toks[pos] == "|":
        node, pos = _parse_seq(toks, pos + 1)
        branches.append(node)
    return (("alt", branches) if len(branches) > 1 else branches[0]), pos


def _parse_seq(toks: list, pos: int):
    parts = []
    while pos < len(toks) and toks[pos] not in ("|", ")"):
        part, pos = _parse_rep(toks, pos)
        parts.append(part)
    if not parts:
        raise ValueError("empty pattern branch")
    return (("seq", parts) if len(parts) > 1 else parts[0]), pos


def _parse_rep(toks: list, pos: int):
    if toks[pos] == "(":
        node, pos = _parse_alt(toks, pos + 1)
        if pos >= len(toks) or toks[pos] != ")":
            raise ValueError("unbalanced parenthesis in pattern")
        pos += 1
    elif isinstance(toks[pos], _Atom):
        node, pos = ("atom", toks[pos]), pos + 1
    else:
        raise ValueError(f"unexpected {toks[pos]!r} in pattern")
    if pos < len(toks) and toks[pos] in ("*", "+", "?"):
        node, pos = (toks[pos], node), pos + 1
    return node, pos


class _NFA:
    def __init__(self, src: str):
        toks = _lex_pattern(src)
        ast, pos = _parse_alt(toks, 0)
        if pos != len(toks):
            raise ValueError(f"trailing pattern input in {src!r}")
        self.eps: list[list[int]] = []
        self.steps: list[list[tuple[_Atom, int]]] = []
        self.start, self.accept = self._build(ast)

    def _new(self) -> int:
        self.eps.append([])
        self.steps.append([])
        return len(self.eps) - 1

    def _build(self, node) -> tuple[int, int]:
        kind = node[0]
        if kind == "atom":
            s, e = self._new(), self._new()
            self.steps[s].append((node[1], e))
            return s, e
        if kind == "seq":
            first = prev = None
            for part in node[1]:
                s, e = self._build(part)
                if first is None:
                    first = s
                else:
                    self.eps[prev].append(s)
                prev = e
            return first, prev
        if kind == "alt":
            s, e = self._new(), self._new()
            for part in node[1]:
                ps, pe = self._build(part)
                self.eps[s].append(ps)
                self.eps[pe].append(e)
            return s, e
        if kind in ("*", "+", "?"):
            s, e = self._new(), self._new()
            ps, pe = self._build(node[1])
            self.eps[s].append(ps)
            self.eps[pe].append(e)
            if kind in ("*", "?"):
                self.eps[s].append(e)
            if kind in ("*", "+"):
                self.eps[pe].append(ps)
            return s, e
        raise ValueError(f"unknown pattern node {kind!r}")

    def _closure(self, states: set[int]) -> set[int]:
        stack, seen = list(states), set(states)
        while stack:
            for nxt in self.eps[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    def match_ends(self, tokens: tuple[Token, ...], start: int) -> list[int]:
        """All end positions (exclusive, > start) of matches from start."""
        current = self._closure({self.start})
        ends: list[int] = []
        pos = start
        while current and pos < len(tokens):
            stepped = {
                dst
                for state in current
                for atom, dst in self.steps[state]
                if atom.matches(tokens[pos])
            }
            current = self._closure(stepped)
            pos += 1
            if self.accept in current:
                ends.append(pos)
        return ends


# ---------------------------------------------------------------------------
# Pattern rules


@dataclass(frozen=True)
class PatternRule:
    kind: SpanKind
    source: str
    nfa: _NFA

    @classmethod
    def compile(cls, kind: SpanKind, source: str) -> "PatternRule":
        return cls(kind, source, _NFA(source))


def parse_patterns(text: str) -> tuple[PatternRule, ...]:
    rules = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        kind_name, _, pattern = line.partition("\t")
        if not pattern:
            raise ValueError(f"malformed pattern line: {raw!r}")
        try:
            kind = SpanKind[kind_name.strip()]
        except KeyError:
            raise ValueError(f"unknown span kind {kind_name.strip()!r}: {raw!r}") from None
        if kind not in (SpanKind.CLASS, SpanKind.INDIVIDUAL, SpanKind.PROPERTY):
            raise ValueError(f"pattern rules cover identifier kinds only: {raw!r}")
        rules.append(PatternRule.compile(kind, pattern.strip()))
    return tuple(rules)


def load_patterns(path: str) -> tuple[PatternRule, ...]:
    with open(path, encoding="utf-8") as fh:
        return parse_patterns(fh.read())


def default_patterns() -> tuple[PatternRule, ...]:
    """Bundled rules, overridable through the TEDEI_PATTERNS env variable."""
    override = os.environ.get("TEDEI_PATTERNS")
    if override:
        return load_patterns(override)
    text = resources.files("tedei.resources").joinpath("patterns.txt").read_text("utf-8")
    return parse_patterns(text)


# ---------------------------------------------------------------------------
# Span harvesting


def _identifier_spans(
    tokens: tuple[Token, ...], rules: tuple[PatternRule, ...]
) -> list[TerminalSpan]:
    found: dict[tuple, TerminalSpan] = {}
    for rule in rules:
        for start in range(len(tokens)):
            for end in rule.nfa.match_ends(tokens, start):
                span = TerminalSpan(rule.kind, tokens[start:end])
                found.setdefault((rule.kind.value, start, end), span)
    return list(found.values())


def _cardinality_spans(tokens: tuple[Token, ...]) -> list[TerminalSpan]:
    spans = []
    for tok in tokens:
        if tok.pos == "CD":
            value = int(tok.surface) if tok.surface.isdigit() else NUMBER_WORDS.get(tok.lemma)
            if value is not None:
                spans.append(TerminalSpan(SpanKind.CARDINALITY, (tok,), value=value))
    return spans


def _indicator_spans(tokens: tuple[Token, ...]) -> list[TerminalSpan]:
    spans = []
    for start in range(len(tokens)):
        for kind, phrases in INDICATOR_PHRASES.items():
            for phrase in phrases:
                end = start + len(phrase)
                if end <= len(tokens) and all(
                    tokens[start + k].lemma == word for k, word in enumerate(phrase)
                ):
                    spans.append(
                        TerminalSpan(SpanKind.INDICATOR, tokens[start:end], indicator_kind=kind)
                    )
    return spans


def extract_identifiers(
    tokens: tuple[Token, ...], rules: tuple[PatternRule, ...] | None = None
) -> list[TerminalSpan]:
    """Every identifier span (maximal and sub-maximal) the rules license."""
    if not tokens:
        raise EmptySentenceError("cannot extract identifiers from an empty sentence")
    rules = rules if rules is not None else default_patterns()
    spans = _identifier_spans(tokens, rules)
    spans.sort(key=lambda s: (s.start, s.end, s.kind.value))
    return spans


# ---------------------------------------------------------------------------
# Exhaustive segmentation

_KIND_ORDER = {
    SpanKind.CLASS: 0,
    SpanKind.INDIVIDUAL: 1,
    SpanKind.PROPERTY: 2,
    SpanKind.CARDINALITY: 3,
    SpanKind.INDICATOR: 4,
}

_IND_ORDER = {kind: i for i, kind in enumerate(IndicatorKind)}


@dataclass
class EnumerationResult:
    lexicalizations: list[Lexicalization]
    truncated: bool
    frontier: int  # furthest token index any partial segmentation reached


def enumerate_lexicalizations(
    tokens: tuple[Token, ...],
    rules: tuple[PatternRule, ...] | None = None,
    cap: int = DEFAULT_CAP,
) -> EnumerationResult:
    """Enumerate every partition of the sentence into spans plus residue.

    Residue may absorb: one subject determiner at the sentence start, copulas
    ("is"/"are", optionally followed by one article), and final punctuation.
    Order is deterministic: depth-first with span choices sorted by end
    position then span kind.  Results are deduplicated by span sequence and
    capped at ``cap`` (the truncation flag reports whether the cap bit).
    """
    if not tokens:
        raise EmptySentenceError("cannot segment an empty sentence")
    rules = rules if rules is not None else default_patterns()
    n = len(tokens)

    by_start: list[list[TerminalSpan]] = [[] for _ in range(n)]
    candidates = (
        _identifier_spans(tokens, rules)
        + _cardinality_spans(tokens)
        + _indicator_spans(tokens)
    )
    for span in candidates:
        by_start[span.start].append(span)
    for bucket in by_start:
        bucket.sort(
            key=lambda s: (
                s.end,
                _KIND_ORDER[s.kind],
                _IND_ORDER.get(s.indicator_kind, -1),
            )
        )

    results: dict[tuple, Lexicalization] = {}
    state = {"frontier": 0, "truncated": False}

    def walk(i: int, spans: list[TerminalSpan], residue: list[Token], after_copula: bool) -> None:
        if state["truncated"]:
            return
        state["frontier"] = max(state["frontier"], i)
        if i == n:
            if spans:
                lex = Lexicalization(tokens, tuple(spans), tuple(residue))
                results.setdefault(lex.key(), lex)
                if len(results) >= cap:
                    state["truncated"] = True
            return
        tok = tokens[i]
        for span in by_start[i]:
            spans.append(span)
            walk(span.end, spans, residue, False)
            spans.pop()
        if i == 0 and tok.lemma in _SUBJECT_DETERMINERS and n > 1:
            walk(i + 1, spans, residue + [tok], False)
        if tok.lemma in ("is", "are"):
            walk(i + 1, spans, residue + [tok], True)
        if after_copula and tok.lemma in ("a", "an", "the"):
            walk(i + 1, spans, residue + [tok], False)
        if tok.pos in _PUNCT_POS and i == n - 1:
            walk(i + 1, spans, residue + [tok], False)

    walk(0, [], [], False)
    ordered = list(results.values())
    return EnumerationResult(ordered, state["truncated"], state["frontier"])
