"""Semantic ambiguity handling: one parse tree fans out into every defensible
reading.

Two built-in ambiguity patterns ship enabled:

* quantifier underspecification — a plain existential restriction ("possess
  color charge", "drives a car") also admits a universal-only reading and a
  combined reading.  Explicit "only", explicit cardinalities and negated
  relations pin their own quantifier and are left alone.
* subject generality — a non-universal subject ("An adenine ...", bare-plural
  "Quarks ...") may merely assert that the combined description is coherent
  rather than define a subclass, so a non-definitional reading is added.

A third alternative, the modifier split, is structural rather than
quantificational: juxtaposed nouns inside a filler ("possess color charge")
can be re-read as independent fillers of the same relation.  It is produced
here as a distributed variant of every reading.

The registry is open: extra patterns can be loaded from a file, and patterns
whose trigger never fires change nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .axioms import (
    QUANT_AS_PARSED,
    QUANT_BOTH,
    QUANT_FORCED_EXISTENTIAL,
    QUANT_FORCED_UNIVERSAL,
    build_body,
    build_subject,
    has_filler_split,
)
from .grammar import (
    CardRestrictionNode,
    ClassCombNode,
    ClsExpCombNode,
    ComplementNode,
    ExistResNode,
    SentenceNode,
    UniResNode,
)
from .model import AxiomForm, ClassExpr

__all__ = [
    "Interpretation",
    "AmbiguityPattern",
    "BUILTIN_PATTERNS",
    "parse_ambiguity_patterns",
    "load_ambiguity_patterns",
    "interpret",
    "apply_modifier_split",
]

_QUANT_ORDER = (
    QUANT_AS_PARSED,
    QUANT_FORCED_EXISTENTIAL,
    QUANT_FORCED_UNIVERSAL,
    QUANT_BOTH,
)

_QUANT_EXPANSIONS = {
    "as-parsed": QUANT_AS_PARSED,
    "forced-existential": QUANT_FORCED_EXISTENTIAL,
    "forced-universal": QUANT_FORCED_UNIVERSAL,
    "existential-and-universal": QUANT_BOTH,
}

_FORM_EXPANSIONS = {"non-definitional": AxiomForm.NON_DEFINITIONAL}


@dataclass(frozen=True)
class Interpretation:
    """One complete reading of a parse tree, ready to become an axiom."""

    axiom_form: AxiomForm
    lhs: ClassExpr
    rhs: ClassExpr
    quantifier_choice: str = QUANT_AS_PARSED
    distributed: bool = False
    patterns: tuple[str, ...] = ()


# ---------------------------------------------------------------------------
# Trigger predicates


def _iter_items(tree: SentenceNode):
    for inter in tree.body.parts:
        for part in inter.parts:
            for item in part.items:
                yield item


def _has_plain_existential(tree: SentenceNode) -> bool:
    return any(
        isinstance(item, ExistResNode) and not item.prop.negated
        for item in _iter_items(tree)
    )


def _has_universal_restriction(tree: SentenceNode) -> bool:
    return any(isinstance(item, UniResNode) for item in _iter_items(tree))


def _has_cardinality_restriction(tree: SentenceNode) -> bool:
    return any(isinstance(item, CardRestrictionNode) for item in _iter_items(tree))


def _has_negated_restriction(tree: SentenceNode) -> bool:
    for item in _iter_items(tree):
        if isinstance(item, ComplementNode):
            return True
        if not isinstance(item, ClassCombNode) and getattr(item, "prop", None) is not None:
            if item.prop.negated:
                return True
    return False


def _non_universal_subject(tree: SentenceNode) -> bool:
    det = tree.lex.subject_determiner()
    if det is not None:
        return det in ("a", "an")
    # bare plural subject: no determiner, plural head noun
    return tree.subject.tokens[-1].pos in ("NNS", "NNPS")


TRIGGERS: dict[str, Callable[[SentenceNode], bool]] = {
    "plain-existential": _has_plain_existential,
    "universal-restriction": _has_universal_restriction,
    "cardinality-restriction": _has_cardinality_restriction,
    "negated-restriction": _has_negated_restriction,
    "non-universal-subject": _non_universal_subject,
    "always": lambda tree: True,
}


# ---------------------------------------------------------------------------
# Pattern registry


@dataclass(frozen=True)
class AmbiguityPattern:
    name: str
    trigger: str
    expansions: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.trigger not in TRIGGERS:
            raise ValueError(f"unknown trigger {self.trigger!r}")
        for exp in self.expansions:
            if exp not in _QUANT_EXPANSIONS and exp not in _FORM_EXPANSIONS:
                raise ValueError(f"unknown expansion {exp!r}")


BUILTIN_PATTERNS: tuple[AmbiguityPattern, ...] = (
    AmbiguityPattern(
        "quantifier-underspecification",
        "plain-existential",
        ("as-parsed", "forced-universal", "existential-and-universal"),
    ),
    AmbiguityPattern("subject-generality", "non-universal-subject", ("non-definitional",)),
)


def parse_ambiguity_patterns(text: str) -> tuple[AmbiguityPattern, ...]:
    """One pattern per line: name<TAB>trigger<TAB>expansion[,expansion...]"""
    patterns = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 3 tab-separated fields")
        name, trigger, exps = parts
        patterns.append(
            AmbiguityPattern(name, trigger, tuple(e.strip() for e in exps.split(",")))
        )
    return tuple(patterns)


def load_ambiguity_patterns(path: str | Path) -> tuple[AmbiguityPattern, ...]:
    return parse_ambiguity_patterns(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# Interpretation


def interpret(
    tree: SentenceNode,
    registry: Sequence[AmbiguityPattern] | None = None,
) -> tuple[Interpretation, ...]:
    """Every reading of the tree, deterministically ordered.

    Base (undistributed) readings come first; within a block the quantifier
    varies before the axiom form, so the literal as-parsed definitional
    reading is always index 0.
    """
    if registry is None:
        registry = BUILTIN_PATTERNS
    fired = [p for p in registry if TRIGGERS[p.trigger](tree)]
    names = tuple(p.name for p in fired)

    quant_set = {
        _QUANT_EXPANSIONS[e]
        for p in fired
        for e in p.expansions
        if e in _QUANT_EXPANSIONS
    }
    quants = [q for q in _QUANT_ORDER if q in quant_set] or [QUANT_AS_PARSED]

    forms = [AxiomForm.DEFINITIONAL]
    for p in fired:
        for e in p.expansions:
            form = _FORM_EXPANSIONS.get(e)
            if form is not None and form not in forms:
                forms.append(form)

    variants = [False] + ([True] if has_filler_split(tree) else [])
    lhs = build_subject(tree)

    out: list[Interpretation] = []
    seen: set = set()
    for distributed in variants:
        for quant in quants:
            rhs = build_body(tree, quant, distributed)
            for form in forms:
                key = (form, quant, distributed)
                if key in seen:
                    continue
                seen.add(key)
                out.append(Interpretation(form, lhs, rhs, quant, distributed, names))
    return tuple(out)


def apply_modifier_split(tree: SentenceNode) -> tuple[Interpretation, ...]:
    """Just the distributed re-readings of the literal interpretation.

    Empty when no filler contains a juxtaposed concept pair.  Juxtaposed
    concepts in class position need no delta: the grammar already reads them
    as an intersection.
    """
    if not has_filler_split(tree):
        return ()
    return (
        Interpretation(
            AxiomForm.DEFINITIONAL,
            build_subject(tree),
            build_body(tree, QUANT_AS_PARSED, True),
            QUANT_AS_PARSED,
            True,
            ("modifier-split",),
        ),
    )
