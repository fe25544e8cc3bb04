"""End-to-end analysis: sentence in, readings and axioms out.

Stage order is fixed: tag, segment, parse, interpret, then per reading the
two text stages and the axiom.  Readings are deterministic: lexicalizations
come out of the enumerator in a stable order, parse trees in grammar order,
interpretations in registry order, so the same sentence always produces the
same numbered readings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .axioms import (
    axiom_to_json,
    expressivity,
    serialize_dl,
    to_axiom,
    tree_has_approximate_cardinality,
)
from .grammar import Diagnostics, SentenceNode, _recognize_with_frontier
from .interpret import AmbiguityPattern, Interpretation, interpret
from .lexicalize import PatternRule, enumerate_lexicalizations
from .model import Axiom, Lexicalization, Provenance
from .tagging import RuleTagger, Tagger
from .transform import surface_transform, tag_transform

__all__ = ["Reading", "SentenceAnalysis", "analyze_sentence", "analysis_to_json"]


@dataclass(frozen=True)
class Reading:
    """One fully processed (lexicalization, parse, interpretation) triple."""

    lexicalization_index: int
    interpretation_index: int
    lexicalization: Lexicalization
    tree: SentenceNode
    interpretation: Interpretation
    axiom: Axiom
    ace: str
    tagged: str


@dataclass
class SentenceAnalysis:
    sentence: str
    tedei: bool
    diagnostics: Diagnostics
    readings: tuple[Reading, ...] = ()
    axioms: tuple[Axiom, ...] = ()  # deduplicated, first occurrence wins
    truncated: bool = False


def analyze_sentence(
    sentence: str,
    *,
    tagger: Tagger | None = None,
    rules: tuple[PatternRule, ...] | None = None,
    registry: Sequence[AmbiguityPattern] | None = None,
    cap: int | None = None,
    sentence_id: str = "input",
) -> SentenceAnalysis:
    tagger = tagger or RuleTagger()
    tokens = tagger.tag(sentence)
    kwargs = {} if cap is None else {"cap": cap}
    enum = enumerate_lexicalizations(tokens, rules, **kwargs)

    if not enum.lexicalizations:
        pos = min(enum.frontier, len(tokens) - 1)
        diag = Diagnostics(
            False,
            "no segmentation covers the sentence; stuck at token "
            f"{pos} ({tokens[pos].surface!r})",
            position=pos,
            token=tokens[pos].surface,
            truncated=enum.truncated,
        )
        return SentenceAnalysis(sentence, False, diag, truncated=enum.truncated)

    readings: list[Reading] = []
    axioms: list[Axiom] = []
    seen: set = set()
    parsed = 0
    best_token_pos = 0
    for lex_idx, lex in enumerate(enum.lexicalizations):
        trees, frontier = _recognize_with_frontier(lex)
        if trees:
            parsed += 1
        elif lex.spans:
            idx = min(frontier, len(lex.spans) - 1)
            best_token_pos = max(best_token_pos, lex.spans[idx].start)
        interp_idx = 0
        for tree in trees:
            approx = tree_has_approximate_cardinality(tree)
            for interp in interpret(tree, registry):
                prov = Provenance(sentence_id, lex_idx, interp_idx, approx)
                axiom = to_axiom(interp, prov)
                ace = surface_transform(tree, interp)
                tagged = tag_transform(ace, lex)
                readings.append(
                    Reading(lex_idx, interp_idx, lex, tree, interp, axiom, ace, tagged)
                )
                if axiom.key() not in seen:
                    seen.add(axiom.key())
                    axioms.append(axiom)
                interp_idx += 1

    if parsed:
        diag = Diagnostics(
            True,
            "sentence is in the language",
            lexicalization_count=len(enum.lexicalizations),
            parsed_lexicalization_count=parsed,
            truncated=enum.truncated,
        )
        return SentenceAnalysis(
            sentence, True, diag, tuple(readings), tuple(axioms), enum.truncated
        )
    diag = Diagnostics(
        False,
        "no reading parses; furthest failure at token "
        f"{best_token_pos} ({tokens[best_token_pos].surface!r})",
        position=best_token_pos,
        token=tokens[best_token_pos].surface,
        lexicalization_count=len(enum.lexicalizations),
        truncated=enum.truncated,
    )
    return SentenceAnalysis(sentence, False, diag, truncated=enum.truncated)


# ---------------------------------------------------------------------------
# JSON view, shared by the CLI batch format and the HTTP service


def _span_json(span) -> dict:
    data = {
        "kind": span.kind.value,
        "text": span.text(),
        "start": span.start,
        "end": span.end,
    }
    if span.indicator_kind is not None:
        data["indicator"] = span.indicator_kind.value
    if span.value is not None:
        data["value"] = span.value
    return data


def analysis_to_json(analysis: SentenceAnalysis, include_readings: bool = True) -> dict:
    diag = analysis.diagnostics
    data: dict = {
        "sentence": analysis.sentence,
        "tedei": analysis.tedei,
        "diagnostics": {
            "isTedei": diag.is_tedei,
            "reason": diag.reason,
            "position": diag.position,
            "token": diag.token,
            "lexicalizationCount": diag.lexicalization_count,
            "parsedLexicalizationCount": diag.parsed_lexicalization_count,
            "truncated": diag.truncated,
        },
        "axioms": [axiom_to_json(a) for a in analysis.axioms],
        "expressivity": expressivity(analysis.axioms) if analysis.axioms else None,
    }
    if include_readings:
        by_lex: dict[int, dict] = {}
        for r in analysis.readings:
            entry = by_lex.setdefault(
                r.lexicalization_index,
                {
                    "index": r.lexicalization_index,
                    "spans": [_span_json(s) for s in r.lexicalization.spans],
                    "residue": [t.surface for t in r.lexicalization.residue],
                    "interpretations": [],
                },
            )
            entry["interpretations"].append(
                {
                    "index": r.interpretation_index,
                    "axiomForm": r.interpretation.axiom_form.value,
                    "quantifier": r.interpretation.quantifier_choice,
                    "distributed": r.interpretation.distributed,
                    "patterns": list(r.interpretation.patterns),
                    "ace": r.ace,
                    "tagged": r.tagged,
                    "dl": serialize_dl(r.axiom),
                    "axiom": axiom_to_json(r.axiom),
                }
            )
        data["lexicalizations"] = [by_lex[k] for k in sorted(by_lex)]
    return data
