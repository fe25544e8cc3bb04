"""Keyword (indicator) tables: the closed-class terminal alphabet.

Each indicator kind maps to the word phrases that realize it.  Phrases are
lemma tuples so multi-word keywords ("nothing but", "more than", "or less")
segment as one span.  A word may serve several kinds ("only" marks both a
universal restriction and an exact cardinality); the lexicalizer emits one
candidate span per kind and the parser sorts out which ones survive.
"""

from __future__ import annotations

from .model import IndicatorKind

__all__ = ["INDICATOR_PHRASES"]


def _phrases(*items: str) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(item.split()) for item in items)


INDICATOR_PHRASES: dict[IndicatorKind, tuple[tuple[str, ...], ...]] = {
    IndicatorKind.UNION: _phrases("or"),
    IndicatorKind.INTERSECTION: _phrases("that", "which", "who", "whose"),
    IndicatorKind.CLS_EXP: _phrases("and", "or", ","),
    IndicatorKind.PRE_COMPLEMENT: _phrases("does not", "do not", "did not"),
    IndicatorKind.POST_COMPLEMENT: _phrases("not", "no"),
    IndicatorKind.UNIVERSAL: _phrases("exclusively", "nothing but", "nothing except", "only"),
    IndicatorKind.EXISTENTIAL: _phrases("a", "an", "all", "any", "few", "many", "some", "several"),
    IndicatorKind.EXACT_CARD: _phrases("exactly", "just", "may be", "only"),
    IndicatorKind.AMBI_EXACT_CARD: _phrases(
        "about", "almost", "approximately", "around", "close to"
    ),
    # The one-word spellings are kept alongside the spaced forms so either
    # writing style segments.
    IndicatorKind.PRE_MIN_CARD: _phrases(
        "atleast", "at least", "least", "more than", "not less than"
    ),
    IndicatorKind.POST_MIN_CARD: _phrases("or more"),
    IndicatorKind.PRE_MAX_CARD: _phrases(
        "atmost", "at most", "most", "less than", "not more than", "within"
    ),
    IndicatorKind.POST_MAX_CARD: _phrases("or less"),
    IndicatorKind.SELF: _phrases(
        "myself", "ourselves", "yourself", "yourselves",
        "himself", "herself", "itself", "themselves",
    ),
}
