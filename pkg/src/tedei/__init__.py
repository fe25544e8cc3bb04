"""Controlled English to OWL 2 class expression axioms.

The pipeline preserves ambiguity end to end: a sentence is segmented into
every admissible sequence of terminal spans, each segmentation is parsed
into all of its derivations, each derivation is expanded into its
interpretations, and every interpretation yields a rewritten sentence, a
tagged form and one axiom.  Nothing is ranked or discarded; choosing among
alternatives is the caller's job.
"""

from .model import (
    Axiom,
    AxiomForm,
    ClassExpr,
    EmptySentenceError,
    InternalInconsistencyError,
    Lexicalization,
    Provenance,
    TerminalSpan,
    Token,
)
from .tagging import RuleTagger, Tagger, TaggerLexicon
from .lexicalize import PatternRule, enumerate_lexicalizations
from .grammar import grammar_bnf, is_tedei_sentence, recognize
from .interpret import AmbiguityPattern, Interpretation, interpret
from .transform import surface_transform, tag_transform
from .axioms import (
    expressivity,
    parse_dl,
    parse_tagged_ace,
    serialize_dl,
    serialize_functional,
    to_axiom,
)
from .pipeline import Reading, SentenceAnalysis, analysis_to_json, analyze_sentence
from .corpus import CoverageReport, gold_compare, run_corpus

__version__ = "0.1.0"

__all__ = [
    "Axiom",
    "AxiomForm",
    "ClassExpr",
    "EmptySentenceError",
    "InternalInconsistencyError",
    "Lexicalization",
    "Provenance",
    "TerminalSpan",
    "Token",
    "RuleTagger",
    "Tagger",
    "TaggerLexicon",
    "PatternRule",
    "enumerate_lexicalizations",
    "grammar_bnf",
    "is_tedei_sentence",
    "recognize",
    "AmbiguityPattern",
    "Interpretation",
    "interpret",
    "surface_transform",
    "tag_transform",
    "expressivity",
    "parse_dl",
    "parse_tagged_ace",
    "serialize_dl",
    "serialize_functional",
    "to_axiom",
    "Reading",
    "SentenceAnalysis",
    "analysis_to_json",
    "analyze_sentence",
    "CoverageReport",
    "gold_compare",
    "run_corpus",
    "__version__",
]
