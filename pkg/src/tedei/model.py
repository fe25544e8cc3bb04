"""Core data model shared by every pipeline stage.

Tokens and terminal spans describe how a sentence was cut up; class
expressions and axioms describe what came out the other end.  Everything here
is immutable so that alternatives can be enumerated, memoized and deduplicated
without defensive copying.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

__all__ = [
    "EmptySentenceError",
    "InternalInconsistencyError",
    "PENN_TAGS",
    "Token",
    "SpanKind",
    "IndicatorKind",
    "TerminalSpan",
    "Lexicalization",
    "ClassExpr",
    "Atomic",
    "Top",
    "Intersection",
    "Union",
    "Complement",
    "Existential",
    "Universal",
    "MinCard",
    "MaxCard",
    "ExactCard",
    "HasValue",
    "HasSelf",
    "normalize",
    "structural_key",
    "intersection_of",
    "union_of",
    "concept_name",
    "property_name",
    "individual_name",
    "singularize",
    "AxiomForm",
    "Provenance",
    "Axiom",
]


class EmptySentenceError(ValueError):
    """Raised when an operation is asked to process an empty sentence."""


class InternalInconsistencyError(RuntimeError):
    """A pipeline stage produced output a later stage cannot account for."""


# The Penn Treebank tagset (word tags plus the punctuation tags we emit).
PENN_TAGS = frozenset(
    {
        "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
        "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
        "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
        "VBZ", "WDT", "WP", "WP$", "WRB",
        ".", ",", ":", "(", ")", "``", "''", "#", "$",
    }
)


@dataclass(frozen=True)
class Token:
    """One surface token with its position, lemma and part-of-speech tag."""

    surface: str
    lemma: str
    pos: str
    index: int

    def __str__(self) -> str:
        return f"{self.surface}/{self.pos}"


class SpanKind(enum.Enum):
    CLASS = "CLASS"
    INDIVIDUAL = "INDIVIDUAL"
    PROPERTY = "PROPERTY"
    CARDINALITY = "CARDINALITY"
    INDICATOR = "INDICATOR"


class IndicatorKind(enum.Enum):
    """Which indicator table a keyword span was drawn from."""

    UNION = "unionInd"
    INTERSECTION = "intersectionInd"
    CLS_EXP = "clsExpInd"
    PRE_COMPLEMENT = "preComplementInd"
    POST_COMPLEMENT = "postComplementInd"
    UNIVERSAL = "universalInd"
    EXISTENTIAL = "existentialInd"
    EXACT_CARD = "exactCardinalityInd"
    AMBI_EXACT_CARD = "ambiExactCardInd"
    PRE_MIN_CARD = "preMinCardInd"
    POST_MIN_CARD = "postMinCardInd"
    PRE_MAX_CARD = "preMaxCardInd"
    POST_MAX_CARD = "postMaxCardInd"
    SELF = "selfInd"


@dataclass(frozen=True)
class TerminalSpan:
    """A contiguous run of tokens classified as one grammar terminal.

    ``indicator_kind`` is set only for INDICATOR spans and ``value`` only for
    CARDINALITY spans.
    """

    kind: SpanKind
    tokens: tuple[Token, ...]
    indicator_kind: IndicatorKind | None = None
    value: int | None = None

    def __post_init__(self) -> None:
        if not self.tokens:
            raise ValueError("a terminal span needs at least one token")
        if self.kind is SpanKind.INDICATOR and self.indicator_kind is None:
            raise ValueError("indicator spans carry an indicator kind")
        if self.kind is SpanKind.CARDINALITY and self.value is None:
            raise ValueError("cardinality spans carry a numeric value")

    @property
    def start(self) -> int:
        return self.tokens[0].index

    @property
    def end(self) -> int:
        # exclusive
        return self.tokens[-1].index + 1

    @property
    def negated(self) -> bool:
        """True for predicate spans that contain an embedded negation."""
        return self.kind is SpanKind.PROPERTY and any(
            t.lemma == "not" for t in self.tokens
        )

    def identifier_words(self) -> tuple[str, ...]:
        """Surface words contributing to the span's identifier.

        Property spans drop embedded negations and determiners; they mark the
        reading, not the relation name.
        """
        if self.kind is SpanKind.PROPERTY:
            return tuple(
                t.surface
                for t in self.tokens
                if t.lemma != "not" and t.pos != "DT"
            )
        return tuple(t.surface for t in self.tokens)

    def text(self) -> str:
        return " ".join(t.surface for t in self.tokens)

    def __str__(self) -> str:
        label = self.kind.value
        if self.indicator_kind is not None:
            label = self.indicator_kind.value
        return f"[{label} {self.text()}]"


@dataclass(frozen=True)
class Lexicalization:
    """One way of partitioning a sentence into terminal spans plus residue.

    The spans, ordered by position, are the parser's input; residue tokens
    (subject determiner, copulas, final punctuation) carry no terminal.
    """

    tokens: tuple[Token, ...]
    spans: tuple[TerminalSpan, ...]
    residue: tuple[Token, ...]

    def validate(self) -> None:
        """Check the partition invariant: every token covered exactly once."""
        seen: list[int] = []
        for span in self.spans:
            seen.extend(t.index for t in span.tokens)
        seen.extend(t.index for t in self.residue)
        if sorted(seen) != [t.index for t in self.tokens]:
            raise ValueError("spans plus residue must partition the sentence")
        starts = [s.start for s in self.spans]
        if starts != sorted(starts):
            raise ValueError("spans must be ordered by position")

    def subject_determiner(self) -> str | None:
        """The residue determiner preceding the first span, if any."""
        if not self.spans:
            return None
        first = self.spans[0].start
        for tok in self.residue:
            if tok.index < first and tok.lemma in ("every", "a", "an", "all", "each"):
                return tok.lemma
        return None

    def key(self) -> tuple:
        return tuple(
            (s.kind.value, s.start, s.end, s.indicator_kind.value if s.indicator_kind else "")
            for s in self.spans
        )

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.spans)


# ---------------------------------------------------------------------------
# Class expressions


class ClassExpr:
    """Base class for the normalized class expression AST."""

    __slots__ = ()


@dataclass(frozen=True)
class Atomic(ClassExpr):
    name: str


@dataclass(frozen=True)
class Top(ClassExpr):
    pass


@dataclass(frozen=True)
class Intersection(ClassExpr):
    operands: tuple[ClassExpr, ...]


@dataclass(frozen=True)
class Union(ClassExpr):
    operands: tuple[ClassExpr, ...]


@dataclass(frozen=True)
class Complement(ClassExpr):
    operand: ClassExpr


@dataclass(frozen=True)
class Existential(ClassExpr):
    prop: str
    filler: ClassExpr


@dataclass(frozen=True)
class Universal(ClassExpr):
    prop: str
    filler: ClassExpr


@dataclass(frozen=True)
class MinCard(ClassExpr):
    n: int
    prop: str
    filler: ClassExpr


@dataclass(frozen=True)
class MaxCard(ClassExpr):
    n: int
    prop: str
    filler: ClassExpr


@dataclass(frozen=True)
class ExactCard(ClassExpr):
    n: int
    prop: str
    filler: ClassExpr


@dataclass(frozen=True)
class HasValue(ClassExpr):
    prop: str
    individual: str


@dataclass(frozen=True)
class HasSelf(ClassExpr):
    prop: str


_RANK = {
    Atomic: 0,
    Top: 1,
    Complement: 2,
    Existential: 3,
    Universal: 4,
    MinCard: 5,
    MaxCard: 6,
    ExactCard: 7,
    HasValue: 8,
    HasSelf: 9,
    Intersection: 10,
    Union: 11,
}


def structural_key(expr: ClassExpr) -> tuple:
    """Total order on expressions; keys of equal rank have equal shape."""
    rank = _RANK[type(expr)]
    if isinstance(expr, Atomic):
        return (rank, expr.name)
    if isinstance(expr, Top):
        return (rank,)
    if isinstance(expr, Complement):
        return (rank, structural_key(expr.operand))
    if isinstance(expr, (Existential, Universal)):
        return (rank, expr.prop, structural_key(expr.filler))
    if isinstance(expr, (MinCard, MaxCard, ExactCard)):
        return (rank, expr.prop, expr.n, structural_key(expr.filler))
    if isinstance(expr, HasValue):
        return (rank, expr.prop, expr.individual)
    if isinstance(expr, HasSelf):
        return (rank, expr.prop)
    if isinstance(expr, (Intersection, Union)):
        return (rank, tuple(structural_key(o) for o in expr.operands))
    raise TypeError(f"unknown expression {expr!r}")


def _normalize_nary(kind: type, operands: tuple[ClassExpr, ...]) -> ClassExpr:
    flat: list[ClassExpr] = []
    for op in operands:
        op = normalize(op)
        if isinstance(op, kind):
            flat.extend(op.operands)  # type: ignore[attr-defined]
        else:
            flat.append(op)
    unique: dict[tuple, ClassExpr] = {}
    for op in flat:
        unique.setdefault(structural_key(op), op)
    ordered = [unique[k] for k in sorted(unique)]
    if len(ordered) == 1:
        return ordered[0]
    return kind(tuple(ordered))


def normalize(expr: ClassExpr) -> ClassExpr:
    """Canonical form: n-ary operators flattened, deduplicated and sorted.

    Normalization quotients out associativity, commutativity and idempotence
    of intersection and union, nothing more; no logical simplification.
    """
    if isinstance(expr, (Atomic, Top, HasValue, HasSelf)):
        return expr
    if isinstance(expr, Intersection):
        return _normalize_nary(Intersection, expr.operands)
    if isinstance(expr, Union):
        return _normalize_nary(Union, expr.operands)
    if isinstance(expr, Complement):
        return Complement(normalize(expr.operand))
    if isinstance(expr, Existential):
        return Existential(expr.prop, normalize(expr.filler))
    if isinstance(expr, Universal):
        return Universal(expr.prop, normalize(expr.filler))
    if isinstance(expr, MinCard):
        return MinCard(expr.n, expr.prop, normalize(expr.filler))
    if isinstance(expr, MaxCard):
        return MaxCard(expr.n, expr.prop, normalize(expr.filler))
    if isinstance(expr, ExactCard):
        return ExactCard(expr.n, expr.prop, normalize(expr.filler))
    raise TypeError(f"unknown expression {expr!r}")


def intersection_of(operands: list[ClassExpr]) -> ClassExpr:
    """Intersection constructor collapsing the unary case."""
    if not operands:
        raise ValueError("intersection of nothing")
    if len(operands) == 1:
        return operands[0]
    return Intersection(tuple(operands))


def union_of(operands: list[ClassExpr]) -> ClassExpr:
    if not operands:
        raise ValueError("union of nothing")
    if len(operands) == 1:
        return operands[0]
    return Union(tuple(operands))


# ---------------------------------------------------------------------------
# Identifier casing


def _upper_camel_word(word: str) -> str:
    if len(word) > 1 and word.isupper():
        return word
    return word[:1].upper() + word[1:]


def _lower_word(word: str) -> str:
    if len(word) > 1 and word.isupper():
        return word
    return word[:1].lower() + word[1:]


def concept_name(words: tuple[str, ...] | list[str]) -> str:
    """UpperCamelCase concept identifier; all-caps words keep their casing."""
    return "".join(_upper_camel_word(w) for w in words)


def individual_name(words: tuple[str, ...] | list[str]) -> str:
    return "".join(_upper_camel_word(w) for w in words)


def property_name(words: tuple[str, ...] | list[str]) -> str:
    """lowerCamelCase property identifier; all-caps words keep their casing."""
    if not words:
        raise ValueError("property with no words")
    head, *rest = words
    return _lower_word(head) + "".join(_upper_camel_word(w) for w in rest)


# ---------------------------------------------------------------------------
# Singularization (subject heads only)

_INVARIANT_NOUNS = {
    "species", "series", "news", "maths", "mathematics", "physics",
    "economics", "means", "headquarters", "aircraft", "sheep", "deer",
    "fish", "scissors", "trousers", "crossroads",
}

_IRREGULAR_PLURALS = {
    "children": "child", "people": "person", "men": "man", "women": "woman",
    "teeth": "tooth", "feet": "foot", "geese": "goose", "mice": "mouse",
    "oxen": "ox", "criteria": "criterion", "phenomena": "phenomenon",
    "indices": "index", "matrices": "matrix", "vertices": "vertex",
    "axes": "axis", "cacti": "cactus", "fungi": "fungus",
}


def singularize(word: str) -> str:
    """Best-effort English singular for a subject head word.

    Case is preserved for a leading capital so that canonical identifiers stay
    stable ("Quarks" -> "Quark").
    """
    lower = word.lower()
    if lower in _INVARIANT_NOUNS:
        return word
    if lower in _IRREGULAR_PLURALS:
        result = _IRREGULAR_PLURALS[lower]
    elif lower.endswith("ies") and len(lower) > 4:
        result = lower[:-3] + "y"
    elif lower.endswith(("xes", "ches", "shes", "sses", "zes", "oes")):
        result = lower[:-2]
    elif lower.endswith("s") and not lower.endswith(("ss", "us", "is")):
        result = lower[:-1]
    else:
        return word
    if word[:1].isupper():
        result = result[:1].upper() + result[1:]
    return result


# ---------------------------------------------------------------------------
# Axioms


class AxiomForm(enum.Enum):
    DEFINITIONAL = "SubClassOf"
    NON_DEFINITIONAL = "NonDefinitional"


@dataclass(frozen=True)
class Provenance:
    """Where an axiom came from within the alternative space of a sentence."""

    sentence_id: str
    lexicalization_index: int
    interpretation_index: int
    approximate_cardinality: bool = False


@dataclass(frozen=True)
class Axiom:
    """A subsumption produced from one interpretation of one lexicalization.

    Definitional axioms read lhs subsumed-by rhs.  Non-definitional axioms
    assert only satisfiability of the combined description: the conjunction of
    lhs and rhs is subsumed by the top concept.
    """

    form: AxiomForm
    lhs: ClassExpr
    rhs: ClassExpr
    provenance: Provenance | None = field(default=None, compare=False)

    def normalized(self) -> "Axiom":
        return Axiom(self.form, normalize(self.lhs), normalize(self.rhs), self.provenance)

    def semantic_pair(self) -> tuple[ClassExpr, ClassExpr]:
        """The (sub, super) pair the axiom denotes, normalization-ready."""
        if self.form is AxiomForm.NON_DEFINITIONAL:
            return Intersection((self.lhs, self.rhs)), Top()
        return self.lhs, self.rhs

    def key(self) -> tuple:
        """Deduplication key: form-insensitive only in that non-definitional
        axioms compare by their conjunction-under-top reading."""
        sub, sup = self.semantic_pair()
        return (self.form.value, structural_key(normalize(sub)), structural_key(normalize(sup)))
