"""Translation of parse trees into OWL-DL class expression axioms, plus the
serializers: display DL notation (with a reader for gold files), OWL 2
functional-style syntax, a JSON dump for machine consumers, and a
constructor-census expressivity report.

The tagged controlled-English sentence produced by the transform stage can
also be read back here; it is a presentation layer, and tests hold the two
routes (tree -> axiom vs tagged text -> axiom) structurally equal.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Sequence

from .grammar import (
    CardRestrictionNode,
    ClassCombNode,
    ClsExpCombNode,
    ComplementNode,
    ExistResNode,
    IndValueNode,
    IntersectionNode,
    SelfValueNode,
    SentenceNode,
    UniResNode,
    UnionNode,
)
from .indicators import INDICATOR_PHRASES
from .model import (
    Atomic,
    Axiom,
    AxiomForm,
    ClassExpr,
    Complement,
    ExactCard,
    Existential,
    HasSelf,
    HasValue,
    Intersection,
    IndicatorKind,
    MaxCard,
    MinCard,
    Provenance,
    SpanKind,
    TerminalSpan,
    Top,
    Union,
    Universal,
    concept_name,
    individual_name,
    intersection_of,
    normalize,
    property_name,
    singularize,
    union_of,
)

__all__ = [
    "QUANT_AS_PARSED",
    "QUANT_FORCED_EXISTENTIAL",
    "QUANT_FORCED_UNIVERSAL",
    "QUANT_BOTH",
    "build_subject",
    "build_body",
    "has_filler_split",
    "to_axiom",
    "serialize_dl",
    "serialize_dl_expr",
    "parse_dl",
    "serialize_functional",
    "functional_axiom",
    "expressivity",
    "axiom_to_json",
    "axiom_from_json",
    "expr_to_json",
    "expr_from_json",
    "parse_tagged_ace",
]

QUANT_AS_PARSED = "AsParsed"
QUANT_FORCED_EXISTENTIAL = "ForcedExistential"
QUANT_FORCED_UNIVERSAL = "ForcedUniversal"
QUANT_BOTH = "ExistentialAndUniversal"


# ---------------------------------------------------------------------------
# Tree -> ClassExpr


def _group(exprs: Sequence[ClassExpr], seps: Sequence[TerminalSpan | None]) -> ClassExpr:
    """and/comma/juxtaposition bind tighter than or: A and B or C reads
    (A ⊓ B) ⊔ C."""
    groups: list[list[ClassExpr]] = [[exprs[0]]]
    for sep, expr in zip(seps, exprs[1:]):
        if sep is not None and sep.tokens[0].lemma == "or":
            groups.append([expr])
        else:
            groups[-1].append(expr)
    return union_of([intersection_of(group) for group in groups])


def _comb_exprs(comb: ClassCombNode) -> list[ClassExpr]:
    return [Atomic(concept_name(m.identifier_words())) for m in comb.members]


def _over_comb(comb: ClassCombNode, make: Callable[[ClassExpr], ClassExpr]) -> ClassExpr:
    """Distribute a restriction over each coordinated filler concept."""
    return _group([make(e) for e in _comb_exprs(comb)], comb.seps)


def _make_quantified(prop: str, negated: bool, quant: str) -> Callable[[ClassExpr], ClassExpr]:
    if negated:
        # negation is explicit; quantifier choices do not reinterpret it
        return lambda filler: Complement(Existential(prop, filler))
    if quant == QUANT_FORCED_UNIVERSAL:
        return lambda filler: Universal(prop, filler)
    if quant == QUANT_BOTH:
        return lambda filler: Intersection(
            (Existential(prop, filler), Universal(prop, filler))
        )
    return lambda filler: Existential(prop, filler)


_CARD_TYPES = {"exact": ExactCard, "min": MinCard, "max": MaxCard}


def _build_clsexp(item, quant: str) -> ClassExpr:
    if isinstance(item, ClassCombNode):
        return _group(_comb_exprs(item), item.seps)
    if isinstance(item, ExistResNode):
        prop = property_name(item.prop.identifier_words())
        make = _make_quantified(prop, item.prop.negated, quant)
        if item.comb is None:
            return make(Top())
        return _over_comb(item.comb, make)
    if isinstance(item, UniResNode):
        prop = property_name(item.prop.identifier_words())
        if item.prop.negated:
            return _over_comb(item.comb, lambda f: Complement(Universal(prop, f)))
        return _over_comb(item.comb, lambda f: Universal(prop, f))
    if isinstance(item, ComplementNode):
        prop = property_name(item.prop.identifier_words())
        if item.comb is None:
            return Complement(Existential(prop, Top()))
        return _over_comb(item.comb, lambda f: Complement(Existential(prop, f)))
    if isinstance(item, CardRestrictionNode):
        prop = property_name(item.prop.identifier_words())
        cls = _CARD_TYPES[item.op]
        n = item.card.value
        make = lambda f: cls(n, prop, f)  # noqa: E731
        wrap = (lambda e: Complement(e)) if item.prop.negated else (lambda e: e)
        if item.comb is None:
            return wrap(make(Top()))
        return _over_comb(item.comb, lambda f: wrap(make(f)))
    if isinstance(item, IndValueNode):
        prop = property_name(item.prop.identifier_words())
        value = HasValue(prop, individual_name(item.individual.identifier_words()))
        return Complement(value) if item.prop.negated else value
    if isinstance(item, SelfValueNode):
        prop = property_name(item.prop.identifier_words())
        return Complement(HasSelf(prop)) if item.prop.negated else HasSelf(prop)
    raise TypeError(f"unknown class expression node {item!r}")


def _shared_fillers(items: Sequence) -> dict[int, object]:
    """Coordinated verb phrases share the nearest following filler:
    "seizes and detains a victim" gives both relations the victim filler.
    Maps the bare relation's index to the donor restriction node."""
    shared: dict[int, object] = {}
    for k, item in enumerate(items):
        if isinstance(item, ExistResNode) and item.comb is None and not item.prop.negated:
            for later in items[k + 1 :]:
                if isinstance(getattr(later, "comb", None), ClassCombNode):
                    shared[k] = later
                    break
    return shared


def _split_targets(node: ClsExpCombNode) -> set[int]:
    """Indices of bare concept items that directly continue the preceding
    restriction's filler noun phrase (modifier-split position)."""
    targets: set[int] = set()
    for k in range(1, len(node.items)):
        item, prev = node.items[k], node.items[k - 1]
        if not isinstance(item, ClassCombNode) or node.seps[k - 1] is not None:
            continue
        comb = getattr(prev, "comb", None)
        if (
            isinstance(prev, (ExistResNode, UniResNode))
            and isinstance(comb, ClassCombNode)
            and comb.members[-1].end == item.members[0].start
        ):
            targets.add(k)
    return targets


def _build_clsexpcomb(node: ClsExpCombNode, quant: str, distribute: bool) -> ClassExpr:
    shared = _shared_fillers(node.items)
    targets = _split_targets(node) if distribute else set()
    exprs: list[ClassExpr] = []
    for k, item in enumerate(node.items):
        if k in targets:
            prev = node.items[k - 1]
            prop = property_name(prev.prop.identifier_words())
            if isinstance(prev, UniResNode):
                make: Callable[[ClassExpr], ClassExpr] = lambda f: Universal(prop, f)
            else:
                make = _make_quantified(prop, prev.prop.negated, quant)
            exprs.append(_over_comb(item, make))
            continue
        if k in shared:
            item = ExistResNode(item.prop, item.ind, shared[k].comb)
        exprs.append(_build_clsexp(item, quant))
    return _group(exprs, node.seps)


def build_body(tree: SentenceNode, quant: str = QUANT_AS_PARSED, distribute: bool = False) -> ClassExpr:
    """The right-hand side class expression of a parse tree.

    ``quant`` applies one uniform quantifier reading to every plain
    (non-negated) existential restriction; ``distribute`` re-reads
    juxtaposed filler concepts as distributed fillers of the preceding
    restriction (the modifier-split alternative).
    """
    union_parts = [
        intersection_of(
            [_build_clsexpcomb(part, quant, distribute) for part in inter.parts]
        )
        for inter in tree.body.parts
    ]
    return union_of(union_parts)


def build_subject(tree: SentenceNode) -> ClassExpr:
    """Left-hand side concept: head word singularized so surface plurals
    ("Quarks") and their fillers ("Toppings") canonicalize differently."""
    span = tree.subject
    words = span.identifier_words()
    if span.kind is SpanKind.INDIVIDUAL:
        return Atomic(individual_name(words))
    head = singularize(words[-1])
    return Atomic(concept_name(words[:-1] + (head,)))


def has_filler_split(tree: SentenceNode) -> bool:
    """Does any clsExpComb contain a modifier-split filler position?"""
    for inter in tree.body.parts:
        for part in inter.parts:
            if _split_targets(part):
                return True
    return False


def tree_has_approximate_cardinality(tree: SentenceNode) -> bool:
    def walk(node) -> bool:
        if isinstance(node, CardRestrictionNode):
            return node.approximate
        if isinstance(node, (UnionNode, IntersectionNode)):
            return any(walk(p) for p in node.parts)
        if isinstance(node, ClsExpCombNode):
            return any(walk(i) for i in node.items)
        return False

    return any(walk(p) for p in tree.body.parts)


def to_axiom(interp, provenance: Provenance | None = None) -> Axiom:
    """Interpretation -> Axiom (lhs/rhs already built by the interpreter)."""
    return Axiom(interp.axiom_form, interp.lhs, interp.rhs, provenance)


# ---------------------------------------------------------------------------
# DL notation (display syntax)


def _dl(expr: ClassExpr) -> str:
    if isinstance(expr, Atomic):
        return expr.name
    if isinstance(expr, Top):
        return "⊤"
    if isinstance(expr, Complement):
        return "¬" + _dl_operand(expr.operand)
    if isinstance(expr, Existential):
        return f"∃{expr.prop}.{_dl_operand(expr.filler)}"
    if isinstance(expr, Universal):
        return f"∀{expr.prop}.{_dl_operand(expr.filler)}"
    if isinstance(expr, MinCard):
        return f"≥{expr.n}{expr.prop}.{_dl_operand(expr.filler)}"
    if isinstance(expr, MaxCard):
        return f"≤{expr.n}{expr.prop}.{_dl_operand(expr.filler)}"
    if isinstance(expr, ExactCard):
        return f"={expr.n}{expr.prop}.{_dl_operand(expr.filler)}"
    if isinstance(expr, HasValue):
        return f"∃{expr.prop}.{{{expr.individual}}}"
    if isinstance(expr, HasSelf):
        return f"∃{expr.prop}.Self"
    if isinstance(expr, Intersection):
        return " ⊓ ".join(
            f"({_dl(op)})" if isinstance(op, Union) else _dl(op) for op in expr.operands
        )
    if isinstance(expr, Union):
        return " ⊔ ".join(
            f"({_dl(op)})" if isinstance(op, Union) else _dl(op) for op in expr.operands
        )
    raise TypeError(f"unknown expression {expr!r}")


def _dl_operand(expr: ClassExpr) -> str:
    if isinstance(expr, (Atomic, Top)):
        return _dl(expr)
    return f"({_dl(expr)})"


def serialize_dl_expr(expr: ClassExpr) -> str:
    return _dl(normalize(expr))


def serialize_dl(axiom: Axiom) -> str:
    sub, sup = axiom.semantic_pair()
    return f"{_dl(normalize(sub))} ⊑ {_dl(normalize(sup))}"


# -- DL reader (gold files, round-trip tests)

_DL_TOKEN = re.compile(r"\s*(⊑|⊓|⊔|¬|∃|∀|⊤|≥|≤|=|\.|\(|\)|\{|\}|\d+|[A-Za-z_][A-Za-z0-9_]*)")


class _DLReader:
    def __init__(self, text: str):
        self.tokens: list[str] = []
        pos = 0
        while pos < len(text):
            m = _DL_TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ValueError(f"bad DL syntax near {text[pos:pos+20]!r}")
                break
            self.tokens.append(m.group(1))
            pos = m.end()
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of DL input")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.next()
        if got != tok:
            raise ValueError(f"expected {tok!r}, got {got!r}")

    def parse_union(self) -> ClassExpr:
        parts = [self.parse_intersection()]
        while self.peek() == "⊔":
            self.next()
            parts.append(self.parse_intersection())
        return union_of(parts)

    def parse_intersection(self) -> ClassExpr:
        parts = [self.parse_unary()]
        while self.peek() == "⊓":
            self.next()
            parts.append(self.parse_unary())
        return intersection_of(parts)

    def parse_unary(self) -> ClassExpr:
        tok = self.peek()
        if tok == "¬":
            self.next()
            return Complement(self.parse_unary())
        if tok in ("∃", "∀"):
            self.next()
            prop = self.next()
            if self.peek() != ".":
                # filler omitted: shorthand for the trivial filler
                filler = Top()
                return Existential(prop, filler) if tok == "∃" else Universal(prop, filler)
            self.expect(".")
            if self.peek() == "{":
                self.next()
                individual = self.next()
                self.expect("}")
                return HasValue(prop, individual)
            if self.peek() == "Self":
                self.next()
                return HasSelf(prop)
            filler = self.parse_atom()
            return Existential(prop, filler) if tok == "∃" else Universal(prop, filler)
        if tok in ("≥", "≤", "="):
            self.next()
            n = int(self.next())
            prop = self.next()
            cls = {"≥": MinCard, "≤": MaxCard, "=": ExactCard}[tok]
            if self.peek() != ".":
                return cls(n, prop, Top())
            self.expect(".")
            return cls(n, prop, self.parse_atom())
        return self.parse_atom()

    def parse_atom(self) -> ClassExpr:
        tok = self.next()
        if tok == "(":
            inner = self.parse_union()
            self.expect(")")
            return inner
        if tok == "⊤":
            return Top()
        if tok in ("¬", "∃", "∀", "≥", "≤", "="):
            self.pos -= 1
            return self.parse_unary()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            raise ValueError(f"unexpected token {tok!r}")
        return Atomic(tok)


def parse_dl(text: str) -> Axiom:
    """Read one axiom in display DL notation.

    A right-hand ⊤ with a conjunctive left side reads as the non-definitional
    form, mirroring how that form is printed.
    """
    reader = _DLReader(text)
    lhs = reader.parse_union()
    reader.expect("⊑")
    rhs = reader.parse_union()
    if reader.peek() is not None:
        raise ValueError(f"trailing DL input at {reader.peek()!r}")
    if isinstance(rhs, Top) and isinstance(lhs, Intersection):
        first, rest = lhs.operands[0], lhs.operands[1:]
        return Axiom(AxiomForm.NON_DEFINITIONAL, first, intersection_of(list(rest)))
    return Axiom(AxiomForm.DEFINITIONAL, lhs, rhs)


# ---------------------------------------------------------------------------
# OWL 2 functional-style syntax

_OWL_PREFIX = "http://www.w3.org/2002/07/owl#"
_IRI_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*://?\S+$|^urn:\S+$")


def _ofn(expr: ClassExpr) -> str:
    if isinstance(expr, Atomic):
        return f":{expr.name}"
    if isinstance(expr, Top):
        return "owl:Thing"
    if isinstance(expr, Intersection):
        return "ObjectIntersectionOf(" + " ".join(_ofn(o) for o in expr.operands) + ")"
    if isinstance(expr, Union):
        return "ObjectUnionOf(" + " ".join(_ofn(o) for o in expr.operands) + ")"
    if isinstance(expr, Complement):
        return f"ObjectComplementOf({_ofn(expr.operand)})"
    if isinstance(expr, Existential):
        return f"ObjectSomeValuesFrom(:{expr.prop} {_ofn(expr.filler)})"
    if isinstance(expr, Universal):
        return f"ObjectAllValuesFrom(:{expr.prop} {_ofn(expr.filler)})"
    if isinstance(expr, (MinCard, MaxCard, ExactCard)):
        ctor = {
            MinCard: "ObjectMinCardinality",
            MaxCard: "ObjectMaxCardinality",
            ExactCard: "ObjectExactCardinality",
        }[type(expr)]
        if isinstance(expr.filler, Top):
            # unqualified constructor when the filler is trivial
            return f"{ctor}({expr.n} :{expr.prop})"
        return f"{ctor}({expr.n} :{expr.prop} {_ofn(expr.filler)})"
    if isinstance(expr, HasValue):
        return f"ObjectHasValue(:{expr.prop} :{expr.individual})"
    if isinstance(expr, HasSelf):
        return f"ObjectHasSelf(:{expr.prop})"
    raise TypeError(f"unknown expression {expr!r}")


def _declarations(axioms: Iterable[Axiom]) -> list[str]:
    classes: set[str] = set()
    props: set[str] = set()
    individuals: set[str] = set()

    def walk(expr: ClassExpr) -> None:
        if isinstance(expr, Atomic):
            classes.add(expr.name)
        elif isinstance(expr, (Intersection, Union)):
            for op in expr.operands:
                walk(op)
        elif isinstance(expr, Complement):
            walk(expr.operand)
        elif isinstance(expr, (Existential, Universal, MinCard, MaxCard, ExactCard)):
            props.add(expr.prop)
            walk(expr.filler)
        elif isinstance(expr, HasValue):
            props.add(expr.prop)
            individuals.add(expr.individual)
        elif isinstance(expr, HasSelf):
            props.add(expr.prop)

    for axiom in axioms:
        sub, sup = axiom.semantic_pair()
        walk(sub)
        walk(sup)
    lines = [f"Declaration(Class(:{name}))" for name in sorted(classes)]
    lines += [f"Declaration(ObjectProperty(:{name}))" for name in sorted(props)]
    lines += [f"Declaration(NamedIndividual(:{name}))" for name in sorted(individuals)]
    return lines


def functional_axiom(axiom: Axiom) -> str:
    """One functional-style SubClassOf line, without the ontology wrapper."""
    sub, sup = axiom.semantic_pair()
    return f"SubClassOf({_ofn(normalize(sub))} {_ofn(normalize(sup))})"


def serialize_functional(axioms: Sequence[Axiom], ontology_iri: str) -> str:
    """A complete functional-style ontology document for the axiom list."""
    if not _IRI_RE.match(ontology_iri):
        raise ValueError(f"not an absolute IRI: {ontology_iri!r}")
    base = ontology_iri.rstrip("#/") + "#"
    lines = [
        f"Prefix(:=<{base}>)",
        f"Prefix(owl:=<{_OWL_PREFIX}>)",
        f"Ontology(<{ontology_iri}>",
    ]
    lines.extend(_declarations(axioms))
    for axiom in axioms:
        sub, sup = axiom.semantic_pair()
        lines.append(f"SubClassOf({_ofn(normalize(sub))} {_ofn(normalize(sup))})")
    lines.append(")")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Expressivity census


def expressivity(axioms: Sequence[Axiom]) -> str:
    """Constructor census rendered as a DL name.

    Base AL; C for full complement (atomic complements stay within AL), U/E
    subsumed by C when present; N for unqualified and Q for qualified number
    restrictions; O marks nominals (property values), "Self" marks local
    reflexivity — the last two exceed ALCQ and are reported, not hidden.
    """
    seen: set[str] = set()

    def walk(expr: ClassExpr) -> None:
        if isinstance(expr, (Intersection, Union)):
            if isinstance(expr, Union):
                seen.add("U")
            for op in expr.operands:
                walk(op)
        elif isinstance(expr, Complement):
            seen.add("C" if not isinstance(expr.operand, Atomic) else "al-neg")
            walk(expr.operand)
        elif isinstance(expr, Existential):
            if not isinstance(expr.filler, Top):
                seen.add("E")
            walk(expr.filler)
        elif isinstance(expr, Universal):
            walk(expr.filler)
        elif isinstance(expr, (MinCard, MaxCard, ExactCard)):
            seen.add("N" if isinstance(expr.filler, Top) else "Q")
            walk(expr.filler)
        elif isinstance(expr, HasValue):
            seen.add("O")
        elif isinstance(expr, HasSelf):
            seen.add("Self")

    for axiom in axioms:
        sub, sup = axiom.semantic_pair()
        walk(normalize(sub))
        walk(normalize(sup))

    name = "AL"
    if "C" in seen:
        name += "C"
    else:
        if "U" in seen:
            name += "U"
        if "E" in seen:
            name += "E"
    if "Q" in seen:
        name += "Q"
    elif "N" in seen:
        name += "N"
    if "O" in seen:
        name += "O"
    if "Self" in seen:
        name += "(Self)"
    return name


# ---------------------------------------------------------------------------
# JSON dump (shared by CLI --format json and the HTTP service)


def expr_to_json(expr: ClassExpr) -> dict:
    if isinstance(expr, Atomic):
        return {"kind": "Atomic", "name": expr.name}
    if isinstance(expr, Top):
        return {"kind": "Top"}
    if isinstance(expr, Intersection):
        return {"kind": "Intersection", "operands": [expr_to_json(o) for o in expr.operands]}
    if isinstance(expr, Union):
        return {"kind": "Union", "operands": [expr_to_json(o) for o in expr.operands]}
    if isinstance(expr, Complement):
        return {"kind": "Complement", "operand": expr_to_json(expr.operand)}
    if isinstance(expr, Existential):
        return {"kind": "Existential", "prop": expr.prop, "filler": expr_to_json(expr.filler)}
    if isinstance(expr, Universal):
        return {"kind": "Universal", "prop": expr.prop, "filler": expr_to_json(expr.filler)}
    if isinstance(expr, (MinCard, MaxCard, ExactCard)):
        kind = {MinCard: "MinCard", MaxCard: "MaxCard", ExactCard: "ExactCard"}[type(expr)]
        return {"kind": kind, "n": expr.n, "prop": expr.prop, "filler": expr_to_json(expr.filler)}
    if isinstance(expr, HasValue):
        return {"kind": "HasValue", "prop": expr.prop, "individual": expr.individual}
    if isinstance(expr, HasSelf):
        return {"kind": "HasSelf", "prop": expr.prop}
    raise TypeError(f"unknown expression {expr!r}")


def expr_from_json(data: dict) -> ClassExpr:
    kind = data["kind"]
    if kind == "Atomic":
        return Atomic(data["name"])
    if kind == "Top":
        return Top()
    if kind == "Intersection":
        return Intersection(tuple(expr_from_json(o) for o in data["operands"]))
    if kind == "Union":
        return Union(tuple(expr_from_json(o) for o in data["operands"]))
    if kind == "Complement":
        return Complement(expr_from_json(data["operand"]))
    if kind == "Existential":
        return Existential(data["prop"], expr_from_json(data["filler"]))
    if kind == "Universal":
        return Universal(data["prop"], expr_from_json(data["filler"]))
    if kind in ("MinCard", "MaxCard", "ExactCard"):
        cls = {"MinCard": MinCard, "MaxCard": MaxCard, "ExactCard": ExactCard}[kind]
        return cls(data["n"], data["prop"], expr_from_json(data["filler"]))
    if kind == "HasValue":
        return HasValue(data["prop"], data["individual"])
    if kind == "HasSelf":
        return HasSelf(data["prop"])
    raise ValueError(f"unknown expression kind {kind!r}")


def axiom_to_json(axiom: Axiom) -> dict:
    data = {
        "form": axiom.form.value,
        "dl": serialize_dl(axiom),
        "lhs": expr_to_json(normalize(axiom.lhs)),
        "rhs": expr_to_json(normalize(axiom.rhs)),
    }
    if axiom.provenance is not None:
        p = axiom.provenance
        data["provenance"] = {
            "sentenceId": p.sentence_id,
            "lexicalizationIndex": p.lexicalization_index,
            "interpretationIndex": p.interpretation_index,
            "approximateCardinality": p.approximate_cardinality,
        }
    return data


def axiom_from_json(data: dict) -> Axiom:
    form = AxiomForm(data["form"])
    prov = None
    if "provenance" in data:
        p = data["provenance"]
        prov = Provenance(
            p["sentenceId"],
            p["lexicalizationIndex"],
            p["interpretationIndex"],
            p.get("approximateCardinality", False),
        )
    return Axiom(form, expr_from_json(data["lhs"]), expr_from_json(data["rhs"]), prov)


# ---------------------------------------------------------------------------
# Tagged controlled-English reader
#
# Accepts the sentences this pipeline's transform stage emits: every term is
# prefixed (n:/v:/p:), multi-word terms hyphenated, keywords bare.  Used to
# hold the text route and the tree route semantically together.

_NUMBER_WORDS = {
    "zero": 0, "one": 1, "two": 2, "three": 3, "four": 4, "five": 5, "six": 6,
    "seven": 7, "eight": 8, "nine": 9, "ten": 10, "eleven": 11, "twelve": 12,
    "thirteen": 13, "fourteen": 14, "fifteen": 15, "sixteen": 16,
    "seventeen": 17, "eighteen": 18, "nineteen": 19, "twenty": 20,
}

_REFLEXIVES = {
    "myself", "ourselves", "yourself", "yourselves", "himself", "herself",
    "itself", "themselves",
}

_ARTICLES = {"a", "an", "some", "the", "all", "any", "few", "many", "several"}


def _card_phrase_ops() -> list[tuple[tuple[str, ...], str, bool]]:
    """(phrase, op, post) for every cardinality indicator phrase."""
    table = [
        (IndicatorKind.EXACT_CARD, "exact", False),
        (IndicatorKind.AMBI_EXACT_CARD, "exact", False),
        (IndicatorKind.PRE_MIN_CARD, "min", False),
        (IndicatorKind.PRE_MAX_CARD, "max", False),
        (IndicatorKind.POST_MIN_CARD, "min", True),
        (IndicatorKind.POST_MAX_CARD, "max", True),
    ]
    out = []
    for kind, op, post in table:
        for phrase in INDICATOR_PHRASES[kind]:
            out.append((phrase, op, post))
    out.sort(key=lambda item: -len(item[0]))
    return out


_CARD_PHRASES = _card_phrase_ops()


def _number_of(word: str) -> int | None:
    if word.isdigit():
        return int(word)
    return _NUMBER_WORDS.get(word)


def _concept_of(token: str) -> str:
    return concept_name(token.split("-"))


def _property_of(token: str) -> str:
    return property_name(token.split("-"))


class _AceReader:
    def __init__(self, words: list[str]):
        self.words = words
        self.pos = 0

    def peek(self, ahead: int = 0) -> str | None:
        i = self.pos + ahead
        return self.words[i] if i < len(self.words) else None

    def take(self) -> str:
        word = self.words[self.pos]
        self.pos += 1
        return word

    def skip(self, *words: str) -> bool:
        if self.peek() in words:
            self.take()
            return True
        return False

    def parse_item(self) -> ClassExpr:
        self.skip("is", "are")
        while self.peek() in _ARTICLES:
            self.take()
        word = self.peek()
        if word is None:
            raise ValueError("unexpected end of tagged sentence")
        if word.startswith("n:"):
            self.take()
            return Atomic(_concept_of(word[2:]))
        if word == "does" and self.peek(1) == "not":
            self.take()
            self.take()
            inner = self.parse_item()
            if isinstance(inner, Atomic):
                inner = Existential("is", inner)  # defensive; renderer never emits this
            return Complement(inner)
        if word.startswith("v:"):
            self.take()
            prop = _property_of(word[2:])
            return self.parse_after_property(prop)
        raise ValueError(f"cannot read tagged term {word!r}")

    def parse_after_property(self, prop: str) -> ClassExpr:
        nxt = self.peek()
        if nxt == "no":
            self.take()
            return Complement(Existential(prop, self.parse_filler()))
        if nxt == "not":
            self.take()
            return Complement(Existential(prop, self.parse_filler()))
        if nxt == "only":
            self.take()
            return Universal(prop, self.parse_filler())
        # cardinality phrases
        for phrase, op, post in _CARD_PHRASES:
            if post:
                continue
            if all(self.peek(k) == w for k, w in enumerate(phrase)):
                probe = len(phrase)
                n = _number_of(self.peek(probe) or "")
                if n is None:
                    continue
                for _ in range(probe + 1):
                    self.take()
                return self.parse_card(prop, op, n)
        n = _number_of(nxt or "")
        if n is not None:
            self.take()
            for phrase, op, post in _CARD_PHRASES:
                if post and all(self.peek(k) == w for k, w in enumerate(phrase)):
                    for _ in range(len(phrase)):
                        self.take()
                    return self.parse_card(prop, op, n)
            return self.parse_card(prop, "exact", n)
        if nxt in _REFLEXIVES:
            self.take()
            return HasSelf(prop)
        if nxt is not None and nxt.startswith("p:"):
            self.take()
            return HasValue(prop, individual_name(nxt[2:].split("-")))
        return Existential(prop, self.parse_filler())

    def parse_card(self, prop: str, op: str, n: int) -> ClassExpr:
        cls = _CARD_TYPES[op]
        nxt = self.peek()
        if nxt is not None and (nxt in _ARTICLES or nxt.startswith("n:")):
            return cls(n, prop, self.parse_filler())
        return cls(n, prop, Top())

    def parse_filler(self) -> ClassExpr:
        while self.peek() in _ARTICLES:
            self.take()
        word = self.peek()
        if word == "something" or word is None:
            if word is not None:
                self.take()
            return Top()
        if word is not None and word.startswith("n:"):
            self.take()
            return Atomic(_concept_of(word[2:]))
        if word is not None and word.startswith("p:"):
            self.take()
            return Atomic(individual_name(word[2:].split("-")))
        return Top()


def parse_tagged_ace(text: str) -> Axiom:
    """Read one tagged sentence back into an axiom.

    Handles exactly the shapes the transform stage produces; anything else
    raises ValueError.
    """
    words = text.strip().rstrip(".").split()
    if not words:
        raise ValueError("empty tagged sentence")
    reader = _AceReader(words)
    form = AxiomForm.DEFINITIONAL
    if [w.lower() for w in words[:3]] == ["there", "is", "a"] or [
        w.lower() for w in words[:3]
    ] == ["there", "is", "an"]:
        form = AxiomForm.NON_DEFINITIONAL
        reader.pos = 3
    else:
        if reader.peek() is not None and reader.peek().lower() in (
            "every", "a", "an", "all", "each", "any",
        ):
            reader.take()
    subject_word = reader.take()
    if not subject_word.startswith(("n:", "p:")):
        raise ValueError(f"expected a tagged subject, got {subject_word!r}")
    raw = subject_word[2:].split("-")
    if subject_word.startswith("n:"):
        lhs: ClassExpr = Atomic(concept_name(raw[:-1] + [singularize(raw[-1])]))
    else:
        lhs = Atomic(individual_name(raw))
    if form is AxiomForm.NON_DEFINITIONAL:
        reader.skip("that", "which", "who")

    groups: list[list[ClassExpr]] = [[]]
    while reader.peek() is not None:
        word = reader.peek()
        if word == "or":
            reader.take()
            groups.append([])
            continue
        if word in ("and", "that", "which", "who"):
            reader.take()
            continue
        groups[-1].append(reader.parse_item())
    rhs = union_of([intersection_of(g) for g in groups if g])
    return Axiom(form, lhs, rhs)
