"""Axiom serialization: DL text, functional-style documents, JSON, tagged ACE."""

import pytest
from hypothesis import given, settings

import ofn_check
from strategies import class_exprs, normalized_exprs
from tedei.axioms import (
    axiom_from_json,
    axiom_to_json,
    expr_from_json,
    expr_to_json,
    expressivity,
    functional_axiom,
    parse_dl,
    parse_tagged_ace,
    serialize_dl,
    serialize_dl_expr,
    serialize_functional,
)
from tedei.model import (
    Atomic,
    Axiom,
    AxiomForm,
    Complement,
    ExactCard,
    Existential,
    HasSelf,
    HasValue,
    Intersection,
    MaxCard,
    MinCard,
    Top,
    Union,
    Universal,
    normalize,
    structural_key,
)

D = AxiomForm.DEFINITIONAL
N = AxiomForm.NON_DEFINITIONAL


def sem_key(axiom: Axiom) -> tuple:
    sub, sup = axiom.semantic_pair()
    return structural_key(normalize(sub)), structural_key(normalize(sup))


# ---------------------------------------------------------------------------
# DL writer


def test_dl_intersection_is_canonically_ordered():
    # operands given restriction-first still print atomic-first
    ax = Axiom(D, Atomic("InterestingPizza"),
               Intersection((MinCard(3, "has", Atomic("Toppings")), Atomic("Pizza"))))
    assert serialize_dl(ax) == "InterestingPizza ⊑ Pizza ⊓ ≥3has.Toppings"


def test_dl_complement_of_compound_is_parenthesized():
    ax = Axiom(D, Atomic("ExoticSpecies"),
               Intersection((Atomic("Species"), Complement(Existential("isNativeTo", Top())))))
    assert serialize_dl(ax) == "ExoticSpecies ⊑ Species ⊓ ¬(∃isNativeTo.⊤)"
    ax2 = Axiom(D, Atomic("A"), Complement(Union((Atomic("B"), Atomic("C")))))
    assert serialize_dl(ax2) == "A ⊑ ¬(B ⊔ C)"


def test_dl_intersection_binds_tighter_than_union():
    ax = Axiom(D, Atomic("A"), Union((Atomic("C"), Intersection((Atomic("B"), Atomic("D"))))))
    assert serialize_dl(ax) == "A ⊑ C ⊔ B ⊓ D"


def test_dl_union_filler_is_parenthesized():
    expr = Universal("drives", Union((Atomic("Car"), Atomic("Van"))))
    assert serialize_dl_expr(expr) == "∀drives.(Car ⊔ Van)"


def test_dl_cardinalities_and_values():
    assert serialize_dl(Axiom(D, Atomic("A"), ExactCard(3, "has", Top()))) == "A ⊑ =3has.⊤"
    assert serialize_dl(Axiom(D, Atomic("A"), MaxCard(0, "has", Atomic("B")))) == "A ⊑ ≤0has.B"
    ax = Axiom(D, Atomic("A"), Intersection((HasValue("locatedIn", "France"), HasSelf("knows"))))
    assert serialize_dl(ax) == "A ⊑ ∃locatedIn.{France} ⊓ ∃knows.Self"


def test_dl_non_definitional_is_conjunction_under_top():
    ax = Axiom(N, Atomic("Quark"), Existential("possess", Atomic("Color")))
    assert serialize_dl(ax) == "Quark ⊓ ∃possess.Color ⊑ ⊤"


# ---------------------------------------------------------------------------
# DL reader


def test_parse_dl_reads_bare_existential_as_top_filler():
    got = parse_dl("ExoticSpecies ⊑ Species ⊓ ¬∃isNativeToRegion")
    want = Axiom(D, Atomic("ExoticSpecies"),
                 Intersection((Atomic("Species"),
                               Complement(Existential("isNativeToRegion", Top())))))
    assert got.key() == want.key()


def test_parse_dl_rejects_garbage():
    with pytest.raises(ValueError):
        parse_dl("")
    with pytest.raises(ValueError):
        parse_dl("A ⊑ (B ⊓ C")
    with pytest.raises(ValueError):
        parse_dl("A → B")
    with pytest.raises(ValueError):
        parse_dl("A ⊓ B")  # no subsumption arrow


@given(normalized_exprs)
def test_dl_expression_round_trip(expr):
    text = f"Probe ⊑ {serialize_dl_expr(expr)}"
    back = parse_dl(text)
    assert structural_key(normalize(back.rhs)) == structural_key(normalize(expr))


@given(normalized_exprs, normalized_exprs)
def test_dl_axiom_round_trip(lhs, rhs):
    for form in (D, N):
        ax = Axiom(form, lhs, rhs)
        back = parse_dl(serialize_dl(ax))
        assert sem_key(back) == sem_key(ax)


# ---------------------------------------------------------------------------
# Functional-style documents


def _pizza_axioms():
    return [
        Axiom(D, Atomic("InterestingPizza"),
              Intersection((MinCard(3, "has", Atomic("Toppings")), Atomic("Pizza")))),
        Axiom(D, Atomic("ExoticSpecies"),
              Intersection((Atomic("Species"), Complement(Existential("isNativeTo", Top()))))),
    ]


def test_functional_document_shape():
    doc = serialize_functional(_pizza_axioms(), "https://example.org/onto")
    assert doc.startswith("Prefix(:=<https://example.org/onto#>)\n")
    assert "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)" in doc
    assert "Ontology(<https://example.org/onto>" in doc
    assert "Declaration(Class(:InterestingPizza))" in doc
    assert "Declaration(ObjectProperty(:isNativeTo))" in doc
    assert ("SubClassOf(:InterestingPizza ObjectIntersectionOf(:Pizza "
            "ObjectMinCardinality(3 :has :Toppings)))") in doc
    assert doc.rstrip().endswith(")")


def test_functional_single_axiom_matches_document_line():
    axioms = _pizza_axioms()
    doc = serialize_functional(axioms, "https://example.org/onto")
    for ax in axioms:
        assert functional_axiom(ax) in doc


def test_functional_rejects_relative_iri():
    with pytest.raises(ValueError):
        serialize_functional(_pizza_axioms(), "not an iri")


def test_functional_document_is_valid_owl2fs():
    doc = serialize_functional(_pizza_axioms(), "https://example.org/onto")
    assert ofn_check.check(doc) == []


@given(normalized_exprs)
@settings(max_examples=60)
def test_functional_random_expressions_are_valid_owl2fs(expr):
    ax = Axiom(D, Atomic("Probe"), expr)
    doc = serialize_functional([ax], "https://example.org/probe")
    assert ofn_check.check(doc) == []


# ---------------------------------------------------------------------------
# JSON


@given(class_exprs)
def test_expr_json_round_trip(expr):
    assert expr_from_json(expr_to_json(expr)) == expr


@given(normalized_exprs, normalized_exprs)
def test_axiom_json_round_trip(lhs, rhs):
    for form in (D, N):
        ax = Axiom(form, lhs, rhs)
        back = axiom_from_json(axiom_to_json(ax))
        assert back.form == ax.form
        assert back.key() == ax.key()


def test_axiom_json_is_plain_data():
    import json

    ax = Axiom(D, Atomic("A"), Existential("p", Atomic("B")))
    blob = json.dumps(axiom_to_json(ax))
    assert axiom_from_json(json.loads(blob)).key() == ax.key()


# ---------------------------------------------------------------------------
# Expressivity census


@pytest.mark.parametrize(
    "rhs, name",
    [
        (Atomic("B"), "AL"),
        (Complement(Atomic("B")), "AL"),  # atomic negation stays inside AL
        (Complement(Existential("p", Atomic("B"))), "ALC"),
        (Union((Atomic("B"), Atomic("C"))), "ALU"),
        (Existential("p", Atomic("B")), "ALE"),
        (Existential("p", Top()), "AL"),  # limited existential
        (MinCard(2, "p", Top()), "ALN"),
        (MinCard(2, "p", Atomic("B")), "ALQ"),
        (HasValue("p", "France"), "ALO"),
        (HasSelf("p"), "AL(Self)"),
    ],
)
def test_expressivity_census(rhs, name):
    assert expressivity([Axiom(D, Atomic("A"), rhs)]) == name


def test_expressivity_combines_and_subsumes():
    axioms = [
        Axiom(D, Atomic("A"), Complement(Existential("p", Atomic("B")))),
        Axiom(D, Atomic("A"), MinCard(2, "p", Atomic("B"))),
    ]
    # C absorbs U and E; Q absorbs N
    assert expressivity(axioms) == "ALCQ"
    assert expressivity([]) == "AL"


# ---------------------------------------------------------------------------
# Tagged ACE reader


def test_tagged_reader_definitional():
    ax = parse_tagged_ace("Every n:dog v:eats some n:meat.")
    assert ax.key() == Axiom(D, Atomic("Dog"), Existential("eats", Atomic("Meat"))).key()


def test_tagged_reader_existence_preamble():
    ax = parse_tagged_ace("There is a n:dog that v:eats some n:meat.")
    assert ax.form is N
    assert ax.key() == Axiom(N, Atomic("Dog"), Existential("eats", Atomic("Meat"))).key()


def test_tagged_reader_negation_and_cardinality():
    ax = parse_tagged_ace("Every n:polygon v:has no n:curves.")
    assert ax.rhs == Complement(Existential("has", Atomic("Curves")))
    ax = parse_tagged_ace("Every n:bicycle v:has 2 or more n:wheels.")
    assert ax.rhs == MinCard(2, "has", Atomic("Wheels"))


def test_tagged_reader_rejects_untagged_terms():
    with pytest.raises(ValueError):
        parse_tagged_ace("Every dog eats meat.")
    with pytest.raises(ValueError):
        parse_tagged_ace("")
