"""Surface rewriting and term tagging against the reference transformation rows."""

import pytest

from tedei.model import InternalInconsistencyError
from tedei.pipeline import analyze_sentence
from tedei.tagging import RuleTagger

# (source sentence, expected rewritten form). The expected string must be
# produced bit-exact by at least one reading; sentences with several
# admissible segmentations legitimately produce other renderings too.
SURFACE_ROWS = [
    ("Every battery produces electricity.", "Every battery produces some electricity."),
    ("An adenine is a purine base.", "An adenine is a purine-base."),
    (
        "An abdomen exists between thorax and pelvis.",
        "An abdomen exists between thorax and exists between pelvis.",
    ),
    ("A kidnapper seizes and detains a victim.", "A kidnapper seizes a victim and detains a victim."),
    ("Every binomial consists of two terms.", "Every binomial consists-of two terms."),
    ("All kids play.", "All kids play something."),
    ("Every person should learn some maths.", "Every person should-learn some maths."),
    (
        "Every abacus efficiently performs some arithmetic.",
        "Every abacus efficiently-performs some arithmetic.",
    ),
    ("A console houses some electronic instruments.", "A console houses some electronic-instruments."),
]


def surfaces(sentence):
    return [r.ace for r in analyze_sentence(sentence).readings]


def tagged_forms(sentence):
    return [r.tagged for r in analyze_sentence(sentence).readings]


@pytest.mark.parametrize("sentence,expected", SURFACE_ROWS, ids=[s[:24] for s, _ in SURFACE_ROWS])
def test_surface_rewriting_reference_rows(sentence, expected):
    assert expected in surfaces(sentence)


def test_tagged_form_reference_row():
    want = "Every n:adenine is a n:purine-base and v:found-in a n:DNA."
    assert want in tagged_forms("Every adenine is a purine base found in DNA.")


def test_inserted_quantifier_for_proper_noun_fillers():
    assert "Every frenchman lives-in a France." in surfaces("Every frenchman lives in France.")


def test_universal_readings_render_with_only():
    assert "Every driver drives only a car." in surfaces("Every driver drives a car.")


def test_double_quantified_reading_renders_both_copies():
    assert (
        "Every driver drives a car and drives only a car."
        in surfaces("Every driver drives a car.")
    )


def test_non_definitional_readings_render_as_existence_statements():
    # plural subject becomes a singular indefinite in the preamble
    got = surfaces("Quarks possess color charge.")
    assert "There is a quark that possess some color-charge." in got


def test_post_complement_negation_renders_in_source_order():
    # "has no X" is already controlled English; no rewrite to "does not have"
    got = surfaces("Every polygon has no curves.")
    assert "Every polygon has no curves." in got


def test_tagging_marks_nouns_verbs_and_keeps_keywords():
    tags = tagged_forms("Every battery produces electricity.")
    assert "Every n:battery produces some n:electricity." not in tags  # verb must be tagged too
    assert "Every n:battery v:produces some n:electricity." in tags


def test_tagging_hyphenates_multiword_terms():
    tags = tagged_forms("Every binomial consists of two terms.")
    assert any("v:consists-of" in t for t in tags)


def test_tagging_is_consistent_with_surface_form():
    # stripping prefixes and restoring spaces for hyphenated terms recovers
    # the surface rewriting
    for r in analyze_sentence("Every adenine is a purine base found in DNA.").readings:
        plain = (
            r.tagged.replace("n:", "").replace("v:", "").replace("p:", "")
        )
        assert plain.replace("-", " ") == r.ace.replace("-", " ")


def test_unmatched_word_in_tagging_is_an_internal_error():
    from tedei.transform import tag_transform
    from tedei.lexicalize import enumerate_lexicalizations

    lex = enumerate_lexicalizations(RuleTagger().tag("All kids play.")).lexicalizations[0]
    with pytest.raises(InternalInconsistencyError):
        tag_transform("All kids dance.", lex)


def test_surface_transform_is_deterministic():
    a = surfaces("A kidnapper seizes and detains a victim.")
    b = surfaces("A kidnapper seizes and detains a victim.")
    assert a == b
