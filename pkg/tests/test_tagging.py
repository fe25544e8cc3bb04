"""Deterministic lexicon+suffix tagger."""

import pytest

from tedei.model import EmptySentenceError
from tedei.tagging import RuleTagger, TaggerLexicon, default_lexicon, tokenize


@pytest.fixture(scope="module")
def tagger():
    return RuleTagger()


def test_tokenize_splits_final_punctuation():
    assert tokenize("All kids play.") == ["All", "kids", "play", "."]


def test_tokenize_isolates_hyphens():
    assert tokenize("Every purine-base reacts.") == ["Every", "purine", "-", "base", "reacts", "."]


def test_known_words_get_lexicon_tags(tagger):
    tags = {t.surface: t.pos for t in tagger.tag("Every square contains right angles.")}
    assert tags["Every"] == "DT"
    assert tags["square"] == "NN"
    assert tags["contains"] == "VBZ"
    assert tags["angles"] == "NNS"
    assert tags["."] == "."


def test_suffix_fallback_for_unknown_words(tagger):
    tags = {t.surface: t.pos for t in tagger.tag("Every wug contains wugs.")}
    assert tags["wug"] == "NN"
    assert tags["wugs"] == "NNS"


def test_capitalized_unknown_mid_sentence_is_proper(tagger):
    tags = {t.surface: t.pos for t in tagger.tag("Every frenchman lives in France.")}
    assert tags["France"] == "NNP"


def test_numbers_are_cardinal(tagger):
    tags = {t.surface: t.pos for t in tagger.tag("Every spider has 8 legs.")}
    assert tags["8"] == "CD"


def test_empty_sentence_rejected(tagger):
    with pytest.raises(EmptySentenceError):
        tagger.tag("   ")


def test_tagging_is_deterministic(tagger):
    a = tagger.tag("Every driver drives a car.")
    b = tagger.tag("Every driver drives a car.")
    assert a == b


def test_lexicon_round_trips_through_parse():
    lex = TaggerLexicon.parse("word\tNN\nplays\tVBZ,NNS\n[suffix]\n-ing\tVBG\n")
    tagger = RuleTagger(lex)
    tags = {t.surface: t.pos for t in tagger.tag("word plays playing")}
    assert tags["word"] == "NN"
    assert tags["plays"] == "VBZ"  # first listed tag wins
    assert tags["playing"] == "VBG"


def test_lexicon_rejects_malformed_lines():
    with pytest.raises(ValueError):
        TaggerLexicon.parse("word without a tab\n")


def test_default_lexicon_covers_indicator_words():
    lex = default_lexicon()
    tagger = RuleTagger(lex)
    tags = {t.lemma: t.pos for t in tagger.tag("Only some pizzas have exactly 3 toppings.")}
    assert "only" in tags and "some" in tags and "exactly" in tags


def test_token_indexes_are_positions(tagger):
    toks = tagger.tag("All kids play.")
    assert [t.index for t in toks] == [0, 1, 2, 3]
