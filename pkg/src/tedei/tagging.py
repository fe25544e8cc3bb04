"""Deterministic part-of-speech tagging.

A small lexicon of closed-class and curated content words, suffix fallbacks,
and capitalization heuristics.  The tagger is intentionally sentence-level
deterministic: same input, same tags, no statistical model.  Anything
smarter can be plugged in through the ``Tagger`` protocol.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from importlib import resources
from typing import Protocol

from .model import EmptySentenceError, Token

__all__ = ["TaggerLexicon", "Tagger", "RuleTagger", "default_lexicon", "tokenize"]

_WORD_RE = re.compile(r"[A-Za-z]+(?:'[A-Za-z]+)?|\d+|\S")

_PUNCT_TAGS = {".": ".", "!": ".", "?": ".", ",": ",", ";": ":", ":": ":",
               "(": "(", ")": ")", "#": "#", "$": "$"}


@dataclass(frozen=True)
class TaggerLexicon:
    """Word entries (rank-ordered tag lists) plus ordered suffix rules."""

    entries: dict[str, tuple[str, ...]]
    suffixes: tuple[tuple[str, str], ...]

    @classmethod
    def load(cls, path: str) -> "TaggerLexicon":
        with open(path, encoding="utf-8") as fh:
            return cls.parse(fh.read())

    @classmethod
    def parse(cls, text: str) -> "TaggerLexicon":
        entries: dict[str, tuple[str, ...]] = {}
        suffixes: list[tuple[str, str]] = []
        in_suffix = False
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line == "[suffix]":
                in_suffix = True
                continue
            word, _, tags = line.partition("\t")
            if not tags:
                raise ValueError(f"malformed lexicon line: {raw!r}")
            if in_suffix:
                suffixes.append((word.lstrip("-"), tags.strip()))
            else:
                entries[word] = tuple(t.strip() for t in tags.split(","))
        return cls(entries, tuple(suffixes))


def default_lexicon() -> TaggerLexicon:
    """Bundled lexicon, overridable through the TEDEI_LEXICON env variable."""
    override = os.environ.get("TEDEI_LEXICON")
    if override:
        return TaggerLexicon.load(override)
    text = resources.files("tedei.resources").joinpath("lexicon.txt").read_text("utf-8")
    return TaggerLexicon.parse(text)


def tokenize(sentence: str) -> list[str]:
    return _WORD_RE.findall(sentence)


class Tagger(Protocol):
    def tag(self, sentence: str) -> tuple[Token, ...]:
        ...


class RuleTagger:
    """Lexicon lookup, then heuristics: numerals, all-caps acronyms,
    mid-sentence capitalized unknowns, suffix rules, NN default."""

    def __init__(self, lexicon: TaggerLexicon | None = None):
        self.lexicon = lexicon or default_lexicon()

    def tag(self, sentence: str) -> tuple[Token, ...]:
        surfaces = tokenize(sentence)
        if not surfaces:
            raise EmptySentenceError("cannot tag an empty sentence")
        tokens = []
        for i, surface in enumerate(surfaces):
            tokens.append(Token(surface, self._lemma(surface), self._tag_word(surface, i), i))
        return tuple(tokens)

    @staticmethod
    def _lemma(surface: str) -> str:
        return surface.lower()

    def _tag_word(self, surface: str, index: int) -> str:
        if not surface[0].isalnum():
            return _PUNCT_TAGS.get(surface, ":")
        entry = self.lexicon.entries.get(surface) or self.lexicon.entries.get(surface.lower())
        if entry:
            return entry[0]
        if surface.isdigit():
            return "CD"
        if len(surface) > 1 and surface.isupper():
            return "NNP"
        if index > 0 and surface[0].isupper():
            return "NNP"
        lower = surface.lower()
        for suffix, tag in self.lexicon.suffixes:
            if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
                return tag
        return "NN"
