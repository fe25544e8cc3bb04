"""Syntactic transformation: parse tree -> controlled-English sentence.

Two stages.  The surface stage rewrites the source sentence into its
controlled form: multi-word terms are hyphenated, bare role fillers get a
quantifying word, missing fillers become "something", coordinated noun
phrases are distributed over the relation and coordinated verb phrases get
the shared filler copied in.  Terms produced by distribution are left
untouched (no hyphen, no inserted article); their turn comes in the tagging
stage, which prefixes every term with its part (n: concept, v: relation,
p: individual) and fills in the deferred articles.

The tagging stage works over the surface text, not the tree, so it double
checks that every word of the output is either a known keyword or a term
from the sentence's own lexicalization; anything else means the two stages
disagree and raises InternalInconsistencyError.
"""

from __future__ import annotations

from .grammar import (
    CardRestrictionNode,
    ClassCombNode,
    ClsExpCombNode,
    ComplementNode,
    ExistResNode,
    IndValueNode,
    SelfValueNode,
    SentenceNode,
    UniResNode,
)
from .interpret import Interpretation
from .model import (
    InternalInconsistencyError,
    Lexicalization,
    SpanKind,
    TerminalSpan,
    singularize,
)

__all__ = ["surface_transform", "tag_transform", "KEYWORDS"]

_VOWELS = "aeiouAEIOU"

_NUMBER_WORDS = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen", "twenty",
}

_REFLEXIVES = {
    "myself", "ourselves", "yourself", "yourselves", "himself", "herself",
    "itself", "themselves",
}

KEYWORDS = frozenset(
    {
        "every", "a", "an", "the", "all", "each", "any", "some", "few",
        "many", "several", "only", "exclusively", "nothing", "but", "except",
        "and", "or", "that", "which", "who", "whose", "is", "are", "was",
        "were", "does", "do", "did", "not", "no", "something", "there", "at",
        "least", "atleast", "most", "atmost", "more", "less", "than",
        "within", "exactly", "just", "about", "almost", "approximately",
        "around", "close", "to", "may", "be",
    }
    | _NUMBER_WORDS
    | _REFLEXIVES
)


def _article_for(word: str) -> str:
    return "an" if word and word[0] in _VOWELS else "a"


def _hyphenated(span: TerminalSpan) -> str:
    return "-".join(span.identifier_words())


def _spaced(span: TerminalSpan) -> str:
    return " ".join(span.identifier_words())


def _head_plural(span: TerminalSpan) -> bool:
    return span.tokens[-1].pos in ("NNS", "NNPS")


def _head_proper(span: TerminalSpan) -> bool:
    return span.tokens[-1].pos in ("NNP", "NNPS")


def _inserted_quant(member: TerminalSpan) -> str:
    """Quantifying word for a filler that had none in the source."""
    if _head_proper(member):
        return _article_for(member.identifier_words()[0])
    return "some"


class _Renderer:
    def __init__(self, tree: SentenceNode, interp: Interpretation):
        self.tree = tree
        self.interp = interp
        self.lex = tree.lex
        self.residue = {t.index: t for t in tree.lex.residue}

    # -- residue bookkeeping

    def _gap_run(self, start: int) -> list:
        """Residue tokens sitting directly before source position ``start``."""
        run = []
        i = start - 1
        while i in self.residue:
            run.append(self.residue[i])
            i -= 1
        run.reverse()
        return run

    def _emit_gap(self, out: list[str], start: int, before_concept: bool) -> bool:
        """Copulas always surface; articles only ahead of a concept.  Returns
        whether an article was emitted."""
        emitted_article = False
        for tok in self._gap_run(start):
            if tok.lemma in ("is", "are"):
                out.append(tok.surface)
            elif tok.lemma in ("a", "an", "the") and before_concept:
                out.append(tok.surface)
                emitted_article = True
        return emitted_article

    # -- items

    def render(self) -> str:
        from .model import AxiomForm

        out: list[str] = []
        subject = self.tree.subject
        if self.interp.axiom_form is AxiomForm.NON_DEFINITIONAL:
            # the existence preamble speaks of one individual, so a plural
            # head noun drops its "s" and common nouns lose sentence case
            words = list(subject.identifier_words())
            if _head_plural(subject):
                words[-1] = singularize(words[-1])
            if not _head_proper(subject):
                words = [w.lower() for w in words]
            out += ["There", "is", _article_for(words[0]), "-".join(words), "that"]
        else:
            for tok in self._gap_run(subject.start):
                out.append(tok.surface)
            out.append(_hyphenated(subject))
        self._render_union(out, self.tree.body)
        text = " ".join(out)
        if self.lex.tokens[-1].pos == ".":
            text += "."
        return text[:1].upper() + text[1:] if text else text

    def _render_union(self, out: list[str], union) -> None:
        for idx, inter in enumerate(union.parts):
            if idx:
                out.append(union.seps[idx - 1].tokens[0].surface)
            for jdx, part in enumerate(inter.parts):
                if jdx:
                    out.append(inter.seps[jdx - 1].tokens[0].surface)
                self._render_comb(out, part)

    def _render_comb(self, out: list[str], comb: ClsExpCombNode) -> None:
        from .axioms import _shared_fillers, _split_targets

        shared = _shared_fillers(comb.items)
        targets = _split_targets(comb) if self.interp.distributed else set()
        for k, item in enumerate(comb.items):
            if k:
                sep = comb.seps[k - 1]
                out.append("and" if sep is None or sep.tokens[0].pos == "," else sep.tokens[0].surface)
            if k in targets:
                prev = comb.items[k - 1]
                self._render_copies(out, prev, item)
                continue
            if k in shared and isinstance(item, ExistResNode):
                # bare coordinated relation: borrow the donor's whole filler,
                # indicator included ("seizes a victim and detains a victim")
                donor = shared[k]
                ind = item.ind if item.ind is not None else getattr(donor, "ind", None)
                item = ExistResNode(item.prop, ind, donor.comb)
            self._render_item(out, item)

    def _render_item(self, out: list[str], item) -> None:
        if isinstance(item, ClassCombNode):
            has_article = self._emit_gap(out, item.members[0].start, before_concept=True)
            self._render_class_comb(out, item, has_article)
            return
        first = _leaf_start(item)
        self._emit_gap(out, first, before_concept=False)
        if isinstance(item, (ExistResNode, UniResNode, CardRestrictionNode, ComplementNode)):
            comb = item.comb
            if comb is not None and len(comb.members) > 1:
                # coordinated noun phrase: distribute the relation, defer
                # hyphens and articles to the tagging stage
                self._render_distributed(out, item, comb)
                return
            self._render_restriction(out, item, comb)
            return
        if isinstance(item, IndValueNode):
            out.append(_hyphenated(item.prop))
            out.append(_hyphenated(item.individual))
            return
        if isinstance(item, SelfValueNode):
            out.append(_hyphenated(item.prop))
            out.append(item.ind.text())
            return
        raise TypeError(f"cannot render {item!r}")

    def _render_class_comb(self, out: list[str], comb: ClassCombNode, has_article: bool) -> None:
        for k, member in enumerate(comb.members):
            if k:
                sep = comb.seps[k - 1]
                out.append("and" if sep.tokens[0].pos == "," else sep.tokens[0].surface)
                has_article = False
            if not has_article and not _head_plural(member):
                out.append(_article_for(member.identifier_words()[0]))
            out.append(_hyphenated(member))

    def _render_restriction(self, out: list[str], item, comb) -> None:
        from .axioms import QUANT_BOTH, QUANT_FORCED_UNIVERSAL

        member = comb.members[0] if comb is not None else None
        if isinstance(item, ExistResNode):
            prop = _hyphenated(item.prop)
            if item.prop.negated:
                out.append("does")
                out.append("not")
                out.append(prop)
                if member is None:
                    out.append("something")
                else:
                    out.append(item.ind.text() if item.ind else _inserted_quant(member))
                    out.append(_hyphenated(member))
                return
            choice = self.interp.quantifier_choice
            if member is None:
                if choice == QUANT_FORCED_UNIVERSAL:
                    out += [prop, "only", "something"]
                elif choice == QUANT_BOTH:
                    out += [prop, "something", "and", prop, "only", "something"]
                else:
                    out += [prop, "something"]
                return
            quant = item.ind.text() if item.ind else _inserted_quant(member)
            if choice == QUANT_FORCED_UNIVERSAL:
                out += [prop, "only", quant, _hyphenated(member)]
            elif choice == QUANT_BOTH:
                out += [prop, quant, _hyphenated(member), "and", prop, "only", quant, _hyphenated(member)]
            else:
                out += [prop, quant, _hyphenated(member)]
            return
        if isinstance(item, UniResNode):
            words = [item.ind.text(), _hyphenated(item.prop)] if item.ind_first else [
                _hyphenated(item.prop), item.ind.text()
            ]
            out += words
            out.append(_hyphenated(member))
            return
        if isinstance(item, CardRestrictionNode):
            out.append(_hyphenated(item.prop))
            if not item.post:
                if item.ind is not None:
                    out.append(item.ind.text())
                out.append(item.card.tokens[0].surface)
                if member is not None:
                    out.append(_hyphenated(member))
            else:
                # trailing indicator still precedes the filler: "2 or more wheels"
                out.append(item.card.tokens[0].surface)
                out.append(item.ind.text())
                if member is not None:
                    out.append(_hyphenated(member))
            return
        if isinstance(item, ComplementNode):
            if item.pre:
                out += item.ind.text().split()
                out.append(_hyphenated(item.prop))
                if member is None:
                    out.append("something")
                else:
                    out.append(_inserted_quant(member))
                    out.append(_hyphenated(member))
            else:
                out.append(_hyphenated(item.prop))
                out.append(item.ind.text())
                if member is not None:
                    out.append(_hyphenated(member))
                else:
                    out.append("something")
            return
        raise TypeError(f"cannot render {item!r}")

    def _render_distributed(self, out: list[str], item, comb: ClassCombNode) -> None:
        """One relation copy per coordinated filler, everything left plain."""
        for k, member in enumerate(comb.members):
            if k:
                sep = comb.seps[k - 1]
                out.append("and" if sep.tokens[0].pos == "," else sep.tokens[0].surface)
            self._render_copy(out, item, member)

    def _render_copy(self, out: list[str], item, member: TerminalSpan) -> None:
        from .axioms import QUANT_BOTH, QUANT_FORCED_UNIVERSAL

        if isinstance(item, ExistResNode) and not item.prop.negated:
            choice = self.interp.quantifier_choice
            ind = [item.ind.text()] if item.ind is not None else []
            base = [_spaced(item.prop), *ind, _spaced(member)]
            if choice == QUANT_FORCED_UNIVERSAL:
                out += [_spaced(item.prop), "only", *ind, _spaced(member)]
            elif choice == QUANT_BOTH:
                out += base + ["and", _spaced(item.prop), "only", *ind, _spaced(member)]
            else:
                out += base
            return
        if isinstance(item, ComplementNode) and item.pre:
            out += item.ind.text().split()
        if isinstance(item, ExistResNode) and item.prop.negated:
            out += ["does", "not"]
        if isinstance(item, UniResNode) and item.ind_first:
            out.append(item.ind.text())
        out.append(_spaced(item.prop))
        if isinstance(item, UniResNode) and not item.ind_first:
            out.append(item.ind.text())
        if isinstance(item, ComplementNode) and not item.pre:
            out.append(item.ind.text())
        if isinstance(item, CardRestrictionNode):
            if not item.post and item.ind is not None:
                out.append(item.ind.text())
            out.append(item.card.tokens[0].surface)
            if item.post:
                out.append(item.ind.text())
        out.append(_spaced(member))

    def _render_copies(self, out: list[str], prev, target: ClassCombNode) -> None:
        """Modifier-split re-reading: the juxtaposed concepts become extra
        relation copies ("possess some color and possess some charge")."""
        from .axioms import QUANT_BOTH, QUANT_FORCED_UNIVERSAL

        for k, member in enumerate(target.members):
            if k:
                sep = target.seps[k - 1]
                out.append("and" if sep.tokens[0].pos == "," else sep.tokens[0].surface)
            prop = _hyphenated(prev.prop)
            quant = _inserted_quant(member)
            if isinstance(prev, UniResNode):
                out += [prop, prev.ind.text(), _hyphenated(member)]
            elif prev.prop.negated:
                out += ["does", "not", prop, quant, _hyphenated(member)]
            elif self.interp.quantifier_choice == QUANT_FORCED_UNIVERSAL:
                out += [prop, "only", quant, _hyphenated(member)]
            elif self.interp.quantifier_choice == QUANT_BOTH:
                out += [prop, quant, _hyphenated(member), "and", prop, "only", quant, _hyphenated(member)]
            else:
                out += [prop, quant, _hyphenated(member)]


def _leaf_start(item) -> int:
    from .grammar import leaf_spans

    return min(s.start for s in leaf_spans(item))


def surface_transform(tree: SentenceNode, interp: Interpretation) -> str:
    """Render one interpretation of a parse tree as a controlled sentence."""
    return _Renderer(tree, interp).render()


# ---------------------------------------------------------------------------
# Tagging stage

_PREFIX = {
    SpanKind.CLASS: "n:",
    SpanKind.PROPERTY: "v:",
    SpanKind.INDIVIDUAL: "p:",
}


def tag_transform(ace_text: str, lex: Lexicalization) -> str:
    """Prefix and hyphenate every term of a surface-stage sentence.

    Deferred articles are inserted here: a singular concept directly behind
    a relation gets one.  A word that is neither a keyword nor matchable
    against the lexicalization's terms is an internal inconsistency.
    """
    words = ace_text.split()
    if not words:
        raise InternalInconsistencyError("empty sentence")
    had_period = words[-1].endswith(".")
    if had_period:
        words[-1] = words[-1][:-1]
        if not words[-1]:
            words.pop()

    spans = [s for s in lex.spans if s.kind in _PREFIX]
    # longest first so "purine base" wins over any single-word overlap
    spans.sort(key=lambda s: -len(s.identifier_words()))

    def starts_property(j: int) -> bool:
        for span in spans:
            if span.kind is not SpanKind.PROPERTY:
                continue
            idwords = [w.lower() for w in span.identifier_words()]
            if j < len(words) and words[j].lower() == "-".join(idwords):
                return True
            if [w.lower() for w in words[j : j + len(idwords)]] == idwords:
                return True
        return False

    out: list[str] = []
    i = 0
    # the generated existence preamble is pure keywords, even when the
    # sentence also uses a bare copula as a relation
    if [w.lower() for w in words[:3]] in (["there", "is", "a"], ["there", "is", "an"]):
        out += words[:3]
        i = 3
    while i < len(words):
        word = words[i]
        lowered = word.lower()
        # an auxiliary before "not" is only a relation term when a filler
        # follows; before a relation it is the inserted negation periphrasis
        if (
            lowered in ("does", "do", "did")
            and i + 1 < len(words)
            and words[i + 1].lower() == "not"
            and starts_property(i + 2)
        ):
            out += [word, words[i + 1]]
            i += 2
            continue
        matched = False
        for span in spans:
            idwords = [w.lower() for w in span.identifier_words()]
            term = None
            if lowered == "-".join(idwords):
                term = "-".join(span.identifier_words())
            elif span.kind is SpanKind.CLASS and lowered == "-".join(
                idwords[:-1] + [singularize(idwords[-1])]
            ):
                # the existence preamble renders a plural subject singular;
                # keep stage one's form rather than the source plural
                term = word
            elif [w.lower() for w in words[i : i + len(idwords)]] == idwords:
                term = "-".join(span.identifier_words())
                i += len(idwords) - 1
            if term is not None:
                matched = True
                if (
                    span.kind is SpanKind.CLASS
                    and out
                    and out[-1].startswith("v:")
                    and not _head_plural(span)
                ):
                    out.append(_article_for(span.identifier_words()[0]))
                out.append(_PREFIX[span.kind] + term)
                break
        if matched:
            i += 1
            continue
        if lowered in KEYWORDS or lowered.isdigit():
            out.append(word)
            i += 1
            continue
        raise InternalInconsistencyError(
            f"word {word!r} is neither a keyword nor a term of the sentence"
        )
    text = " ".join(out)
    if had_period:
        text += "."
    return text
