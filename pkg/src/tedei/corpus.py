"""Batch evaluation over a sentence corpus.

Runs the whole pipeline on every sentence of a file, aggregates coverage
counts, and optionally checks generated axioms against a gold file.  Gold
comparison is structural: each gold line is parsed from DL notation and
matched by normalized axiom key against the alternatives the system
produced, so conjunct order and notation details cannot cause spurious
misses.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .axioms import parse_dl, serialize_dl
from .interpret import AmbiguityPattern
from .lexicalize import PatternRule
from .pipeline import analyze_sentence
from .tagging import Tagger

__all__ = [
    "SentenceResult",
    "CoverageReport",
    "GoldVerdict",
    "GoldReport",
    "load_corpus",
    "bundled_corpus",
    "bundled_gold",
    "run_corpus",
    "render_report",
    "report_to_json",
    "load_gold",
    "gold_compare",
    "render_gold",
]


@dataclass(frozen=True)
class SentenceResult:
    """Coverage row for one corpus sentence."""

    index: int
    sentence: str
    tedei: bool
    lexicalizations: int
    parsed_lexicalizations: int
    interpretations: int
    axioms: tuple[str, ...]  # DL notation, deduplicated, stable order
    truncated: bool


@dataclass(frozen=True)
class CoverageReport:
    rows: tuple[SentenceResult, ...]

    @property
    def input_sentences(self) -> int:
        return len(self.rows)

    @property
    def tedei_sentences(self) -> int:
        return sum(1 for r in self.rows if r.tedei)

    @property
    def total_lexicalizations(self) -> int:
        return sum(r.lexicalizations for r in self.rows)

    @property
    def tedei_lexicalizations(self) -> int:
        return sum(r.parsed_lexicalizations for r in self.rows)

    @property
    def interpretations(self) -> int:
        return sum(r.interpretations for r in self.rows)

    @property
    def axioms(self) -> int:
        return sum(len(r.axioms) for r in self.rows)

    @property
    def truncated(self) -> bool:
        return any(r.truncated for r in self.rows)


def load_corpus(path: str | Path) -> tuple[str, ...]:
    """Sentences from a one-per-line UTF-8 file; '#' lines and blanks skipped."""
    text = Path(path).read_text(encoding="utf-8")
    return tuple(
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    )


def bundled_corpus() -> tuple[str, ...]:
    text = resources.files("tedei.resources").joinpath("reference_sentences.txt").read_text("utf-8")
    return tuple(
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    )


def bundled_gold() -> tuple[tuple[int, str], ...]:
    text = resources.files("tedei.resources").joinpath("reference_axioms.tsv").read_text("utf-8")
    return _parse_gold_lines(text.splitlines())


def run_corpus(
    source: str | Path | Iterable[str],
    *,
    tagger: Tagger | None = None,
    rules: Sequence[PatternRule] | None = None,
    registry: Sequence[AmbiguityPattern] | None = None,
    cap: int | None = None,
) -> CoverageReport:
    """Analyze every sentence of `source` (path or sentence iterable)."""
    if isinstance(source, (str, Path)):
        sentences = load_corpus(source)
    else:
        sentences = tuple(source)
    rows = []
    for i, sentence in enumerate(sentences):
        analysis = analyze_sentence(
            sentence,
            tagger=tagger,
            rules=rules,
            registry=registry,
            cap=cap,
            sentence_id=str(i),
        )
        d = analysis.diagnostics
        rows.append(
            SentenceResult(
                index=i,
                sentence=sentence,
                tedei=analysis.tedei,
                lexicalizations=d.lexicalization_count,
                parsed_lexicalizations=d.parsed_lexicalization_count,
                interpretations=len(analysis.readings),
                axioms=tuple(serialize_dl(ax) for ax in analysis.axioms),
                truncated=analysis.truncated,
            )
        )
    return CoverageReport(rows=tuple(rows))


def render_report(report: CoverageReport) -> str:
    """Fixed-width coverage table; identical across runs for the same input."""
    header = f"{'idx':>4}  {'ok':<3} {'lex':>5} {'parsed':>6} {'interp':>6} {'axioms':>6}  sentence"
    lines = [header, "-" * len(header)]
    for r in report.rows:
        mark = "yes" if r.tedei else "NO"
        lines.append(
            f"{r.index:>4}  {mark:<3} {r.lexicalizations:>5} {r.parsed_lexicalizations:>6}"
            f" {r.interpretations:>6} {len(r.axioms):>6}  {r.sentence}"
        )
    lines.append("-" * len(header))
    lines.append(
        f"sentences {report.tedei_sentences}/{report.input_sentences} in the language, "
        f"lexicalizations {report.tedei_lexicalizations}/{report.total_lexicalizations} parsed, "
        f"{report.interpretations} interpretations, {report.axioms} distinct axioms"
        + (", output truncated by cap" if report.truncated else "")
    )
    return "\n".join(lines)


def report_to_json(report: CoverageReport) -> dict:
    return {
        "inputSentences": report.input_sentences,
        "tedeiSentences": report.tedei_sentences,
        "totalLexicalizations": report.total_lexicalizations,
        "tedeiLexicalizations": report.tedei_lexicalizations,
        "interpretations": report.interpretations,
        "axioms": report.axioms,
        "truncated": report.truncated,
        "perSentence": [
            {
                "index": r.index,
                "sentence": r.sentence,
                "tedei": r.tedei,
                "lexicalizations": r.lexicalizations,
                "parsedLexicalizations": r.parsed_lexicalizations,
                "interpretations": r.interpretations,
                "axioms": list(r.axioms),
                "truncated": r.truncated,
            }
            for r in report.rows
        ],
    }


@dataclass(frozen=True)
class GoldVerdict:
    sentence_index: int
    gold: str
    status: str  # "hit" | "miss" | "error"
    detail: str = ""


@dataclass(frozen=True)
class GoldReport:
    verdicts: tuple[GoldVerdict, ...]

    @property
    def hits(self) -> int:
        return sum(1 for v in self.verdicts if v.status == "hit")

    @property
    def misses(self) -> int:
        return sum(1 for v in self.verdicts if v.status == "miss")

    @property
    def errors(self) -> int:
        return sum(1 for v in self.verdicts if v.status == "error")


def _parse_gold_lines(lines: Iterable[str]) -> tuple[tuple[int, str], ...]:
    rows = []
    for n, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        left, sep, right = line.partition("\t")
        if not sep or not right.strip():
            raise ValueError(f"gold line {n}: expected 'index<TAB>axiom', got {line!r}")
        rows.append((int(left), right.strip()))
    return tuple(rows)


def load_gold(path: str | Path) -> tuple[tuple[int, str], ...]:
    """(sentenceIndex, DL axiom) pairs from a tab-separated gold file."""
    return _parse_gold_lines(Path(path).read_text(encoding="utf-8").splitlines())


def gold_compare(report: CoverageReport, gold: str | Path | Sequence[tuple[int, str]]) -> GoldReport:
    """Check each gold axiom for membership among a sentence's alternatives.

    A malformed gold row (bad index, unparseable DL) is reported as an
    "error" verdict; the run continues.
    """
    if isinstance(gold, (str, Path)):
        gold_rows = load_gold(gold)
    else:
        gold_rows = tuple(gold)
    by_index = {r.index: r for r in report.rows}
    verdicts = []
    for index, text in gold_rows:
        row = by_index.get(index)
        if row is None:
            verdicts.append(GoldVerdict(index, text, "error", "no such sentence index"))
            continue
        try:
            want = parse_dl(text).key()
        except ValueError as exc:
            verdicts.append(GoldVerdict(index, text, "error", str(exc)))
            continue
        have = set()
        for dl in row.axioms:
            try:
                have.add(parse_dl(dl).key())
            except ValueError:  # pragma: no cover - own output should parse
                pass
        if want in have:
            verdicts.append(GoldVerdict(index, text, "hit"))
        else:
            verdicts.append(GoldVerdict(index, text, "miss", f"{len(row.axioms)} alternatives"))
    return GoldReport(verdicts=tuple(verdicts))


def render_gold(gold_report: GoldReport) -> str:
    lines = []
    for v in gold_report.verdicts:
        mark = {"hit": "HIT ", "miss": "MISS", "error": "ERR "}[v.status]
        tail = f"  ({v.detail})" if v.detail else ""
        lines.append(f"{mark} [{v.sentence_index:>3}] {v.gold}{tail}")
    lines.append(
        f"gold axioms: {gold_report.hits} hit, {gold_report.misses} miss, "
        f"{gold_report.errors} error of {len(gold_report.verdicts)}"
    )
    return "\n".join(lines)
