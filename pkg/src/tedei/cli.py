"""Command-line front end.

Subcommands mirror the pipeline stages: `parse` shows segmentations and
derivations, `axioms` the formal alternatives, `ace` the rewritten
sentence forms, `batch` runs a corpus file, `serve` starts the HTTP
service.  Exit codes are a stable contract: 0 success, 2 sentence not in
the language (or not analyzable), 64 usage error, 74 I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from .axioms import serialize_dl, serialize_functional
from .corpus import (
    gold_compare,
    load_gold,
    render_gold,
    render_report,
    report_to_json,
    run_corpus,
)
from .lexicalize import load_patterns
from .model import EmptySentenceError, TerminalSpan
from .pipeline import analysis_to_json, analyze_sentence
from .tagging import RuleTagger, TaggerLexicon

EX_OK = 0
EX_NOT_TEDEI = 2
EX_USAGE = 64
EX_IOERR = 74

# default ontology IRI for functional-syntax output; override with --iri
DEFAULT_IRI = "https://example.org/tedei/ontology"


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the CLI contract says 64
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _env_tagger() -> RuleTagger | None:
    path = os.environ.get("TEDEI_LEXICON")
    if not path:
        return None
    return RuleTagger(TaggerLexicon.load(path))


def _env_rules():
    path = os.environ.get("TEDEI_PATTERNS")
    if not path:
        return None
    return load_patterns(path)


def _analyze(sentence: str):
    return analyze_sentence(sentence, tagger=_env_tagger(), rules=_env_rules())


def _tree_lines(node, label: str = "", indent: str = "") -> list[str]:
    if isinstance(node, TerminalSpan):
        extra = ""
        if node.indicator_kind is not None:
            extra = f" <{node.indicator_kind.value}>"
        elif node.value is not None:
            extra = f" ={node.value}"
        head = f"{label}: " if label else ""
        return [f"{indent}{head}{node.kind.value} '{node.text()}'{extra}"]
    if dataclasses.is_dataclass(node):
        name = type(node).__name__.removesuffix("Node")
        flags = []
        for f in dataclasses.fields(node):
            v = getattr(node, f.name)
            if isinstance(v, (bool, str)) and f.name != "text":
                flags.append(f"{f.name}={v}")
        head = f"{label}: " if label else ""
        lines = [f"{indent}{head}{name}" + (f" [{', '.join(flags)}]" if flags else "")]
        for f in dataclasses.fields(node):
            if f.name == "lex":  # back-reference, not tree structure
                continue
            v = getattr(node, f.name)
            if isinstance(v, tuple):
                for item in v:
                    if item is None or isinstance(item, (bool, str, int)):
                        continue
                    lines += _tree_lines(item, f.name.rstrip("s"), indent + "  ")
            elif v is not None and not isinstance(v, (bool, str, int)):
                lines += _tree_lines(v, f.name, indent + "  ")
        return lines
    return [f"{indent}{label}: {node!r}"]


def _cmd_parse(args) -> int:
    analysis = _analyze(args.sentence)
    d = analysis.diagnostics
    seen = set()
    for r in analysis.readings:
        if r.lexicalization_index in seen:
            continue
        seen.add(r.lexicalization_index)
        lex = r.lexicalization
        print(f"lexicalization {r.lexicalization_index}:")
        print("  spans:  " + "  ".join(str(s) for s in lex.spans))
        if lex.residue:
            print("  residue: " + " ".join(t.surface for t in lex.residue))
    trees_printed = set()
    for r in analysis.readings:
        key = (r.lexicalization_index, id(r.tree))
        if key in trees_printed:
            continue
        trees_printed.add(key)
        print(f"derivation (lexicalization {r.lexicalization_index}):")
        for line in _tree_lines(r.tree, indent="  "):
            print(line)
    if not analysis.tedei:
        print(f"not in the language: {d.reason}", file=sys.stderr)
        return EX_NOT_TEDEI
    print(f"{d.lexicalization_count} lexicalizations, {d.parsed_lexicalization_count} parsed")
    return EX_OK


def _cmd_axioms(args) -> int:
    analysis = _analyze(args.sentence)
    if not analysis.tedei:
        print(f"not in the language: {analysis.diagnostics.reason}", file=sys.stderr)
        return EX_NOT_TEDEI
    if args.format == "json":
        doc = analysis_to_json(analysis, include_readings=args.all)
        print(json.dumps(doc, ensure_ascii=False, indent=2))
        return EX_OK
    if args.format == "ofn":
        axioms = (
            [r.axiom for r in analysis.readings] if args.all else list(analysis.axioms)
        )
        print(serialize_functional(axioms, args.iri), end="")
        return EX_OK
    if args.all:
        for r in analysis.readings:
            p = r.axiom.provenance
            tag = f"lex {p.lexicalization_index} interp {p.interpretation_index}"
            print(f"{serialize_dl(r.axiom)}    # {tag}, {r.interpretation.quantifier_choice}")
    else:
        for ax in analysis.axioms:
            p = ax.provenance
            print(f"{serialize_dl(ax)}    # lex {p.lexicalization_index} interp {p.interpretation_index}")
    return EX_OK


def _cmd_ace(args) -> int:
    analysis = _analyze(args.sentence)
    if not analysis.tedei:
        print(f"not in the language: {analysis.diagnostics.reason}", file=sys.stderr)
        return EX_NOT_TEDEI
    for r in analysis.readings:
        print(f"reading (lex {r.lexicalization_index}, interp {r.interpretation_index}):")
        print(f"  surface: {r.ace}")
        print(f"  tagged:  {r.tagged}")
    return EX_OK


def _cmd_batch(args) -> int:
    try:
        report = run_corpus(args.corpus, tagger=_env_tagger(), rules=_env_rules())
    except OSError as exc:
        print(f"cannot read corpus: {exc}", file=sys.stderr)
        return EX_IOERR
    print(render_report(report))
    doc = report_to_json(report)
    if args.gold:
        try:
            gold_rows = load_gold(args.gold)
        except OSError as exc:
            print(f"cannot read gold file: {exc}", file=sys.stderr)
            return EX_IOERR
        gold_report = gold_compare(report, gold_rows)
        print()
        print(render_gold(gold_report))
        doc["gold"] = {
            "hits": gold_report.hits,
            "misses": gold_report.misses,
            "errors": gold_report.errors,
            "verdicts": [
                {
                    "sentenceIndex": v.sentence_index,
                    "gold": v.gold,
                    "status": v.status,
                    "detail": v.detail,
                }
                for v in gold_report.verdicts
            ],
        }
    if args.report:
        try:
            Path(args.report).write_text(
                json.dumps(doc, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
            )
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return EX_IOERR
    return EX_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(data_dir=args.data, dev_cors=args.dev)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="tedei",
        description="Analyze controlled-English sentences into OWL 2 class expression axioms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="show lexicalizations and derivations")
    p.add_argument("sentence")
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("axioms", help="print the formal alternatives")
    p.add_argument("sentence")
    p.add_argument("--format", choices=("dl", "ofn", "json"), default="dl")
    p.add_argument("--all", action="store_true", help="every reading, not just distinct axioms")
    p.add_argument("--iri", default=DEFAULT_IRI, help="ontology IRI for ofn output")
    p.set_defaults(func=_cmd_axioms)

    p = sub.add_parser("ace", help="print rewritten and tagged sentence forms")
    p.add_argument("sentence")
    p.set_defaults(func=_cmd_ace)

    p = sub.add_parser("batch", help="analyze a corpus file")
    p.add_argument("corpus")
    p.add_argument("--gold", help="tab-separated gold axiom file")
    p.add_argument("--report", help="write machine-readable report JSON here")
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--data", default="./tedei-projects", help="project storage directory")
    p.add_argument("--dev", action="store_true", help="enable permissive CORS for UI development")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EmptySentenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_NOT_TEDEI
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EX_IOERR


if __name__ == "__main__":
    raise SystemExit(main())
