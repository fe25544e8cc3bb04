"""Command line interface: subcommands, exit codes, env overrides."""

import importlib.resources
import json

import pytest

import ofn_check
from tedei.cli import EX_IOERR, EX_NOT_TEDEI, EX_OK, EX_USAGE, main

DRIVER = "Every driver drives a car."


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# axioms


def test_axioms_all_driver_prints_three_alternatives(capsys):
    code, out, _ = run(capsys, "axioms", "--all", "--format", "dl", DRIVER)
    assert code == EX_OK
    lines = [l for l in out.splitlines() if "⊑" in l]
    assert len(lines) == 3
    assert all("# lex" in l for l in lines)


def test_axioms_default_deduplicates(capsys):
    code, out, _ = run(capsys, "axioms", "--format", "dl", "Quarks possess color charge.")
    assert code == EX_OK
    axioms = [l.split("  #")[0].strip() for l in out.splitlines() if "⊑" in l]
    assert len(axioms) == len(set(axioms)) >= 4


def test_axioms_ofn_output_is_valid(capsys):
    code, out, _ = run(capsys, "axioms", "--format", "ofn", DRIVER)
    assert code == EX_OK
    assert ofn_check.check(out) == []


def test_axioms_json_output(capsys):
    code, out, _ = run(capsys, "axioms", "--format", "json", DRIVER)
    assert code == EX_OK
    data = json.loads(out)
    assert data["tedei"] is True
    assert data["axioms"]


def test_axioms_rejects_free_english(capsys):
    code, _, err = run(capsys, "axioms", "The weather seemed nice today though.")
    assert code == EX_NOT_TEDEI
    assert err.strip()


# ---------------------------------------------------------------------------
# parse / ace


def test_parse_shows_derivations(capsys):
    code, out, _ = run(capsys, "parse", DRIVER)
    assert code == EX_OK
    assert "lexicalization" in out.lower()
    assert "CLASS" in out and "PROPERTY" in out


def test_parse_diagnoses_rejection_position(capsys):
    code, _, err = run(capsys, "parse", "The weather seemed nice today though.")
    assert code == EX_NOT_TEDEI
    assert "token" in err or "stuck" in err


def test_empty_sentence_is_not_tedei(capsys):
    code, _, err = run(capsys, "parse", "")
    assert code == EX_NOT_TEDEI
    assert "error" in err


def test_ace_prints_controlled_forms(capsys):
    code, out, _ = run(capsys, "ace", "All kids play.")
    assert code == EX_OK
    assert "All kids play something." in out
    assert "n:kids" in out  # tagged twin alongside each surface


# ---------------------------------------------------------------------------
# usage errors


def test_unknown_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["axioms", "--no-such-flag", DRIVER])
    assert exc.value.code == EX_USAGE
    capsys.readouterr()


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == EX_USAGE
    capsys.readouterr()


# ---------------------------------------------------------------------------
# batch


def test_batch_with_gold_and_report(tmp_path, capsys):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("Every driver drives a car.\nEvery polygon has no curves.\n")
    gold = tmp_path / "gold.tsv"
    gold.write_text("0\tDriver ⊑ ∃drives.Car\n1\tPolygon ⊑ ¬∃has.Curves\n")
    report = tmp_path / "report.json"

    code, out, _ = run(capsys, "batch", str(corpus), "--gold", str(gold),
                       "--report", str(report))
    assert code == EX_OK
    assert "2/2" in out
    assert out.count("HIT") == 2

    data = json.loads(report.read_text())
    assert data["inputSentences"] == 2
    assert data["tedeiSentences"] == 2
    assert data["gold"]["hits"] == 2
    assert len(data["perSentence"]) == 2


def test_batch_missing_file_is_io_error(capsys):
    code, _, err = run(capsys, "batch", "/no/such/corpus.txt")
    assert code == EX_IOERR
    assert "cannot read corpus" in err


def test_batch_runs_are_byte_identical(tmp_path, capsys):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("Quarks possess color charge.\n")
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "batch", str(corpus))
        assert code == EX_OK
        outs.append(out)
    assert outs[0] == outs[1]


# ---------------------------------------------------------------------------
# environment overrides


def _bundled(name: str) -> str:
    return (importlib.resources.files("tedei.resources") / name).read_text()


def test_lexicon_override_admits_new_verbs(tmp_path, capsys, monkeypatch):
    sentence = "Every dog blorfs some cat."
    code, _, _ = run(capsys, "axioms", sentence)
    assert code == EX_NOT_TEDEI  # unknown -s word tags as a noun by default

    custom = tmp_path / "lexicon.txt"
    # word entries must precede the [suffix] section, so prepend
    custom.write_text("blorfs\tVBZ\n" + _bundled("lexicon.txt"))
    monkeypatch.setenv("TEDEI_LEXICON", str(custom))
    code, out, _ = run(capsys, "axioms", sentence)
    assert code == EX_OK
    assert "Dog ⊑ ∃blorfs.Cat" in out


def test_pattern_override_changes_segmentation(tmp_path, capsys, monkeypatch):
    custom = tmp_path / "patterns.txt"
    # classes only: no relation spans can form, so nothing parses
    custom.write_text("CLASS\t(JJ|NN|NNS)* (NN|NNS)\n")
    monkeypatch.setenv("TEDEI_PATTERNS", str(custom))
    code, _, _ = run(capsys, "axioms", DRIVER)
    assert code == EX_NOT_TEDEI
