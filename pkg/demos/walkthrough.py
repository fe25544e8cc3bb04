"""End-to-end tour of the pipeline on one ambiguous sentence.

Run:  python3 demos/walkthrough.py ["Some sentence."]
"""

import sys

from tedei import analyze_sentence
from tedei.axioms import serialize_dl, serialize_functional
from tedei.tagging import RuleTagger

sentence = sys.argv[1] if len(sys.argv) > 1 else "Every driver drives a car."

print(f"input: {sentence}\n")

print("1. part-of-speech tagging")
for tok in RuleTagger().tag(sentence):
    print(f"   {tok.index:>2}  {tok.surface:<12} {tok.pos}")

res = analyze_sentence(sentence)
if not res.tedei:
    print("\nnot in the controlled language:")
    print(f"   {res.diagnostics.reason}")
    sys.exit(2)

print("\n2. lexicalizations (segmentations into typed spans)")
seen = set()
for r in res.readings:
    if r.lexicalization_index in seen:
        continue
    seen.add(r.lexicalization_index)
    spans = " ".join(
        f"[{s.kind.name} {' '.join(t.surface for t in s.tokens)}]"
        for s in r.lexicalization.spans
    )
    print(f"   lex {r.lexicalization_index}: {spans}")

print("\n3. readings: controlled form, tagged form, axiom")
for r in res.readings:
    print(f"   lex {r.lexicalization_index} interp {r.interpretation_index}"
          f"  ({r.interpretation.quantifier_choice})")
    print(f"      ace:    {r.ace}")
    print(f"      tagged: {r.tagged}")
    print(f"      axiom:  {serialize_dl(r.axiom)}")

print(f"\n4. distinct axioms ({len(res.axioms)}), first reading wins")
for a in res.axioms:
    print(f"   {serialize_dl(a)}")

print("\n5. OWL 2 functional-style document")
print(serialize_functional(res.axioms, "https://example.org/demo"))
