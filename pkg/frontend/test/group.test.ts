import { describe, expect, it } from "vitest";
import { groupByLexicalization } from "../src/group";
import type { Alternative, LexicalizationJson } from "../src/types";
import quarks from "./fixtures/analyze_quarks.json";

function alt(lexIndex: number, interpIndex: number): Alternative {
  return {
    aceSurface: "s",
    aceTagged: "t",
    dl: "A ⊑ B",
    functional: "SubClassOf(:A :B)",
    axiom: {},
    provenance: {
      lexicalizationIndex: lexIndex,
      interpretationIndex: interpIndex,
      quantifier: "AsParsed",
      axiomForm: "SubClassOf",
      distributed: false,
      patterns: [],
    },
  };
}

describe("groupByLexicalization", () => {
  it("splits a flat list into per-lexicalization groups, flat indices intact", () => {
    const groups = groupByLexicalization([alt(0, 0), alt(0, 1), alt(2, 0)], []);
    expect(groups.map((g) => g.lexIndex)).toEqual([0, 2]);
    expect(groups[0]!.cards.map((c) => c.flatIndex)).toEqual([0, 1]);
    expect(groups[1]!.cards.map((c) => c.flatIndex)).toEqual([2]);
  });

  it("attaches segmentation metadata by its index field, not list position", () => {
    const lex = { index: 2, spans: [], residue: [], interpretations: [] } as LexicalizationJson;
    const groups = groupByLexicalization([alt(2, 0)], [lex]);
    expect(groups[0]!.lex).toBe(lex);
    expect(groupByLexicalization([alt(5, 0)], [lex])[0]!.lex).toBeUndefined();
  });

  it("covers every alternative of a real two-segmentation response exactly once", () => {
    const groups = groupByLexicalization(quarks.alternatives, quarks.lexicalizations);
    expect(groups.map((g) => g.lexIndex)).toEqual([0, 1]);
    const flat = groups.flatMap((g) => g.cards.map((c) => c.flatIndex));
    expect(flat.length).toBe(quarks.alternatives.length);
    expect(new Set(flat).size).toBe(flat.length);
    for (const group of groups) {
      for (const card of group.cards) {
        expect(card.alt.provenance.lexicalizationIndex).toBe(group.lexIndex);
      }
    }
  });
});
