import type { Alternative, LexicalizationJson } from "./types";

// The accept endpoint addresses an alternative by its position in the flat
// array, so every card keeps that index even after regrouping.
export interface AlternativeCard {
  flatIndex: number;
  alt: Alternative;
}

export interface LexGroup {
  lexIndex: number;
  /** segmentation metadata when the response carries it, else undefined */
  lex: LexicalizationJson | undefined;
  cards: AlternativeCard[];
}

/**
 * Group the flat alternatives by their source lexicalization, keeping the
 * server's ordering within and across groups. The two ambiguity axes stay
 * visually separate: which words form terms (the group), and how the
 * sentence is read (the cards inside it).
 */
export function groupByLexicalization(
  alternatives: Alternative[],
  lexicalizations: LexicalizationJson[],
): LexGroup[] {
  const byIndex = new Map<number, LexGroup>();
  const order: LexGroup[] = [];
  alternatives.forEach((alt, flatIndex) => {
    const lexIndex = alt.provenance.lexicalizationIndex;
    let group = byIndex.get(lexIndex);
    if (!group) {
      group = {
        lexIndex,
        lex: lexicalizations.find((l) => l.index === lexIndex),
        cards: [],
      };
      byIndex.set(lexIndex, group);
      order.push(group);
    }
    group.cards.push({ flatIndex, alt });
  });
  return order;
}
