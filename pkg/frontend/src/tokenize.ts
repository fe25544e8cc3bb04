// Mirror of the service tokenizer. Diagnostics report failure positions as
// indices into this token sequence, so the two must split identically or
// the highlight lands on the wrong word.
const WORD_RE = /[A-Za-z]+(?:'[A-Za-z]+)?|\d+|\S/g;

export interface TokenSpan {
  text: string;
  /** character offset of the first char */
  start: number;
  /** character offset one past the last char */
  end: number;
}

export function tokenSpans(sentence: string): TokenSpan[] {
  const out: TokenSpan[] = [];
  for (const m of sentence.matchAll(WORD_RE)) {
    out.push({ text: m[0], start: m.index, end: m.index + m[0].length });
  }
  return out;
}
