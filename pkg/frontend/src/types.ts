// Shapes of the JSON bodies the service exchanges. The axiom payloads are
// carried opaquely: the UI shows the dl / functional strings verbatim and
// never rebuilds expressions from the structural JSON.

export interface Diagnostics {
  isTedei: boolean;
  reason: string;
  position: number | null;
  token: string | null;
  lexicalizationCount: number;
  parsedLexicalizationCount: number;
  truncated: boolean;
}

export interface SpanJson {
  kind: string;
  text: string;
  start: number;
  end: number;
  indicator?: string;
}

export interface InterpretationJson {
  index: number;
  axiomForm: string;
  quantifier: string;
  distributed: boolean;
  patterns: string[];
  ace: string;
  tagged: string;
  dl: string;
  axiom: unknown;
}

export interface LexicalizationJson {
  index: number;
  spans: SpanJson[];
  residue: string[];
  interpretations: InterpretationJson[];
}

export interface Provenance {
  lexicalizationIndex: number;
  interpretationIndex: number;
  quantifier: string;
  axiomForm: string;
  distributed: boolean;
  patterns: string[];
}

export interface Alternative {
  aceSurface: string;
  aceTagged: string;
  dl: string;
  functional: string;
  axiom: unknown;
  provenance: Provenance;
}

export interface AnalyzeResponse {
  sentence: string;
  tedei: boolean;
  diagnostics: Diagnostics;
  expressivity: string;
  lexicalizations: LexicalizationJson[];
  axioms: unknown[];
  alternatives: Alternative[];
}

export interface AcceptedRecord {
  axiom: { dl: string; [key: string]: unknown };
  key: string;
  sourceSentence: string;
  acceptedAlternativeIndex: number;
  timestamp: string;
}

export interface ProjectDoc {
  id: string;
  name: string;
  createdAt: string;
  updatedAt: string;
  accepted: AcceptedRecord[];
}
