import * as liveApi from "./api";
import { ApiError, NetworkError } from "./api";
import { groupByLexicalization } from "./group";
import { showToast } from "./toast";
import { tokenSpans } from "./tokenize";
import type { AcceptedRecord, Alternative, AnalyzeResponse, SpanJson } from "./types";

export interface WorkbenchApi {
  analyze(sentence: string): Promise<AnalyzeResponse>;
  acceptAlternative(projectId: string, sentence: string, alternativeIndex: number): Promise<AcceptedRecord>;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

/** The typed sentence with the failing token wrapped in a <mark>. */
export function highlightedSentence(sentence: string, position: number | null): HTMLElement {
  const holder = el("p", "diag-sentence");
  const spans = tokenSpans(sentence);
  const bad = position === null ? undefined : spans[position];
  if (!bad) {
    holder.textContent = sentence;
    return holder;
  }
  holder.append(
    document.createTextNode(sentence.slice(0, bad.start)),
    Object.assign(el("mark", undefined, sentence.slice(bad.start, bad.end)), {
      title: "analysis got stuck here",
    }),
    document.createTextNode(sentence.slice(bad.end)),
  );
  return holder;
}

function spanChip(span: SpanJson): HTMLElement {
  const chip = el("span", `chip chip-${span.kind.toLowerCase()}`);
  chip.append(el("span", "chip-kind", span.indicator ?? span.kind), el("span", "chip-text", span.text));
  return chip;
}

/**
 * Sentence entry, analysis display, and alternative selection. All axiom
 * content shown here is taken verbatim from the service response.
 */
export class Workbench {
  readonly root: HTMLElement;
  projectId = "";
  onAccepted: (record: AcceptedRecord) => void = () => {};

  private readonly input: HTMLInputElement;
  private readonly button: HTMLButtonElement;
  private readonly note: HTMLElement;
  private readonly results: HTMLElement;
  private current: AnalyzeResponse | null = null;

  constructor(private readonly api: WorkbenchApi = liveApi) {
    this.root = el("section", "workbench");
    const form = el("form", "sentence-form");
    this.input = el("input");
    this.input.type = "text";
    this.input.placeholder = "Type a sentence, e.g.  Every driver drives a car.";
    this.input.autocomplete = "off";
    this.button = el("button", undefined, "Analyze");
    this.button.type = "submit";
    this.note = el("p", "form-note");
    this.results = el("div", "results");
    form.append(this.input, this.button);
    form.addEventListener("submit", (ev) => {
      ev.preventDefault();
      void this.analyze();
    });
    this.root.append(form, this.note, this.results);
  }

  get sentenceInput(): HTMLInputElement {
    return this.input;
  }

  async analyze(): Promise<void> {
    const sentence = this.input.value.trim();
    this.note.textContent = "";
    if (!sentence) {
      this.note.textContent = "Type a sentence first.";
      return;
    }
    this.button.disabled = true;
    this.button.textContent = "Analyzing…";
    try {
      const analysis = await this.api.analyze(sentence);
      this.current = analysis;
      this.render(analysis);
    } catch (err) {
      if (err instanceof NetworkError) {
        // input and any previous results stay as they are
        showToast("Could not reach the service. Your sentence is still in the box.");
      } else if (err instanceof ApiError) {
        this.note.textContent = `The service rejected the request: ${err.detail}`;
      } else {
        throw err;
      }
    } finally {
      this.button.disabled = false;
      this.button.textContent = "Analyze";
    }
  }

  private render(analysis: AnalyzeResponse): void {
    this.results.replaceChildren();
    if (!analysis.tedei) {
      this.results.append(this.renderDiagnostics(analysis));
      return;
    }
    this.results.append(this.renderAlternatives(analysis));
  }

  private renderDiagnostics(analysis: AnalyzeResponse): HTMLElement {
    const d = analysis.diagnostics;
    const panel = el("div", "diagnostics");
    panel.append(el("h2", undefined, "Not a sentence of the controlled language"));
    panel.append(highlightedSentence(analysis.sentence, d.position));
    panel.append(el("p", "diag-reason", d.reason));
    if (d.lexicalizationCount > 0) {
      panel.append(
        el(
          "p",
          "diag-counts",
          `${d.lexicalizationCount} segmentation(s) were found, but none parsed.`,
        ),
      );
    }
    panel.append(el("p", "diag-hint", "Reformulate the sentence and analyze again."));
    return panel;
  }

  private renderAlternatives(analysis: AnalyzeResponse): HTMLElement {
    const holder = el("div", "alternatives");
    const groups = groupByLexicalization(analysis.alternatives, analysis.lexicalizations);
    const summary = el("p", "alt-summary");
    summary.append(
      el(
        "span",
        undefined,
        `${analysis.alternatives.length} reading(s) across ${groups.length} segmentation(s). `,
      ),
      el("span", "expressivity", analysis.expressivity),
    );
    holder.append(summary);
    for (const group of groups) {
      const section = el("section", "lex-group");
      const header = el("header", "lex-header");
      header.append(el("span", "lex-title", `Segmentation ${group.lexIndex + 1}`));
      if (group.lex) {
        for (const span of group.lex.spans) header.append(spanChip(span));
      }
      section.append(header);
      for (const card of group.cards) {
        section.append(this.renderCard(card.flatIndex, card.alt));
      }
      holder.append(section);
    }
    return holder;
  }

  private renderCard(flatIndex: number, alt: Alternative): HTMLElement {
    const card = el("article", "alt-card");
    card.dataset.flatIndex = String(flatIndex);
    card.append(el("p", "alt-dl", alt.dl));
    const ace = el("dl", "alt-ace");
    ace.append(
      el("dt", undefined, "reads as"),
      el("dd", undefined, alt.aceSurface),
      el("dt", undefined, "tagged"),
      el("dd", "mono", alt.aceTagged),
    );
    card.append(ace);
    const prov = alt.provenance;
    const provParts = [prov.quantifier, prov.axiomForm, ...prov.patterns];
    if (prov.distributed) provParts.push("distributed");
    card.append(el("p", "alt-prov", provParts.join(" · ")));
    const actions = el("div", "alt-actions");
    const accept = el("button", "accept", "Accept into project");
    accept.type = "button";
    const inline = el("p", "alt-inline");
    accept.addEventListener("click", () => void this.accept(card, accept, inline, flatIndex));
    actions.append(accept, inline);
    card.append(actions);
    return card;
  }

  private async accept(
    card: HTMLElement,
    button: HTMLButtonElement,
    inline: HTMLElement,
    flatIndex: number,
  ): Promise<void> {
    if (!this.current || !this.projectId) return;
    inline.textContent = "";
    button.disabled = true;
    button.textContent = "Accepting…";
    try {
      // no optimistic update: the card only turns green once the server
      // has written the record
      const record = await this.api.acceptAlternative(this.projectId, this.current.sentence, flatIndex);
      card.classList.add("accepted");
      button.textContent = "In the project";
      this.onAccepted(record);
    } catch (err) {
      button.disabled = false;
      button.textContent = "Accept into project";
      if (err instanceof ApiError && err.status === 409) {
        inline.textContent = "Already in the project: this axiom was accepted earlier (409).";
      } else if (err instanceof ApiError) {
        inline.textContent = `The service declined: ${err.detail} (${err.status})`;
      } else if (err instanceof NetworkError) {
        showToast("Could not reach the service; nothing was accepted.");
      } else {
        throw err;
      }
    }
  }
}
