import * as liveApi from "./api";
import { ApiError, NetworkError, exportUrl } from "./api";
import { showToast } from "./toast";
import type { ProjectDoc } from "./types";

export interface OntologyApi {
  getProject(id: string): Promise<ProjectDoc>;
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

/** The accepted axioms of the current project, always re-read from the server. */
export class OntologyPanel {
  readonly root: HTMLElement;
  private readonly heading: HTMLElement;
  private readonly list: HTMLElement;
  private readonly exports: HTMLElement;

  constructor(private readonly api: OntologyApi = liveApi) {
    this.root = el("section", "ontology");
    this.heading = el("h2", undefined, "Ontology");
    this.list = el("div", "axiom-list");
    this.exports = el("p", "export-links");
    this.root.append(this.heading, this.list, this.exports);
  }

  async refresh(projectId: string): Promise<void> {
    let doc: ProjectDoc;
    try {
      doc = await this.api.getProject(projectId);
    } catch (err) {
      if (err instanceof NetworkError) {
        showToast("Could not refresh the ontology panel.");
        return;
      }
      if (err instanceof ApiError) {
        this.list.replaceChildren(el("p", "panel-error", `Cannot load project: ${err.detail}`));
        return;
      }
      throw err;
    }
    this.heading.textContent = `${doc.name} — ${doc.accepted.length} axiom(s)`;
    this.list.replaceChildren();
    if (doc.accepted.length === 0) {
      this.list.append(el("p", "empty", "Nothing accepted yet."));
    }
    for (const record of doc.accepted) {
      const row = el("article", "axiom-row");
      row.append(el("p", "axiom-dl", record.axiom.dl));
      const meta = el("p", "axiom-meta");
      meta.append(
        el("span", undefined, record.sourceSentence),
        el("span", "timestamp", record.timestamp),
      );
      row.append(meta);
      this.list.append(row);
    }
    this.exports.replaceChildren(el("span", undefined, "Export: "));
    for (const format of ["dl", "ofn", "json"] as const) {
      const a = el("a", undefined, format);
      a.href = exportUrl(projectId, format);
      a.target = "_blank";
      this.exports.append(a, document.createTextNode(" "));
    }
  }
}
