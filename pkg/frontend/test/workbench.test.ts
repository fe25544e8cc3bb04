import { beforeEach, describe, expect, it, vi } from "vitest";
import type { Mock } from "vitest";
import { ApiError, NetworkError } from "../src/api";
import { Workbench, highlightedSentence } from "../src/workbench";
import type { WorkbenchApi } from "../src/workbench";
import type { AcceptedRecord, AnalyzeResponse } from "../src/types";
import driver from "./fixtures/analyze_driver.json";
import quarks from "./fixtures/analyze_quarks.json";
import rejected from "./fixtures/analyze_rejected.json";
import record from "./fixtures/accept_record.json";

const driverResponse = driver as unknown as AnalyzeResponse;
const quarksResponse = quarks as unknown as AnalyzeResponse;
const rejectedResponse = rejected as unknown as AnalyzeResponse;
const acceptedRecord = record as unknown as AcceptedRecord;

function makeWorkbench(overrides?: { analyze?: Mock; accept?: Mock }) {
  const analyze = overrides?.analyze ?? vi.fn().mockResolvedValue(driverResponse);
  const accept = overrides?.accept ?? vi.fn().mockResolvedValue(acceptedRecord);
  const bench = new Workbench({
    analyze: analyze as unknown as WorkbenchApi["analyze"],
    acceptAlternative: accept as unknown as WorkbenchApi["acceptAlternative"],
  });
  bench.projectId = "p1";
  document.body.appendChild(bench.root);
  return { bench, analyze, accept };
}

async function typeAndAnalyze(bench: Workbench, sentence: string) {
  bench.sentenceInput.value = sentence;
  await bench.analyze();
}

beforeEach(() => {
  document.body.replaceChildren();
});

describe("highlightedSentence", () => {
  it("marks exactly the failing token", () => {
    const holder = highlightedSentence("The cat quickly jumped over whatever.", 0);
    expect(holder.querySelector("mark")?.textContent).toBe("The");
    expect(holder.textContent).toBe("The cat quickly jumped over whatever.");
  });

  it("marks a mid-sentence token by index, not by string search", () => {
    const holder = highlightedSentence("a b a b a", 3);
    const mark = holder.querySelector("mark")!;
    expect(mark.textContent).toBe("b");
    // the second "b", so everything before the mark is "a b a "
    expect(holder.innerHTML.indexOf("<mark")).toBe("a b a ".length);
  });

  it("renders plain text when there is no position", () => {
    const holder = highlightedSentence("fine sentence", null);
    expect(holder.querySelector("mark")).toBeNull();
    expect(holder.textContent).toBe("fine sentence");
  });
});

describe("workbench analysis display", () => {
  it("shows the diagnostics panel with highlight for a rejected sentence", async () => {
    const { bench } = makeWorkbench({
      analyze: vi.fn().mockResolvedValue(rejectedResponse),
    });
    await typeAndAnalyze(bench, rejectedResponse.sentence);
    const panel = bench.root.querySelector(".diagnostics");
    expect(panel).not.toBeNull();
    expect(panel!.querySelector("mark")?.textContent).toBe(rejectedResponse.diagnostics.token);
    expect(panel!.textContent).toContain(rejectedResponse.diagnostics.reason);
    expect(bench.root.querySelectorAll(".alt-card").length).toBe(0);
  });

  it("renders one card per alternative with the DL string verbatim", async () => {
    const { bench } = makeWorkbench();
    await typeAndAnalyze(bench, driverResponse.sentence);
    const cards = [...bench.root.querySelectorAll(".alt-card")];
    expect(cards.length).toBe(driverResponse.alternatives.length);
    cards.forEach((card, i) => {
      expect(card.querySelector(".alt-dl")?.textContent).toBe(driverResponse.alternatives[i]!.dl);
      expect(card.textContent).toContain(driverResponse.alternatives[i]!.aceTagged);
    });
  });

  it("groups the quarks response into two segmentation sections", async () => {
    const { bench } = makeWorkbench({
      analyze: vi.fn().mockResolvedValue(quarksResponse),
    });
    await typeAndAnalyze(bench, quarksResponse.sentence);
    const groups = [...bench.root.querySelectorAll(".lex-group")];
    expect(groups.length).toBe(2);
    const total = groups.reduce((n, g) => n + g.querySelectorAll(".alt-card").length, 0);
    expect(total).toBe(quarksResponse.alternatives.length);
    // span chips make the segmentations distinguishable at a glance
    expect(groups[0]!.querySelectorAll(".chip").length).toBeGreaterThan(0);
  });

  it("keeps the input and shows a toast when the service is down", async () => {
    const { bench } = makeWorkbench({
      analyze: vi.fn().mockRejectedValue(new NetworkError(new TypeError("Failed to fetch"))),
    });
    await typeAndAnalyze(bench, "Every driver drives a car.");
    expect(bench.sentenceInput.value).toBe("Every driver drives a car.");
    expect(document.querySelector(".toast")).not.toBeNull();
    expect(bench.root.querySelector(".diagnostics")).toBeNull();
  });

  it("shows a request rejection inline, not as a toast", async () => {
    const { bench } = makeWorkbench({
      analyze: vi.fn().mockRejectedValue(new ApiError(413, "sentence exceeds 2000 characters")),
    });
    await typeAndAnalyze(bench, "long sentence");
    expect(bench.root.querySelector(".form-note")?.textContent).toContain("sentence exceeds");
    expect(document.querySelector(".toast")).toBeNull();
  });
});

describe("workbench accept flow", () => {
  async function renderedCards(overrides?: Parameters<typeof makeWorkbench>[0]) {
    const made = makeWorkbench(overrides);
    await typeAndAnalyze(made.bench, driverResponse.sentence);
    return { ...made, cards: [...made.bench.root.querySelectorAll<HTMLElement>(".alt-card")] };
  }

  it("accepts with the analyzed sentence and the card's flat index", async () => {
    const { bench, accept, cards } = await renderedCards();
    const fired: AcceptedRecord[] = [];
    bench.onAccepted = (r) => fired.push(r);
    cards[1]!.querySelector("button")!.click();
    await vi.waitFor(() => expect(fired.length).toBe(1));
    expect(accept).toHaveBeenCalledWith("p1", driverResponse.sentence, 1);
    expect(cards[1]!.classList.contains("accepted")).toBe(true);
  });

  it("explains a duplicate accept inline on the card", async () => {
    const { cards } = await renderedCards({
      accept: vi.fn().mockRejectedValue(new ApiError(409, "axiom already accepted in this project")),
    });
    cards[0]!.querySelector("button")!.click();
    await vi.waitFor(() =>
      expect(cards[0]!.querySelector(".alt-inline")?.textContent).toContain("Already in the project"),
    );
    expect(cards[0]!.classList.contains("accepted")).toBe(false);
    expect(document.querySelector(".toast")).toBeNull();
    // the button comes back so the user can pick a different card
    expect(cards[0]!.querySelector("button")!.disabled).toBe(false);
  });

  it("only marks the card after the server confirms", async () => {
    let resolve!: (r: AcceptedRecord) => void;
    const pending = new Promise<AcceptedRecord>((r) => (resolve = r));
    const { cards } = await renderedCards({ accept: vi.fn().mockReturnValue(pending) });
    cards[0]!.querySelector("button")!.click();
    expect(cards[0]!.classList.contains("accepted")).toBe(false);
    resolve(acceptedRecord);
    await vi.waitFor(() => expect(cards[0]!.classList.contains("accepted")).toBe(true));
  });

  it("toasts on network failure during accept and re-enables the button", async () => {
    const { cards } = await renderedCards({
      accept: vi.fn().mockRejectedValue(new NetworkError(new TypeError("offline"))),
    });
    cards[0]!.querySelector("button")!.click();
    await vi.waitFor(() => expect(document.querySelector(".toast")).not.toBeNull());
    expect(cards[0]!.querySelector("button")!.disabled).toBe(false);
    expect(cards[0]!.classList.contains("accepted")).toBe(false);
  });
});
