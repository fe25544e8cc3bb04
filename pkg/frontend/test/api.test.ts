import { afterEach, describe, expect, it, vi } from "vitest";
import {
  ApiError,
  NetworkError,
  acceptAlternative,
  analyze,
  createProject,
  exportUrl,
  getProject,
} from "../src/api";

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("api client", () => {
  it("posts the sentence to /api/analyze and returns the body", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse(200, { tedei: true }));
    vi.stubGlobal("fetch", fetchMock);
    const result = await analyze("Every driver drives a car.");
    expect(result).toEqual({ tedei: true });
    const [url, init] = fetchMock.mock.calls[0]!;
    expect(url).toBe("/api/analyze");
    expect(init.method).toBe("POST");
    expect(JSON.parse(init.body)).toEqual({ sentence: "Every driver drives a car." });
  });

  it("turns a string detail into an ApiError with that status", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(jsonResponse(409, { detail: "axiom already accepted in this project" })),
    );
    const err = await acceptAlternative("p1", "s", 0).catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(409);
    expect(err.detail).toBe("axiom already accepted in this project");
  });

  it("flattens a validation-error array into one detail line", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(
        jsonResponse(400, { detail: [{ msg: "Field required", loc: ["body", "sentence"] }] }),
      ),
    );
    const err = await analyze("x").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.detail).toBe("Field required");
  });

  it("wraps a rejected fetch in NetworkError", async () => {
    vi.stubGlobal("fetch", vi.fn().mockRejectedValue(new TypeError("Failed to fetch")));
    const err = await getProject("p1").catch((e) => e);
    expect(err).toBeInstanceOf(NetworkError);
  });

  it("copes with a non-JSON error body", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(new Response("boom", { status: 502 })),
    );
    const err = await createProject("x").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.detail).toBe("request failed");
  });

  it("builds export URLs and escapes the project id", () => {
    expect(exportUrl("abc123", "ofn")).toBe("/api/projects/abc123/export?format=ofn");
    expect(exportUrl("a/b", "dl")).toBe("/api/projects/a%2Fb/export?format=dl");
  });
});
