import type { AcceptedRecord, AnalyzeResponse, ProjectDoc } from "./types";

/** Service replied with a non-2xx status. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`${status}: ${detail}`);
    this.name = "ApiError";
  }
}

/** The request never reached the service (fetch rejected). */
export class NetworkError extends Error {
  constructor(cause: unknown) {
    super("service unreachable");
    this.name = "NetworkError";
    this.cause = cause;
  }
}

// Validation failures arrive as an array of error objects, everything else
// as a plain string; flatten both into one line for display.
function normalizeDetail(body: unknown): string {
  if (body && typeof body === "object" && "detail" in body) {
    const detail = (body as { detail: unknown }).detail;
    if (typeof detail === "string") return detail;
    if (Array.isArray(detail)) {
      return detail
        .map((e) =>
          e && typeof e === "object" && "msg" in e ? String((e as { msg: unknown }).msg) : JSON.stringify(e),
        )
        .join("; ");
    }
  }
  return "request failed";
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(path, init);
  } catch (err) {
    throw new NetworkError(err);
  }
  let body: unknown = null;
  try {
    body = await response.json();
  } catch {
    // non-JSON body; fall through with null
  }
  if (!response.ok) {
    throw new ApiError(response.status, normalizeDetail(body));
  }
  return body as T;
}

function post(body: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  };
}

export function analyze(sentence: string): Promise<AnalyzeResponse> {
  return request("/api/analyze", post({ sentence }));
}

export function createProject(name: string): Promise<ProjectDoc> {
  return request("/api/projects", post({ name }));
}

export function getProject(id: string): Promise<ProjectDoc> {
  return request(`/api/projects/${encodeURIComponent(id)}`);
}

export function acceptAlternative(
  projectId: string,
  sentence: string,
  alternativeIndex: number,
): Promise<AcceptedRecord> {
  return request(
    `/api/projects/${encodeURIComponent(projectId)}/accept`,
    post({ sentence, alternativeIndex }),
  );
}

export function exportUrl(projectId: string, format: "dl" | "ofn" | "json"): string {
  return `/api/projects/${encodeURIComponent(projectId)}/export?format=${format}`;
}
