// Thin typed client for the fbga service; every explorer interaction
// goes through here.

import type {
  GraphJson,
  MutateResponse,
  ReducedResponse,
  Summary,
  WalksResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public payload: unknown,
  ) {
    super(`service error ${status}`);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await response.json().catch(() => null);
  if (!response.ok) {
    throw new ApiError(response.status, body);
  }
  return body as T;
}

export class Client {
  constructor(private base: string) {}

  createSession(input: { fixture?: string; graph?: GraphJson }) {
    return request<{ session_id: string; summary: Summary }>(
      `${this.base}/sessions`,
      { method: "POST", body: JSON.stringify(input) },
    );
  }

  graph(sid: string) {
    return request<Summary>(`${this.base}/sessions/${sid}/graph`);
  }

  orbits(sid: string) {
    return request<{ orbits: { edges: string[]; case: string; halves: string[] }[] }>(
      `${this.base}/sessions/${sid}/orbits`,
    );
  }

  mutate(sid: string, orbit: string, direction: "left" | "right", version: number) {
    return request<MutateResponse>(`${this.base}/sessions/${sid}/mutate`, {
      method: "POST",
      body: JSON.stringify({ orbit, direction, version }),
    });
  }

  undo(sid: string) {
    return request<Summary>(`${this.base}/sessions/${sid}/undo`, {
      method: "POST",
      body: "{}",
    });
  }

  reduced(sid: string) {
    return request<ReducedResponse>(`${this.base}/sessions/${sid}/reduced`);
  }

  walks(sid: string, maxLen?: number, complete = false) {
    const params = new URLSearchParams();
    if (maxLen !== undefined) params.set("max_len", String(maxLen));
    if (complete) params.set("complete", "true");
    const suffix = params.toString() ? `?${params}` : "";
    return request<WalksResponse>(`${this.base}/sessions/${sid}/walks${suffix}`);
  }

  tiltDiscrete(sid: string) {
    return request<{ tilting_discrete: boolean; reason: string }>(
      `${this.base}/sessions/${sid}/tilt-discrete`,
    );
  }
}
