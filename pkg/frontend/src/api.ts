// Thin typed client for the play service. No retries, no caching: the board
// is re-rendered only from what the server actually said.

import { BoardPayload, CreateReply, MoveReply } from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function parse<T>(response: Response): Promise<T> {
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, body.error ?? response.statusText);
  }
  return body as T;
}

export function makeClient(base = "") {
  return {
    async createSession(): Promise<CreateReply> {
      return parse(await fetch(`${base}/sessions`, { method: "POST" }));
    },
    async submitMove(sessionId: string, vertices: number[]): Promise<MoveReply> {
      return parse(await fetch(`${base}/sessions/${sessionId}/moves`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ vertices }),
      }));
    },
    async getState(sessionId: string): Promise<BoardPayload> {
      return parse(await fetch(`${base}/sessions/${sessionId}`));
    },
  };
}

export type Client = ReturnType<typeof makeClient>;
