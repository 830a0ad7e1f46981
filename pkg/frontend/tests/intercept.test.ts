// Mutated-payload intercepts: whatever the server asserts, the client shows,
// even when the mutation makes no game sense. Any disagreement would mean
// the client is computing rules on its own.

import { describe, expect, it } from "vitest";

import { renderBoard, renderReply, schemaBanner } from "../src/render.js";
import { BoardPayload, MoveReply } from "../src/types.js";
import { loadFixture } from "./fixtures.js";

function clone<T>(x: T): T {
  return JSON.parse(JSON.stringify(x)) as T;
}

describe("server-authoritative rendering", () => {
  it("flips a threat badge kind when the payload says so", () => {
    const board = clone(loadFixture<BoardPayload>("state-attack"));
    expect(renderBoard(board)).toContain('class="badge standard"');
    for (const t of board.spThreats) {
      t.kind = "special";
    }
    const html = renderBoard(board);
    expect(html).toContain('class="badge special"');
    expect(html).not.toContain('class="badge standard"');
  });

  it("renders a fabricated threat on an already-claimed edge", () => {
    const board = clone(loadFixture<BoardPayload>("state-attack"));
    const claimed = board.fpEdges[0]!;
    board.fpThreats = [{ kind: "standard", completingEdge: claimed }];
    // a real threat can never complete onto a claimed edge; the client
    // renders it anyway because the server said it
    expect(renderBoard(board)).toContain(
      `data-edge="${claimed.join(" ")}"`,
    );
    expect(renderBoard(board)).toContain("your threats");
  });

  it("announces a win purely from the status field", () => {
    const board = clone(loadFixture<BoardPayload>("state-attack"));
    board.status = "FpWin";
    board.refutationCandidate = true;
    const html = renderBoard(board);
    expect(html).toContain("you completed a copy");
    expect(html).toContain("refutation candidate");
  });

  it("drops the copy grouping when the outline is withheld", () => {
    const board = clone(loadFixture<BoardPayload>("state-attack"));
    board.spCopy = null;
    const html = renderBoard(board);
    expect(html).not.toContain("copy-member");
    expect(html).not.toContain("engine copy on vertices");
  });

  it("shows the stage the server names, not one it derives", () => {
    const board = clone(loadFixture<BoardPayload>("state-empty"));
    board.stage = "attack";
    expect(renderBoard(board)).toContain('class="stage attack"');
  });

  it("reports threat kinds on replies verbatim", () => {
    const reply = clone(loadFixture<MoveReply>("reply-build-first"));
    expect(renderReply(reply)).toContain("no threat");
    reply.fpMove.kinds = ["special"];
    expect(renderReply(reply)).toContain('class="badge special"');
  });

  it("refuses payloads from a different schema version", () => {
    const board = clone(loadFixture<BoardPayload>("state-empty"));
    board.schemaVersion = 99;
    const html = renderBoard(board);
    expect(html).toContain("schema mismatch");
    expect(html).not.toContain("your edges");
    expect(schemaBanner(1)).toBeNull();
  });
});
