// Pure payload -> HTML renderers. Every fact shown (threats, status, the
// engine's finished copy, win flags) is read straight from a service field;
// the client never re-derives game logic. Claimed 5-sets are shown as chips
// rather than drawn spatially: edges over a growing vertex pool have no
// honest planar picture.

import {
  BoardPayload,
  CreateReply,
  Edge,
  MoveReply,
  SCHEMA_VERSION,
  ServiceError,
  ThreatBadge,
} from "./types.js";

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function edgeKey(edge: Edge): string {
  return edge.join(" ");
}

function chip(edge: Edge, cls: string, title = ""): string {
  const t = title ? ` title="${esc(title)}"` : "";
  return `<span class="chip ${cls}" data-edge="${edgeKey(edge)}"${t}>` +
    `{${edge.join(", ")}}</span>`;
}

function badge(threat: ThreatBadge): string {
  return `<span class="badge ${threat.kind}">${threat.kind} &rarr; ` +
    `${chip(threat.completingEdge, "free")}</span>`;
}

function badgeStrip(label: string, threats: ThreatBadge[]): string {
  if (threats.length === 0) {
    return `<div class="threats empty">${esc(label)}: none</div>`;
  }
  return `<div class="threats">${esc(label)}: ` +
    threats.map(badge).join(" ") + `</div>`;
}

export function schemaBanner(version: number): string | null {
  if (version === SCHEMA_VERSION) {
    return null;
  }
  return `<div class="banner error">schema mismatch: server speaks ` +
    `version ${version}, client expects ${SCHEMA_VERSION}</div>`;
}

function statusBanner(status: string, refutation: boolean): string {
  if (status === "FpWin") {
    const note = refutation
      ? " &mdash; flagged as a refutation candidate; this should be impossible"
      : "";
    return `<div class="banner fpwin">you completed a copy${note}</div>`;
  }
  if (status === "SpWin") {
    return `<div class="banner spwin">the engine completed a copy ` +
      `(an unanswered threat)</div>`;
  }
  return "";
}

export function verticesInPlay(board: BoardPayload): number[] {
  const seen = new Set<number>();
  for (const e of board.fpEdges) e.forEach((v) => seen.add(v));
  for (const e of board.spEdges) e.forEach((v) => seen.add(v));
  return [...seen].sort((a, b) => a - b);
}

export function renderBoard(board: BoardPayload): string {
  const banner = schemaBanner(board.schemaVersion);
  if (banner !== null) {
    return banner;
  }
  const copyKeys = new Set(
    (board.spCopy?.edges ?? []).map((e) => edgeKey(e)),
  );
  const last = board.history[board.history.length - 1] ?? null;
  const fpChips = board.fpEdges
    .map((e) => chip(e, lastClass("fp", e, last)))
    .join(" ");
  const spChips = board.spEdges
    .map((e) => chip(
      e,
      lastClass(copyKeys.has(edgeKey(e)) ? "sp copy-member" : "sp", e, last),
      copyKeys.has(edgeKey(e)) ? "part of the engine's finished copy" : "",
    ))
    .join(" ");
  const copyNote = board.spCopy === null
    ? ""
    : `<div class="copy-note">engine copy on vertices ` +
      `[${board.spCopy.vertices.join(", ")}]</div>`;
  return [
    `<div class="board" data-session="${esc(board.sessionId)}">`,
    statusBanner(board.status, board.refutationCandidate),
    `<div class="meta">status ${esc(board.status)} &middot; stage ` +
      `<span class="stage ${esc(board.stage)}">${esc(board.stage)}</span>` +
      ` &middot; move ${board.history.length}</div>`,
    `<div class="side yours"><h3>your edges (${board.fpEdges.length})</h3>` +
      `${fpChips || "<em>none</em>"}</div>`,
    badgeStrip("your threats", board.fpThreats),
    `<div class="side theirs"><h3>engine edges (${board.spEdges.length})</h3>` +
      `${spChips || "<em>none</em>"}</div>`,
    copyNote,
    badgeStrip("engine threats", board.spThreats),
    `</div>`,
  ].filter((s) => s !== "").join("\n");
}

function lastClass(base: string, edge: Edge, last: { edge: Edge } | null): string {
  if (last !== null && edgeKey(last.edge) === edgeKey(edge)) {
    return `${base} last-move`;
  }
  return base;
}

export function renderReply(reply: MoveReply): string {
  const banner = schemaBanner(reply.schemaVersion);
  if (banner !== null) {
    return banner;
  }
  const fpKinds = reply.fpMove.kinds.length > 0
    ? reply.fpMove.kinds
      .map((k) => `<span class="badge ${k}">${k}</span>`)
      .join(" ")
    : "no threat";
  const completions = reply.fpMove.completions
    .map((e) => chip(e, "free"))
    .join(" ");
  const sp = reply.spMove === null
    ? `<div class="sp-reply none">no reply &mdash; the game is over</div>`
    : `<div class="sp-reply ${reply.spMove.role}">engine plays ` +
      `${chip(reply.spMove.edge, "sp")} <span class="role">` +
      `${reply.spMove.role}</span></div>`;
  return [
    `<div class="reply">`,
    statusBanner(reply.status, reply.refutationCandidate),
    `<div class="fp-echo">you played ${chip(reply.fpMove.edge, "fp")}: ` +
      `${fpKinds}${completions ? " completing " + completions : ""}</div>`,
    sp,
    badgeStrip("your threats", reply.fpThreats),
    badgeStrip("engine threats", reply.spThreats),
    `<div class="meta">stage <span class="stage ${esc(reply.stage)}">` +
      `${esc(reply.stage)}</span> &middot; fresh vertices start at ` +
      `${reply.freshBase}</div>`,
    `</div>`,
  ].filter((s) => s !== "").join("\n");
}

export function renderCreate(reply: CreateReply): string {
  const banner = schemaBanner(reply.schemaVersion);
  if (banner !== null) {
    return banner;
  }
  const t = reply.target;
  return `<div class="created">session ${esc(reply.sessionId)}: first to ` +
    `build all ${t.edgeCount} edges of the ${t.k}-uniform target on ` +
    `${t.vertexCount} vertices wins. You move first.</div>`;
}

export function renderError(err: ServiceError): string {
  return `<div class="banner error">${esc(err.error)}</div>`;
}
