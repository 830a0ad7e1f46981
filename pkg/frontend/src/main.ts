// Browser entry point: selection handling plus server-driven rendering.
// Input is locked while a move is in flight, and the board view is rebuilt
// exclusively from GET /sessions/{id} payloads.

import { ApiError, makeClient } from "./api.js";
import {
  canSubmit,
  composeMove,
  freshSelection,
  selectionProblem,
  toggleVertex,
} from "./compose.js";
import { renderBoard, renderCreate, renderError, verticesInPlay } from "./render.js";
import { BoardPayload } from "./types.js";

const client = makeClient();

interface UiState {
  sessionId: string | null;
  board: BoardPayload | null;
  selection: number[];
  busy: boolean;
  log: string;
}

const ui: UiState = { sessionId: null, board: null, selection: [], busy: false, log: "" };

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing #${id}`);
  }
  return node;
}

function renderControls(): string {
  if (ui.board === null) {
    return `<button id="new-session">new game</button>`;
  }
  const ring = verticesInPlay(ui.board)
    .map((v) => {
      const on = ui.selection.includes(v) ? " on" : "";
      return `<button class="vertex${on}" data-v="${v}">${v}</button>`;
    })
    .join(" ");
  const problem = selectionProblem(ui.selection);
  const disabled = ui.busy || !canSubmit(ui.selection) ? " disabled" : "";
  const freshDisabled = ui.busy ? " disabled" : "";
  return [
    `<div class="ring">${ring || "<em>no vertices in play yet</em>"}</div>`,
    `<div class="picked">picked: [${[...ui.selection].join(", ")}]` +
      (problem === null ? "" : ` <span class="hint">${problem}</span>`) + `</div>`,
    `<button id="fresh-five"${freshDisabled}>fresh &times;5 ` +
      `(${ui.board.freshBase}&ndash;${ui.board.freshBase + 4})</button>`,
    `<button id="submit-move"${disabled}>claim</button>`,
    `<button id="new-session"${freshDisabled}>new game</button>`,
  ].join("\n");
}

function redraw(): void {
  el("board").innerHTML = ui.board === null ? "" : renderBoard(ui.board);
  el("controls").innerHTML = renderControls();
  el("log").innerHTML = ui.log;
}

async function refreshBoard(): Promise<void> {
  if (ui.sessionId !== null) {
    ui.board = await client.getState(ui.sessionId);
  }
}

async function startSession(): Promise<void> {
  const created = await client.createSession();
  ui.sessionId = created.sessionId;
  ui.selection = [];
  ui.log = renderCreate(created);
  await refreshBoard();
}

async function submit(): Promise<void> {
  if (ui.sessionId === null || !canSubmit(ui.selection)) {
    return;
  }
  ui.busy = true;
  redraw();
  try {
    const reply = await client.submitMove(
      ui.sessionId, composeMove(ui.selection).vertices);
    ui.log = ""; // the reply is reflected via the authoritative board fetch
    ui.selection = [];
    await refreshBoard();
    void reply;
  } catch (e) {
    ui.log = renderError({ error: e instanceof ApiError ? e.message : String(e) });
  } finally {
    ui.busy = false;
    redraw();
  }
}

function onClick(event: Event): void {
  const t = event.target;
  if (!(t instanceof HTMLElement) || ui.busy) {
    return;
  }
  if (t.id === "new-session") {
    void startSession().then(redraw);
  } else if (t.id === "fresh-five" && ui.board !== null) {
    ui.selection = freshSelection(ui.board.freshBase);
    redraw();
  } else if (t.id === "submit-move") {
    void submit();
  } else if (t.dataset.v !== undefined) {
    ui.selection = toggleVertex(ui.selection, Number(t.dataset.v));
    redraw();
  }
}

export function boot(): void {
  document.addEventListener("click", onClick);
  redraw();
}

if (typeof document !== "undefined") {
  boot();
}
