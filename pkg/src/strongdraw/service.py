"""Interactive play service: a human first player against the drawing strategy.

Sessions are in-memory and single-writer; every reply is a pure function of
the session's move history, so replaying the same requests against a fresh
server reproduces identical reply bodies.  Payload field names are fixed by
docs/wire-schema.md (version 1).

If the drawing argument is right, the human can never win.  A first-player
win is therefore reported with `refutationCandidate: true` and the session
transcript is dumped for inspection when STRONGDRAW_SESSION_DIR is set.
"""

from __future__ import annotations

import os
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .engine import FP, SP, CopyTracker, EdgeTaken, GameState, Threat, claim, new_game
from .hypergraph import DuplicateVertex, WrongArity, make_edge
from .strategies import SpState, new_sp_state, sp_move
from .target import Target, canonical_target
from .transcript import MoveRecord, Transcript, fp_annotation, sp_annotation

SESSION_DIR_ENV = "STRONGDRAW_SESSION_DIR"
MAX_SESSIONS = 512

ACTIVE = "Active"
FP_WIN = "FpWin"
SP_WIN = "SpWin"
ABORTED = "Aborted"

SCHEMA_VERSION = 1


class MoveBody(BaseModel):
    vertices: list[int]


@dataclass
class Session:
    id: str
    target: Target
    state: GameState
    sp_state: SpState
    tracker: CopyTracker
    status: str = ACTIVE
    refutation_candidate: bool = False
    moves: list[MoveRecord] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def record(self, player: str, edge, ann: dict[str, Any]) -> None:
        self.moves.append(MoveRecord(len(self.moves), player, tuple(edge), ann))


def _threat_payload(threats: list[Threat]) -> list[dict[str, Any]]:
    return [{"kind": t.kind, "completingEdge": list(t.completing_edge)}
            for t in threats]


def _target_payload(tgt: Target) -> dict[str, Any]:
    return {"k": tgt.k, "edgeCount": tgt.edge_count,
            "vertexCount": len(tgt.graph.vertices), "z": tgt.z}


def _board_payload(s: Session) -> dict[str, Any]:
    sp_copy = None
    if s.sp_state.sp_copy is not None:
        cm = s.sp_state.sp_copy
        sp_copy = {
            "vertices": sorted(cm.image),
            "edges": sorted([sorted(cm.apply_edge(e))
                             for e in s.target.reduced.sorted_edges]),
        }
    return {
        "schemaVersion": SCHEMA_VERSION,
        "sessionId": s.id,
        "status": s.status,
        "stage": s.sp_state.stage,
        "refutationCandidate": s.refutation_candidate,
        "target": _target_payload(s.target),
        "fpEdges": sorted([list(e) for e in s.state.fp_edges]),
        "spEdges": sorted([list(e) for e in s.state.sp_edges]),
        "history": [{"index": m.index, "player": m.player, "edge": list(m.edge)}
                    for m in s.moves],
        "fpThreats": _threat_payload(s.tracker.open_threats(FP)),
        "spThreats": _threat_payload(s.tracker.open_threats(SP)),
        "spCopy": sp_copy,
        "freshBase": s.state.next_fresh,
    }


def _dump_transcript(s: Session) -> None:
    directory = os.environ.get(SESSION_DIR_ENV)
    if not directory:
        return
    from dataclasses import replace

    from .monitors import run_monitors

    t = Transcript(
        adversary="human", seed=0, horizon=len(s.moves),
        k=s.target.k, z=s.target.z,
        target_edges=s.target.graph.sorted_edges,
        moves=tuple(s.moves), outcome=s.status, violation=None,
    )
    t = replace(t, monitors=run_monitors(t))
    path = Path(directory) / f"session-{s.id}.jsonl"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(t.to_jsonl())


def create_app() -> FastAPI:
    app = FastAPI(title="strongdraw play service")
    sessions: dict[str, Session] = {}
    store_lock = threading.Lock()

    def _error(code: int, message: str) -> JSONResponse:
        return JSONResponse(status_code=code, content={"error": message})

    @app.post("/sessions")
    def create_session():
        with store_lock:
            if len(sessions) >= MAX_SESSIONS:
                return _error(503, "session capacity exceeded")
            tgt = canonical_target()
            s = Session(
                id=uuid.uuid4().hex,
                target=tgt,
                state=new_game(tgt),
                sp_state=new_sp_state(tgt),
                tracker=CopyTracker(tgt, track_reduced_for=frozenset({FP})),
            )
            sessions[s.id] = s
        return {
            "schemaVersion": SCHEMA_VERSION,
            "sessionId": s.id,
            "status": s.status,
            "stage": s.sp_state.stage,
            "target": _target_payload(tgt),
            "freshBase": 0,
        }

    @app.post("/sessions/{sid}/moves")
    def submit_move(sid: str, body: MoveBody):
        s = sessions.get(sid)
        if s is None:
            return _error(404, "unknown session")
        ids = body.vertices
        if len(ids) != 5 or len(set(ids)) != 5 or any(
                not isinstance(v, int) or v < 0 for v in ids):
            return _error(400, "a move is 5 distinct non-negative vertex ids")
        with s.lock:
            if s.status != ACTIVE:
                return _error(409, f"session is not active (status {s.status})")
            try:
                edge = make_edge(ids, s.target.k)
                s.state = claim(s.state, FP, edge)
            except (EdgeTaken,) as exc:
                return _error(409, str(exc))
            except (WrongArity, DuplicateVertex) as exc:
                return _error(400, str(exc))
            s.tracker.feed(FP, edge)
            fp_threats = s.tracker.open_threats(FP)
            fp_ann = fp_annotation(
                kinds=(t.kind for t in fp_threats),
                completions={t.completing_edge for t in fp_threats},
                copies=s.tracker.reduced_copy_count(FP),
                won=s.tracker.winner == FP,
            )
            s.record(FP, edge, fp_ann)
            reply: dict[str, Any] = {
                "schemaVersion": SCHEMA_VERSION,
                "fpMove": {"edge": list(edge), "kinds": fp_ann["kinds"],
                           "completions": fp_ann["completions"]},
                "spMove": None,
            }
            if s.tracker.winner == FP:
                s.status = FP_WIN
                s.refutation_candidate = True
                _dump_transcript(s)
            else:
                own = s.tracker.open_threats(SP)
                if own:
                    sp_edge = min(t.completing_edge for t in own)
                    role = "win"
                else:
                    sp_edge, s.sp_state = sp_move(s.state, s.sp_state,
                                                  fp_threats=fp_threats)
                    if len(s.state.moves_of(SP)) + 1 <= s.target.edge_count - 2:
                        role = "build"
                    elif any(sp_edge == t.completing_edge for t in fp_threats):
                        role = "block"
                    else:
                        role = "attack"
                s.state = claim(s.state, SP, sp_edge)
                s.tracker.feed(SP, sp_edge)
                s.record(SP, sp_edge, sp_annotation(role))
                if role == "win":
                    s.status = SP_WIN
                    _dump_transcript(s)
                reply["spMove"] = {"edge": list(sp_edge), "role": role}
            reply.update({
                "status": s.status,
                "stage": s.sp_state.stage,
                "refutationCandidate": s.refutation_candidate,
                "fpThreats": _threat_payload(s.tracker.open_threats(FP)),
                "spThreats": _threat_payload(s.tracker.open_threats(SP)),
                "freshBase": s.state.next_fresh,
            })
            return reply

    @app.get("/sessions/{sid}")
    def get_state(sid: str):
        s = sessions.get(sid)
        if s is None:
            return _error(404, "unknown session")
        with s.lock:
            return _board_payload(s)

    app.state.sessions = sessions
    return app


app = create_app()
