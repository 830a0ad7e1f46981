"""Versioned transcript records for simulated and interactive games.

A transcript is a JSON-lines document: one header line, one line per move
with its annotations, and one footer line with the outcome and monitor
verdicts.  Serialization is canonical (sorted keys, fixed separators), so
re-deriving a transcript from its move list must reproduce the original
bytes exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Optional

from .hypergraph import Edge

FORMAT = "strongdraw-transcript"
VERSION = 1

FP_WIN = "FpWin"
SP_WIN = "SpWin"
ONGOING = "OngoingAtHorizon"
ABORTED = "Aborted"


@dataclass(frozen=True)
class MoveRecord:
    index: int
    player: str
    edge: Edge
    ann: dict[str, Any]

    def to_obj(self) -> dict[str, Any]:
        return {"index": self.index, "player": self.player,
                "edge": list(self.edge), "ann": self.ann}

    @classmethod
    def from_obj(cls, obj: dict[str, Any]) -> "MoveRecord":
        return cls(obj["index"], obj["player"], tuple(obj["edge"]), obj["ann"])


@dataclass(frozen=True)
class MonitorVerdict:
    name: str
    applicable: bool
    holds: bool
    first_violation_index: Optional[int] = None

    def to_obj(self) -> dict[str, Any]:
        return {"name": self.name, "applicable": self.applicable,
                "holds": self.holds,
                "first_violation_index": self.first_violation_index}

    @classmethod
    def from_obj(cls, obj: dict[str, Any]) -> "MonitorVerdict":
        return cls(obj["name"], obj["applicable"], obj["holds"],
                   obj.get("first_violation_index"))


@dataclass(frozen=True)
class Transcript:
    adversary: str
    seed: int
    horizon: int
    k: int
    z: int
    target_edges: tuple[Edge, ...]
    moves: tuple[MoveRecord, ...]
    outcome: str
    violation: Optional[dict[str, Any]] = None
    monitors: tuple[MonitorVerdict, ...] = ()

    @property
    def plies(self) -> int:
        return len(self.moves)

    def fp_moves(self) -> list[MoveRecord]:
        return [m for m in self.moves if m.player == "FP"]

    def to_jsonl(self) -> str:
        header = {
            "format": FORMAT,
            "version": VERSION,
            "k": self.k,
            "z": self.z,
            "target_edges": [list(e) for e in self.target_edges],
            "adversary": self.adversary,
            "seed": self.seed,
            "horizon": self.horizon,
        }
        footer = {
            "outcome": self.outcome,
            "plies": self.plies,
            "violation": self.violation,
            "monitors": [m.to_obj() for m in self.monitors],
        }
        lines = [_dump(header)]
        lines.extend(_dump(m.to_obj()) for m in self.moves)
        lines.append(_dump(footer))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_jsonl(cls, text: str) -> "Transcript":
        lines = [json.loads(line) for line in text.splitlines() if line.strip()]
        if not lines or lines[0].get("format") != FORMAT:
            raise ValueError("not a transcript document")
        if lines[0].get("version") != VERSION:
            raise ValueError(f"unsupported transcript version {lines[0].get('version')}")
        header, footer = lines[0], lines[-1]
        moves = tuple(MoveRecord.from_obj(o) for o in lines[1:-1])
        return cls(
            adversary=header["adversary"],
            seed=header["seed"],
            horizon=header["horizon"],
            k=header["k"],
            z=header["z"],
            target_edges=tuple(tuple(e) for e in header["target_edges"]),
            moves=moves,
            outcome=footer["outcome"],
            violation=footer["violation"],
            monitors=tuple(MonitorVerdict.from_obj(o) for o in footer["monitors"]),
        )


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def fp_annotation(kinds: Iterable[str], completions: Iterable[Edge],
                  copies: int, won: bool = False) -> dict[str, Any]:
    ann: dict[str, Any] = {
        "kinds": sorted(set(kinds)),
        "completions": [list(c) for c in sorted(completions)],
        "copies": copies,
    }
    if won:
        ann["won"] = True
    return ann


def sp_annotation(role: str) -> dict[str, Any]:
    return {"role": role}
