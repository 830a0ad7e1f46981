"""Batch simulation harness: single games, byte-exact replay, campaigns.

A game alternates a named adversary (first player) against the drawing
strategy (second player) from an empty board up to a ply horizon.  The
harness, not the strategy, adjudicates finished games: if the second
player ever has an open copy at his turn he claims the completing edge and
the game is over, and a first-player win is flagged as a refutation
candidate because the drawing argument says it must never happen.

Transcripts carry per-move annotations derived from an incremental copy
tracker; `replay` re-derives everything from the raw moves and must
reproduce the original document byte for byte.
"""

from __future__ import annotations

import dataclasses
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Optional

from .engine import FP, SP, CopyTracker, claim, new_game
from .monitors import run_monitors
from .strategies import (
    BuilderStuck,
    FpAdversary,
    UniqueThreatViolation,
    adversary_by_name,
    new_sp_state,
    sp_move,
)
from .target import Target, canonical_target
from .transcript import (
    ABORTED,
    FP_WIN,
    ONGOING,
    SP_WIN,
    MoveRecord,
    Transcript,
    fp_annotation,
    sp_annotation,
)

DEFAULT_HORIZON = 200


def _fp_record(tracker: CopyTracker, index: int, edge) -> MoveRecord:
    threats = tracker.open_threats(FP)
    return MoveRecord(index, FP, edge, fp_annotation(
        kinds=(t.kind for t in threats),
        completions={t.completing_edge for t in threats},
        copies=tracker.reduced_copy_count(FP),
        won=tracker.winner == FP,
    ))


def run_game(adversary: str | FpAdversary, horizon_plies: int = DEFAULT_HORIZON,
             seed: int = 0, target: Optional[Target] = None,
             with_monitors: bool = True) -> Transcript:
    """Play one game to win, abort, or horizon and return its transcript."""
    tgt = target or canonical_target()
    if horizon_plies < 2 * tgt.edge_count:
        raise ValueError("horizon must allow both players a full build")
    adv = adversary_by_name(adversary) if isinstance(adversary, str) else adversary
    policy = adv.make()
    rng = random.Random(seed)
    state = new_game(tgt)
    sp_state = new_sp_state(tgt)
    tracker = CopyTracker(tgt, track_reduced_for=frozenset({FP}))
    build_moves = tgt.edge_count - 2
    moves: list[MoveRecord] = []
    outcome = ONGOING
    violation: Optional[dict[str, Any]] = None

    while len(state.history) < horizon_plies:
        index = len(state.history)
        if state.to_move == FP:
            edge = policy(state, rng)
            state = claim(state, FP, edge)
            tracker.feed(FP, edge)
            moves.append(_fp_record(tracker, index, edge))
            if tracker.winner == FP:
                outcome = FP_WIN
                break
        else:
            own_threats = tracker.open_threats(SP)
            if own_threats:
                edge = min(t.completing_edge for t in own_threats)
                state = claim(state, SP, edge)
                tracker.feed(SP, edge)
                moves.append(MoveRecord(index, SP, edge, sp_annotation("win")))
                outcome = SP_WIN
                break
            fp_threats = tracker.open_threats(FP)
            try:
                edge, sp_state = sp_move(state, sp_state, fp_threats=fp_threats)
            except (UniqueThreatViolation, BuilderStuck) as exc:
                violation = {"kind": type(exc).__name__, "detail": str(exc),
                             "index": index}
                outcome = ABORTED
                break
            state = claim(state, SP, edge)
            tracker.feed(SP, edge)
            sp_count = len(state.moves_of(SP))
            if sp_count <= build_moves:
                role = "build"
            elif any(edge == t.completing_edge for t in fp_threats):
                role = "block"
            else:
                role = "attack"
            moves.append(MoveRecord(index, SP, edge, sp_annotation(role)))

    t = Transcript(
        adversary=adv.name,
        seed=seed,
        horizon=horizon_plies,
        k=tgt.k,
        z=tgt.z,
        target_edges=tgt.graph.sorted_edges,
        moves=tuple(moves),
        outcome=outcome,
        violation=violation,
    )
    if with_monitors:
        t = dataclasses.replace(t, monitors=run_monitors(t))
    return t


def replay(t: Transcript, target: Optional[Target] = None) -> Transcript:
    """Re-derive every annotation, the outcome, and the monitor verdicts.

    Only the raw move list, the header, and a recorded abort are taken from
    the input; a faithful transcript round-trips byte for byte.
    """
    tgt = target or canonical_target()
    if tuple(tgt.graph.sorted_edges) != t.target_edges or tgt.z != t.z:
        from .hypergraph import Hypergraph
        from .target import target_from_graph
        tgt = target_from_graph(Hypergraph.from_edges(t.k, t.target_edges), t.z)
    tracker = CopyTracker(tgt, track_reduced_for=frozenset({FP}))
    build_moves = tgt.edge_count - 2
    moves: list[MoveRecord] = []
    outcome = ONGOING
    sp_count = 0
    for rec in t.moves:
        if rec.player == FP:
            tracker.feed(FP, rec.edge)
            moves.append(_fp_record(tracker, rec.index, rec.edge))
            if tracker.winner == FP:
                outcome = FP_WIN
        else:
            fp_threats = tracker.open_threats(FP)
            sp_threats = tracker.open_threats(SP)
            tracker.feed(SP, rec.edge)
            sp_count += 1
            if tracker.winner == SP and any(
                    rec.edge == x.completing_edge for x in sp_threats):
                role = "win"
                outcome = SP_WIN
            elif sp_count <= build_moves:
                role = "build"
            elif any(rec.edge == x.completing_edge for x in fp_threats):
                role = "block"
            else:
                role = "attack"
            moves.append(MoveRecord(rec.index, SP, rec.edge, sp_annotation(role)))
    if outcome == ONGOING and t.violation is not None:
        outcome = ABORTED
    out = Transcript(
        adversary=t.adversary,
        seed=t.seed,
        horizon=t.horizon,
        k=t.k,
        z=t.z,
        target_edges=t.target_edges,
        moves=tuple(moves),
        outcome=outcome,
        violation=t.violation,
    )
    return dataclasses.replace(out, monitors=run_monitors(out))


DEFAULT_MIX: tuple[tuple[str, float], ...] = (
    ("random-local", 0.30),
    ("greedy-threat", 0.15),
    ("pacifist", 0.15),
    ("blocker", 0.14),
    ("standard-chain", 0.13),
    ("special-once", 0.13),
)


@dataclasses.dataclass(frozen=True)
class GameSummary:
    adversary: str
    seed: int
    outcome: str
    plies: int
    monitor_failures: tuple[str, ...]
    violation: Optional[dict[str, Any]]


@dataclasses.dataclass(frozen=True)
class CampaignReport:
    games: int
    horizon: int
    outcomes: dict[str, int]
    by_adversary: dict[str, dict[str, int]]
    fp_wins: tuple[GameSummary, ...]
    violations: tuple[GameSummary, ...]
    monitor_failures: tuple[GameSummary, ...]

    @property
    def ok(self) -> bool:
        return not self.fp_wins and not self.violations and not self.monitor_failures

    def to_obj(self) -> dict[str, Any]:
        return {
            "games": self.games,
            "horizon": self.horizon,
            "outcomes": dict(sorted(self.outcomes.items())),
            "by_adversary": {k: dict(sorted(v.items()))
                             for k, v in sorted(self.by_adversary.items())},
            "fp_wins": [dataclasses.asdict(s) for s in self.fp_wins],
            "violations": [dataclasses.asdict(s) for s in self.violations],
            "monitor_failures": [dataclasses.asdict(s) for s in self.monitor_failures],
            "ok": self.ok,
        }


def _summarize(t: Transcript) -> GameSummary:
    failures = tuple(m.name for m in t.monitors if m.applicable and not m.holds)
    return GameSummary(t.adversary, t.seed, t.outcome, t.plies, failures, t.violation)


def _play_one(task: tuple[str, int, int]) -> GameSummary:
    name, seed, horizon = task
    return _summarize(run_game(name, horizon, seed))


def campaign_tasks(games: int, horizon: int, base_seed: int = 0,
                   mix: tuple[tuple[str, float], ...] = DEFAULT_MIX) -> list[tuple[str, int, int]]:
    """Deterministic (adversary, seed, horizon) task list for a campaign."""
    counts = {name: int(games * w) for name, w in mix}
    leftover = games - sum(counts.values())
    order = [name for name, _ in mix]
    for i in range(leftover):
        counts[order[i % len(order)]] += 1
    tasks = []
    seed = base_seed
    for name, _ in mix:
        for _ in range(counts[name]):
            tasks.append((name, seed, horizon))
            seed += 1
    return tasks


def campaign(games: int, horizon: int = DEFAULT_HORIZON, base_seed: int = 0,
             workers: int = 1,
             mix: tuple[tuple[str, float], ...] = DEFAULT_MIX) -> CampaignReport:
    """Run a seeded batch across the adversary suite and aggregate verdicts.

    Results are merged in task order, so the report is identical for any
    worker count.
    """
    tasks = campaign_tasks(games, horizon, base_seed, mix)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            summaries = list(pool.map(_play_one, tasks, chunksize=64))
    else:
        summaries = [_play_one(t) for t in tasks]
    outcomes: Counter[str] = Counter()
    by_adv: dict[str, Counter[str]] = {}
    fp_wins, violations, monitor_failures = [], [], []
    for s in summaries:
        outcomes[s.outcome] += 1
        by_adv.setdefault(s.adversary, Counter())[s.outcome] += 1
        if s.outcome == FP_WIN:
            fp_wins.append(s)
        if s.violation is not None:
            violations.append(s)
        if s.monitor_failures:
            monitor_failures.append(s)
    return CampaignReport(
        games=len(summaries),
        horizon=horizon,
        outcomes=dict(outcomes),
        by_adversary={k: dict(v) for k, v in by_adv.items()},
        fp_wins=tuple(fp_wins),
        violations=tuple(violations),
        monitor_failures=tuple(monitor_failures),
    )
