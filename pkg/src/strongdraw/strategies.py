"""The second player's drawing strategy and a suite of first-player adversaries.

SP's strategy has three phases.  First he builds, on nine fresh vertices
disjoint from everything FP owns, a copy of the target with its degree-2
vertex deleted; the build takes exactly seven moves, one per edge, no
matter what FP does.  From then on, before every move he scans FP's graph
for threats: if FP has one, its free completing edge is unique and SP
claims it; otherwise SP starts making threats of his own, each hung on a
brand-new vertex, forcing FP to answer forever.

The strategy never plays for a win.  If FP ignores one of SP's threats the
harness adjudicates the finished game; the strategy itself would happily
keep threatening.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Callable, Optional

from .engine import (
    FP,
    SP,
    GameState,
    Threat,
    claim,
    fresh_edge,
    fresh_vertices,
    hypothetical_threats_through,
    threats_through,
    _with_edge,
)
from .hypergraph import Edge, Hypergraph
from .matching import enumerate_embeddings, HostIndex, VertexMap
from .target import Target, canonical_target


class BuilderStuck(Exception):
    """The builder needed an edge that was already claimed (strategy bug)."""


class UniqueThreatViolation(Exception):
    """FP presented two distinct free completing edges at once.

    The drawing argument guarantees this cannot happen against a
    strategy-faithful SP, so the simulation must abort loudly rather than
    pick one to block.
    """

    def __init__(self, completions: list[Edge], move_index: int):
        super().__init__(
            f"multiple free completing edges {completions} at move {move_index}")
        self.completions = completions
        self.move_index = move_index


# Builder label-edges, as 1-based indices of the nine construction labels.
_TRIGGERS_6TH = ((1, 2, 3, 4, 9), (1, 4, 6, 8, 9), (1, 3, 5, 8, 9))
_DETOUR_MOVE6 = (1, 6, 7, 8, 9)
_DIRECT_MOVE6 = (1, 2, 3, 4, 9)
_DETOUR_TRIGGER7 = (1, 2, 4, 6, 9)
_DETOUR_ALT7 = (1, 2, 5, 7, 9)
_DIRECT_TRIGGER7 = (1, 4, 6, 8, 9)
_DIRECT_ALT7 = (1, 3, 5, 8, 9)

BUILD_MOVES = 7


@dataclass(frozen=True)
class BuilderState:
    """Progress of the seven-move fast build."""

    labels: tuple[int, ...] = ()
    moves_done: int = 0
    mode: Optional[str] = None  # "detour" | "direct", decided at move 6

    @property
    def done(self) -> bool:
        return self.moves_done >= BUILD_MOVES

    def label_edge(self, indices: tuple[int, ...]) -> Edge:
        return tuple(sorted(self.labels[i - 1] for i in indices))


@dataclass(frozen=True)
class BuilderStrategy:
    """Builds `target_graph` in exactly one move per edge against any opponent."""

    target_graph: Hypergraph
    move: Callable[[GameState, BuilderState], tuple[Edge, BuilderState]]


def _assert_fresh(state: GameState, vertices: tuple[int, ...]) -> None:
    wanted = set(vertices)
    for _, e in state.history:
        touched = wanted.intersection(e)
        if touched:
            raise BuilderStuck(
                f"vertices {sorted(touched)} are not isolated at claim time")


def _builder_move(state: GameState, b: BuilderState) -> tuple[Edge, BuilderState]:
    n = b.moves_done + 1
    if n == 1:
        labels = fresh_vertices(state, 5)
        _assert_fresh(state, labels)
        return tuple(labels), BuilderState(labels, 1, None)
    if 2 <= n <= 5:
        (new,) = fresh_vertices(state, 1)
        _assert_fresh(state, (new,))
        labels = b.labels + (new,)
        b2 = BuilderState(labels, n, None)
        edge = b2.label_edge(tuple(range(n, n + 5)))
        return edge, b2
    fp_moves = state.moves_of(FP)
    if n == 6:
        fp6 = fp_moves[5]
        if any(fp6 == b.label_edge(t) for t in _TRIGGERS_6TH):
            edge, mode = b.label_edge(_DETOUR_MOVE6), "detour"
        else:
            edge, mode = b.label_edge(_DIRECT_MOVE6), "direct"
        return edge, BuilderState(b.labels, 6, mode)
    if n == 7:
        fp7 = fp_moves[6]
        if b.mode == "detour":
            if fp7 == b.label_edge(_DETOUR_TRIGGER7):
                edge = b.label_edge(_DETOUR_ALT7)
            else:
                edge = b.label_edge(_DETOUR_TRIGGER7)
        else:
            if fp7 == b.label_edge(_DIRECT_TRIGGER7):
                edge = b.label_edge(_DIRECT_ALT7)
            else:
                edge = b.label_edge(_DIRECT_TRIGGER7)
        return edge, BuilderState(b.labels, 7, b.mode)
    raise BuilderStuck("build already complete")


def seven_move_builder(target: Target | None = None) -> BuilderStrategy:
    """The fast builder for the canonical target with its anchor vertex deleted."""
    tgt = target or canonical_target()
    return BuilderStrategy(tgt.reduced, _builder_move)


STAGE_BUILD = "build"
STAGE_DEFEND = "defend"
STAGE_ATTACK = "attack"


@dataclass(frozen=True)
class SpState:
    """SP's strategy state threaded through his moves."""

    stage: str = STAGE_BUILD
    builder: BuilderState = BuilderState()
    sp_copy: Optional[VertexMap] = None
    pending_pair: Optional[tuple[Edge, Edge, int]] = None


def new_sp_state(target: Target) -> SpState:
    # the build length must equal the reduced edge count, or the phase
    # bookkeeping below is meaningless
    if len(target.reduced.edges) != BUILD_MOVES:
        raise ValueError("builder length does not match the reduced target")
    if target.edge_count - 2 != BUILD_MOVES:
        raise ValueError("build phase must span the first edge-count-minus-2 moves")
    return SpState()


def _finish_build(state: GameState, edge: Edge, b: BuilderState,
                  target: Target) -> SpState:
    built = frozenset(state.sp_edges | {edge})
    maps = enumerate_embeddings(target.reduced_template, HostIndex(built))
    if len(maps) != 1:
        raise BuilderStuck(f"built graph admits {len(maps)} embeddings, expected 1")
    copy = maps[0]
    e1 = state.first_fp_edge
    if e1 is not None and copy.image & set(e1):
        raise BuilderStuck("built copy touches FP's first edge")
    return SpState(STAGE_DEFEND, b, copy, None)


def sp_move(state: GameState, sp: SpState,
            fp_threats: Optional[list[Threat]] = None) -> tuple[Edge, SpState]:
    """SP's next edge, assuming SP has followed this strategy from move 1.

    `fp_threats` may carry the current FP threat list (e.g. from a tracker);
    otherwise it is recomputed anchored on FP's newest edge, which is exact
    because SP has been blocking the unique free completion every turn.
    """
    target = state.target
    if sp.stage == STAGE_BUILD:
        edge, b = _builder_move(state, sp.builder)
        if not state.is_free(edge):
            raise BuilderStuck(f"builder edge {edge} already claimed")
        if b.done:
            return edge, _finish_build(state, edge, b, target)
        return edge, replace(sp, builder=b)

    if fp_threats is None:
        fp_moves = state.moves_of(FP)
        fp_threats = threats_through(state, FP, fp_moves[-1]) if fp_moves else []
    completions = sorted({t.completing_edge for t in fp_threats})
    if len(completions) > 1:
        raise UniqueThreatViolation(completions, len(state.history))
    if completions:
        return completions[0], replace(sp, stage=STAGE_DEFEND, pending_pair=None)

    # no threat to answer: hang a new threat of our own on a fresh vertex
    (z_new,) = fresh_vertices(state, 1)
    copy = sp.sp_copy.as_dict()
    r_new = tuple(sorted([z_new] + [copy[v] for v in target.r if v != target.z]))
    g_new = tuple(sorted([z_new] + [copy[v] for v in target.g if v != target.z]))
    after_r = _with_edge(state, SP, r_new)
    if hypothetical_threats_through(after_r, FP, g_new):
        pick = g_new
    else:
        pick = r_new
    return pick, SpState(STAGE_ATTACK, sp.builder, sp.sp_copy, (r_new, g_new, z_new))


# --- first-player adversaries -------------------------------------------

Policy = Callable[[GameState, random.Random], Edge]


@dataclass(frozen=True)
class FpAdversary:
    """A named first-player policy; `make` yields a fresh per-game policy."""

    name: str
    make: Callable[[], Policy]


def _touched_pool(state: GameState) -> list[int]:
    pool = set()
    for _, e in state.history:
        pool.update(e)
    return sorted(pool)


def _random_local_move(state: GameState, rng: random.Random) -> Edge:
    pool = _touched_pool(state)
    pool.append(state.next_fresh)
    while len(pool) < 5:
        pool.append(pool[-1] + 1)
    for _ in range(64):
        edge = tuple(sorted(rng.sample(pool, 5)))
        if state.is_free(edge):
            return edge
    return fresh_edge(state)


def random_local() -> Policy:
    return _random_local_move


def pacifist() -> Policy:
    def move(state: GameState, rng: random.Random) -> Edge:
        return fresh_edge(state)
    return move


def greedy_threat() -> Policy:
    def move(state: GameState, rng: random.Random) -> Edge:
        mine = state.edges_of(FP)
        tgt = state.target
        if len(mine) >= tgt.edge_count - 2:
            host = HostIndex(mine)
            for pair, template in tgt.pair_templates.items():
                e, f = sorted(pair)
                missing = (set(e) | set(f)) - set(template.vertices)
                if len(missing) > 1:
                    continue
                for m in enumerate_embeddings(template, host):
                    d = m.as_dict()
                    if missing:
                        # both deleted edges share one uncovered vertex; any
                        # fresh vertex can play its role
                        (gap,) = missing
                        d = dict(d)
                        d[gap] = fresh_vertices(state, 1)[0]
                    for need, completion in ((e, f), (f, e)):
                        stake = tuple(sorted(d[v] for v in need))
                        comp = tuple(sorted(d[v] for v in completion))
                        if state.is_free(stake) and state.is_free(comp) and stake != comp:
                            return stake
        return _random_local_move(state, rng)
    return move


class _CopyBuilder:
    """Shared FP-side fast build of the reduced target on private labels."""

    def __init__(self):
        self.labels: tuple[int, ...] = ()

    def build_move(self, state: GameState, n: int) -> Edge:
        # moves 1..5 grow a tight path on fresh vertices; 6 and 7 add the
        # wrap and chord edges, completing the reduced-target shape
        if n == 1:
            self.labels = fresh_vertices(state, 5)
            return tuple(self.labels)
        if 2 <= n <= 5:
            (new,) = fresh_vertices(state, 1)
            self.labels = self.labels + (new,)
            return tuple(sorted(self.labels[n - 1:n + 4]))
        L = self.labels
        if n == 6:
            return tuple(sorted(L[i - 1] for i in (1, 2, 3, 4, 9)))
        if n == 7:
            return tuple(sorted(L[i - 1] for i in (1, 4, 6, 8, 9)))
        raise ValueError("build is over")

    def side_edge(self, state: GameState, side: str) -> Edge:
        (z_new,) = fresh_vertices(state, 1)
        idx = (1, 3, 5, 8) if side == "r" else (2, 4, 7, 9)
        return tuple(sorted([z_new] + [self.labels[i - 1] for i in idx]))


def _block_or_fresh(state: GameState, rng: random.Random) -> Edge:
    sp_moves = state.moves_of(SP)
    if sp_moves:
        open_threats = threats_through(state, SP, sp_moves[-1])
        if open_threats:
            return min(t.completing_edge for t in open_threats)
    return fresh_edge(state)


def blocker() -> Policy:
    return _block_or_fresh


def standard_chain() -> Policy:
    builder = _CopyBuilder()
    chain_len: list[int] = []

    def move(state: GameState, rng: random.Random) -> Edge:
        n = len(state.moves_of(FP)) + 1
        if n <= 7:
            return builder.build_move(state, n)
        if not chain_len:
            chain_len.append(8 + rng.randrange(24))
        if n - 7 <= chain_len[0]:
            side = "r" if rng.random() < 0.5 else "g"
            return builder.side_edge(state, side)
        return _block_or_fresh(state, rng)
    return move


def special_once() -> Policy:
    builder = _CopyBuilder()
    z_label: list[int] = []

    def move(state: GameState, rng: random.Random) -> Edge:
        n = len(state.moves_of(FP)) + 1
        if n <= 6:
            return builder.build_move(state, n)
        L = builder.labels
        if n == 7:
            (z_new,) = fresh_vertices(state, 1)
            z_label.append(z_new)
            return tuple(sorted([z_new] + [L[i - 1] for i in (1, 3, 5, 8)]))
        if n == 8:
            # completes everything except the chord edge: a special threat
            return tuple(sorted([z_label[0]] + [L[i - 1] for i in (2, 4, 7, 9)]))
        return _block_or_fresh(state, rng)
    return move


def adversary_suite() -> list[FpAdversary]:
    return [
        FpAdversary("random-local", random_local),
        FpAdversary("greedy-threat", greedy_threat),
        FpAdversary("pacifist", pacifist),
        FpAdversary("blocker", blocker),
        FpAdversary("standard-chain", standard_chain),
        FpAdversary("special-once", special_once),
    ]


def adversary_by_name(name: str) -> FpAdversary:
    for adv in adversary_suite():
        if adv.name == name:
            return adv
    raise KeyError(f"unknown adversary {name!r}")
