"""Game state and threat model for the strong game on the infinite board.

The board is the complete 5-uniform hypergraph on the naturals, realized
lazily: an edge is any canonical 5-set of vertex ids, and "free" simply
means claimed by neither player.  States are immutable snapshots; `claim`
returns a new state, and replaying a history from `new_game` reproduces
the state exactly.

A threat is a claimed copy of the target minus one edge whose unique
completing edge is still free.  Because every vertex of the target lies in
at least two edges, deleting one edge never drops a vertex, so an embedding
of a one-edge-deleted template determines the completing edge outright.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .hypergraph import Edge, Hypergraph, make_edge
from .matching import (
    HostIndex,
    VertexMap,
    embeddings_through,
    enumerate_embeddings,
)
from .target import Target, target_from_graph

FP = "FP"
SP = "SP"

STANDARD = "standard"
SPECIAL = "special"


class EngineError(Exception):
    pass


class NotYourTurn(EngineError):
    pass


class EdgeTaken(EngineError):
    pass


class InvalidTarget(EngineError):
    pass


def other(player: str) -> str:
    return SP if player == FP else FP


@dataclass(frozen=True)
class GameState:
    """One immutable snapshot of a game in progress."""

    target: Target
    fp_edges: frozenset[Edge]
    sp_edges: frozenset[Edge]
    history: tuple[tuple[str, Edge], ...]
    next_fresh: int

    @property
    def first_fp_edge(self) -> Optional[Edge]:
        return self.history[0][1] if self.history else None

    @property
    def to_move(self) -> str:
        return FP if len(self.history) % 2 == 0 else SP

    def edges_of(self, player: str) -> frozenset[Edge]:
        return self.fp_edges if player == FP else self.sp_edges

    def is_free(self, edge: Edge) -> bool:
        return edge not in self.fp_edges and edge not in self.sp_edges

    def moves_of(self, player: str) -> list[Edge]:
        return [e for p, e in self.history if p == player]


def new_game(target: Target | Hypergraph, z: int | None = None) -> GameState:
    """Empty state, first player to move.

    The designated vertex must have degree exactly 2 and the target must
    have minimum degree at least 2 (so threat completions are determined).
    """
    if isinstance(target, Hypergraph):
        if z is None:
            raise InvalidTarget("designated vertex required with a bare graph")
        try:
            target = target_from_graph(target, z)
        except ValueError as exc:
            raise InvalidTarget(str(exc)) from exc
    elif z is not None and z != target.z:
        try:
            target = target_from_graph(target.graph, z)
        except ValueError as exc:
            raise InvalidTarget(str(exc)) from exc
    if target.graph.min_degree() < 2:
        raise InvalidTarget("target must have minimum degree >= 2")
    return GameState(target, frozenset(), frozenset(), (), 0)


def claim(state: GameState, player: str, edge: Iterable[int]) -> GameState:
    """Claim a free edge for `player`; it must be their turn."""
    e = make_edge(edge, state.target.k)
    if any(v < 0 for v in e):
        raise EngineError("vertex ids must be non-negative")
    if state.to_move != player:
        raise NotYourTurn(f"it is {state.to_move}'s turn")
    if not state.is_free(e):
        raise EdgeTaken(f"edge {e} already claimed")
    fp = state.fp_edges | {e} if player == FP else state.fp_edges
    sp = state.sp_edges | {e} if player == SP else state.sp_edges
    return GameState(
        state.target, fp, sp,
        state.history + ((player, e),),
        max(state.next_fresh, e[-1] + 1),
    )


def fresh_vertices(state: GameState, count: int) -> tuple[int, ...]:
    """The `count` lowest vertex ids untouched by either graph."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return tuple(range(state.next_fresh, state.next_fresh + count))


def fresh_edge(state: GameState) -> Edge:
    return fresh_vertices(state, state.target.k)


@dataclass(frozen=True)
class Threat:
    """An embedded copy of the target minus one edge, plus its free completion."""

    owner: str
    copy: VertexMap
    template_edge: Edge
    completing_edge: Edge
    kind: str


@dataclass(frozen=True)
class CopyStatus:
    """An embedded target-minus-one-edge copy and whether its completion is free."""

    image_edges: frozenset[Edge]
    completing_edge: Edge
    open: bool


def classify(target: Target, template_edge: Edge) -> str:
    """Standard when the missing template edge is one of the anchor pair."""
    return STANDARD if template_edge in (target.r, target.g) else SPECIAL


def _make_threat(state: GameState, player: str, template_edge: Edge,
                 m: VertexMap) -> tuple[tuple[frozenset[Edge], Edge], Threat]:
    tgt = state.target
    template = tgt.threat_templates[template_edge]
    image = frozenset(m.apply_edge(t) for t in template.edges)
    comp = m.apply_edge(template_edge)
    key = (image, comp)
    return key, Threat(player, m, template_edge, comp, classify(tgt, template_edge))


@lru_cache(maxsize=8192)
def _copies_through(target: Target, edges: frozenset[Edge],
                    anchor: Edge) -> tuple[tuple[Edge, VertexMap, frozenset[Edge], Edge], ...]:
    """Embedded target-minus-one-edge copies using `anchor`, with completions.

    Claim-independent facts, so safe to share: callers re-evaluate freeness
    of the completing edges against their own claim sets.  The cache pays
    off because a newly claimed edge is typically probed against the same
    owner edge set several times in one turn.
    """
    host = HostIndex(edges)
    out = []
    for template_edge in target.graph.sorted_edges:
        template = target.threat_templates[template_edge]
        for m in embeddings_through(template, host, anchor):
            image = frozenset(m.apply_edge(t) for t in template.edges)
            comp = m.apply_edge(template_edge)
            out.append((template_edge, m, image, comp))
    return tuple(out)


def find_threats(state: GameState, player: str) -> list[Threat]:
    """All current threats for `player`, deduplicated by (copy edges, completion)."""
    edges = state.edges_of(player)
    tgt = state.target
    if len(edges) < tgt.edge_count - 1:
        return []
    host = HostIndex(edges)
    seen: dict[tuple[frozenset[Edge], Edge], Threat] = {}
    for template_edge in tgt.graph.sorted_edges:
        for m in enumerate_embeddings(tgt.threat_templates[template_edge], host):
            comp = m.apply_edge(template_edge)
            if not state.is_free(comp):
                continue
            key, threat = _make_threat(state, player, template_edge, m)
            seen.setdefault(key, threat)
    return sorted(seen.values(), key=lambda t: (t.completing_edge, t.template_edge))


def threats_through(state: GameState, player: str, anchor: Edge) -> list[Threat]:
    """Threats whose copy uses `anchor`.

    When every copy not using the player's newest edge is already closed
    (which holds whenever the opponent has been blocking the unique free
    completion each turn), anchoring on that newest edge loses nothing.
    """
    edges = state.edges_of(player)
    tgt = state.target
    if len(edges) < tgt.edge_count - 1 or anchor not in edges:
        return []
    seen: dict[tuple[frozenset[Edge], Edge], Threat] = {}
    for template_edge, m, image, comp in _copies_through(tgt, edges, anchor):
        if not state.is_free(comp):
            continue
        seen.setdefault((image, comp), Threat(player, m, template_edge, comp,
                                              classify(tgt, template_edge)))
    return sorted(seen.values(), key=lambda t: (t.completing_edge, t.template_edge))


def has_win(state: GameState, player: str) -> Optional[VertexMap]:
    """An embedding of the whole target into the player's edges, if any."""
    edges = state.edges_of(player)
    tgt = state.target
    if len(edges) < tgt.edge_count:
        return None
    maps = enumerate_embeddings(tgt.full_template, HostIndex(edges))
    return maps[0] if maps else None


def would_threaten(state: GameState, player: str, edge: Iterable[int]) -> bool:
    """Whether claiming `edge` would leave the player with at least one threat."""
    e = make_edge(edge, state.target.k)
    if not state.is_free(e):
        raise EdgeTaken(f"edge {e} already claimed")
    hypothetical = _with_edge(state, player, e)
    return bool(find_threats(hypothetical, player))


def _with_edge(state: GameState, player: str, e: Edge) -> GameState:
    fp = state.fp_edges | {e} if player == FP else state.fp_edges
    sp = state.sp_edges | {e} if player == SP else state.sp_edges
    return GameState(state.target, fp, sp, state.history + ((player, e),),
                     max(state.next_fresh, e[-1] + 1))


def hypothetical_threats_through(state: GameState, player: str,
                                 edge: Edge) -> list[Threat]:
    """Threats the player would gain by claiming `edge`, anchored on it.

    Exact whenever the player has no open copy beforehand; used by the
    drawing strategy's one-edge lookahead.
    """
    hypothetical = _with_edge(state, player, edge)
    return threats_through(hypothetical, player, edge)


@dataclass
class TrackedCopy:
    owner: str
    image_edges: frozenset[Edge]
    template_edge: Edge
    completing_edge: Edge
    map: VertexMap
    open: bool

    def status(self) -> CopyStatus:
        return CopyStatus(self.image_edges, self.completing_edge, self.open)


@dataclass
class CopyTracker:
    """Incremental discovery of target-minus-one-edge copies along a game.

    A copy becomes visible exactly when its owner claims its last edge, so
    scanning anchored on each newly claimed edge sees every copy once.  A
    copy closes when its completing edge is claimed by anyone; an owner
    claiming the completion of their own copy (or discovering a copy whose
    completion they already hold) has completed the whole target.
    """

    target: Target
    track_reduced_for: frozenset[str] = frozenset()
    claimed: dict[Edge, str] = field(default_factory=dict)
    edges_by: dict[str, list[Edge]] = field(default_factory=lambda: {FP: [], SP: []})
    copies: list[TrackedCopy] = field(default_factory=list)
    open_by_completion: dict[Edge, list[TrackedCopy]] = field(default_factory=dict)
    reduced_copies: dict[str, list[frozenset[Edge]]] = field(
        default_factory=lambda: {FP: [], SP: []})
    winner: Optional[str] = None
    win_map: Optional[VertexMap] = None

    def feed(self, player: str, edge: Edge) -> None:
        """Record a claim and discover every copy it completes."""
        edge = tuple(edge)
        for copy in self.open_by_completion.pop(edge, []):
            copy.open = False
            if copy.owner == player and self.winner is None:
                self.winner = player
                self.win_map = copy.map
        self.claimed[edge] = player
        mine = self.edges_by[player]
        mine.append(edge)
        tgt = self.target
        if len(mine) >= tgt.edge_count - 1:
            seen: set[tuple[frozenset[Edge], Edge]] = set()
            for template_edge, m, image, comp in _copies_through(
                    tgt, frozenset(mine), edge):
                key = (image, comp)
                if key in seen:
                    continue
                seen.add(key)
                holder = self.claimed.get(comp)
                copy = TrackedCopy(player, image, template_edge, comp, m,
                                   open=holder is None)
                self.copies.append(copy)
                if holder is None:
                    self.open_by_completion.setdefault(comp, []).append(copy)
                elif holder == player and self.winner is None:
                    self.winner = player
                    self.win_map = m
        if player in self.track_reduced_for and len(mine) >= len(tgt.reduced.edges):
            host = HostIndex(mine)
            for m in embeddings_through(tgt.reduced_template, host, edge):
                image = frozenset(m.apply_edge(t) for t in tgt.reduced_template.edges)
                if image not in self.reduced_copies[player]:
                    self.reduced_copies[player].append(image)

    def open_threats(self, player: str) -> list[Threat]:
        out = []
        for copies in self.open_by_completion.values():
            for c in copies:
                if c.owner == player:
                    out.append(Threat(player, c.map, c.template_edge,
                                      c.completing_edge,
                                      classify(self.target, c.template_edge)))
        return sorted(out, key=lambda t: (t.completing_edge, t.template_edge))

    def reduced_copy_count(self, player: str) -> int:
        return len(self.reduced_copies[player])
