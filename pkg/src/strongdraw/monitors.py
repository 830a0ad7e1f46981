"""Post-hoc transcript monitors for the drawing argument's checkable facts.

Each monitor gates on how FP's critical move (his edge-count-minus-one-th,
the first on which he could possibly threaten) is annotated, then walks the
rest of the transcript asserting the structural consequences the drawing
argument promises along that line.  Monitors are pure functions of the
transcript: they consume the recorded annotations (whose integrity is
separately established by byte-exact replay) plus cheap degree bookkeeping
recomputed from the raw moves.

All guarantees are conditional on the second player not having already won,
so when a transcript ends in SpWin the final FP move, the blunder that
handed over the game, is exempt from the line's assertions.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .hypergraph import Edge, Hypergraph
from .matching import HostIndex, enumerate_embeddings
from .target import target_from_graph
from .transcript import FP_WIN, SP_WIN, MonitorVerdict, MoveRecord, Transcript

NO_THREAT_LINE = "no-threat-line"
SPECIAL_LINE = "special-threat-line"
STANDARD_CHAIN_LINE = "standard-chain-line"


class _Walk:
    """Incremental FP-graph bookkeeping over a transcript's global move order."""

    def __init__(self, t: Transcript):
        self.t = t
        self.fp_degree: dict[int, int] = {}
        self.claimed: set[Edge] = set()
        self.fp_edges: list[tuple[int, MoveRecord]] = []  # (fp_count, record)

    def snapshots(self) -> Iterator[tuple[int, MoveRecord]]:
        """Yield (fp_count, record) immediately after each FP move."""
        fp_count = 0
        for rec in self.t.moves:
            self.claimed.add(rec.edge)
            if rec.player == "FP":
                fp_count += 1
                for v in rec.edge:
                    self.fp_degree[v] = self.fp_degree.get(v, 0) + 1
                self.fp_edges.append((fp_count, rec))
                yield fp_count, rec

    def has_degree_one_vertex(self, edge: Edge) -> bool:
        return any(self.fp_degree[v] == 1 for v in edge)


def _skip_final(t: Transcript, rec: MoveRecord) -> bool:
    # the final FP move of an SpWin game is the unanswered blunder; the
    # line's guarantees assume it never happens
    if t.outcome != SP_WIN:
        return False
    fp_records = t.fp_moves()
    return bool(fp_records) and rec.index == fp_records[-1].index


def _critical_annotation(t: Transcript) -> Optional[MoveRecord]:
    m = len(t.target_edges)
    fp_records = t.fp_moves()
    if len(fp_records) < m - 1:
        return None
    return fp_records[m - 2]


def monitor_no_threat_line(t: Transcript) -> MonitorVerdict:
    """Line where FP's critical move is not a threat.

    From then on FP must never hold a free completing edge, and each of his
    later edges must keep a vertex of degree one in his own graph.
    """
    m = len(t.target_edges)
    critical = _critical_annotation(t)
    if critical is None or critical.ann["kinds"]:
        return MonitorVerdict(NO_THREAT_LINE, applicable=False, holds=True)
    if t.outcome == FP_WIN:
        return MonitorVerdict(NO_THREAT_LINE, True, False, t.moves[-1].index)
    walk = _Walk(t)
    for fp_count, rec in walk.snapshots():
        if fp_count < m - 1 or _skip_final(t, rec):
            continue
        if rec.ann["completions"]:
            return MonitorVerdict(NO_THREAT_LINE, True, False, rec.index)
        for j, earlier in walk.fp_edges:
            if j >= m and not walk.has_degree_one_vertex(earlier.edge):
                return MonitorVerdict(NO_THREAT_LINE, True, False, rec.index)
    return MonitorVerdict(NO_THREAT_LINE, True, True)


def monitor_special_threat_line(t: Transcript) -> MonitorVerdict:
    """Line where FP's critical move is a special threat.

    FP must never win, must never threaten again, and his graph must never
    hold more than one copy of the reduced target.
    """
    m = len(t.target_edges)
    critical = _critical_annotation(t)
    if critical is None or critical.ann["kinds"] != ["special"]:
        return MonitorVerdict(SPECIAL_LINE, applicable=False, holds=True)
    if t.outcome == FP_WIN:
        return MonitorVerdict(SPECIAL_LINE, True, False, t.moves[-1].index)
    walk = _Walk(t)
    for fp_count, rec in walk.snapshots():
        if fp_count < m or _skip_final(t, rec):
            continue
        if rec.ann["completions"]:
            return MonitorVerdict(SPECIAL_LINE, True, False, rec.index)
        if rec.ann["copies"] > 1:
            return MonitorVerdict(SPECIAL_LINE, True, False, rec.index)
    return MonitorVerdict(SPECIAL_LINE, True, True)


def monitor_standard_chain_line(t: Transcript) -> MonitorVerdict:
    """Line where FP's critical move opens a run of standard threats.

    While the run lasts, FP's graph holds exactly one copy of the reduced
    target, every threat edge hangs a single new degree-one vertex off that
    copy, and only the newest copy-plus-edge is still completable.  Once FP
    first deviates with a non-threat move he must never threaten again, and
    the degree-one structure persists.  A special threat during the run is
    itself a violation of the line.
    """
    m = len(t.target_edges)
    critical = _critical_annotation(t)
    if critical is None or critical.ann["kinds"] != ["standard"]:
        return MonitorVerdict(STANDARD_CHAIN_LINE, applicable=False, holds=True)
    if t.outcome == FP_WIN:
        return MonitorVerdict(STANDARD_CHAIN_LINE, True, False, t.moves[-1].index)

    graph = Hypergraph.from_edges(t.k, t.target_edges)
    target = target_from_graph(graph, t.z)
    fp_records = t.fp_moves()
    first_edges = [r.edge for r in fp_records[:m - 1]]
    base_maps = enumerate_embeddings(target.reduced_template, HostIndex(first_edges))
    if len(base_maps) != 1:
        return MonitorVerdict(STANDARD_CHAIN_LINE, True, False, critical.index)
    base_vertices = set(base_maps[0].image)
    base_edges = {base_maps[0].apply_edge(e) for e in target.reduced.sorted_edges}

    walk = _Walk(t)
    in_chain = True
    deviation_count: Optional[int] = None
    chain_completions: list[tuple[int, Edge]] = []  # (fp_count, completion)
    for fp_count, rec in walk.snapshots():
        if fp_count < m - 1:
            continue
        final_exempt = _skip_final(t, rec)
        kinds = rec.ann["kinds"]
        if in_chain and fp_count > m - 1 and kinds != ["standard"]:
            if kinds and not final_exempt:
                # a threat that is not purely standard must never follow the run
                return MonitorVerdict(STANDARD_CHAIN_LINE, True, False, rec.index)
            in_chain = False
            deviation_count = fp_count
        if final_exempt:
            continue
        if in_chain:
            if rec.ann["copies"] != 1:
                return MonitorVerdict(STANDARD_CHAIN_LINE, True, False, rec.index)
            comps = [tuple(c) for c in rec.ann["completions"]]
            if len(comps) != 1:
                return MonitorVerdict(STANDARD_CHAIN_LINE, True, False, rec.index)
            chain_completions.append((fp_count, comps[0]))
            for j, earlier in walk.fp_edges:
                if j < m - 1 or earlier.edge in base_edges:
                    continue
                outside = [v for v in earlier.edge if v not in base_vertices]
                if len(outside) != 1 or walk.fp_degree[outside[0]] != 1:
                    return MonitorVerdict(STANDARD_CHAIN_LINE, True, False, rec.index)
            for j, comp in chain_completions[:-1]:
                if comp not in walk.claimed:
                    # an older copy-plus-edge is still open
                    return MonitorVerdict(STANDARD_CHAIN_LINE, True, False, rec.index)
        else:
            if rec.ann["completions"]:
                return MonitorVerdict(STANDARD_CHAIN_LINE, True, False, rec.index)
            for j, earlier in walk.fp_edges:
                if j < m - 1 or j == deviation_count or earlier.edge in base_edges:
                    continue
                if not walk.has_degree_one_vertex(earlier.edge):
                    return MonitorVerdict(STANDARD_CHAIN_LINE, True, False, rec.index)
    return MonitorVerdict(STANDARD_CHAIN_LINE, True, True)


def run_monitors(t: Transcript) -> tuple[MonitorVerdict, ...]:
    return (
        monitor_no_threat_line(t),
        monitor_special_threat_line(t),
        monitor_standard_chain_line(t),
    )
