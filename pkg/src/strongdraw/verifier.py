"""Machine checks for the six draw-sufficiency properties of a target.

Given a candidate graph with a designated vertex z, the verifier checks:

  I    z has degree exactly 2 (its two edges are named r and g);
  II   deleting z leaves minimum degree >= 3, and every other vertex has
       degree >= 4 in the full graph;
  III  the z-deleted graph can be built in one move per edge against any
       opponent (checked constructively for a supplied builder over an
       exhaustive cover of strategy-relevant opponent responses);
  IV   deleting any two edges leaves a graph whose only monomorphism back
       into the target is the identity;
  V    every edge meets both r and g;
  VI   fewer than k-1 vertices avoid r and g.

Failures always carry an independently re-checkable witness.  The verifier
also re-checks the supporting facts the drawing strategy relies on: the
one-edge-deleted rigidity, the uniqueness of the completing pair over a
fresh vertex, and five structural facts of the canonical target.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Any, Optional

from .engine import FP, SP, GameState, claim, fresh_edge, new_game
from .hypergraph import Edge, Hypergraph
from .matching import (
    VertexMap,
    enumerate_monomorphisms,
    is_isomorphic,
)
from .strategies import BuilderState, BuilderStrategy, BuilderStuck, \
    _TRIGGERS_6TH, _DETOUR_MOVE6, _DETOUR_TRIGGER7, _DETOUR_ALT7, \
    _DIRECT_TRIGGER7, _DIRECT_ALT7, seven_move_builder
from .target import Target, target_from_graph


@dataclass(frozen=True)
class PropertyReport:
    property: str
    holds: bool
    witness: Optional[dict[str, Any]]
    elapsed: float

    def to_obj(self) -> dict[str, Any]:
        return {"property": self.property, "holds": self.holds,
                "witness": self.witness, "elapsed": round(self.elapsed, 6)}


@dataclass(frozen=True)
class RigidityResult:
    pair: tuple[Edge, Edge]
    monomorphism_count: int
    all_identity: bool
    elapsed: float

    def to_obj(self) -> dict[str, Any]:
        return {"pair": [list(self.pair[0]), list(self.pair[1])],
                "monomorphism_count": self.monomorphism_count,
                "all_identity": self.all_identity,
                "elapsed": round(self.elapsed, 6)}


def _edges_with(graph: Hypergraph, v: int) -> list[Edge]:
    return [e for e in graph.sorted_edges if v in e]


def check_property_i(graph: Hypergraph, z: int) -> PropertyReport:
    """z must have degree exactly 2; the witness names its incident edges."""
    t0 = time.perf_counter()
    incident = _edges_with(graph, z)
    holds = len(incident) == 2
    witness = {"z": z, "degree": len(incident),
               "incident_edges": [list(e) for e in incident]}
    return PropertyReport("I", holds, witness, time.perf_counter() - t0)


def check_property_ii(graph: Hypergraph, z: int) -> PropertyReport:
    t0 = time.perf_counter()
    reduced = graph.remove_vertex(z)
    offenders: list[dict[str, Any]] = []
    for v in sorted(reduced.vertices):
        if reduced.degree(v) < 3:
            offenders.append({"vertex": v, "where": "reduced", "degree": reduced.degree(v)})
    for v in sorted(graph.vertices - {z}):
        if graph.degree(v) < 4:
            offenders.append({"vertex": v, "where": "full", "degree": graph.degree(v)})
    return PropertyReport("II", not offenders,
                          {"offenders": offenders} if offenders else None,
                          time.perf_counter() - t0)


def check_property_v(graph: Hypergraph, z: int) -> PropertyReport:
    t0 = time.perf_counter()
    incident = _edges_with(graph, z)
    if len(incident) != 2:
        return PropertyReport("V", False, {"reason": "property I does not hold"},
                              time.perf_counter() - t0)
    r, g = incident
    misses = [list(e) for e in graph.sorted_edges
              if not (set(e) & set(r)) or not (set(e) & set(g))]
    return PropertyReport("V", not misses,
                          {"edges_missing_r_or_g": misses} if misses else None,
                          time.perf_counter() - t0)


def check_property_vi(graph: Hypergraph, z: int) -> PropertyReport:
    t0 = time.perf_counter()
    incident = _edges_with(graph, z)
    if len(incident) != 2:
        return PropertyReport("VI", False, {"reason": "property I does not hold"},
                              time.perf_counter() - t0)
    r, g = incident
    outside = sorted(graph.vertices - set(r) - set(g))
    holds = len(outside) < graph.k - 1
    return PropertyReport("VI", holds, {"outside": outside, "bound": graph.k - 1},
                          time.perf_counter() - t0)


def _identity_on_domain(maps: list[VertexMap]) -> bool:
    return len(maps) == 1 and maps[0].is_identity()


def check_property_iv(graph: Hypergraph) -> tuple[PropertyReport, list[RigidityResult]]:
    """Two-edge-deleted rigidity over all unordered edge pairs."""
    t0 = time.perf_counter()
    results: list[RigidityResult] = []
    bad: list[dict[str, Any]] = []
    for e, f in itertools.combinations(graph.sorted_edges, 2):
        t1 = time.perf_counter()
        sub = graph.remove_edges([e, f])
        maps = enumerate_monomorphisms(sub, graph)
        ok = _identity_on_domain(maps)
        results.append(RigidityResult((e, f), len(maps), ok, time.perf_counter() - t1))
        if not ok:
            offender = next((m for m in maps if not m.is_identity()), None)
            bad.append({"pair": [list(e), list(f)],
                        "monomorphism_count": len(maps),
                        "example_map": list(offender.pairs) if offender else None})
    report = PropertyReport("IV", not bad, {"violations": bad} if bad else None,
                            time.perf_counter() - t0)
    return report, results


def check_single_edge_rigidity(graph: Hypergraph) -> PropertyReport:
    """Deleting any one edge leaves only the identity monomorphism back in."""
    t0 = time.perf_counter()
    bad = []
    counts = {}
    for e in graph.sorted_edges:
        maps = enumerate_monomorphisms(graph.remove_edges([e]), graph)
        counts[e] = len(maps)
        if not _identity_on_domain(maps):
            offender = next((m for m in maps if not m.is_identity()), None)
            bad.append({"edge": list(e), "monomorphism_count": len(maps),
                        "example_map": list(offender.pairs) if offender else None})
    witness = {"counts": {str(list(e)): c for e, c in sorted(counts.items())}}
    if bad:
        witness["violations"] = bad
    return PropertyReport("single-edge-rigidity", not bad, witness,
                          time.perf_counter() - t0)


def unique_completion_candidates(graph: Hypergraph, z: int,
                                 reverse_order: bool = False):
    """Enumerate unordered pairs of fresh-vertex edges that could rebuild the target.

    The reduced graph is kept on its own vertex set and one new vertex x is
    added; candidate edges are all k-sets through x.  Yields
    (r_edge, g_edge, rebuilt_is_isomorphic).
    """
    reduced = graph.remove_vertex(z)
    x = max(graph.vertices) + 1
    base = sorted(reduced.vertices)
    target_degrees = sorted(graph.degrees().values())
    quads = list(itertools.combinations(base, graph.k - 1))
    if reverse_order:
        quads = quads[::-1]
    reduced_degrees = reduced.degrees()
    for s1, s2 in itertools.combinations(quads, 2):
        r_edge = tuple(sorted((x,) + s1))
        g_edge = tuple(sorted((x,) + s2))
        degs = dict(reduced_degrees)
        degs[x] = 2
        for v in s1:
            degs[v] += 1
        for v in s2:
            degs[v] += 1
        if sorted(degs.values()) != target_degrees:
            yield r_edge, g_edge, False
            continue
        rebuilt = Hypergraph.from_edges(
            graph.k, set(reduced.edges) | {r_edge, g_edge})
        yield r_edge, g_edge, is_isomorphic(rebuilt, graph) is not None


def check_unique_completion_pair(graph: Hypergraph, z: int) -> PropertyReport:
    """Exactly one unordered pair of edges through a fresh vertex rebuilds the target."""
    t0 = time.perf_counter()
    matches = []
    candidates = 0
    for r_edge, g_edge, ok in unique_completion_candidates(graph, z):
        candidates += 1
        if ok:
            matches.append([list(r_edge), list(g_edge)])
    return PropertyReport(
        "unique-completion-pair", len(matches) == 1,
        {"candidate_pairs": candidates, "matches": matches},
        time.perf_counter() - t0)


def check_structure_facts(graph: Hypergraph, z: int) -> PropertyReport:
    """Five structural facts of the target, each checked by direct enumeration."""
    from .hypergraph import tight_paths

    t0 = time.perf_counter()
    incident = _edges_with(graph, z)
    facts: dict[str, Any] = {}
    if len(incident) != 2:
        return PropertyReport("structure-facts", False,
                              {"reason": "property I does not hold"},
                              time.perf_counter() - t0)
    r, g = incident
    outside = sorted(graph.vertices - set(r) - set(g))
    facts["1"] = {"holds": set(r) & set(g) == {z} and len(outside) == 1,
                  "r_and_g_share": sorted(set(r) & set(g)), "outside": outside}

    profile_32 = [list(e) for e in graph.sorted_edges
                  if len(set(e) & set(r)) == 3 and len(set(e) & set(g)) == 2]
    facts["2"] = {"holds": len(profile_32) == 1, "edges": profile_32}
    profile_23 = [list(e) for e in graph.sorted_edges
                  if len(set(e) & set(g)) == 3 and len(set(e) & set(r)) == 2]
    facts["3"] = {"holds": len(profile_23) == 1, "edges": profile_23}

    paths = tight_paths(graph, 5)
    facts["4"] = {"holds": len(paths) == 2,
                  "paths": sorted([list(p.vertices) for p in paths])}

    worst = None
    ok5 = True
    for u, v in itertools.combinations(sorted(graph.vertices), 2):
        split = [e for e in graph.sorted_edges if len(set(e) & {u, v}) == 1]
        if len(split) < 3:
            ok5 = False
            worst = {"pair": [u, v], "separating_edges": [list(e) for e in split]}
            break
    facts["5"] = {"holds": ok5, "violation": worst}

    holds = all(facts[i]["holds"] for i in ("1", "2", "3", "4", "5"))
    return PropertyReport("structure-facts", holds, facts, time.perf_counter() - t0)


# --- constructive fast-build check ----------------------------------------

_IRRELEVANT_6TH = (1, 2, 3, 4, 8)
_IRRELEVANT_7TH = (2, 3, 4, 5, 9)


def _labels_from_sp_moves(sp_moves: list[Edge]) -> tuple[int, ...]:
    """Recover the builder's construction labels from its claimed edges."""
    labels = list(sp_moves[0])
    for e in sp_moves[1:5]:
        (new,) = set(e) - set(labels)
        labels.append(new)
    return tuple(labels)


def fast_build_cover_lines() -> list[tuple[str, str]]:
    """Opponent-response classes the builder's branching can distinguish.

    Sixth-move classes: the three trigger edges, the builder's own would-be
    detour edge, and two representatives of the irrelevant class (one on
    fresh vertices, one touching the built path).  Seventh-move classes:
    the branch trigger, the branch alternative, and the same two irrelevant
    representatives.
    """
    sixths = ["trigger-0", "trigger-1", "trigger-2", "detour-edge",
              "fresh", "touching"]
    sevenths = ["branch-trigger", "branch-alt", "fresh", "touching"]
    return [(a, b) for a in sixths for b in sevenths]


def _cover_fp_edge(kind: str, move_number: int, state: GameState,
                   labels: tuple[int, ...], mode: str) -> Edge:
    def lab(idx: tuple[int, ...]) -> Edge:
        return tuple(sorted(labels[i - 1] for i in idx))

    if kind == "fresh":
        return fresh_edge(state)
    if kind == "touching":
        return lab(_IRRELEVANT_6TH if move_number == 6 else _IRRELEVANT_7TH)
    if move_number == 6:
        if kind.startswith("trigger-"):
            return lab(_TRIGGERS_6TH[int(kind.split("-")[1])])
        if kind == "detour-edge":
            return lab(_DETOUR_MOVE6)
    else:
        if mode == "detour":
            return lab(_DETOUR_TRIGGER7 if kind == "branch-trigger" else _DETOUR_ALT7)
        return lab(_DIRECT_TRIGGER7 if kind == "branch-trigger" else _DIRECT_ALT7)
    raise ValueError(f"unknown cover move kind {kind!r}")


def run_fast_build_line(target: Target, builder: BuilderStrategy,
                        line: tuple[str, str]) -> tuple[list[Edge], tuple[int, ...]]:
    """Play one cover line; returns the builder's edges and its labels."""
    state = new_game(target)
    b = BuilderState()
    six, seven = line
    for n in range(1, 8):
        if n <= 5:
            fp = fresh_edge(state)
        else:
            labels = _labels_from_sp_moves(state.moves_of(SP))
            fp = _cover_fp_edge(six if n == 6 else seven, n, state, labels,
                                b.mode or "direct")
        state = claim(state, FP, fp)
        edge, b = builder.move(state, b)
        if not state.is_free(edge):
            raise BuilderStuck(f"builder edge {edge} already claimed")
        state = claim(state, SP, edge)
    return state.moves_of(SP), b.labels


def check_property_iii(graph: Hypergraph, z: int,
                       builder: Optional[BuilderStrategy] = None) -> PropertyReport:
    """Constructive fast-build check over the exhaustive response cover.

    Holds when every cover line ends with the builder owning, after exactly
    one move per target edge, a graph isomorphic to the z-deleted target.
    The irrelevant-move classes carry two representatives each, so the
    cover also certifies that the builder's branching reads nothing beyond
    membership of the opponent's sixth and seventh moves in the named sets.
    """
    t0 = time.perf_counter()
    try:
        target = target_from_graph(graph, z)
    except ValueError as exc:
        return PropertyReport("III", False, {"reason": str(exc)},
                              time.perf_counter() - t0)
    builder = builder or seven_move_builder()
    reduced = graph.remove_vertex(z)
    lines = fast_build_cover_lines()
    failures = []
    shapes: dict[tuple[str, str], frozenset[frozenset[int]]] = {}
    for line in lines:
        sp_edges, labels = run_fast_build_line(target, builder, line)
        built = Hypergraph.from_edges(graph.k, sp_edges)
        witness = is_isomorphic(built, reduced)
        ok = witness is not None and len(sp_edges) == len(reduced.edges)
        if not ok:
            failures.append({"line": list(line),
                             "built_edges": [list(e) for e in sp_edges]})
        index = {v: i + 1 for i, v in enumerate(labels)}
        shapes[line] = frozenset(frozenset(index[v] for v in e) for e in sp_edges)
    # the two irrelevant representatives must be indistinguishable to the
    # builder: identical responses in label space
    for six in ("trigger-0", "trigger-1", "trigger-2", "detour-edge", "fresh"):
        if shapes[(six, "fresh")] != shapes[(six, "touching")]:
            failures.append({"line": [six, "fresh/touching"],
                             "reason": "builder distinguished irrelevant moves"})
    for seven in ("branch-trigger", "branch-alt", "fresh", "touching"):
        if shapes[("fresh", seven)] != shapes[("touching", seven)]:
            failures.append({"line": ["fresh/touching", seven],
                             "reason": "builder distinguished irrelevant moves"})
    return PropertyReport("III", not failures,
                          {"lines": len(lines),
                           "failures": failures} if failures else {"lines": len(lines)},
                          time.perf_counter() - t0)


@dataclass(frozen=True)
class VerificationReport:
    properties: tuple[PropertyReport, ...]
    rigidity: tuple[RigidityResult, ...] = ()
    extras: tuple[PropertyReport, ...] = ()

    @property
    def draw_sufficient(self) -> bool:
        core = {"I", "II", "III", "IV", "V", "VI"}
        by_name = {p.property: p.holds for p in self.properties}
        return all(by_name.get(name, False) for name in sorted(core))

    def to_obj(self) -> dict[str, Any]:
        return {
            "draw_sufficient": self.draw_sufficient,
            "properties": [p.to_obj() for p in self.properties],
            "rigidity": [r.to_obj() for r in self.rigidity],
            "extras": [p.to_obj() for p in self.extras],
        }

    def to_text(self) -> str:
        lines = []
        for p in self.properties + self.extras:
            lines.append(f"{'PASS' if p.holds else 'FAIL'}  {p.property}"
                         f"  ({p.elapsed:.3f}s)")
        lines.append("verdict: " + ("draw-sufficient" if self.draw_sufficient
                                    else "not draw-sufficient"))
        return "\n".join(lines)


def verify_all(graph: Hypergraph, z: int,
               builder: Optional[BuilderStrategy] = None,
               with_extras: bool = True) -> VerificationReport:
    """Run every check; the verdict needs properties I through VI."""
    p1 = check_property_i(graph, z)
    p2 = check_property_ii(graph, z)
    p3 = check_property_iii(graph, z, builder)
    p4, rigidity = check_property_iv(graph)
    p5 = check_property_v(graph, z)
    p6 = check_property_vi(graph, z)
    extras: tuple[PropertyReport, ...] = ()
    if with_extras:
        extras = (check_single_edge_rigidity(graph),
                  check_unique_completion_pair(graph, z),
                  check_structure_facts(graph, z))
    return VerificationReport((p1, p2, p3, p4, p5, p6), tuple(rigidity), extras)
