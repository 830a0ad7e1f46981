"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import random

import pytest

from strongdraw.engine import FP, SP, GameState, claim, new_game
from strongdraw.hypergraph import Hypergraph
from strongdraw.matching import monomorphisms_by_dfs
from strongdraw.target import NAMED_EDGES, Target, canonical_target

# Expected degree of every vertex in the canonical target.
DEGREE_TABLE = {0: 2, 1: 4, 2: 4, 3: 5, 4: 7, 5: 6, 6: 5, 7: 4, 8: 4, 9: 4}

# Expected pairwise intersection sizes, keyed by named-edge pairs.
INTERSECTION_TABLE = {
    ("r", "g"): 1, ("r", "chord"): 2, ("r", "wrap"): 2, ("r", "p1"): 3,
    ("r", "p2"): 2, ("r", "p3"): 2, ("r", "p4"): 2, ("r", "p5"): 2,
    ("g", "chord"): 2, ("g", "wrap"): 3, ("g", "p1"): 2, ("g", "p2"): 2,
    ("g", "p3"): 2, ("g", "p4"): 2, ("g", "p5"): 2,
    ("chord", "wrap"): 3, ("chord", "p1"): 2, ("chord", "p2"): 2,
    ("chord", "p3"): 2, ("chord", "p4"): 3, ("chord", "p5"): 3,
    ("wrap", "p1"): 4, ("wrap", "p2"): 3, ("wrap", "p3"): 2,
    ("wrap", "p4"): 1, ("wrap", "p5"): 1,
    ("p1", "p2"): 4, ("p1", "p3"): 3, ("p1", "p4"): 2, ("p1", "p5"): 1,
    ("p2", "p3"): 4, ("p2", "p4"): 3, ("p2", "p5"): 2,
    ("p3", "p4"): 4, ("p3", "p5"): 3,
    ("p4", "p5"): 4,
}


@pytest.fixture(scope="session")
def target() -> Target:
    return canonical_target()


@pytest.fixture(scope="session")
def graph(target):
    return target.graph


def relabel(graph: Hypergraph, offset: int = 100) -> Hypergraph:
    return Hypergraph.from_edges(
        graph.k, [[v + offset for v in e] for e in graph.edges])


def relabel_map(graph: Hypergraph, mapping: dict[int, int]) -> Hypergraph:
    return Hypergraph.from_edges(
        graph.k, [[mapping[v] for v in e] for e in graph.edges])


def random_hypergraph(rng: random.Random, k: int, max_vertices: int,
                      max_edges: int) -> Hypergraph:
    n = rng.randint(k, max_vertices)
    vertices = list(range(n))
    edge_count = rng.randint(0, max_edges)
    edges = set()
    for _ in range(edge_count):
        edges.add(tuple(sorted(rng.sample(vertices, k))))
    return Hypergraph.from_edges(k, edges, extra_vertices=vertices)


def state_with_edges(target: Target, fp_edges: list, sp_edges: list) -> GameState:
    """Build a legal game state holding the given edges, padding with junk.

    Edges are interleaved FP, SP, FP, ...; whichever side runs short claims
    far-away fresh 5-sets so alternation stays legal.
    """
    state = new_game(target)
    filler = 10_000
    fp, sp = list(fp_edges), list(sp_edges)
    while fp or sp:
        if fp:
            state = claim(state, FP, fp.pop(0))
        else:
            state = claim(state, FP, tuple(range(filler, filler + 5)))
            filler += 5
        if sp:
            state = claim(state, SP, sp.pop(0))
        elif fp:
            state = claim(state, SP, tuple(range(filler, filler + 5)))
            filler += 5
    return state


def oracle_threats(state: GameState, player: str) -> set[tuple[frozenset, tuple]]:
    """Threat set via the unpruned depth-first oracle, as (copy edges, completion)."""
    tgt = state.target
    edges = state.edges_of(player)
    if len(edges) < tgt.edge_count - 1:
        return set()  # a copy needs one edge per remaining template edge
    found = set()
    for template_edge in tgt.graph.sorted_edges:
        template = tgt.graph.remove_edges([template_edge])
        for m in monomorphisms_by_dfs(template, edges):
            comp = m.apply_edge(template_edge)
            if state.is_free(comp):
                image = frozenset(m.apply_edge(t) for t in template.sorted_edges)
                found.add((image, comp))
    return found


@pytest.fixture()
def named():
    return NAMED_EDGES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if getattr(rep, "when", None) == "call" and "acceptance" in rep.keywords:
                verdict = "PASS" if status == "passed" else "FAIL"
                lines.append(f"ACCEPTANCE {verdict}  {rep.nodeid.split('::')[-1]}")
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
