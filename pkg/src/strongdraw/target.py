"""The canonical 5-uniform draw target.

A 10-vertex, 9-edge 5-graph built around a designated vertex z of degree
two.  The two edges through z are named r and g; the other seven edges are
a five-edge tight path p1..p5 on v1..v9, a wrap edge closing v9 back onto
the start of the path, and a chord edge.  Vertex ids are fixed (z = 0,
v_i = i) so transcripts and cross-module references stay readable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .hypergraph import Edge, Hypergraph
from .matching import CompiledTemplate

Z = 0

NAMED_EDGES: dict[str, Edge] = {
    "r": (0, 1, 3, 5, 8),
    "g": (0, 2, 4, 7, 9),
    "chord": (1, 4, 6, 8, 9),
    "wrap": (1, 2, 3, 4, 9),
    "p1": (1, 2, 3, 4, 5),
    "p2": (2, 3, 4, 5, 6),
    "p3": (3, 4, 5, 6, 7),
    "p4": (4, 5, 6, 7, 8),
    "p5": (5, 6, 7, 8, 9),
}


@dataclass(frozen=True)
class Target:
    """A target graph with its designated degree-2 vertex and anchor edges."""

    graph: Hypergraph
    z: int
    r: Edge
    g: Edge

    @property
    def k(self) -> int:
        return self.graph.k

    @property
    def edge_count(self) -> int:
        return len(self.graph.edges)

    @cached_property
    def reduced(self) -> Hypergraph:
        """The graph with z deleted (what the second player builds fast)."""
        return self.graph.remove_vertex(self.z)

    @cached_property
    def threat_templates(self) -> dict[Edge, CompiledTemplate]:
        """edge e -> compiled template for the graph missing exactly e."""
        return {
            e: CompiledTemplate(self.graph.remove_edges([e]))
            for e in self.graph.sorted_edges
        }

    @cached_property
    def reduced_template(self) -> CompiledTemplate:
        return CompiledTemplate(self.reduced)

    @cached_property
    def full_template(self) -> CompiledTemplate:
        return CompiledTemplate(self.graph)

    @cached_property
    def pair_templates(self) -> dict[frozenset[Edge], CompiledTemplate]:
        """Unordered edge pair {e, f} -> compiled template for the graph minus both."""
        out: dict[frozenset[Edge], CompiledTemplate] = {}
        es = self.graph.sorted_edges
        for i in range(len(es)):
            for j in range(i + 1, len(es)):
                pair = frozenset((es[i], es[j]))
                out[pair] = CompiledTemplate(self.graph.remove_edges(pair))
        return out


def canonical_h5() -> tuple[Hypergraph, int, Edge, Edge]:
    """The canonical 10-vertex, 9-edge 5-graph with designated z and edges r, g."""
    graph = Hypergraph.from_edges(5, NAMED_EDGES.values())
    return graph, Z, NAMED_EDGES["r"], NAMED_EDGES["g"]


def canonical_target() -> Target:
    graph, z, r, g = canonical_h5()
    return Target(graph, z, r, g)


def target_from_graph(graph: Hypergraph, z: int) -> Target:
    """Wrap an arbitrary candidate; requires z to have degree exactly 2."""
    incident = sorted(e for e in graph.edges if z in e)
    if len(incident) != 2:
        raise ValueError(f"designated vertex {z} has degree {len(incident)}, need 2")
    return Target(graph, z, incident[0], incident[1])
