"""Finite k-uniform hypergraphs with canonical sorted-tuple edges.

Vertices are non-negative integers.  An edge is a strictly increasing
k-tuple of vertex ids, so edge equality is set equality.  Hypergraphs are
immutable values; every operation returns a new value, which makes them
safe to share across worker processes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Edge = tuple[int, ...]


class HypergraphError(Exception):
    """Base class for structural errors."""


class WrongArity(HypergraphError):
    """Edge does not have exactly k vertices."""


class DuplicateVertex(HypergraphError):
    """Edge lists the same vertex twice."""


class UnknownVertex(HypergraphError):
    """Vertex not present in the hypergraph."""


class UnknownEdge(HypergraphError):
    """Edge not present in the hypergraph."""


def make_edge(ids: Iterable[int], k: int) -> Edge:
    """Return the canonical (sorted) edge for `ids`.

    Raises WrongArity if there are not exactly k ids and DuplicateVertex
    if any id repeats.
    """
    seq = list(ids)
    if len(seq) != k:
        raise WrongArity(f"expected {k} vertices, got {len(seq)}")
    edge = tuple(sorted(seq))
    for a, b in zip(edge, edge[1:]):
        if a == b:
            raise DuplicateVertex(f"vertex {a} repeated")
    return edge


def intersection_size(e1: Edge, e2: Edge) -> int:
    """Number of vertices shared by two edges."""
    return len(set(e1) & set(e2))


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph over integer vertices.

    `vertices` may strictly contain the union of the edges (isolated
    vertices are allowed when constructed explicitly).
    """

    k: int
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self):
        for e in self.edges:
            if len(e) != self.k or tuple(sorted(set(e))) != e:
                raise WrongArity(f"edge {e} is not a canonical {self.k}-set")
            if not set(e) <= self.vertices:
                raise UnknownVertex(f"edge {e} uses vertices outside the graph")

    @classmethod
    def from_edges(cls, k: int, edges: Iterable[Iterable[int]],
                   extra_vertices: Iterable[int] = ()) -> "Hypergraph":
        es = frozenset(make_edge(e, k) for e in edges)
        vs = frozenset(itertools.chain(extra_vertices, *es))
        return cls(k, vs, es)

    @cached_property
    def incidence(self) -> dict[int, tuple[Edge, ...]]:
        """Vertex -> incident edges, in sorted order (cached)."""
        inc: dict[int, list[Edge]] = {v: [] for v in self.vertices}
        for e in sorted(self.edges):
            for v in e:
                inc[v].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def degree(self, v: int) -> int:
        """Number of edges incident with v."""
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v} not in graph")
        return len(self.incidence[v])

    def degrees(self) -> dict[int, int]:
        return {v: len(self.incidence[v]) for v in self.vertices}

    def min_degree(self) -> int:
        if not self.vertices:
            return 0
        return min(len(es) for es in self.incidence.values())

    def remove_vertex(self, v: int) -> "Hypergraph":
        """Delete v and every edge incident with it.

        The remaining vertex set is exactly vertices - {v}, even if some
        vertices become isolated.
        """
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v} not in graph")
        keep = frozenset(e for e in self.edges if v not in e)
        return Hypergraph(self.k, self.vertices - {v}, keep)

    def remove_edges(self, es: Iterable[Edge]) -> "Hypergraph":
        """Delete the given edges; vertices left isolated are dropped.

        Dropping uncovered vertices makes the vertex set of the result the
        natural domain for monomorphism checks after edge deletion.
        """
        drop = frozenset(es)
        missing = drop - self.edges
        if missing:
            raise UnknownEdge(f"edges not in graph: {sorted(missing)}")
        keep = self.edges - drop
        covered = frozenset(itertools.chain.from_iterable(keep))
        return Hypergraph(self.k, covered, keep)

    def to_text(self, designated: dict[str, int] | None = None) -> str:
        """Line-oriented serialization: `k <k>`, header lines, one edge per line."""
        lines = [f"k {self.k}"]
        for name, v in sorted((designated or {}).items()):
            lines.append(f"{name} {v}")
        for e in self.sorted_edges:
            lines.append(" ".join(str(v) for v in e))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> tuple["Hypergraph", dict[str, int]]:
        """Parse the line format; returns the graph and any designated vertices."""
        k = None
        designated: dict[str, int] = {}
        edges: list[list[int]] = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "k":
                k = int(parts[1])
            elif parts[0].isalpha():
                designated[parts[0]] = int(parts[1])
            else:
                edges.append([int(p) for p in parts])
        if k is None:
            raise HypergraphError("missing 'k <uniformity>' header line")
        graph = cls.from_edges(k, edges, extra_vertices=designated.values())
        return graph, designated


@dataclass(frozen=True)
class TightPath:
    """Vertices u1..ut whose consecutive k-windows are all edges."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    def reversed(self) -> "TightPath":
        return TightPath(self.vertices[::-1], self.edges[::-1])


def tight_paths(graph: Hypergraph, length: int) -> set[TightPath]:
    """All tight paths with `length` edges in the graph.

    Two paths are the same when they traverse the same edge sequence, read
    forwards or backwards; each is reported once, with a lexicographically
    minimal witnessing vertex order.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    k = graph.k
    target_len = length + k - 1
    # edge-sequence key (up to reversal) -> smallest witnessing vertex order
    found: dict[tuple[Edge, ...], tuple[int, ...]] = {}

    def record(order: tuple[int, ...]):
        edges = tuple(tuple(sorted(order[i:i + k])) for i in range(length))
        key = min(edges, edges[::-1])
        witness = order if edges <= edges[::-1] else order[::-1]
        prev = found.get(key)
        if prev is None or witness < prev:
            found[key] = witness

    def extend(order: list[int], seen: set[int]):
        if len(order) == target_len:
            record(tuple(order))
            return
        window = set(order[-(k - 1):]) if k > 1 else set()
        for e in graph.incidence[order[-1]]:
            rest = set(e) - window
            if len(rest) == 1:
                (nxt,) = rest
                if nxt not in seen:
                    order.append(nxt)
                    seen.add(nxt)
                    extend(order, seen)
                    seen.remove(nxt)
                    order.pop()

    for e in graph.sorted_edges:
        for perm in itertools.permutations(e):
            extend(list(perm), set(perm))
    return {TightPath(order, key) for key, order in found.items()}
