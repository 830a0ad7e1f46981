"""Monomorphism and embedding enumeration for small uniform hypergraphs.

A monomorphism is an injective vertex map sending every template edge to a
host edge.  The production matcher anchors a template edge on a host edge,
then extends vertex by vertex along a precompiled plan, pruning with degree
bounds and edge-intersection feasibility.  Two deliberately unclever oracles
are kept alongside it so the matcher can be cross-checked: one enumerates
raw injections, the other is a plain depth-first extension with no ordering
or pruning.

Everything here is pure and operates on immutable inputs, so callers may
fan out searches across threads or processes freely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .hypergraph import Edge, Hypergraph


@dataclass(frozen=True)
class VertexMap:
    """An injective partial map between vertex sets."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        srcs = [a for a, _ in self.pairs]
        dsts = [b for _, b in self.pairs]
        if len(set(srcs)) != len(srcs):
            raise ValueError("map has a repeated source vertex")
        if len(set(dsts)) != len(dsts):
            raise ValueError("map is not injective")

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "VertexMap":
        return cls(tuple(sorted(d.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.pairs)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(b for _, b in self.pairs)

    def apply(self, v: int) -> int:
        for a, b in self.pairs:
            if a == v:
                return b
        raise KeyError(v)

    def apply_edge(self, edge: Edge) -> Edge:
        d = dict(self.pairs)
        return tuple(sorted(d[v] for v in edge))

    def is_identity(self) -> bool:
        return all(a == b for a, b in self.pairs)

    def preserves_edges(self, template: Hypergraph, host_edges: frozenset[Edge]) -> bool:
        """Re-check the defining property edge by edge."""
        d = dict(self.pairs)
        return all(tuple(sorted(d[v] for v in e)) in host_edges for e in template.edges)


class HostIndex:
    """Incidence structure over a fixed set of host edges.

    Intersection histograms against anchor edges are cached because one
    anchor is typically probed by many templates in a row.
    """

    def __init__(self, edges: Iterable[Edge], vertices: Iterable[int] = ()):
        self.edges: tuple[Edge, ...] = tuple(sorted(set(edges)))
        self.edge_set: frozenset[Edge] = frozenset(self.edges)
        inc: dict[int, list[Edge]] = {}
        for e in self.edges:
            for v in e:
                inc.setdefault(v, []).append(e)
        for v in vertices:
            inc.setdefault(v, [])
        self.incidence: dict[int, list[Edge]] = inc
        self.degree: dict[int, int] = {v: len(es) for v, es in inc.items()}
        self.vertices: tuple[int, ...] = tuple(sorted(inc))
        self._hist_cache: dict[Edge, dict[int, int]] = {}
        self._anchor_deg_cache: dict[Edge, tuple[int, ...]] = {}

    def intersection_histogram(self, anchor: Edge) -> dict[int, int]:
        hist = self._hist_cache.get(anchor)
        if hist is None:
            hist = {}
            a = set(anchor)
            for e in self.edges:
                c = len(a.intersection(e))
                hist[c] = hist.get(c, 0) + 1
            self._hist_cache[anchor] = hist
        return hist

    def anchor_degrees(self, anchor: Edge) -> tuple[int, ...]:
        degs = self._anchor_deg_cache.get(anchor)
        if degs is None:
            degs = tuple(sorted(self.degree[v] for v in anchor))
            self._anchor_deg_cache[anchor] = degs
        return degs


# A plan step: (vertex to place, mapped part of its support edge, edges that
# become fully mapped once it is placed).
_Step = tuple[int, tuple[int, ...] | None, tuple[Edge, ...]]


class CompiledTemplate:
    """A template prepared for repeated matching.

    For each anchor edge the plan orders the remaining vertices so that each
    one is placed inside a template edge with as many vertices already
    mapped as possible; its candidates are then confined to host edges
    covering the mapped part.
    """

    def __init__(self, graph: Hypergraph):
        self.graph = graph
        self.k = graph.k
        self.vertices = tuple(sorted(graph.vertices))
        self.edges = graph.sorted_edges
        self.degree = {v: graph.degree(v) for v in self.vertices}
        # degree profile of each edge, ascending, for pointwise prefilters
        self.edge_profile = {
            e: tuple(sorted(self.degree[v] for v in e)) for e in self.edges
        }
        self.pair_inter = {
            (s, t): len(set(s) & set(t))
            for s in self.edges for t in self.edges if s != t
        }
        # vertices of each edge, most constrained first
        self.edge_order = {
            e: tuple(sorted(e, key=lambda v: (-self.degree[v], v))) for e in self.edges
        }
        self._plans: dict[Edge, tuple[_Step, ...]] = {}

    def plan(self, anchor: Edge) -> tuple[_Step, ...]:
        cached = self._plans.get(anchor)
        if cached is not None:
            return cached
        mapped = set(anchor)
        completed = {e for e in self.edges if set(e) <= mapped}
        pending = [v for v in self.vertices if v not in mapped]
        steps: list[_Step] = []
        while pending:
            best = None
            for x in pending:
                for s in self.graph.incidence[x]:
                    ov = len(set(s) & mapped)
                    if ov == 0:
                        continue
                    cand = (ov, self.degree[x], -x, x, s)
                    if best is None or cand > best:
                        best = cand
            if best is None:
                x = max(pending, key=lambda v: (self.degree[v], -v))
                support = None
            else:
                x, s = best[3], best[4]
                support = tuple(u for u in s if u in mapped)
            mapped.add(x)
            checks = tuple(
                e for e in self.edges if e not in completed and set(e) <= mapped
            )
            completed.update(checks)
            steps.append((x, support, checks))
            pending.remove(x)
        plan = tuple(steps)
        self._plans[anchor] = plan
        return plan


def _anchored_maps(ct: CompiledTemplate, host: HostIndex, anchor: Edge,
                   template_edge: Edge) -> Iterator[dict[int, int]]:
    """All monomorphisms mapping `template_edge` onto `anchor`."""
    anchor_degs = host.anchor_degrees(anchor)
    profile = ct.edge_profile[template_edge]
    if any(p > a for p, a in zip(profile, anchor_degs)):
        return
    hist = host.intersection_histogram(anchor)
    for s in ct.edges:
        if s != template_edge:
            if hist.get(ct.pair_inter[(s, template_edge)], 0) == 0:
                return
    plan = ct.plan(template_edge)
    order = ct.edge_order[template_edge]
    degree = ct.degree
    hdeg = host.degree
    edge_set = host.edge_set
    incidence = host.incidence
    phi: dict[int, int] = {}
    used: set[int] = set()

    def place_anchor(i: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield from extend(0)
            return
        x = order[i]
        need = degree[x]
        for w in anchor:
            if w not in used and hdeg[w] >= need:
                phi[x] = w
                used.add(w)
                yield from place_anchor(i + 1)
                used.remove(w)
                del phi[x]

    def extend(i: int) -> Iterator[dict[int, int]]:
        if i == len(plan):
            yield dict(phi)
            return
        x, support, checks = plan[i]
        need = degree[x]
        if support is None:
            candidates = [w for w in host.vertices if w not in used and hdeg[w] >= need]
        else:
            part = [phi[u] for u in support]
            pivot = min(part, key=lambda w: hdeg[w])
            part_set = set(part)
            seen: set[int] = set()
            candidates = []
            for h in incidence[pivot]:
                if part_set <= set(h):
                    for w in h:
                        if w not in part_set and w not in used and w not in seen:
                            if hdeg[w] >= need:
                                seen.add(w)
                                candidates.append(w)
        for w in sorted(candidates):
            phi[x] = w
            ok = True
            for c in checks:
                if tuple(sorted(phi[u] for u in c)) not in edge_set:
                    ok = False
                    break
            if ok:
                used.add(w)
                yield from extend(i + 1)
                used.remove(w)
            del phi[x]

    yield from place_anchor(0)


def _all_injections_maps(template: Hypergraph, host_vertices: tuple[int, ...],
                         host_edges: frozenset[Edge]) -> Iterator[dict[int, int]]:
    dom = tuple(sorted(template.vertices))
    tedges = template.sorted_edges
    for image in itertools.permutations(host_vertices, len(dom)):
        phi = dict(zip(dom, image))
        if all(tuple(sorted(phi[v] for v in e)) in host_edges for e in tedges):
            yield phi


def embeddings_through(template: Hypergraph | CompiledTemplate, host: HostIndex,
                       anchor: Edge) -> list[VertexMap]:
    """Monomorphisms into the host whose image contains `anchor`.

    Each qualifying map is produced exactly once: the template edge landing
    on the anchor is unique per map, so iterating anchoring choices cannot
    repeat a map.
    """
    ct = template if isinstance(template, CompiledTemplate) else CompiledTemplate(template)
    if anchor not in host.edge_set:
        return []
    if len(ct.vertices) > len(host.vertices) or len(ct.edges) > len(host.edges):
        return []
    out = []
    for t in ct.edges:
        for phi in _anchored_maps(ct, host, anchor, t):
            out.append(VertexMap.from_dict(phi))
    return out


def enumerate_embeddings(template: Hypergraph | CompiledTemplate,
                         host_edges: Iterable[Edge]) -> list[VertexMap]:
    """All monomorphisms of the template into the graph induced by host_edges."""
    ct = template if isinstance(template, CompiledTemplate) else CompiledTemplate(template)
    host = host_edges if isinstance(host_edges, HostIndex) else HostIndex(host_edges)
    if len(ct.vertices) > len(host.vertices) or len(ct.edges) > len(host.edges):
        return []
    if not ct.edges:
        return [VertexMap.from_dict(dict(zip(sorted(ct.vertices), image)))
                for image in itertools.permutations(host.vertices, len(ct.vertices))]
    t0 = max(ct.edges, key=lambda e: (sum(ct.degree[v] for v in e), e))
    out = []
    for a in host.edges:
        for phi in _anchored_maps(ct, host, a, t0):
            out.append(VertexMap.from_dict(phi))
    return sorted(out, key=lambda m: m.pairs)


def enumerate_monomorphisms(template: Hypergraph, host: Hypergraph) -> list[VertexMap]:
    """All injective maps V(template) -> V(host) sending edges to edges."""
    if template.k != host.k:
        raise ValueError("uniformity mismatch")
    ct = CompiledTemplate(template)
    hidx = HostIndex(host.edges, vertices=host.vertices)
    if len(ct.vertices) > len(hidx.vertices) or len(ct.edges) > len(hidx.edges):
        return []
    if not ct.edges:
        return [VertexMap.from_dict(dict(zip(sorted(ct.vertices), image)))
                for image in itertools.permutations(hidx.vertices, len(ct.vertices))]
    t0 = max(ct.edges, key=lambda e: (sum(ct.degree[v] for v in e), e))
    out = []
    for a in hidx.edges:
        for phi in _anchored_maps(ct, hidx, a, t0):
            out.append(VertexMap.from_dict(phi))
    return sorted(out, key=lambda m: m.pairs)


def is_isomorphic(a: Hypergraph, b: Hypergraph) -> VertexMap | None:
    """A witness isomorphism between a and b, or None.

    A bijective monomorphism between graphs with equal edge counts is onto
    the edge set, hence an isomorphism.
    """
    if a.k != b.k or len(a.vertices) != len(b.vertices) or len(a.edges) != len(b.edges):
        return None
    if sorted(a.degrees().values()) != sorted(b.degrees().values()):
        return None
    for m in enumerate_monomorphisms(a, b):
        return m
    return None


def monomorphisms_by_exhaustion(template: Hypergraph, host: Hypergraph) -> list[VertexMap]:
    """Oracle: filter every injection of the template vertices into the host.

    Feasible only for small hosts; exists to validate the matcher, so it
    shares none of its ordering or pruning.
    """
    if template.k != host.k:
        raise ValueError("uniformity mismatch")
    hv = tuple(sorted(host.vertices))
    out = [VertexMap.from_dict(phi)
           for phi in _all_injections_maps(template, hv, host.edges)]
    return sorted(out, key=lambda m: m.pairs)


def monomorphisms_by_dfs(template: Hypergraph, host: Hypergraph | Iterable[Edge]) -> list[VertexMap]:
    """Oracle: depth-first injection enumeration with whole-edge abandonment.

    The domain is ordered so template edges complete as early as possible,
    but there is no degree bounding, no anchor choice, and no host-side
    candidate narrowing: every injection is tried until a fully assigned
    template edge fails to land on a host edge.
    """
    if isinstance(host, Hypergraph):
        hverts = tuple(sorted(host.vertices))
        hedges = host.edges
    else:
        hedges = frozenset(tuple(sorted(e)) for e in host)
        hverts = tuple(sorted(set(itertools.chain.from_iterable(hedges))))
    tedges = template.sorted_edges
    dom: list[int] = []
    for e in tedges:
        for v in e:
            if v not in dom:
                dom.append(v)
    for v in sorted(template.vertices):
        if v not in dom:
            dom.append(v)
    position = {v: i for i, v in enumerate(dom)}
    completes_at: dict[int, list[Edge]] = {}
    for e in tedges:
        completes_at.setdefault(max(position[v] for v in e), []).append(e)
    out: list[VertexMap] = []
    phi: dict[int, int] = {}

    def step(i: int):
        if i == len(dom):
            out.append(VertexMap.from_dict(phi))
            return
        x = dom[i]
        for w in hverts:
            if w in phi.values():
                continue
            phi[x] = w
            ok = True
            for e in completes_at.get(i, ()):
                if tuple(sorted(phi[u] for u in e)) not in hedges:
                    ok = False
                    break
            if ok:
                step(i + 1)
            del phi[x]

    step(0)
    return sorted(out, key=lambda m: m.pairs)
