"""Strong-game draw engine for 5-uniform hypergraphs.

Subpackages: hypergraph primitives, monomorphism matching, the canonical
target construction, a draw-sufficiency verifier, the game engine, the
second player's drawing strategy with a suite of adversaries, a batch
simulation harness with transcript monitors, and an interactive play
service.
"""

from .hypergraph import Edge, Hypergraph, TightPath, make_edge, intersection_size, tight_paths
from .matching import VertexMap, enumerate_monomorphisms, enumerate_embeddings, is_isomorphic
from .target import Target, canonical_h5, canonical_target

__all__ = [
    "Edge",
    "Hypergraph",
    "TightPath",
    "Target",
    "VertexMap",
    "canonical_h5",
    "canonical_target",
    "enumerate_embeddings",
    "enumerate_monomorphisms",
    "intersection_size",
    "is_isomorphic",
    "make_edge",
    "tight_paths",
]
