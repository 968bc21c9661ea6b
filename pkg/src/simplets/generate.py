"""Random simplicial complex generators for experiments.

Two models over an Erdos-Renyi base graph: ``flag`` takes every clique of
size <= 4 as a simplex (clique complex truncated at dimension 3); ``lm``
fills each graph triangle independently and fills a tetrahedron only when
all four of its boundary triangles were filled, keeping downward closure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .complexes import SimplicialComplex, build_complex, connected_components
from .errors import InputError, StructuralError

__all__ = ["GenSpec", "generate", "largest_connected_restriction", "RestrictionResult"]

MODELS = ("flag", "lm")


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int
    p_edge: float
    p_tri: float = 0.0
    p_tet: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise InputError(f"model must be one of {MODELS}, got {self.model!r}")
        if self.n < 3:
            raise InputError(f"generator needs n >= 3, got n={self.n}")
        for name in ("p_edge", "p_tri", "p_tet"):
            p = getattr(self, name)
            if not (0.0 <= p <= 1.0):
                raise InputError(f"{name}={p} outside [0, 1]")


def _base_graph(spec: GenSpec, rng: random.Random):
    adjacency: list[set[int]] = [set() for _ in range(spec.n)]
    edges: list[tuple[int, int]] = []
    for u, v in combinations(range(spec.n), 2):
        if rng.random() < spec.p_edge:
            adjacency[u].add(v)
            adjacency[v].add(u)
            edges.append((u, v))
    return adjacency, edges


def _triangles(adjacency, edges) -> list[tuple[int, int, int]]:
    out = []
    for u, v in edges:
        for w in sorted(adjacency[u] & adjacency[v]):
            if w > v:
                out.append((u, v, w))
    return out


def _tetrahedra(adjacency, triangles) -> list[tuple[int, int, int, int]]:
    out = []
    for u, v, w in triangles:
        for x in sorted(adjacency[u] & adjacency[v] & adjacency[w]):
            if x > w:
                out.append((u, v, w, x))
    return out


def generate(spec: GenSpec) -> SimplicialComplex:
    """Generate a complex; deterministic for a fixed spec (seed included).

    Isolated vertices are kept as singleton facets so the vertex count
    survives facet-file round trips.
    """
    rng = random.Random(spec.seed)
    adjacency, edges = _base_graph(spec, rng)
    triangles = _triangles(adjacency, edges)

    if spec.model == "flag":
        filled_tris = triangles
        tetra_candidates = _tetrahedra(adjacency, triangles)
        filled_tets = tetra_candidates
    else:
        filled_tris = [t for t in triangles if rng.random() < spec.p_tri]
        filled_set = set(filled_tris)
        filled_tets = [
            quad
            for quad in _tetrahedra(adjacency, triangles)
            if all(f in filled_set for f in combinations(quad, 3))
            and rng.random() < spec.p_tet
        ]

    in_tet = {f for quad in filled_tets for f in combinations(quad, 3)}
    in_tri = {e for tri in filled_tris for e in combinations(tri, 2)}
    facets: list[tuple[int, ...]] = list(filled_tets)
    facets.extend(t for t in filled_tris if t not in in_tet)
    facets.extend(e for e in edges if e not in in_tri)
    covered = {v for f in facets for v in f}
    facets.extend((v,) for v in range(spec.n) if v not in covered)
    return build_complex(facets, spec.n)


class RestrictionResult(NamedTuple):
    complex: SimplicialComplex
    original_vertices: tuple[int, ...]


def largest_connected_restriction(complex_: SimplicialComplex) -> RestrictionResult:
    """Induced sub-complex on the largest skeleton component, relabeled densely.

    Ties break toward the component containing the lowest vertex id.  Also
    returns the original ids in new-id order so callers can carry labels over.
    """
    if complex_.edge_count == 0:
        raise StructuralError("complex has no edges; nothing to restrict to")
    components = connected_components(complex_)
    best = max(components, key=lambda comp: (len(comp), -min(comp)))
    keep = set(best)
    relabel = {old: new for new, old in enumerate(best)}
    facets = [
        tuple(relabel[v] for v in facet)
        for facet in complex_.facets
        if keep.issuperset(facet)
    ]
    return RestrictionResult(build_complex(facets, len(best)), tuple(best))
