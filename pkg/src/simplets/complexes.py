"""Simplicial complexes stored as facet lists, plus induced sub-complex queries.

A complex is represented by its maximal simplices (facets).  Downward closure
then holds by construction: a vertex set spans a simplex exactly when it is a
subset of some facet.
"""

from __future__ import annotations

import operator
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import InputError, StructuralError

__all__ = [
    "SimplicialComplex",
    "Simplet",
    "DiameterEstimate",
    "build_complex",
    "contains_simplex",
    "induced_subcomplex",
    "skeleton_diameter",
    "connected_components",
]

DEFAULT_DIAMETER_EXACT_THRESHOLD = 2048


class SimplicialComplex:
    """Immutable simplicial complex over dense vertex ids ``[0, n)``.

    Construct through :func:`build_complex`; instances are safe for concurrent
    read access.
    """

    __slots__ = ("vertex_count", "facets", "adjacency", "max_degree", "_incidence")

    def __init__(self, vertex_count: int, facets: tuple[frozenset[int], ...]):
        self.vertex_count = vertex_count
        self.facets = facets
        incidence: list[set[int]] = [set() for _ in range(vertex_count)]
        adjacency: list[set[int]] = [set() for _ in range(vertex_count)]
        for idx, facet in enumerate(facets):
            for v in facet:
                incidence[v].add(idx)
            for u, v in combinations(sorted(facet), 2):
                adjacency[u].add(v)
                adjacency[v].add(u)
        self._incidence: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in incidence)
        self.adjacency: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adjacency)
        self.max_degree = max((len(s) for s in self.adjacency), default=0)

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(n={self.vertex_count}, facets={len(self.facets)}, "
            f"edges={self.edge_count}, max_degree={self.max_degree})"
        )

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All 1-simplices as sorted pairs, in deterministic order."""
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def _check_vertices(self, vertices: Iterable[int]) -> tuple[int, ...]:
        vs = tuple(vertices)
        if not vs:
            raise InputError("vertex set must be non-empty")
        for v in vs:
            if not (0 <= v < self.vertex_count):
                raise InputError(f"vertex id {v} out of range [0, {self.vertex_count})")
        return vs

    def contains_simplex(self, vertices: Iterable[int]) -> bool:
        """True iff the vertex set spans a simplex, i.e. lies inside some facet."""
        vs = self._check_vertices(vertices)
        common = self._incidence[vs[0]]
        for v in vs[1:]:
            common = common & self._incidence[v]
            if not common:
                return False
        return bool(common)

    def skeleton_connected_on(self, vertices: Iterable[int]) -> bool:
        """True iff the 1-skeleton induced on the given vertices is connected."""
        vs = set(vertices)
        if not vs:
            return False
        start = next(iter(vs))
        seen = {start}
        queue = deque((start,))
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u] & vs:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(vs)


@dataclass(frozen=True)
class Simplet:
    """A connected induced sub-complex of ``host``, identified by its vertex set.

    Construct through :func:`induced_subcomplex` (or the sampler), which
    enforce connectivity; the constructor itself does not re-validate.
    """

    host: SimplicialComplex = field(compare=False, repr=False)
    vertices: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.vertices)

    def simplices(self) -> tuple[tuple[int, ...], ...]:
        """Induced simplices of dimension >= 1, sorted by (size, vertex tuple)."""
        host = self.host
        vs = self.vertices
        out = [(u, v) for u, v in combinations(vs, 2) if v in host.adjacency[u]]
        for size in range(3, len(vs) + 1):
            for sub in combinations(vs, size):
                if host.contains_simplex(sub):
                    out.append(sub)
        out.sort(key=lambda s: (len(s), s))
        return tuple(out)


class DiameterEstimate(NamedTuple):
    value: int
    exact: bool


def build_complex(facet_list: Iterable[Iterable[int]], vertex_count: int) -> SimplicialComplex:
    """Build a complex from candidate facets, dropping duplicates and non-maximal entries.

    Every vertex id must lie in ``[0, vertex_count)`` and every facet must be
    non-empty.  Entries that are subsets of other entries are removed so the
    stored facets form an antichain.
    """
    if vertex_count < 0:
        raise InputError("vertex_count must be nonnegative")
    candidates: set[frozenset[int]] = set()
    for entry in facet_list:
        try:
            facet = frozenset(operator.index(v) for v in entry)
        except TypeError as exc:
            raise InputError(f"non-integer vertex id in facet {entry!r}") from exc
        if not facet:
            raise InputError("empty facet")
        for v in facet:
            if not (0 <= v < vertex_count):
                raise InputError(f"vertex id {v} out of range [0, {vertex_count})")
        candidates.add(facet)

    # Largest first: a candidate is a facet iff no already-kept set contains it.
    kept: list[frozenset[int]] = []
    incidence: list[set[int]] = [set() for _ in range(vertex_count)]
    for facet in sorted(candidates, key=lambda f: (-len(f), sorted(f))):
        it = iter(facet)
        common = set(incidence[next(it)])
        for v in it:
            common &= incidence[v]
            if not common:
                break
        if common:
            continue
        idx = len(kept)
        kept.append(facet)
        for v in facet:
            incidence[v].add(idx)
    return SimplicialComplex(vertex_count, tuple(kept))


def contains_simplex(complex_: SimplicialComplex, vertices: Iterable[int]) -> bool:
    """True iff ``vertices`` spans a simplex of the complex."""
    return complex_.contains_simplex(vertices)


def induced_subcomplex(complex_: SimplicialComplex, vertices: Iterable[int]) -> Simplet | None:
    """The simplet induced on ``vertices``, or None if its skeleton is disconnected.

    Requires at least two vertices; the result contains every simplex of the
    host whose vertices lie in the given set.
    """
    vs = tuple(sorted(set(complex_._check_vertices(vertices))))
    if len(vs) < 2:
        raise InputError("a simplet needs at least two vertices")
    if not complex_.skeleton_connected_on(vs):
        return None
    return Simplet(complex_, vs)


def _bfs_distances(complex_: SimplicialComplex, start: int) -> list[int]:
    dist = [-1] * complex_.vertex_count
    dist[start] = 0
    queue = deque((start,))
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in complex_.adjacency[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def connected_components(complex_: SimplicialComplex) -> list[list[int]]:
    """Connected components of the 1-skeleton (isolated vertices are singletons)."""
    seen = [False] * complex_.vertex_count
    components: list[list[int]] = []
    for v in range(complex_.vertex_count):
        if seen[v]:
            continue
        seen[v] = True
        comp = [v]
        queue = deque((v,))
        while queue:
            u = queue.popleft()
            for w in complex_.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        components.append(sorted(comp))
    return components


def skeleton_diameter(
    complex_: SimplicialComplex,
    exact_threshold: int = DEFAULT_DIAMETER_EXACT_THRESHOLD,
) -> DiameterEstimate:
    """Diameter of the 1-skeleton.

    Exact all-pairs BFS when ``n <= exact_threshold``; otherwise a double-sweep
    lower-bound estimate (two BFS passes), flagged ``exact=False``.  The
    skeleton must be connected.
    """
    n = complex_.vertex_count
    if n <= 1:
        return DiameterEstimate(0, True)
    dist = _bfs_distances(complex_, 0)
    if min(dist) < 0:
        unreachable = dist.index(-1)
        raise StructuralError(
            f"1-skeleton is disconnected: no path between vertices 0 and {unreachable}"
        )
    if n <= exact_threshold:
        diameter = max(dist)
        for v in range(1, n):
            ecc = max(_bfs_distances(complex_, v))
            if ecc > diameter:
                diameter = ecc
        return DiameterEstimate(diameter, True)
    far = max(range(n), key=lambda v: dist[v])
    estimate = max(_bfs_distances(complex_, far))
    return DiameterEstimate(estimate, False)
