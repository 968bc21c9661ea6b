"""Uniform simplet sampling via a Metropolis-style walk on the simplet state graph.

States are the simplets of the host complex with 2..m vertices, encoded as
sorted vertex tuples.  Moves add, remove, or swap one vertex while keeping
the induced skeleton connected.  Transition probabilities are
``T(i, j) = min(1/d(i), 1/d(j))`` for neighboring states, with the residual
mass on a self-loop, which makes ``T`` symmetric and doubly stochastic and
hence the stationary distribution uniform over all states.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

from .complexes import Simplet, SimplicialComplex, skeleton_diameter
from .errors import InputError, IntegrityError, StructuralError

__all__ = [
    "WalkConfig",
    "SimpletSampler",
    "state_neighbors",
    "state_degree",
    "transition_step",
    "burn_in_steps",
    "sample_uniform_simplet",
    "transition_matrix",
]

State = tuple[int, ...]

FRESH_CHAIN = "fresh_chain"
THINNED = "thinned"

# Move segments are memoized per visited state up to this many states; beyond
# it only the (cheap) degree cache keeps growing.
_SEGMENT_CACHE_CAP = 20_000


@dataclass(frozen=True)
class WalkConfig:
    """Random-walk parameters.

    ``burn_in`` overrides the mixing-bound heuristic when set; otherwise the
    sampler uses ``burn_in_steps`` with ``c_mix``.  ``thinning_gap`` (thinned
    mode only) defaults to the burn-in length.
    """

    m: int
    burn_in: int | None = None
    c_mix: float = 1.0
    per_sample_mode: str = FRESH_CHAIN
    thinning_gap: int | None = None
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.m < 3:
            raise InputError(f"the sampler requires m >= 3, got m={self.m}")
        if self.burn_in is not None and self.burn_in < 1:
            raise InputError("burn_in must be a positive integer")
        if self.c_mix <= 0:
            raise InputError("c_mix must be positive")
        if self.per_sample_mode not in (FRESH_CHAIN, THINNED):
            raise InputError(f"unknown per_sample_mode {self.per_sample_mode!r}")
        if self.thinning_gap is not None and self.thinning_gap < 1:
            raise InputError("thinning_gap must be a positive integer")


def _components(adj: Sequence[frozenset[int]], vertices: Sequence[int]) -> list[set[int]]:
    """Connected components of the skeleton induced on a small vertex set."""
    size = len(vertices)
    if size == 1:
        return [{vertices[0]}]
    if size == 2:
        a, b = vertices
        return [{a, b}] if b in adj[a] else [{a}, {b}]
    remaining = set(vertices)
    comps: list[set[int]] = []
    while remaining:
        start = remaining.pop()
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            hits = adj[x] & remaining
            if hits:
                remaining -= hits
                comp |= hits
                stack.extend(hits)
        comps.append(comp)
    return comps


def _expand(
    adj: Sequence[frozenset[int]], state: State, m: int, materialize: bool
):
    """Degree and (optionally) the move segments of a state.

    Returns ``(degree, segments)`` where segments is a list of
    ``("add", [v, ...])``, ``("remove", [u, ...])`` and ``("swap", u, [v, ...])``
    entries in that order, or None when ``materialize`` is false.
    """
    k = len(state)
    sset = set(state)
    degree = 0
    segments: list[tuple] | None = [] if materialize else None
    union = set().union

    if k < m:
        adds = union(*(adj[v] for v in state)) - sset
        if adds:
            degree += len(adds)
            if materialize:
                segments.append(("add", sorted(adds)))

    removable: list[int] = []
    swap_entries: list[tuple[int, list[int]]] = []
    for u in state:
        rest = [x for x in state if x != u]
        comps = _components(adj, rest)
        if len(comps) == 1:
            if k > 2:
                removable.append(u)
            cand = union(*(adj[x] for x in rest)) - sset
        else:
            # A replacement vertex must neighbor every component of the
            # remainder, i.e. lie in the intersection of their neighborhoods.
            cand = union(*(adj[x] for x in comps[0]))
            for comp in comps[1:]:
                cand &= union(*(adj[x] for x in comp))
                if not cand:
                    break
            cand -= sset
        if cand:
            degree += len(cand)
            if materialize:
                swap_entries.append((u, sorted(cand)))
    degree += len(removable)
    if materialize:
        if removable:
            segments.append(("remove", removable))
        segments.extend(("swap", u, vs) for u, vs in swap_entries)
    return degree, segments


def state_neighbors(
    complex_: SimplicialComplex, state: Sequence[int], m: int
) -> list[State]:
    """All distinct states one add/remove/swap move away from ``state``."""
    s = tuple(sorted(state))
    _, segments = _expand(complex_.adjacency, s, m, materialize=True)
    out: list[State] = []
    for seg in segments:
        if seg[0] == "add":
            out.extend(tuple(sorted(s + (v,))) for v in seg[1])
        elif seg[0] == "remove":
            out.extend(tuple(x for x in s if x != u) for u in seg[1])
        else:
            _, u, vs = seg
            rest = [x for x in s if x != u]
            out.extend(tuple(sorted(rest + [v])) for v in vs)
    return sorted(set(out))


def state_degree(complex_: SimplicialComplex, state: Sequence[int], m: int) -> int:
    """Number of out-neighbors of a state in the walk graph."""
    degree, _ = _expand(complex_.adjacency, tuple(sorted(state)), m, materialize=False)
    return degree


def burn_in_steps(
    complex_: SimplicialComplex, c_mix: float, diameter: int | None = None
) -> int:
    """Walk length from the mixing-time bound: ceil(c_mix * ln(max(n,3)) * max_degree * diam^2)."""
    if c_mix <= 0:
        raise InputError("c_mix must be positive")
    if diameter is None:
        diameter = skeleton_diameter(complex_).value
    n = complex_.vertex_count
    raw = c_mix * math.log(max(n, 3)) * complex_.max_degree * diameter * diameter
    return max(1, math.ceil(raw))


class SimpletSampler:
    """Draws uniformly distributed simplets from a connected host complex.

    In ``fresh_chain`` mode every sample starts a new chain at a uniformly
    random edge and walks for the burn-in length, which gives independent
    samples.  In ``thinned`` mode one chain persists across calls and
    advances ``thinning_gap`` steps per sample (faster, samples correlated).
    """

    def __init__(
        self,
        complex_: SimplicialComplex,
        config: WalkConfig,
        rng: random.Random | None = None,
    ):
        if complex_.vertex_count < 3:
            raise StructuralError(
                f"sampler requires at least 3 vertices, got {complex_.vertex_count}"
            )
        diameter = skeleton_diameter(complex_).value  # raises if disconnected
        self.complex = complex_
        self.config = config
        self.burn_in = (
            config.burn_in
            if config.burn_in is not None
            else burn_in_steps(complex_, config.c_mix, diameter=diameter)
        )
        self.thinning_gap = config.thinning_gap or self.burn_in
        self._rng = rng if rng is not None else random.Random(config.rng_seed)
        self._adj = complex_.adjacency
        self._edges = complex_.edges()
        self._degree_cache: dict[State, int] = {}
        self._segment_cache: dict[State, tuple[int, list[tuple]]] = {}
        self._current: State | None = None
        self._info: tuple[int, list[tuple]] | None = None
        self.steps_taken = 0

    def _degree(self, state: State) -> int:
        d = self._degree_cache.get(state)
        if d is None:
            d, _ = _expand(self._adj, state, self.config.m, materialize=False)
            self._degree_cache[state] = d
        return d

    def _arrive(self, state: State) -> None:
        info = self._segment_cache.get(state)
        if info is None:
            info = _expand(self._adj, state, self.config.m, materialize=True)
            if len(self._segment_cache) < _SEGMENT_CACHE_CAP:
                self._segment_cache[state] = info
            self._degree_cache[state] = info[0]
        self._current = state
        self._info = info

    def _neighbor_at(self, index: int) -> State:
        s = self._current
        for seg in self._info[1]:
            kind = seg[0]
            if kind == "add":
                vs = seg[1]
                if index < len(vs):
                    return tuple(sorted(s + (vs[index],)))
                index -= len(vs)
            elif kind == "remove":
                us = seg[1]
                if index < len(us):
                    u = us[index]
                    return tuple(x for x in s if x != u)
                index -= len(us)
            else:
                _, u, vs = seg
                if index < len(vs):
                    rest = [x for x in s if x != u]
                    rest.append(vs[index])
                    rest.sort()
                    return tuple(rest)
                index -= len(vs)
        raise IntegrityError("neighbor index out of range; degree bookkeeping is broken")

    def _step(self) -> None:
        d_s = self._info[0]
        if d_s == 0:
            raise IntegrityError("reached a sink state; impossible for a connected host")
        rng = self._rng
        proposal = self._neighbor_at(rng.randrange(d_s))
        d_j = self._degree(proposal)
        if d_j <= d_s or rng.random() < d_s / d_j:
            self._arrive(proposal)
        self.steps_taken += 1

    def _start_chain(self) -> None:
        edge = self._edges[self._rng.randrange(len(self._edges))]
        self._arrive(edge)
        for _ in range(self.burn_in):
            self._step()

    def sample(self) -> Simplet:
        """One simplet distributed (approximately) uniformly over all states."""
        if self.config.per_sample_mode == FRESH_CHAIN or self._current is None:
            self._start_chain()
        else:
            for _ in range(self.thinning_gap):
                self._step()
        return Simplet(self.complex, self._current)


def transition_step(
    complex_: SimplicialComplex, state: Sequence[int], m: int, rng: random.Random
) -> State:
    """One transition of the walk from ``state``: propose a uniform neighbor,
    accept with probability min(1, d(state)/d(neighbor)), else stay."""
    s = tuple(sorted(state))
    neighbors = state_neighbors(complex_, s, m)
    d_s = len(neighbors)
    if d_s == 0:
        raise StructuralError(f"state {s} has no neighbors")
    proposal = neighbors[rng.randrange(d_s)]
    d_j = state_degree(complex_, proposal, m)
    if d_j <= d_s or rng.random() < d_s / d_j:
        return proposal
    return s


def sample_uniform_simplet(
    complex_: SimplicialComplex, config: WalkConfig, rng: random.Random | None = None
) -> Simplet:
    """One-shot uniform simplet draw; use SimpletSampler for repeated draws."""
    return SimpletSampler(complex_, config, rng=rng).sample()


def transition_matrix(complex_: SimplicialComplex, m: int):
    """Explicit transition matrix over all states, for diagnostics and tests.

    Returns ``(states, T)`` with states sorted and ``T`` a dense numpy array.
    Only usable on small complexes; the state count grows quickly.
    """
    import numpy as np

    from .exact import enumerate_connected_subsets

    states = sorted(enumerate_connected_subsets(complex_, m))
    position = {s: i for i, s in enumerate(states)}
    count = len(states)
    matrix = np.zeros((count, count))
    degrees = [state_degree(complex_, s, m) for s in states]
    for i, s in enumerate(states):
        for t in state_neighbors(complex_, s, m):
            j = position[t]
            matrix[i, j] = min(1.0 / degrees[i], 1.0 / degrees[j])
        # the true residual is >= 0; clamp the float rounding of exact zeros
        matrix[i, i] = max(0.0, 1.0 - matrix[i].sum())
    return states, matrix
