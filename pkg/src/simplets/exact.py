"""Exact simplet enumeration and the exact SFD vector.

The enumeration walks connected vertex sets of the 1-skeleton using
extension candidates restricted to ids above the root vertex, so every
connected subset appears exactly once without a global seen-set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .catalog import SimpletCatalog, TypeClassifier
from .complexes import Simplet, SimplicialComplex
from .errors import InputError, StructuralError

__all__ = [
    "SFDVector",
    "enumerate_connected_subsets",
    "exact_counts",
    "sfd_from_counts",
]


@dataclass(frozen=True)
class SFDVector:
    """Simplet frequency distribution over the catalog order.

    ``frequencies`` is a length-N_m vector in [0, 1] summing to 1; ``counts``
    carries the raw per-type tallies when the vector came from counting or
    sampling.
    """

    catalog_m: int
    frequencies: tuple[float, ...]
    counts: tuple[int, ...] | None = None
    total: int | None = None
    mode: str = "exact"

    def __post_init__(self) -> None:
        if any(f < 0.0 or f > 1.0 for f in self.frequencies):
            raise InputError("frequencies must lie in [0, 1]")
        if not math.isclose(sum(self.frequencies), 1.0, rel_tol=0.0, abs_tol=1e-9):
            raise InputError("frequencies must sum to 1")
        if self.counts is not None:
            if len(self.counts) != len(self.frequencies):
                raise InputError("counts and frequencies must have equal length")
            if self.total != sum(self.counts):
                raise InputError("total must equal the sum of counts")

    def __len__(self) -> int:
        return len(self.frequencies)

    def to_json_obj(self) -> dict:
        obj: dict = {
            "m": self.catalog_m,
            "frequencies": list(self.frequencies),
            "mode": self.mode,
        }
        if self.counts is not None:
            obj["counts"] = list(self.counts)
            obj["total"] = self.total
        return obj


def sfd_from_counts(
    counts: Sequence[int], catalog_m: int, mode: str = "exact"
) -> SFDVector:
    """Normalize nonnegative integer counts into an SFD vector."""
    if any(c < 0 for c in counts):
        raise InputError("counts must be nonnegative")
    total = sum(counts)
    if total == 0:
        raise InputError("cannot normalize an all-zero count vector")
    return SFDVector(
        catalog_m=catalog_m,
        frequencies=tuple(c / total for c in counts),
        counts=tuple(int(c) for c in counts),
        total=total,
        mode=mode,
    )


def enumerate_connected_subsets(
    complex_: SimplicialComplex, m: int
) -> Iterator[tuple[int, ...]]:
    """Yield every vertex set of size 2..m whose induced skeleton is connected.

    Each subset is produced exactly once, as a sorted tuple, in a
    deterministic order for a fixed complex.
    """
    if m < 2:
        raise InputError(f"m must be at least 2, got {m}")
    adj = complex_.adjacency

    def extend(
        root: int, sub: tuple[int, ...], ext: list[int], closed: frozenset[int]
    ) -> Iterator[tuple[int, ...]]:
        stop = len(sub) + 1 >= m
        for i, w in enumerate(ext):
            new_sub = sub + (w,)
            yield tuple(sorted(new_sub))
            if stop:
                continue
            new_ext = ext[i + 1 :] + [u for u in adj[w] if u > root and u not in closed]
            yield from extend(root, new_sub, new_ext, closed | adj[w])

    for root in range(complex_.vertex_count):
        ext0 = sorted(u for u in adj[root] if u > root)
        if ext0:
            yield from extend(root, (root,), ext0, adj[root] | {root})


def exact_counts(complex_: SimplicialComplex, catalog: SimpletCatalog) -> SFDVector:
    """Exact per-type simplet counts and frequencies over the given catalog."""
    classifier = TypeClassifier(catalog)
    counts = [0] * len(catalog)
    for vs in enumerate_connected_subsets(complex_, catalog.m):
        counts[classifier.index_of(Simplet(complex_, vs))] += 1
    if sum(counts) == 0:
        raise StructuralError("complex has no simplets: the 1-skeleton has no edges")
    return sfd_from_counts(counts, catalog.m, mode="exact")
