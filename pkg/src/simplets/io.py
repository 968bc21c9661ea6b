"""Facet-file parsing and writing.

Format: one facet per line, whitespace-separated vertex labels; ``#`` starts
a comment line and blank lines are ignored.  Labels are arbitrary tokens and
are mapped to dense integer ids in order of first appearance; the mapping is
returned so outputs can echo the original labels.
"""

from __future__ import annotations

from pathlib import Path
from typing import IO, Iterable, NamedTuple

from .complexes import SimplicialComplex, build_complex
from .errors import InputError

__all__ = ["ParsedFacets", "read_facets", "load_complex", "write_facets"]


class ParsedFacets(NamedTuple):
    facets: list[tuple[int, ...]]
    labels: list[str]


def _lines(source: str | Path | IO[str]) -> Iterable[str]:
    if isinstance(source, (str, Path)):
        try:
            handle = open(source, "r", encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read facet file {source}: {exc}") from exc
        with handle:
            yield from handle
    else:
        yield from source


def read_facets(source: str | Path | IO[str]) -> ParsedFacets:
    """Parse a facet file into integer facets plus the label table."""
    ids: dict[str, int] = {}
    facets: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        facet = []
        for token in tokens:
            if token not in ids:
                ids[token] = len(ids)
            facet.append(ids[token])
        if len(set(facet)) != len(facet):
            raise InputError(f"line {lineno}: repeated vertex label in facet {tokens}")
        facets.append(tuple(facet))
    if not facets:
        raise InputError("no facets found in input")
    return ParsedFacets(facets, list(ids))


def load_complex(source: str | Path | IO[str]) -> tuple[SimplicialComplex, list[str]]:
    """Read a facet file and build the complex; returns (complex, labels)."""
    facets, labels = read_facets(source)
    return build_complex(facets, len(labels)), labels


def write_facets(
    destination: str | Path | IO[str],
    complex_: SimplicialComplex,
    labels: list[str] | None = None,
) -> None:
    """Write the facets of a complex, one per line.

    Vertices outside every facet are written as singleton lines so the vertex
    count round-trips through the format.
    """
    if labels is not None and len(labels) != complex_.vertex_count:
        raise InputError("labels must cover every vertex")

    def name(v: int) -> str:
        return labels[v] if labels is not None else str(v)

    lines = [" ".join(name(v) for v in sorted(facet)) for facet in complex_.facets]
    covered = {v for facet in complex_.facets for v in facet}
    lines.extend(name(v) for v in range(complex_.vertex_count) if v not in covered)

    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8") as handle:
            handle.write("\n".join(lines) + "\n")
    else:
        destination.write("\n".join(lines) + "\n")
