"""Immutable loopless multigraph and its structural operations.

Vertices are integers 0..n-1. Edges are unordered endpoint pairs indexed
0..m-1 in construction order; parallel edges keep distinct indices, which
is what lets weights and polynomial variables attach to individual edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (
    EdgeOutOfRangeError,
    EmptySetError,
    GraphTooLargeError,
    LoopEdgeError,
    ParseError,
    VertexOutOfRangeError,
)

MAX_VERTICES = 64


@dataclass(frozen=True)
class Multigraph:
    """Loopless undirected multigraph with positionally indexed edges."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        if self.n > MAX_VERTICES:
            raise GraphTooLargeError(
                f"at most {MAX_VERTICES} vertices supported, got {self.n}"
            )
        norm = []
        for j, (a, b) in enumerate(self.edges):
            if a == b:
                raise LoopEdgeError(f"edge {j} is a loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise VertexOutOfRangeError(
                    f"edge {j} endpoint out of range: ({a}, {b})"
                )
            norm.append((a, b) if a < b else (b, a))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, (a, b) in enumerate(self.edges):
            inc[a].append(j)
            inc[b].append(j)
        return tuple(tuple(js) for js in inc)

    @cached_property
    def _neighbor_table(self) -> tuple[tuple[int, ...], ...]:
        nbr: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            nbr[a].add(b)
            nbr[b].add(a)
        return tuple(tuple(sorted(s)) for s in nbr)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise VertexOutOfRangeError(f"vertex {v} not in 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        """Endpoint count at v; parallel edges count separately."""
        self._check_vertex(v)
        return len(self._incidence[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(js) for js in self._incidence)

    def incident_edges(self, v: int) -> frozenset[int]:
        """Indices of all edges having v as an endpoint."""
        self._check_vertex(v)
        return frozenset(self._incidence[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Distinct adjacent vertices in ascending order."""
        self._check_vertex(v)
        return self._neighbor_table[v]

    def other_end(self, j: int, v: int) -> int:
        a, b = self.edges[j]
        return b if v == a else a

    def is_connected(self) -> bool:
        """True iff every vertex is reachable from vertex 0; n <= 1 counts as connected."""
        if self.n <= 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        reached = 1
        while stack:
            v = stack.pop()
            for w in self._neighbor_table[v]:
                if not seen[w]:
                    seen[w] = True
                    reached += 1
                    stack.append(w)
        return reached == self.n

    def has_isolated_vertex(self) -> bool:
        return any(len(js) == 0 for js in self._incidence)


def build(n: int, endpoint_pairs: Iterable[tuple[int, int]]) -> Multigraph:
    """Construct a multigraph; edge indices follow the input order."""
    return Multigraph(n, tuple((a, b) for a, b in endpoint_pairs))


class InducedSubgraph(NamedTuple):
    """A vertex-deletion result: the relabeled graph plus maps back to the original."""

    graph: Multigraph
    vertex_map: dict[int, int]
    edge_origin: tuple[int, ...]


def delete_vertices(g: Multigraph, drop: Iterable[int]) -> InducedSubgraph:
    """Induced multigraph on the complement of `drop`.

    Survivors are relabeled to 0..k-1 in ascending original order;
    `vertex_map` maps old labels to new ones and `edge_origin` maps each new
    edge index to the original index it came from.
    """
    dropped = frozenset(drop)
    for v in dropped:
        g._check_vertex(v)
    keep = [v for v in range(g.n) if v not in dropped]
    vmap = {v: i for i, v in enumerate(keep)}
    new_edges = []
    origin = []
    for j, (a, b) in enumerate(g.edges):
        if a in vmap and b in vmap:
            new_edges.append((vmap[a], vmap[b]))
            origin.append(j)
    return InducedSubgraph(Multigraph(len(keep), tuple(new_edges)), vmap, tuple(origin))


def induced(g: Multigraph, keep: Iterable[int]) -> InducedSubgraph:
    """Induced multigraph on a nonempty vertex set, relabeled as in delete_vertices."""
    kept = frozenset(keep)
    if not kept:
        raise EmptySetError("induced subgraph needs at least one vertex")
    for v in kept:
        g._check_vertex(v)
    return delete_vertices(g, (v for v in range(g.n) if v not in kept))


def contract_edge(g: Multigraph, j: int) -> Multigraph:
    """Merge the endpoints of edge j, dropping j and every edge parallel to it.

    Parallel edges would become loops under the merge, and loops never enter
    spanning trees, so they are removed. All other edges survive with
    remapped endpoints; the merged vertex takes the lower endpoint's slot and
    higher labels shift down by one.
    """
    if not (0 <= j < g.m):
        raise EdgeOutOfRangeError(f"edge {j} not in 0..{g.m - 1}")
    a, b = g.edges[j]

    def relabel(v: int) -> int:
        if v == b:
            v = a
        return v - 1 if v > b else v

    new_edges = [
        (relabel(x), relabel(y)) for (x, y) in g.edges if (x, y) != (a, b)
    ]
    return Multigraph(g.n - 1, tuple(new_edges))


def serialize(g: Multigraph) -> str:
    """Emit the line-oriented text format; edge order defines the edge index."""
    lines = [f"n {g.n}"]
    lines.extend(f"e {a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def parse(text: str) -> Multigraph:
    """Parse the text graph format ('#' starts a comment)."""
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate vertex-count line")
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected 'n <count>'")
            n = _parse_int(parts[1], lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge line before vertex count")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e <a> <b>'")
            pairs.append((_parse_int(parts[1], lineno), _parse_int(parts[2], lineno)))
        else:
            raise ParseError(f"line {lineno}: unknown directive {parts[0]!r}")
    if n is None:
        raise ParseError("missing 'n <count>' line")
    try:
        return Multigraph(n, tuple(pairs))
    except (LoopEdgeError, VertexOutOfRangeError, GraphTooLargeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: not an integer: {token!r}") from None
