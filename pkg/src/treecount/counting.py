"""Classical spanning-tree counts and graph families with known formulas.

Three independent routes to tau(G): a Laplacian minor determinant
(unweighted and weighted), the delete/contract recursion refined to handle
parallel classes in one step, and plain enumeration for small graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .algebra import bareiss_determinant
from .errors import EmptyGraphError, InvalidSpecError, LengthMismatchError
from .graph import MAX_VERTICES, Multigraph, contract_edge

EdgeWeights = Sequence[int]


def _laplacian_minor(g: Multigraph, weights: Sequence[int] | None) -> list[list[int]]:
    # principal minor dropping the last vertex; any choice gives the same count
    d = g.n - 1
    minor = [[0] * d for _ in range(d)]
    for j, (a, b) in enumerate(g.edges):
        w = 1 if weights is None else weights[j]
        if a < d:
            minor[a][a] += w
        if b < d:
            minor[b][b] += w
        if a < d and b < d:
            minor[a][b] -= w
            minor[b][a] -= w
    return minor


def tau_matrix_tree(g: Multigraph) -> int:
    """Spanning-tree count as a principal minor determinant of the Laplacian."""
    if g.n == 0:
        raise EmptyGraphError("tau needs at least one vertex")
    return bareiss_determinant(_laplacian_minor(g, None))


def tau_weighted_matrix_tree(g: Multigraph, weights: EdgeWeights) -> int:
    """Sum over spanning trees of the product of edge weights.

    Exact for any integer weights, negative ones included; the all-ones
    point recovers the plain count.
    """
    if g.n == 0:
        raise EmptyGraphError("tau needs at least one vertex")
    if len(weights) != g.m:
        raise LengthMismatchError(f"expected {g.m} weights, got {len(weights)}")
    return bareiss_determinant(_laplacian_minor(g, weights))


def _drop_edges(g: Multigraph, dead: frozenset[int]) -> Multigraph:
    return Multigraph(g.n, tuple(e for j, e in enumerate(g.edges) if j not in dead))


def _pick_min_degree(g: Multigraph) -> int:
    v = min(
        (v for v in range(g.n) if g.degree(v) > 0),
        key=lambda v: (g.degree(v), v),
    )
    return min(g.incident_edges(v))


def _pick_first_edge(g: Multigraph) -> int:
    return 0


DELETION_CONTRACTION_HEURISTICS: dict[str, Callable[[Multigraph], int]] = {
    "min-degree": _pick_min_degree,
    "first-edge": _pick_first_edge,
}


def tau_deletion_contraction(g: Multigraph, heuristic: str = "min-degree") -> int:
    """Spanning-tree count by the delete/contract recursion.

    A whole parallel class is processed per step: tau(G) equals
    tau(G without the class) plus multiplicity times tau(G with the class
    contracted). Pendant vertices contract immediately since their single
    edge lies in every spanning tree, and disconnection short-circuits to 0.
    The choice of class never changes the result; `heuristic` exists so
    tests can run two orders and compare.
    """
    if g.n == 0:
        raise EmptyGraphError("tau needs at least one vertex")
    try:
        pick = DELETION_CONTRACTION_HEURISTICS[heuristic]
    except KeyError:
        raise ValueError(f"unknown heuristic {heuristic!r}") from None
    return _tau_dc(g, pick)


def _tau_dc(g: Multigraph, pick: Callable[[Multigraph], int]) -> int:
    # the delete branch loops in place; only contraction recurses (depth <= n)
    total = 0
    while True:
        if g.n == 1:
            return total + 1
        if not g.is_connected():
            return total
        pendant = next((v for v in range(g.n) if g.degree(v) == 1), None)
        if pendant is not None:
            g = contract_edge(g, min(g.incident_edges(pendant)))
            continue
        j = pick(g)
        pair = g.edges[j]
        cls = frozenset(k for k, e in enumerate(g.edges) if e == pair)
        total += len(cls) * _tau_dc(contract_edge(g, j), pick)
        g = _drop_edges(g, cls)


def enumerate_spanning_trees(g: Multigraph) -> Iterator[frozenset[int]]:
    """Yield every spanning tree as an edge-index set, exactly once.

    Order is lexicographic on the sorted index sequence. Only sensible for
    small graphs; the count grows superexponentially.
    """
    if g.n == 0:
        raise EmptyGraphError("spanning trees need at least one vertex")
    need = g.n - 1
    edges = g.edges
    m = g.m
    if need == 0:
        yield frozenset()
        return
    chosen: list[int] = []

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def extend(start: int, parent: list[int], count: int) -> Iterator[frozenset[int]]:
        if count == need:
            yield frozenset(chosen)
            return
        for j in range(start, m - (need - count) + 1):
            a, b = edges[j]
            ra, rb = find(parent, a), find(parent, b)
            if ra == rb:
                continue
            child = parent.copy()
            child[ra] = rb
            chosen.append(j)
            yield from extend(j + 1, child, count + 1)
            chosen.pop()

    yield from extend(0, list(range(g.n)), 0)


FAMILY_KINDS = ("complete", "multipartite", "hypercube", "wheel", "multiwheel")


@dataclass(frozen=True)
class FamilySpec:
    """A parameterized graph family.

    kinds: complete(n), multipartite(n1..nk), hypercube(d), wheel(r),
    multiwheel(r). Wheels put the hub at the last vertex index; the
    multiwheel doubles every hub-rim edge.
    """

    kind: str
    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if self.kind not in FAMILY_KINDS:
            raise InvalidSpecError(f"unknown family kind {self.kind!r}")
        if not self.sizes:
            raise InvalidSpecError("family needs at least one size parameter")
        if any(s < 1 for s in self.sizes):
            raise InvalidSpecError("family size parameters must be >= 1")
        if self.kind != "multipartite" and len(self.sizes) != 1:
            raise InvalidSpecError(f"{self.kind} takes exactly one size parameter")
        if self.kind in ("wheel", "multiwheel") and self.sizes[0] < 3:
            raise InvalidSpecError("wheel rim needs at least 3 vertices")
        if self.vertex_count() > MAX_VERTICES:
            raise InvalidSpecError(
                f"family would have {self.vertex_count()} vertices, "
                f"maximum is {MAX_VERTICES}"
            )

    def vertex_count(self) -> int:
        if self.kind == "complete":
            return self.sizes[0]
        if self.kind == "multipartite":
            return sum(self.sizes)
        if self.kind == "hypercube":
            return 2 ** self.sizes[0]
        return self.sizes[0] + 1


def generate_family(spec: FamilySpec) -> Multigraph:
    """Build the concrete multigraph for a family spec."""
    if spec.kind == "complete":
        n = spec.sizes[0]
        return Multigraph(n, tuple(combinations(range(n), 2)))
    if spec.kind == "multipartite":
        n = sum(spec.sizes)
        part = []
        for i, size in enumerate(spec.sizes):
            part.extend([i] * size)
        pairs = tuple(
            (a, b) for a, b in combinations(range(n), 2) if part[a] != part[b]
        )
        return Multigraph(n, pairs)
    if spec.kind == "hypercube":
        d = spec.sizes[0]
        n = 2**d
        pairs = tuple(
            (v, v ^ (1 << bit))
            for v in range(n)
            for bit in range(d)
            if v < v ^ (1 << bit)
        )
        return Multigraph(n, pairs)
    r = spec.sizes[0]
    hub = r
    rim = [(i, (i + 1) % r) for i in range(r)]
    spokes = [(i, hub) for i in range(r)]
    if spec.kind == "multiwheel":
        spokes = [pair for pair in spokes for _ in range(2)]
    return Multigraph(r + 1, tuple(rim + spokes))


def closed_form_tau(spec: FamilySpec) -> int | None:
    """Known closed-form count for the family, or None when there is none.

    complete: n^(n-2); multipartite K_{n1..nk} with n = sum(ni):
    n^(k-2) * prod (n - ni)^(ni - 1); hypercube Q_d:
    2^(2^d - d - 1) * prod_{k=2..d} k^C(d,k). Wheels have no closed form here.
    """
    if spec.kind == "complete":
        n = spec.sizes[0]
        return 1 if n <= 2 else n ** (n - 2)
    if spec.kind == "multipartite":
        sizes = spec.sizes
        n = sum(sizes)
        k = len(sizes)
        if k == 1:
            return 1 if n == 1 else 0
        value = n ** (k - 2)
        for ni in sizes:
            value *= (n - ni) ** (ni - 1)
        return value
    if spec.kind == "hypercube":
        d = spec.sizes[0]
        value = 2 ** (2**d - d - 1)
        for k in range(2, d + 1):
            value *= k ** math.comb(d, k)
        return value
    return None
