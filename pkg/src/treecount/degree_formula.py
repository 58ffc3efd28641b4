"""Counting spanning trees from vertex degrees.

The degree-product bound over the non-root vertices overshoots tau(G) by
exactly one correction term per non-spanning subtree through the root:
the degree product of what is left after deleting the subtree's vertices.
Two evaluations of that correction are provided. The direct form walks
every rooted non-spanning subtree; the grouped form buckets subtrees by
their vertex set S, replacing each bucket with tau(G[S]) times the degree
product outside S, and skips buckets whose remainder has an isolated
vertex since those contribute a zero factor anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .counting import enumerate_spanning_trees, tau_matrix_tree
from .errors import DisconnectedError
from .graph import Multigraph, induced


@dataclass(frozen=True)
class SubTree:
    """A connected acyclic subgraph anchored at a root vertex."""

    root: int
    vertices: frozenset[int]
    edges: frozenset[int]


@dataclass(frozen=True)
class InducedPiece:
    """One grouped correction term: a connected vertex set through the root
    whose remainder keeps every outside vertex covered."""

    vertices: frozenset[int]
    tau_inside: int
    outside_degree_product: int


def enumerate_connected_sets(
    g: Multigraph, u: int, max_size: int
) -> Iterator[frozenset[int]]:
    """Yield every vertex set S with u in S, G[S] connected and |S| <= max_size.

    Each set appears exactly once, in a deterministic depth-first order:
    at every level the candidate neighbors are tried in ascending order and
    earlier candidates are forbidden in later branches, so no seen-set
    bookkeeping is needed. max_size below 1 yields nothing; values above n
    behave like n.
    """
    g._check_vertex(u)
    if max_size <= 0:
        return
    adj = [set(g.neighbors(v)) for v in range(g.n)]

    def grow(
        current: frozenset[int], banned: frozenset[int]
    ) -> Iterator[frozenset[int]]:
        yield current
        if len(current) >= max_size:
            return
        frontier: set[int] = set()
        for v in current:
            frontier |= adj[v]
        candidates = sorted(frontier - current - banned)
        for i, v in enumerate(candidates):
            yield from grow(current | {v}, banned | frozenset(candidates[:i]))

    yield from grow(frozenset([u]), frozenset())


def _outside_degree_product(g: Multigraph, inside: frozenset[int]) -> int:
    # product over v outside `inside` of v's degree after deleting `inside`;
    # an isolated remainder vertex makes the whole product 0
    product = 1
    for v in range(g.n):
        if v in inside:
            continue
        d = 0
        for j in g._incidence[v]:
            if g.other_end(j, v) not in inside:
                d += 1
        if d == 0:
            return 0
        product *= d
    return product


def c_pieces(g: Multigraph, u: int) -> Iterator[InducedPiece]:
    """Yield the grouped correction terms for root u.

    Covers connected sets S with u in S and 1 <= |S| <= n-2 whose deletion
    leaves no isolated vertex; tau inside comes from the Laplacian route.
    """
    if not g.is_connected():
        raise DisconnectedError("grouped formula needs a connected graph")
    g._check_vertex(u)
    for s in enumerate_connected_sets(g, u, g.n - 2):
        product = _outside_degree_product(g, s)
        if product == 0:
            continue
        piece = induced(g, s)
        yield InducedPiece(s, tau_matrix_tree(piece.graph), product)


def thomassen_bound(g: Multigraph, u: int) -> int:
    """Product of degrees over all vertices except u; 1 when n == 1.

    Always an upper bound for the spanning-tree count.
    """
    g._check_vertex(u)
    bound = 1
    for v in range(g.n):
        if v != u:
            bound *= g.degree(v)
    return bound


def best_thomassen_bound(g: Multigraph) -> tuple[int, int]:
    """The root minimizing the degree-product bound, with its value.

    Ties go to the smallest vertex index. Needs n >= 1.
    """
    best_u = 0
    best = thomassen_bound(g, 0)
    for u in range(1, g.n):
        value = thomassen_bound(g, u)
        if value < best:
            best_u, best = u, value
    return best_u, best


def tau_via_grouped_formula(g: Multigraph, u: int) -> int:
    """Spanning-tree count from degrees, correction grouped by vertex set."""
    if not g.is_connected():
        raise DisconnectedError("grouped formula needs a connected graph")
    g._check_vertex(u)
    if g.n == 1:
        return 1
    correction = 0
    for piece in c_pieces(g, u):
        correction += piece.tau_inside * piece.outside_degree_product
    return thomassen_bound(g, u) - correction


def enumerate_nst(g: Multigraph, u: int) -> Iterator[SubTree]:
    """Yield every non-spanning subtree of g containing u, exactly once.

    Includes the single-vertex tree ({u}, no edges); spanning trees are
    excluded. Deterministic order: vertex sets in enumeration order, trees
    within a set in lexicographic edge order.
    """
    if not g.is_connected():
        raise DisconnectedError("subtree enumeration needs a connected graph")
    g._check_vertex(u)
    for s in enumerate_connected_sets(g, u, g.n - 1):
        sub = induced(g, s)
        for tree in enumerate_spanning_trees(sub.graph):
            yield SubTree(u, s, frozenset(sub.edge_origin[j] for j in tree))


def direct_formula_value(g: Multigraph, u: int) -> int:
    """Raw value of the direct degree expression at root u.

    No connectivity requirement; exposed so the behavior on disconnected
    input can be probed empirically. Equals tau(G) on connected graphs.
    """
    g._check_vertex(u)
    if g.n == 1:
        return 1
    correction = 0
    for s in enumerate_connected_sets(g, u, g.n - 1):
        product = _outside_degree_product(g, s)
        if product == 0:
            # every subtree on this vertex set contributes a zero term
            continue
        sub = induced(g, s)
        for _tree in enumerate_spanning_trees(sub.graph):
            correction += product
    return thomassen_bound(g, u) - correction


def tau_via_direct_formula(g: Multigraph, u: int) -> int:
    """Spanning-tree count from degrees, one correction term per subtree."""
    if not g.is_connected():
        raise DisconnectedError("direct formula needs a connected graph")
    return direct_formula_value(g, u)
