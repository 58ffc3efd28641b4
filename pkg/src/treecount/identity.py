"""Exact evaluation of the weighted counting identity.

With one integer weight per edge, the product over non-root vertices of
their incident weight sums equals the weighted spanning-tree sum plus, for
every non-spanning subtree through the root, the subtree's weight product
times the incidence product of what remains after deleting it. Both sides
are evaluated independently here so random integer points can expose any
implementation error exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .counting import tau_weighted_matrix_tree
from .degree_formula import SubTree, enumerate_nst
from .errors import LengthMismatchError
from .graph import Multigraph, delete_vertices


@dataclass(frozen=True)
class IdentityReport:
    """One evaluation of the identity at a concrete weight point."""

    lhs: int
    tau_term: int
    nst_sum: int
    holds: bool
    weight_point: tuple[int, ...]
    root: int


def f_value(g: Multigraph, weights: Sequence[int]) -> int:
    """Product over all vertices of the sum of incident edge weights.

    The empty graph gives 1; any isolated vertex forces 0.
    """
    if len(weights) != g.m:
        raise LengthMismatchError(f"expected {g.m} weights, got {len(weights)}")
    product = 1
    for v in range(g.n):
        product *= sum(weights[j] for j in g._incidence[v])
    return product


def tree_weight(t: SubTree, weights: Sequence[int]) -> int:
    """Product of weights over the subtree's edges; 1 for the edgeless tree."""
    product = 1
    for j in t.edges:
        if j >= len(weights):
            raise LengthMismatchError(
                f"subtree uses edge {j} but only {len(weights)} weights were given"
            )
        product *= weights[j]
    return product


def identity_lhs(g: Multigraph, u: int, weights: Sequence[int]) -> int:
    """Product over vertices other than u of their incident weight sums."""
    g._check_vertex(u)
    if len(weights) != g.m:
        raise LengthMismatchError(f"expected {g.m} weights, got {len(weights)}")
    product = 1
    for v in range(g.n):
        if v != u:
            product *= sum(weights[j] for j in g._incidence[v])
    return product


def identity_rhs(g: Multigraph, u: int, weights: Sequence[int]) -> tuple[int, int]:
    """The two right-hand aggregates: weighted tree sum and subtree correction.

    The correction restricts weights to each deleted remainder by original
    edge identity. Needs a connected graph.
    """
    if len(weights) != g.m:
        raise LengthMismatchError(f"expected {g.m} weights, got {len(weights)}")
    tau_term = tau_weighted_matrix_tree(g, weights)
    remainder_value: dict[frozenset[int], int] = {}
    nst_sum = 0
    for subtree in enumerate_nst(g, u):
        fv = remainder_value.get(subtree.vertices)
        if fv is None:
            rest = delete_vertices(g, subtree.vertices)
            fv = f_value(rest.graph, [weights[j] for j in rest.edge_origin])
            remainder_value[subtree.vertices] = fv
        if fv != 0:
            nst_sum += tree_weight(subtree, weights) * fv
    return tau_term, nst_sum


def check_identity(g: Multigraph, u: int, weights: Sequence[int]) -> IdentityReport:
    """Evaluate both sides at one weight point and report, never assert."""
    lhs = identity_lhs(g, u, weights)
    tau_term, nst_sum = identity_rhs(g, u, weights)
    return IdentityReport(
        lhs=lhs,
        tau_term=tau_term,
        nst_sum=nst_sum,
        holds=lhs == tau_term + nst_sum,
        weight_point=tuple(weights),
        root=u,
    )
