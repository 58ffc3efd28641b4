"""Expansion of the vertex-incidence product and what it encodes.

Expanding the product over all vertices of their incident edge-variable
sums yields monomials whose squared variables form a matching and whose
support is an edge cover; reading extremal statistics off the expansion
gives the matching number (largest squared part) and the edge-cover number
(fewest distinct edges), and the all-squared terms are exactly the perfect
matchings. Exhaustive searches are provided as independent oracles for
both numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .algebra import DEFAULT_TERM_BUDGET, multiply_forms
from .errors import BudgetExceededError, EmptyExpansionError, IsolatedVertexError
from .graph import Multigraph

DEFAULT_MAX_VERTICES = 14


@dataclass(frozen=True)
class CoverTerm:
    """One expansion monomial: squared edges, single edges, multiplicity."""

    doubled: frozenset[int]
    single: frozenset[int]
    coefficient: int


def expand_f(
    g: Multigraph,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    budget: int = DEFAULT_TERM_BUDGET,
) -> list[CoverTerm]:
    """All distinct monomials of the incidence product, deterministically ordered.

    Returns an empty list when some vertex is isolated (the product is
    identically zero then). The vertex guard exists because the expansion
    is inherently exponential; raise it explicitly for bigger graphs.
    """
    if g.n > max_vertices:
        raise BudgetExceededError(
            f"expansion guarded at {max_vertices} vertices, graph has {g.n}"
        )
    if g.has_isolated_vertex():
        return []
    forms = [g.incident_edges(v) for v in range(g.n)]
    poly = multiply_forms(forms, budget=budget)
    terms = [
        CoverTerm(
            doubled=frozenset(i for i, e in mono if e == 2),
            single=frozenset(i for i, e in mono if e == 1),
            coefficient=coef,
        )
        for mono, coef in poly.terms.items()
    ]
    terms.sort(key=lambda t: (sorted(t.doubled), sorted(t.single)))
    return terms


def matching_number_from_f(terms: Sequence[CoverTerm]) -> int:
    """Largest squared-part size over the expansion."""
    if not terms:
        raise EmptyExpansionError("no expansion terms to read a matching from")
    return max(len(t.doubled) for t in terms)


def edge_cover_number_from_f(terms: Sequence[CoverTerm]) -> int:
    """Smallest distinct-edge count over the expansion."""
    if not terms:
        raise EmptyExpansionError("no expansion terms to read a cover from")
    return min(len(t.doubled) + len(t.single) for t in terms)


def perfect_matchings_from_f(terms: Sequence[CoverTerm]) -> list[frozenset[int]]:
    """The squared parts of all-squared terms, i.e. the perfect matchings."""
    if not terms:
        raise EmptyExpansionError("no expansion terms to read matchings from")
    return [t.doubled for t in terms if not t.single]


def _distinct_pairs(g: Multigraph) -> list[tuple[int, int]]:
    # parallel edges are interchangeable for matchings and covers
    return sorted(set(g.edges))


def brute_force_matching(g: Multigraph) -> int:
    """Maximum matching size by exhaustive search with pruning."""
    if g.n > DEFAULT_MAX_VERTICES:
        raise BudgetExceededError(
            f"brute-force matching guarded at {DEFAULT_MAX_VERTICES} vertices"
        )
    pairs = _distinct_pairs(g)
    best = 0

    def search(start: int, used: frozenset[int], size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        # even a perfect pairing of untouched vertices cannot beat `best`
        if size + (g.n - len(used)) // 2 <= best:
            return
        for k in range(start, len(pairs)):
            a, b = pairs[k]
            if a in used or b in used:
                continue
            search(k + 1, used | {a, b}, size + 1)

    search(0, frozenset(), 0)
    return best


def brute_force_edge_cover(g: Multigraph) -> int:
    """Minimum edge-cover size by exhaustive search over subset sizes."""
    if g.has_isolated_vertex():
        raise IsolatedVertexError("no edge cover exists with an isolated vertex")
    if g.n > DEFAULT_MAX_VERTICES:
        raise BudgetExceededError(
            f"brute-force cover guarded at {DEFAULT_MAX_VERTICES} vertices"
        )
    if g.n == 0:
        return 0
    pairs = _distinct_pairs(g)
    for k in range((g.n + 1) // 2, len(pairs) + 1):
        for chosen in combinations(pairs, k):
            covered = set()
            for a, b in chosen:
                covered.add(a)
                covered.add(b)
            if len(covered) == g.n:
                return k
    # unreachable: with no isolated vertex, taking every pair is a cover
    return len(pairs)
