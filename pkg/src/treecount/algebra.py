"""Exact integer determinants and capped-exponent polynomial products.

Everything here is exact: determinants use fraction-free elimination over
Python integers, and polynomial expansion keeps full arbitrary-precision
coefficients. Monomials are sparse (index, exponent) tuples sorted by
index, with exponents capped at 2 because an edge has two endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceededError, ExponentOverflowError, LengthMismatchError

Monomial = tuple[tuple[int, int], ...]

DEFAULT_TERM_BUDGET = 10_000_000


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every intermediate division is exact, so arithmetic never leaves the
    integers no matter how large Laplacian entries grow. The empty matrix
    has determinant 1.
    """
    d = len(matrix)
    rows = [list(r) for r in matrix]
    for r in rows:
        if len(r) != d:
            raise ValueError("matrix must be square")
    if d == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(d - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, d):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, d):
            row_i = rows[i]
            lead = row_i[k]
            for jj in range(k + 1, d):
                row_i[jj] = (row_i[jj] * pivot - lead * row_k[jj]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * rows[d - 1][d - 1]


@dataclass(frozen=True)
class CappedPoly:
    """Sparse multivariate polynomial with per-variable exponent at most 2."""

    terms: dict[Monomial, int]

    def __len__(self) -> int:
        return len(self.terms)


def _raise_power(mono: Monomial, var: int) -> Monomial:
    items = list(mono)
    for pos, (idx, exp) in enumerate(items):
        if idx == var:
            if exp >= 2:
                raise ExponentOverflowError(
                    f"variable {var} would exceed exponent 2"
                )
            items[pos] = (idx, 2)
            return tuple(items)
        if idx > var:
            items.insert(pos, (var, 1))
            return tuple(items)
    items.append((var, 1))
    return tuple(items)


def multiply_forms(
    forms: Iterable[frozenset[int]], budget: int = DEFAULT_TERM_BUDGET
) -> CappedPoly:
    """Fully expand a product of sums of distinct variables.

    Each form is the set of variable indices appearing with coefficient 1.
    The empty product is the constant 1; a form with empty support collapses
    the whole product to 0. Raises BudgetExceeded when an intermediate
    expansion grows past `budget` monomials, ExponentOverflow if a variable
    occurs in more than two forms.
    """
    terms: dict[Monomial, int] = {(): 1}
    for form in forms:
        nxt: dict[Monomial, int] = {}
        variables = sorted(form)
        for mono, coef in terms.items():
            for var in variables:
                key = _raise_power(mono, var)
                nxt[key] = nxt.get(key, 0) + coef
        if len(nxt) > budget:
            raise BudgetExceededError(
                f"expansion exceeded the {budget}-monomial budget"
            )
        terms = nxt
    return CappedPoly(terms)


def evaluate_poly(p: CappedPoly, weights: Sequence[int]) -> int:
    """Evaluate at an integer point, weights[i] being the value of variable i."""
    total = 0
    for mono, coef in p.terms.items():
        value = coef
        for idx, exp in mono:
            if idx >= len(weights):
                raise LengthMismatchError(
                    f"monomial uses variable {idx} but only "
                    f"{len(weights)} weights were given"
                )
            value *= weights[idx] ** exp
        total += value
    return total
