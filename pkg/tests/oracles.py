"""Independent brute-force oracles used only by the tests.

Everything here favors obviousness over speed and deliberately avoids the
library's own algorithms: determinants by cofactor expansion, subset
enumeration by powerset filtering, tree checks by explicit union-find.
"""

from __future__ import annotations

from itertools import combinations


def naive_determinant(matrix) -> int:
    d = len(matrix)
    if d == 0:
        return 1
    if d == 1:
        return matrix[0][0]
    total = 0
    sign = 1
    for col in range(d):
        minor = [
            [row[c] for c in range(d) if c != col] for row in matrix[1:]
        ]
        total += sign * matrix[0][col] * naive_determinant(minor)
        sign = -sign
    return total


def _components(n, pairs):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in range(n)})


def is_connected_subset(g, subset) -> bool:
    verts = sorted(subset)
    index = {v: i for i, v in enumerate(verts)}
    pairs = [
        (index[a], index[b])
        for a, b in g.edges
        if a in index and b in index
    ]
    return _components(len(verts), pairs) <= 1


def connected_sets_brute(g, u, max_size):
    """All vertex sets S with u in S, G[S] connected, |S| <= max_size."""
    found = set()
    others = [v for v in range(g.n) if v != u]
    for k in range(0, max(0, max_size - 1) + 1):
        if k + 1 > max_size:
            break
        for extra in combinations(others, k):
            s = frozenset((u,) + extra)
            if is_connected_subset(g, s):
                found.add(s)
    return found


def is_tree_on(g, vertices, edge_indices) -> bool:
    """True iff the given original edges form a spanning tree of `vertices`."""
    verts = sorted(vertices)
    if len(edge_indices) != len(verts) - 1:
        return False
    index = {v: i for i, v in enumerate(verts)}
    touched = set()
    pairs = []
    for j in edge_indices:
        a, b = g.edges[j]
        if a not in index or b not in index:
            return False
        touched.add(a)
        touched.add(b)
        pairs.append((index[a], index[b]))
    if len(verts) > 1 and touched != set(verts):
        return False
    return _components(len(verts), pairs) == 1


def subtrees_brute(g, u):
    """All non-spanning subtrees containing u, as (vertexset, edgeset) pairs."""
    found = set()
    for s in connected_sets_brute(g, u, g.n - 1):
        inside = [j for j, (a, b) in enumerate(g.edges) if a in s and b in s]
        for chosen in combinations(inside, len(s) - 1):
            if is_tree_on(g, s, chosen):
                found.add((s, frozenset(chosen)))
    return found


def spanning_tree_count_brute(g) -> int:
    if g.n == 1:
        return 1
    count = 0
    for chosen in combinations(range(g.m), g.n - 1):
        if is_tree_on(g, range(g.n), chosen):
            count += 1
    return count


def max_matching_brute(g) -> int:
    pairs = sorted(set(g.edges))
    best = 0
    for k in range(1, g.n // 2 + 1):
        hit = False
        for chosen in combinations(pairs, k):
            used = set()
            ok = True
            for a, b in chosen:
                if a in used or b in used:
                    ok = False
                    break
                used.add(a)
                used.add(b)
            if ok:
                hit = True
                break
        if hit:
            best = k
        else:
            break
    return best


def min_edge_cover_brute(g) -> int:
    pairs = sorted(set(g.edges))
    for k in range(0, len(pairs) + 1):
        for chosen in combinations(pairs, k):
            covered = {v for pair in chosen for v in pair}
            if len(covered) == g.n:
                return k
    raise AssertionError("no cover exists (isolated vertex)")


def perfect_matchings_brute(g):
    """All perfect matchings as frozensets of edge indices (per-index, so
    parallel edges give distinct matchings)."""
    if g.n % 2 != 0:
        return set()
    found = set()
    for chosen in combinations(range(g.m), g.n // 2):
        used = set()
        ok = True
        for j in chosen:
            a, b = g.edges[j]
            if a in used or b in used:
                ok = False
                break
            used.add(a)
            used.add(b)
        if ok and len(used) == g.n:
            found.add(frozenset(chosen))
    return found
