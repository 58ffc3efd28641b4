from __future__ import annotations

import pytest

from conftest import seeded_suite
from oracles import spanning_tree_count_brute
from treecount import (
    FamilySpec,
    Multigraph,
    build,
    closed_form_tau,
    enumerate_spanning_trees,
    generate_family,
    tau_deletion_contraction,
    tau_matrix_tree,
    tau_weighted_matrix_tree,
)
from treecount.errors import EmptyGraphError, InvalidSpecError, LengthMismatchError


def complete(n):
    return generate_family(FamilySpec("complete", (n,)))


def test_matrix_tree_cayley():
    assert tau_matrix_tree(complete(5)) == 125


def test_matrix_tree_figure_one(figure_one):
    assert tau_matrix_tree(figure_one) == 12


def test_matrix_tree_disconnected_is_zero():
    assert tau_matrix_tree(build(4, [(0, 1), (2, 3)])) == 0
    assert tau_matrix_tree(build(2, [])) == 0


def test_matrix_tree_single_vertex():
    assert tau_matrix_tree(build(1, [])) == 1


def test_matrix_tree_rejects_empty_graph():
    with pytest.raises(EmptyGraphError):
        tau_matrix_tree(Multigraph(0))


def test_weighted_all_ones_recovers_count(figure_one, wheel4):
    for g in (figure_one, wheel4, complete(5)):
        assert tau_weighted_matrix_tree(g, [1] * g.m) == tau_matrix_tree(g)


def test_weighted_parallel_pair():
    g = build(2, [(0, 1), (0, 1)])
    assert tau_weighted_matrix_tree(g, [2, 3]) == 5


def test_weighted_triangle(triangle):
    # trees are the three edge pairs: 1*2 + 2*3 + 1*3
    assert tau_weighted_matrix_tree(triangle, [1, 2, 3]) == 11


def test_weighted_accepts_negative_weights(triangle):
    assert tau_weighted_matrix_tree(triangle, [-1, 2, -3]) == (-2) + (-6) + 3


def test_weighted_rejects_bad_length(triangle):
    with pytest.raises(LengthMismatchError):
        tau_weighted_matrix_tree(triangle, [1, 2])


def test_weighted_matches_explicit_tree_sum():
    for g in seeded_suite(25, seed=5150, max_n=6, max_m=12):
        w = [((j * 7919) % 13) - 6 for j in range(g.m)]
        explicit = 0
        for tree in enumerate_spanning_trees(g):
            product = 1
            for j in tree:
                product *= w[j]
            explicit += product
        assert tau_weighted_matrix_tree(g, w) == explicit


def test_deletion_contraction_parallel_edges():
    assert tau_deletion_contraction(build(2, [(0, 1)] * 3)) == 3


def test_deletion_contraction_wheel(wheel4):
    assert tau_deletion_contraction(wheel4) == 45


def test_deletion_contraction_path(path3):
    assert tau_deletion_contraction(path3) == 1


def test_deletion_contraction_disconnected():
    assert tau_deletion_contraction(build(3, [(0, 1)])) == 0


def test_deletion_contraction_rejects_empty_graph():
    with pytest.raises(EmptyGraphError):
        tau_deletion_contraction(Multigraph(0))


def test_deletion_contraction_rejects_unknown_heuristic(triangle):
    with pytest.raises(ValueError):
        tau_deletion_contraction(triangle, heuristic="bogus")


def test_deletion_contraction_heuristics_agree():
    for g in seeded_suite(40, seed=777, max_n=7, max_m=14, connected=False):
        a = tau_deletion_contraction(g, "min-degree")
        b = tau_deletion_contraction(g, "first-edge")
        assert a == b == tau_matrix_tree(g)


def test_enumeration_triangle_order(triangle):
    assert list(enumerate_spanning_trees(triangle)) == [
        frozenset({0, 1}),
        frozenset({0, 2}),
        frozenset({1, 2}),
    ]


def test_enumeration_counts_figure_one(figure_one):
    trees = list(enumerate_spanning_trees(figure_one))
    assert len(trees) == 12
    assert len(set(trees)) == 12


def test_enumeration_disconnected_is_empty():
    assert list(enumerate_spanning_trees(build(3, [(0, 1)]))) == []


def test_enumeration_single_vertex():
    assert list(enumerate_spanning_trees(build(1, []))) == [frozenset()]


def test_enumeration_is_lexicographic(figure_one):
    trees = [tuple(sorted(t)) for t in enumerate_spanning_trees(figure_one)]
    assert trees == sorted(trees)


def test_enumeration_matches_brute_force_on_suite():
    for g in seeded_suite(30, seed=31337, max_n=6, max_m=10, connected=False):
        got = list(enumerate_spanning_trees(g))
        assert len(got) == spanning_tree_count_brute(g)
        assert len(set(got)) == len(got)


def test_cross_method_agreement_on_suite():
    for g in seeded_suite(60, seed=4242, max_n=8, max_m=18):
        expected = tau_matrix_tree(g)
        assert tau_deletion_contraction(g) == expected
        assert sum(1 for _ in enumerate_spanning_trees(g)) == expected


def test_wheel_shape(wheel4):
    assert wheel4.n == 5 and wheel4.m == 8
    assert wheel4.degree(4) == 4
    assert wheel4.degrees()[:4] == (3, 3, 3, 3)


def test_multiwheel_shape(multiwheel4):
    assert multiwheel4.n == 5 and multiwheel4.m == 12
    assert multiwheel4.degree(4) == 8
    assert multiwheel4.degrees()[:4] == (4, 4, 4, 4)


def test_hypercube_two_is_a_square():
    q2 = generate_family(FamilySpec("hypercube", (2,)))
    assert q2.n == 4 and q2.m == 4
    assert q2.degrees() == (2, 2, 2, 2)
    assert tau_matrix_tree(q2) == 4


def test_multipartite_shape():
    k23 = generate_family(FamilySpec("multipartite", (2, 3)))
    assert k23.n == 5 and k23.m == 6
    assert k23.degrees() == (3, 3, 2, 2, 2)


@pytest.mark.parametrize(
    "kind,sizes",
    [
        ("wheel", (2,)),
        ("multiwheel", (1,)),
        ("complete", (0,)),
        ("complete", (1, 2)),
        ("hypercube", (7,)),
        ("nonsense", (3,)),
        ("multipartite", ()),
    ],
)
def test_invalid_family_specs(kind, sizes):
    with pytest.raises(InvalidSpecError):
        FamilySpec(kind, sizes)


@pytest.mark.parametrize(
    "spec,expected",
    [
        (FamilySpec("complete", (1,)), 1),
        (FamilySpec("complete", (2,)), 1),
        (FamilySpec("complete", (6,)), 1296),
        (FamilySpec("multipartite", (2, 3)), 12),
        (FamilySpec("multipartite", (2, 2, 2)), 384),
        (FamilySpec("multipartite", (3,)), 0),
        (FamilySpec("multipartite", (1,)), 1),
        (FamilySpec("hypercube", (1,)), 1),
        (FamilySpec("hypercube", (2,)), 4),
        (FamilySpec("hypercube", (3,)), 384),
        (FamilySpec("hypercube", (4,)), 42467328),
        (FamilySpec("wheel", (4,)), None),
        (FamilySpec("multiwheel", (5,)), None),
    ],
)
def test_closed_forms(spec, expected):
    assert closed_form_tau(spec) == expected


def test_closed_forms_match_matrix_tree():
    specs = [
        FamilySpec("complete", (n,)) for n in range(2, 8)
    ] + [
        FamilySpec("multipartite", (2, 3)),
        FamilySpec("multipartite", (2, 2, 2)),
        FamilySpec("multipartite", (1, 1, 4)),
        FamilySpec("hypercube", (2,)),
        FamilySpec("hypercube", (3,)),
    ]
    for spec in specs:
        assert closed_form_tau(spec) == tau_matrix_tree(generate_family(spec))
