from __future__ import annotations

import random

import pytest

from treecount import FamilySpec, RandomSpec, build, generate_family, random_multigraph


@pytest.fixture
def figure_one():
    # 4 vertices, parallel pair between 0 and 2, degrees (4, 2, 4, 2), tau = 12
    return build(4, [(0, 1), (1, 2), (0, 2), (0, 2), (2, 3), (0, 3)])


@pytest.fixture
def triangle():
    return build(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def path3():
    return build(3, [(0, 1), (1, 2)])


@pytest.fixture
def wheel4():
    return generate_family(FamilySpec("wheel", (4,)))


@pytest.fixture
def multiwheel4():
    return generate_family(FamilySpec("multiwheel", (4,)))


@pytest.fixture
def multiwheel5():
    return generate_family(FamilySpec("multiwheel", (5,)))


def seeded_suite(count, seed, max_n, max_m, parallel_prob=0.3, connected=True):
    """Deterministic list of random multigraphs with n <= max_n, m <= max_m."""
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        lo = n - 1 if connected else 0
        m = rng.randint(max(lo, 1), max_m)
        graphs.append(
            random_multigraph(
                RandomSpec(
                    n=n,
                    m=m,
                    parallel_prob=parallel_prob,
                    seed=rng.randrange(2**31),
                    require_connected=connected,
                )
            )
        )
    return graphs
