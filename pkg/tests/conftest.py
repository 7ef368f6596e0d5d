"""Shared fixtures: a deterministic poset corpus and a hand-checked rank fixture."""

from fractions import Fraction

import pytest

import ordertest as ot

# 22-element, 5-level poset used as a regression fixture for the rank and
# edge-removal algorithms.  Elements are numbered level by level from the
# bottom, left to right (levels of sizes 5, 5, 4, 5, 3).  The expected ranks
# at gamma = 1/11 and the expected survivor cover relation at h = 5 were
# computed by hand from the definitions.
RANK22_COVER = [
    (0, 5), (0, 6),
    (1, 5), (1, 6), (1, 7),
    (2, 5), (2, 6), (2, 8),
    (3, 6), (3, 9),
    (4, 7),
    (5, 10), (5, 12),
    (6, 11),
    (7, 10), (7, 12),
    (8, 11), (8, 12), (8, 13),
    (9, 13),
    (10, 14), (10, 15), (10, 16),
    (11, 14), (11, 15), (11, 16), (11, 17),
    (12, 15), (12, 16), (12, 17),
    (13, 17), (13, 18),
    (14, 19),
    (15, 19), (15, 20),
    (16, 19), (16, 20), (16, 21),
    (17, 20), (17, 21),
    (18, 21),
]

RANK22_GAMMA = Fraction(1, 11)

RANK22_RANKS = (
    1, 1, 1, 1, 1,
    2, 2, 2, 1, 1,
    3, 2, 3, 2,
    3, 4, 4, 3, 2,
    5, 5, 4,
)

# Hasse diagram of the survivor after removing same-rank edges and edges
# into elements of rank >= 5.  Dropping a same-rank cover such as (13, 18)
# promotes transitive pairs like (2, 18) or (6, 17) to covers; each pair
# below was checked by hand against the rank values.
RANK22_SURVIVOR_COVER = {
    (0, 5), (0, 6), (0, 11),
    (1, 5), (1, 6), (1, 7), (1, 11),
    (2, 5), (2, 6), (2, 11), (2, 13), (2, 18),
    (3, 6), (3, 11), (3, 13), (3, 18),
    (4, 7),
    (5, 10), (5, 12), (5, 14), (5, 17),
    (6, 14), (6, 15), (6, 16), (6, 17),
    (7, 10), (7, 12), (7, 14), (7, 17),
    (8, 11), (8, 12), (8, 13), (8, 18),
    (9, 13), (9, 18),
    (10, 15), (10, 16), (10, 21),
    (11, 14), (11, 15), (11, 16), (11, 17),
    (12, 15), (12, 16), (12, 21),
    (13, 17),
    (17, 21),
    (18, 21),
}


@pytest.fixture(scope="session")
def rank22():
    return ot.from_relations(22, RANK22_COVER)


def build_corpus():
    """Small deterministic mix of named and random posets."""
    posets = [
        ot.chain(1),
        ot.chain(4),
        ot.chain(6),
        ot.antichain(1),
        ot.antichain(5),
        ot.k_hw(2, 2),
        ot.k_hw(3, 2),
        ot.k_hw(2, 3),
        ot.alternating(3, 2),
        ot.alternating(4, 2),
        ot.union_of_chains(2, 2),
        ot.union_of_chains(3, 3),
        ot.union_of_chains(2, 4),
        ot.sharp_layered(2, 2, Fraction(1, 2)),
        ot.sharp_layered(3, 2, Fraction(1, 2)),
        ot.sharp_layered(3, 4, Fraction(1, 2)),
    ]
    for i in range(10):
        posets.append(ot.random_closure(6 + i, 0.15 + 0.05 * i, 1000 + i))
    for i in range(6):
        posets.append(ot.random_layered(8 + i, 2 + i % 3, 0.4, 2000 + i))
    return posets


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
