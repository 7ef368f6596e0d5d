"""Comparability graphs: invariants for free, and removal by proxy.

The comparability graph of a poset connects every comparable pair.  Its
chromatic number equals the poset's height and its independence number
equals the width, so both NP-hard graph invariants are polynomial here.
Clique freeness likewise reduces to chain freeness, which lets the poset
removal machinery edit a comparability graph while preserving the promise
that it stays a comparability graph.

Run from the repository root:

    python3 demos/04_comparability_graphs.py
"""

from fractions import Fraction

import ordertest as ot
from ordertest.comparability import (
    chromatic_number,
    from_poset,
    graph_removal,
    independence_number,
    max_clique,
    subgraph_test,
)

HOSTS = [
    ("chain(7)", ot.chain(7)),
    ("k_hw(3, 4)", ot.k_hw(3, 4)),
    ("union_of_chains(4, 3)", ot.union_of_chains(4, 3)),
    ("random_closure(12, 0.3)", ot.random_closure(12, 0.3, seed=3)),
]


def main() -> None:
    print("chromatic number = height, independence number = width:")
    for name, p in HOSTS:
        g = from_poset(p)
        # cross_check recomputes both invariants with exact exponential-time
        # graph algorithms that never look at the source poset.
        chi = chromatic_number(g, cross_check=True)
        alpha = independence_number(g, cross_check=True)
        print(f"  {name}: chi={chi} (height {p.height()}), "
              f"alpha={alpha} (width {p.width()}), "
              f"max clique size {len(max_clique(g))}")
        assert chi == p.height() and alpha == p.width()

    print("\ngraph removal: make a comparability graph triangle-free:")
    host = ot.union_of_chains(4, 3)
    g = from_poset(host)
    triangle = from_poset(ot.chain(3))
    result = graph_removal(g, triangle, Fraction(1, 2))
    if isinstance(result, ot.DensityTooHigh):
        print(f"  triangle density too high: {result}")
    else:
        removed = result.poset_result.removed_total
        print(f"  removed {removed} edges out of n^2 = {host.n ** 2}")
        print(f"  survivor max clique: {len(max_clique(result.survivor))} (< 3)")
        assert len(max_clique(result.survivor)) < 3

    print("\nclique testing mirrors chain testing (one-sided):")
    far_host = from_poset(ot.sharp_layered(3, 2, Fraction(1, 2)))
    rejected = sum(
        subgraph_test(far_host, 3, Fraction(1, 8), 1.0, seed).rejected
        for seed in range(500)
    )
    print(f"  far host rejected in {rejected}/500 seeded runs")
    free_host = from_poset(ot.k_hw(2, 5))
    rejected = sum(
        subgraph_test(free_host, 3, Fraction(1, 8), 1.0, seed).rejected
        for seed in range(500)
    )
    print(f"  triangle-free host rejected in {rejected}/500 seeded runs")


if __name__ == "__main__":
    main()
