"""Walk through the rank-based edge removal on a random poset.

The removal pipeline assigns each element a rank (a density-thresholded
height), deletes every comparability between equal-rank elements, and then
deletes every comparability into elements of rank >= h.  The survivor is
always a valid poset with no chain on h elements, and when the h-chain
density of the input is small the total number of deletions is small too.

Run from the repository root:

    python3 demos/01_removal_walkthrough.py
"""

from collections import Counter
from fractions import Fraction

import ordertest as ot

HOST = ot.random_closure(40, 0.25, seed=7)
H = 4
EPS = Fraction(1, 2)


def main() -> None:
    print(f"host: random transitive closure, n={HOST.n}, "
          f"{len(HOST.edges())} comparable pairs, height={HOST.height()}")

    gamma = EPS / 2
    assignment = ot.rank_function(HOST, gamma)
    print(f"\nranks at gamma={gamma}:")
    for rank, count in sorted(Counter(assignment.ranks).items()):
        print(f"  rank {rank}: {count} elements")

    result = ot.edge_removal(HOST, gamma, H)
    print(f"\nedge_removal(gamma={gamma}, h={H}):")
    print(f"  removed {len(result.removed_same_rank)} same-rank pairs")
    print(f"  removed {len(result.removed_high_rank)} pairs into rank >= {H}")
    print(f"  survivor height: {result.survivor.height()} (must be < {H})")
    assert ot.contains_subposet(ot.chain(H), result.survivor) is None

    # The budgeted route checks the chain density precondition first.
    outcome = ot.chain_removal(HOST, EPS, H)
    t = ot.density_exact(ot.chain(H), HOST).estimate
    print(f"\nchain_removal(eps={EPS}, h={H}): "
          f"t(C_{H}, host) = {t} vs threshold {(EPS / 2) ** H}")
    if isinstance(outcome, ot.DensityTooHigh):
        print("  density too high; the removal budget is not guaranteed here")
    else:
        print(f"  removed {outcome.removed_total} pairs "
              f"= {float(outcome.budget_fraction):.4f} of n^2 "
              f"(budget eps = {float(EPS):.4f})")
        assert outcome.budget_fraction <= EPS

    # Interval closeness needs no density assumption at all: every poset is
    # 1/(2h-2)-close to being chain(h)-free.
    close = ot.interval_closeness(HOST, H)
    print(f"\ninterval_closeness(h={H}): removed {close.removed_total} pairs "
          f"<= n^2/(2h-2) + n/2 = {HOST.n ** 2 / (2 * H - 2) + HOST.n / 2:.1f}")
    print(f"  survivor height: {close.survivor.height()}")


if __name__ == "__main__":
    main()
