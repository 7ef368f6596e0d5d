"""One-sided chain testing: sample sizes, detection rates, and sharpness.

subposet_test draws s elements and rejects only when the induced sample
contains an h-chain, so it never rejects a chain(h)-free host.  On hosts
that are eps-far from chain(h)-free, drawing

    s = ceil((4 ln h + 4c + 1) / (2 eps))

elements detects a chain with probability at least 1 - e^{-c}.  The layered
sharpness fixture shows the other direction: at s <= c/(2 eps) samples the
test still accepts with probability at least e^{-c}.

Run from the repository root:

    python3 demos/03_property_testing.py
"""

import math
from fractions import Fraction

import ordertest as ot

TRIALS = 2000


def rate(host, h, s, base_seed):
    rejects = sum(
        ot.subposet_test(host, h, s, ot.testers.derive_seed(base_seed, t)).rejected
        for t in range(TRIALS)
    )
    return rejects / TRIALS


def main() -> None:
    h, w, eps = 2, 2, Fraction(1, 2)
    host = ot.sharp_layered(h, w, eps)
    removal = ot.min_removal_oracle(host, h)
    far = Fraction(removal, host.n ** 2)
    print(f"host: sharp_layered({h}, {w}, {eps}) with n={host.n}; "
          f"exactly {removal} deletions needed, so it is {far}-far")

    print("\ndetection rate vs the 1 - e^-c guarantee:")
    for c in (math.log(2), 1.0, 2.0):
        s = ot.subposet_test_samples(h, far, c)
        observed = rate(host, h, s, base_seed=int(c * 1000))
        target = 1 - math.exp(-c)
        print(f"  c={c:.4f}: s={s} samples, observed {observed:.4f}, "
              f"target >= {target:.4f}")

    print("\nsharpness: at s <= c/(2 eps) the acceptance rate stays >= e^-c:")
    for c in (1.0, 2.0):
        s = int(c / (2 * eps))
        accepts = 1 - rate(host, h, s, base_seed=9000 + int(c))
        print(f"  c={c:.1f}: s={s} samples, accept rate {accepts:.4f} "
              f">= e^-c = {math.exp(-c):.4f}")

    print("\none-sidedness: a chain-free host is never rejected:")
    free = ot.union_of_chains(20, 1)  # an antichain
    rejections = sum(ot.subposet_test(free, h, 30, seed).rejected for seed in range(500))
    print(f"  {rejections} rejections over 500 seeds on antichain(20)")

    print("\nfamily testing with an explicit false-reject bound:")
    fam = ot.FamilySpec.from_members([ot.k_hw(2, 2)])
    host = ot.union_of_chains(100, 2)
    out = ot.family_tester(host, fam, Fraction(1, 2), 1.0, seed=1)
    print(f"  union_of_chains(100, 2) vs {{K_2x2}}: verdict {out.verdict}, "
          f"false-reject bound {out.false_reject_bound:.4f}")
    print("  the bound comes from the indistinguishability edge budget and")
    print("  vanishes as a fraction of n^2:")
    for n in (10 ** 4, 10 ** 8, 10 ** 12):
        frac = ot.indistinguishability_bound(2, 2, n) / n ** 2
        print(f"    n = 10^{len(str(n)) - 1}: {frac:.6f}")


if __name__ == "__main__":
    main()
