"""Exact homomorphism densities and the layered density inequality chain.

For every host poset P the exact rational densities satisfy

    t(K_{h x w}, P)  >=  t(A_{h,w}, P)^w  >=  t(C_h, P)^{w^2}

where C_h is the h-chain, A_{h,w} alternates layers of sizes w and 1, and
K_{h x w} is the complete h-layered poset with w elements per layer.  This
script evaluates all three densities exactly (big-integer rationals, no
floating point) on a few hosts and prints the margins.

Run from the repository root:

    python3 demos/02_density_inequalities.py
"""

from fractions import Fraction

import ordertest as ot

HOSTS = [
    ("chain(6)", ot.chain(6)),
    ("k_hw(3, 3)", ot.k_hw(3, 3)),
    ("union_of_chains(3, 4)", ot.union_of_chains(3, 4)),
    ("sharp_layered(3, 2, 1/2)", ot.sharp_layered(3, 2, Fraction(1, 2))),
    ("random_closure(10, 0.3)", ot.random_closure(10, 0.3, seed=42)),
]


def main() -> None:
    for h, w in [(2, 2), (3, 2)]:
        print(f"=== h={h}, w={w} ===")
        for name, host in HOSTS:
            report = ot.check_density_inequality(h, w, host)
            print(f"  {name}:")
            print(f"    t(C_{h})         = {report.t_chain}")
            print(f"    t(A_{h},{w})        = {report.t_alternating}"
                  f"  (>= t_chain^{w}: {report.t_alternating >= report.t_chain ** w})")
            print(f"    t(K_{h}x{w})        = {report.t_box}"
                  f"  (>= t_alt^{w}: {report.t_box >= report.t_alternating ** w})")
            print(f"    composed bound  t_box >= t_chain^{w * w}: {report.composed}")
            assert report.all_pass
        print()

    # The same inequality transfers to comparability graphs: clique density
    # of the box pattern against chain density of the complete graph.
    from ordertest.comparability import from_poset, graph_density_exact
    host = ot.random_closure(9, 0.35, seed=5)
    g = from_poset(host)
    f = from_poset(ot.k_hw(2, 2))
    t_graph = graph_density_exact(f, g).estimate
    t_poset = ot.density_exact(ot.k_hw(2, 2), host).estimate
    print("comparability transfer on random_closure(9, 0.35):")
    print(f"  graph box density {t_graph} >= poset box density {t_poset}: "
          f"{t_graph >= t_poset}")


if __name__ == "__main__":
    main()
