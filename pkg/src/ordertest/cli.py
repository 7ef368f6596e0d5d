"""Command-line front end.

Exit codes: 0 on success or an accepting test verdict, 1 on a rejecting
verdict, 2 on any error.  All randomized subcommands require an explicit
seed; identical arguments and files give byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import generators, textio
from .comparability import from_poset, graph_family_tester, GraphFamilySpec, subgraph_test
from .errors import OrdertestError
from .experiments import ExperimentConfig, run_experiment
from .hom import density_exact, density_mc
from .removal import (
    DensityTooHigh,
    edge_removal,
    interval_closeness,
    min_removal_oracle,
)
from .testers import (
    FamilySpec,
    basic_test,
    family_tester,
    iterated_basic_test,
    subposet_test,
    subposet_test_samples,
)


def _fraction(text: str) -> Fraction:
    # Rationals arrive as "a/b" strings, never floats.
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _pattern(spec: str):
    """Pattern argument: 'chain:h', 'khw:h,w', 'antichain:k' or a poset file."""
    if spec.startswith("chain:"):
        return generators.chain(int(spec.split(":", 1)[1]))
    if spec.startswith("antichain:"):
        return generators.antichain(int(spec.split(":", 1)[1]))
    if spec.startswith("khw:"):
        h, w = spec.split(":", 1)[1].split(",")
        return generators.k_hw(int(h), int(w))
    return textio.load_poset(spec)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="ordertest")
    sub = top.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named poset")
    gen.add_argument("kind", choices=[
        "chain", "antichain", "multipartite", "k_hw", "alternating",
        "union_of_chains", "sharp_layered", "random_layered", "random_closure",
    ])
    gen.add_argument("--h", type=int)
    gen.add_argument("--w", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--len", type=int, dest="length")
    gen.add_argument("--widths", help="comma-separated layer widths")
    gen.add_argument("--eps", type=_fraction)
    gen.add_argument("--layers", type=int)
    gen.add_argument("--p", type=float)
    gen.add_argument("--seed", type=int)
    gen.add_argument("-o", "--output", help="output file (default stdout)")
    gen.add_argument("--dot", action="store_true", help="emit a DOT Hasse diagram")

    den = sub.add_parser("density", help="homomorphism density t(Q, P)")
    den.add_argument("--pattern", required=True)
    den.add_argument("--host", required=True)
    den.add_argument("--mode", choices=["exact", "mc"], default="exact")
    den.add_argument("--trials", type=int, default=10000)
    den.add_argument("--seed", type=int)
    den.add_argument("--delta", type=float, default=0.05)
    den.add_argument("--csv", action="store_true", help="emit a single CSV row")

    rem = sub.add_parser("remove", help="edge removal toward chain-freeness")
    rem.add_argument("input")
    rem.add_argument("--gamma", type=_fraction)
    rem.add_argument("--h", type=int, required=True)
    rem.add_argument("--mode", choices=["rank", "interval", "oracle"],
                     default="rank")
    rem.add_argument("-o", "--output", help="survivor poset file")

    tst = sub.add_parser("test", help="run a sampling tester")
    tst.add_argument("host")
    tst.add_argument("--mode", required=True,
                     choices=["basic", "iterated", "subposet", "family"])
    tst.add_argument("--pattern")
    tst.add_argument("--family", nargs="+", help="family member poset files")
    tst.add_argument("--h", type=int)
    tst.add_argument("--eps", type=_fraction)
    tst.add_argument("--c", type=float, default=1.0)
    tst.add_argument("--seed", type=int, required=True)
    tst.add_argument("--trials", type=int, default=1,
                     help="repeat with derived seeds, emit per-trial CSV rows")
    tst.add_argument("--comparability", action="store_true",
                     help="test the comparability graph of the host poset")

    exp = sub.add_parser("experiment", help="run a configured experiment grid")
    exp.add_argument("config", help="key=value config file")
    exp.add_argument("-o", "--output", required=True, help="CSV output path")

    return top


def _cmd_gen(args) -> int:
    params = {}
    for key, value in [
        ("h", args.h), ("w", args.w), ("n", args.n), ("k", args.k),
        ("len", args.length), ("eps", args.eps), ("layers", args.layers),
        ("p", args.p), ("seed", args.seed),
    ]:
        if value is not None:
            params[key] = value
    if args.widths is not None:
        params["widths"] = [int(v) for v in args.widths.split(",")]
    try:
        p = generators.build(args.kind, **params)
    except KeyError as exc:
        print(f"gen {args.kind}: missing parameter {exc}", file=sys.stderr)
        return 2
    text = textio.hasse_dot(p) if args.dot else textio.emit_poset(p)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_density(args) -> int:
    q = _pattern(args.pattern)
    p = textio.load_poset(args.host)
    if args.mode == "exact":
        d = density_exact(q, p)
        est = d.estimate
        if args.csv:
            print(f"exact,{est.numerator},{est.denominator},{float(est)!r}")
        else:
            print(f"t = {est} = {float(est)!r} ({d.count} of {d.total} maps)")
    else:
        if args.seed is None:
            print("density --mode mc requires --seed", file=sys.stderr)
            return 2
        d = density_mc(q, p, args.trials, args.seed, args.delta)
        if args.csv:
            print(f"mc,{d.estimate!r},{d.ci_halfwidth!r},{d.trials}")
        else:
            print(
                f"t ~ {d.estimate!r} +/- {d.ci_halfwidth:.6f} "
                f"({d.trials} trials, delta={d.delta})"
            )
    return 0


def _cmd_remove(args) -> int:
    p = textio.load_poset(args.input)
    if args.mode == "oracle":
        print(min_removal_oracle(p, args.h))
        return 0
    if args.mode == "interval":
        result = interval_closeness(p, args.h)
    else:
        if args.gamma is None:
            print("remove --mode rank requires --gamma", file=sys.stderr)
            return 2
        result = edge_removal(p, args.gamma, args.h)
    if isinstance(result, DensityTooHigh):
        print(f"density too high: {result.density} >= {result.threshold}")
        return 1
    stats = {
        "removed_same_rank": len(result.removed_same_rank),
        "removed_high_rank": len(result.removed_high_rank),
        "budget_fraction": str(result.budget_fraction),
    }
    print(" ".join(f"{k}={v}" for k, v in sorted(stats.items())))
    if args.output:
        textio.save_poset(args.output, result.survivor)
    return 0


def _run_single_test(args, p, trial_seed) :
    if args.mode == "basic":
        return basic_test(p, _pattern(args.pattern), trial_seed)
    if args.mode == "iterated":
        return iterated_basic_test(p, _pattern(args.pattern), args.eps, trial_seed)
    if args.mode == "subposet":
        h = args.h if args.h is not None else _pattern(args.pattern).height()
        s = subposet_test_samples(h, args.eps, args.c)
        return subposet_test(p, h, s, trial_seed)
    members = [textio.load_poset(f) for f in args.family]
    fam = FamilySpec.from_members(members)
    return family_tester(p, fam, args.eps, args.c, trial_seed)


def _cmd_test(args) -> int:
    from .testers import derive_seed

    p = textio.load_poset(args.host)
    if args.comparability:
        g = from_poset(p)
        if args.mode not in ("subposet", "family"):
            print("--comparability supports subposet/family modes", file=sys.stderr)
            return 2
        if args.mode == "subposet":
            chi = args.h if args.h is not None else 2
            run = lambda s: subgraph_test(g, chi, args.eps, args.c, s)
        else:
            members = [from_poset(textio.load_poset(f)) for f in args.family]
            fam = GraphFamilySpec.from_members(members)
            run = lambda s: graph_family_tester(g, fam, args.eps, args.c, s)
    else:
        run = lambda s: _run_single_test(args, p, s)

    any_reject = False
    print("seed,verdict,samples_used")
    for t in range(args.trials):
        trial_seed = derive_seed(args.seed, t) if args.trials > 1 else args.seed
        out = run(trial_seed)
        any_reject = any_reject or out.rejected
        print(f"{trial_seed},{out.verdict},{out.samples_used}")
    return 1 if any_reject else 0


def _cmd_experiment(args) -> int:
    with open(args.config) as fh:
        cfg = ExperimentConfig.parse(fh.read(), args.config)
    rows = run_experiment(cfg, args.output)
    failed = sum(1 for row in rows if not row["pass"])
    print(f"{len(rows)} rows -> {args.output} ({failed} failing)")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "density": _cmd_density,
        "remove": _cmd_remove,
        "test": _cmd_test,
        "experiment": _cmd_experiment,
    }
    try:
        return handlers[args.command](args)
    except (OrdertestError, textio.FormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
