"""Acceptance gate: one test per release criterion, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines as they print.  Criteria 1-11 exercise the Python library and CLI only;
criterion 12 exercises the separate plotting frontend and is skipped when
that package has not been built.
"""

import hashlib
import itertools
import math
import os
import shutil
import subprocess
import sys
import time
from fractions import Fraction

import pytest

import ordertest as ot
from ordertest.comparability import (
    chromatic_number,
    from_poset,
    graph_from_edges,
    graph_removal,
    independence_number,
    max_clique,
)
from ordertest.hom import hom_count_naive
from ordertest.removal import DensityTooHigh
from ordertest.testers import derive_seed, family_tester

from conftest import build_corpus

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def report(num, ok, text):
    print(f"\n[criterion {num:2d}] {'PASS' if ok else 'FAIL'}: {text}")
    assert ok, f"criterion {num}: {text}"


def test_criterion_01_hom_oracle_equivalence():
    """Exact hom counting equals full enumeration on 200 seeded pairs."""
    start = time.monotonic()
    failures = 0
    for i in range(200):
        s = derive_seed(101, i)
        q = ot.random_closure(2 + s % 3, 0.3 + (s >> 4) % 50 / 100.0, s)
        p = ot.random_closure(4 + (s >> 8) % 4, 0.2 + (s >> 12) % 60 / 100.0, s + 1)
        if ot.hom_count_exact(q, p) != hom_count_naive(q, p):
            failures += 1
    elapsed = time.monotonic() - start
    report(1, failures == 0 and elapsed < 60,
           f"200 random (q, p) pairs, {failures} mismatches, {elapsed:.1f}s")


def test_criterion_02_density_inequality():
    """Three exact density inequalities hold on 1000 random posets."""
    start = time.monotonic()
    failures = 0
    for i in range(1000):
        s = derive_seed(202, i)
        n = 5 + s % 21  # up to 25 elements
        p = ot.random_closure(n, 0.1 + (s >> 8) % 60 / 100.0, s)
        for h, w in itertools.product((2, 3), (1, 2)):
            if not ot.check_density_inequality(h, w, p).all_pass:
                failures += 1
    elapsed = time.monotonic() - start
    report(2, failures == 0 and elapsed < 600,
           f"1000 posets x 4 shapes, {failures} failures, {elapsed:.1f}s")


def test_criterion_03_chain_removal():
    """Whenever the density hypothesis holds, removal stays within budget."""
    failures = 0
    applicable = 0
    for p in build_corpus():
        if p.n == 0:
            continue
        for h, eps in itertools.product(
            (2, 3, 4), [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2)]
        ):
            if ot.density_exact(ot.chain(h), p).estimate >= (eps / 2) ** h:
                continue
            applicable += 1
            r = ot.chain_removal(p, eps, h)
            ok = (
                not isinstance(r, DensityTooHigh)
                and r.removed_total <= eps * p.n ** 2
                and ot.contains_subposet(ot.chain(h), r.survivor) is None
            )
            failures += not ok
    report(3, failures == 0 and applicable > 0,
           f"{applicable} applicable (poset, h, eps) cases, {failures} failures")


def test_criterion_04_rank_removal_guarantees():
    """Survivor validity, chain-freeness and removal budgets, universally."""
    failures = 0
    checked = 0
    for p in build_corpus():
        for gamma, h in itertools.product(
            [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)],
            (2, 3, 4),
        ):
            checked += 1
            r = ot.edge_removal(p, gamma, h)  # constructor revalidates
            ok = ot.contains_subposet(ot.chain(h), r.survivor) is None
            ok = ok and len(r.removed_same_rank) <= gamma * p.n ** 2
            high = sum(1 for rank in r.ranks.ranks if rank >= h)
            if high <= gamma * p.n:
                ok = ok and r.removed_total <= 2 * gamma * p.n ** 2
            failures += not ok
    report(4, failures == 0, f"{checked} (poset, gamma, h) cases, {failures} failures")


def test_criterion_05_chain_union_sharpness():
    """Chain unions: density below the closed-form bound, oracle matches."""
    failures = 0
    for eps, h in itertools.product([Fraction(1, 2), Fraction(1, 3)], (2, 3)):
        k = int(1 / eps)
        for length in (h * (h - 1), 2 * h * (h - 1)):
            p = ot.union_of_chains(k, length)
            t = ot.density_exact(ot.chain(h), p).estimate
            if not t < eps ** (h - 1) / math.factorial(h):
                failures += 1
            if p.edge_count() <= 20:
                turan = k * (h - 1) * math.comb(length // (h - 1), 2)
                if ot.min_removal_oracle(p, h) != turan:
                    failures += 1
    report(5, failures == 0, f"8 chain-union instances, {failures} failures")


def test_criterion_06_layered_sharpness():
    """Layered fixture: exact farness 2 and accept probability >= e^-c."""
    start = time.monotonic()
    p = ot.sharp_layered(2, 2, Fraction(1, 2))
    ok = ot.min_removal_oracle(p, 2) == 2
    detail = ["oracle=2"]
    trials = 10 ** 5
    for c in (1.0, 2.0, 3.0):
        s = int(c / (2 * Fraction(1, 2)))  # s <= c at eps = 1/2
        accepts = sum(
            not ot.subposet_test(p, 2, s, derive_seed(606, int(c) * trials + t)).rejected
            for t in range(trials)
        )
        observed = accepts / trials
        bound = math.exp(-c)
        sigma = math.sqrt(bound * (1 - bound) / trials)
        ok = ok and observed >= bound - 2 * sigma
        detail.append(f"c={c:g}: {observed:.4f} vs e^-c={bound:.4f}")
    elapsed = time.monotonic() - start
    report(6, ok and elapsed < 120, "; ".join(detail) + f"; {elapsed:.1f}s")


def test_criterion_07_subposet_detection():
    """Chain test rejects far layered fixtures at the 1 - e^-c rate."""
    start = time.monotonic()
    ok = True
    details = []
    trials = 10 ** 4
    eps = Fraction(1, 2)
    for h, c in itertools.product((2, 3), (math.log(2), 1.0, 2.0)):
        p = ot.sharp_layered(h, 2, eps)
        far = eps / (eps + h - 1) ** 2
        s = ot.subposet_test_samples(h, far, c)
        rejects = sum(
            ot.subposet_test(p, h, s, derive_seed(707, h * trials * 10 + t)).rejected
            for t in range(trials)
        )
        observed = rejects / trials
        bound = 1 - math.exp(-c)
        sigma = math.sqrt(bound * (1 - bound) / trials)
        ok = ok and observed >= bound - 3 * sigma
        details.append(f"h={h},c={c:.2f}: {observed:.3f}>={bound:.3f}-3s")
    elapsed = time.monotonic() - start
    report(7, ok and elapsed < 300, "; ".join(details) + f"; {elapsed:.1f}s")


def test_criterion_08_one_sided_completeness():
    """Pattern-free fixtures are never rejected, any tester, any seed."""
    h = 3
    q = ot.chain(h)
    fixtures = []
    for i in range(500):
        s = derive_seed(808, i)
        fixtures.append(ot.random_layered(4 + s % 9, 2, 0.2 + (s >> 8) % 70 / 100.0, s))
    assert all(p.height() < h for p in fixtures)
    rejects = 0
    for i, p in enumerate(fixtures):
        for seed in range(100):
            trial = derive_seed(809, i * 100 + seed)
            rejects += ot.basic_test(p, q, trial).rejected
            rejects += ot.iterated_basic_test(p, q, Fraction(1), trial).rejected
            rejects += ot.subposet_test(p, h, 4, trial).rejected
    report(8, rejects == 0,
           f"500 fixtures x 100 seeds x 3 testers, {rejects} rejections")


def test_criterion_09_interval_closeness():
    """Every poset is close to chain-free via the interval partition."""
    failures = 0
    for i in range(200):
        s = derive_seed(909, i)
        n = 20 + s % 181  # up to 200 elements
        p = ot.random_closure(n, 0.05 + (s >> 8) % 80 / 100.0, s)
        for h in (2, 3, 4, 5, 6):
            r = ot.interval_closeness(p, h)
            ok = r.survivor.height() < h
            ok = ok and r.removed_total <= n * n / (2 * h - 2) + n / 2
            failures += not ok
    report(9, failures == 0, f"200 posets x 5 heights, {failures} failures")


def test_criterion_10_graph_correspondence():
    """Coloring/independence match poset height/width; graph removal and
    the family tester's false-reject decay behave as predicted."""
    failures = 0
    for i in range(100):
        s = derive_seed(1010, i)
        p = ot.random_closure(4 + s % 12, 0.1 + (s >> 8) % 70 / 100.0, s)
        g = from_poset(p)
        cross = p.n <= 12
        if chromatic_number(g, cross_check=cross) != p.height():
            failures += 1
        if independence_number(g, cross_check=cross) != p.width():
            failures += 1

    triangle = graph_from_edges(3, itertools.combinations(range(3), 2))
    for k, length in ((3, 4), (4, 3), (5, 4)):
        g = from_poset(ot.union_of_chains(k, length))
        out = graph_removal(g, triangle, Fraction(1))
        if isinstance(out, DensityTooHigh):
            failures += 1
        elif len(max_clique(out.survivor, stop_at=3)) >= 3:
            failures += 1

    fam = ot.FamilySpec.from_members([ot.k_hw(2, 2)])
    trials = 300
    rates = []
    for n in (40, 80, 160, 320):
        # Unions of 2-chains exclude the 2x2 pattern: no element sits below
        # two others, so the family-free promise holds at every size.
        host = ot.union_of_chains(n // 2, 2)
        assert ot.contains_subposet(ot.k_hw(2, 2), host) is None
        rejects = sum(
            family_tester(host, fam, Fraction(1, 2), 1.0,
                          derive_seed(1011, n * trials + t)).rejected
            for t in range(trials)
        )
        rates.append(rejects / trials)
    # One-sided 95% check per consecutive pair: no significant increase.
    trend_ok = all(
        b <= a + 1.645 * math.sqrt(max(a * (1 - a), 1e-9) / trials)
        for a, b in zip(rates, rates[1:])
    )
    report(10, failures == 0 and trend_ok,
           f"{failures} chi/alpha/removal failures; false-reject rates "
           + ">".join(f"{r:.2f}" for r in rates))


def test_criterion_11_cli_determinism(tmp_path):
    """Identical CLI invocations produce byte-identical output."""
    host = tmp_path / "host.poset"
    subprocess.run(
        [sys.executable, "-m", "ordertest.cli", "gen", "union_of_chains",
         "--k", "4", "--len", "5", "-o", str(host)],
        check=True,
    )
    cfg = tmp_path / "exp.cfg"
    cfg.write_text("experiment = closeness\nseed = 5\ntrials = 5\nh = 3\nn = 12\n")
    csv_out = tmp_path / "exp.csv"
    commands = [
        ["gen", "chain", "--h", "6"],
        ["gen", "random_closure", "--n", "14", "--p", "0.3", "--seed", "9"],
        ["gen", "sharp_layered", "--h", "3", "--w", "4", "--eps", "1/2"],
        ["density", "--pattern", "chain:3", "--host", str(host), "--csv"],
        ["density", "--pattern", "khw:2,2", "--host", str(host), "--mode", "mc",
         "--trials", "200", "--seed", "3", "--csv"],
        ["remove", str(host), "--gamma", "1/4", "--h", "3"],
        ["remove", str(host), "--h", "3", "--mode", "interval"],
        ["test", str(host), "--mode", "subposet", "--h", "3", "--eps", "1/4",
         "--seed", "8", "--trials", "5"],
        ["test", str(host), "--mode", "basic", "--pattern", "chain:3",
         "--seed", "2", "--trials", "5"],
        ["experiment", str(cfg), "-o", str(csv_out)],
    ]
    mismatches = 0
    runs = 0
    for args in commands:
        digests = set()
        for _ in range(2):
            proc = subprocess.run(
                [sys.executable, "-m", "ordertest.cli", *args],
                capture_output=True, text=True,
            )
            payload = proc.stdout
            if args[0] == "experiment":
                payload += csv_out.read_text()
            digests.add(hashlib.sha256(payload.encode()).hexdigest())
            runs += 1
        mismatches += len(digests) != 1
    report(11, mismatches == 0 and runs == 20,
           f"{runs} invocations over {len(commands)} command lines, "
           f"{mismatches} digest mismatches")


def test_criterion_12_detection_curve_render(tmp_path):
    """Frontend renders the detection curve from the golden CSV with the
    1 - e^-c target line per c."""
    frontend = os.path.join(REPO, "frontend")
    golden = os.path.join(frontend, "testdata", "subposet-detection.csv")
    if not (os.path.isdir(frontend) and os.path.isfile(golden)):
        pytest.skip("plotting frontend not built")
    if shutil.which("node") is None:
        pytest.skip("node unavailable")
    entry = os.path.join(frontend, "dist", "cli.js")
    if not os.path.isfile(entry):
        subprocess.run(["npm", "run", "build"], cwd=frontend, check=True,
                       capture_output=True)
    out = tmp_path / "detection.svg"
    proc = subprocess.run(
        ["node", entry, "--csv", golden, "--kind", "detection-curve",
         "--out", str(out)],
        capture_output=True, text=True,
    )
    ok = proc.returncode == 0 and out.is_file()
    svg = out.read_text() if ok else ""
    cs = set()
    with open(golden) as fh:
        import csv as _csv
        for row in _csv.DictReader(fh):
            cs.add(float(row["c"]))
    for c in cs:
        target = 1 - math.exp(-c)
        ok = ok and f'data-target="{target:.6f}"' in svg
    report(12, ok, f"detection curve rendered, target lines for c in {sorted(cs)}")
