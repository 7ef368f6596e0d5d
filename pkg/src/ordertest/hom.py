"""Homomorphism counting and densities between posets.

A homomorphism is an order-preserving (not necessarily injective) map; the
density t(Q, P) is the probability that a uniform random map Q -> P is one.
Exact counts are arbitrary-precision; densities are exact rationals.

Counting uses two routes: a transfer contraction for complete multipartite
patterns (chains, layered posets) and a generic backtracker over a
topological order of the pattern with bitset candidate sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from . import config
from .core import Poset
from .errors import BudgetError, EmptyPosetError, ParameterError
from .generators import alternating, chain, k_hw

__all__ = [
    "HomDensity",
    "Embedding",
    "hom_count_exact",
    "hom_count_naive",
    "density_exact",
    "density_mc",
    "contains_subposet",
    "injective_hom_count",
    "DensityInequalityReport",
    "check_density_inequality",
]


@dataclass(frozen=True)
class HomDensity:
    """Exact or Monte Carlo estimate of a homomorphism density."""

    mode: str  # "exact" | "monte_carlo"
    estimate: Fraction | float
    count: int | None = None
    total: int | None = None
    trials: int | None = None
    ci_halfwidth: float | None = None
    delta: float | None = None

    def as_float(self) -> float:
        return float(self.estimate)


@dataclass(frozen=True)
class Embedding:
    """Injective order-preserving map, pattern element i -> host element map[i]."""

    map: tuple[int, ...]

    def verify(self, q: Poset, p: Poset) -> bool:
        if len(self.map) != q.n or len(set(self.map)) != q.n:
            return False
        return all(
            p.rel[self.map[x], self.map[y]]
            for x in range(q.n)
            for y in range(q.n)
            if q.rel[x, y]
        )


# -- exact counting ---------------------------------------------------------


def _hom_count_multipartite(widths: list[int], p: Poset) -> int | None:
    """Transfer contraction for complete multipartite patterns.

    Returns None when intermediate counts might overflow int64; the caller
    falls back to the generic backtracker.
    """
    n = p.n
    total_elems = sum(widths)
    if total_elems == 0:
        return 1
    if n == 0:
        return 0
    if len(widths) == 1:
        return n ** widths[0]
    if n**total_elems >= 2**62:
        return None
    # Intermediate tensors have n^(width+1) entries; keep them in memory.
    if n ** (max(widths) + 1) > 2**24:
        return None
    R = p.rel.astype(np.int64)
    a = widths[0]
    V = np.ones((n,) * a, dtype=np.int64)
    for b in widths[1:]:
        # C[T, u] = prod_{t in T} R[t, u]: 1 iff u is above every entry of T.
        C = np.ones((n,) * a + (n,), dtype=np.int64)
        for i in range(a):
            shape = [1] * (a + 1)
            shape[i] = n
            shape[a] = n
            C = C * R.reshape(shape)
        D = C.reshape(-1, n)
        Vf = V.reshape(-1)
        if b == 1:
            V = Vf @ D
        else:
            letters = "abcdefgh"[:b]
            subs = "t," + ",".join(f"t{c}" for c in letters) + "->" + letters
            V = np.einsum(subs, Vf, *([D] * b), optimize=True)
        a = b
    return int(V.sum())


def _hom_count_backtracking(q: Poset, p: Poset, budget: int) -> int:
    if q.n == 0:
        return 1
    if p.n == 0:
        return 0
    order = q.lin_ext
    preds = [
        [e for e in range(d) if q.rel[order[e], order[d]]] for d in range(q.n)
    ]
    succ = p.succ_bits
    full = p.full_mask
    m = q.n
    img = [0] * m
    expansions = 0

    def rec(d: int) -> int:
        nonlocal expansions
        cand = full
        for e in preds[d]:
            cand &= succ[img[e]]
        if d == m - 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            expansions += 1
            if expansions > budget:
                raise BudgetError(f"hom counting exceeded budget {budget}")
            img[d] = low.bit_length() - 1
            total += rec(d + 1)
        return total

    return rec(0)


def hom_count_exact(q: Poset, p: Poset, budget: int | None = None) -> int:
    """Exact number of order-preserving maps Q -> P."""
    budget = config.HOM_BUDGET if budget is None else budget
    widths = q.multipartite_layers()
    if widths is not None:
        count = _hom_count_multipartite(widths, p)
        if count is not None:
            return count
    return _hom_count_backtracking(q, p, budget)


def hom_count_naive(q: Poset, p: Poset, limit: int = 10**7) -> int:
    """Full |P|^|Q| enumeration; independent oracle for the exact counters."""
    if q.n == 0:
        return 1
    if p.n**q.n > limit:
        raise BudgetError(f"naive enumeration over {p.n}^{q.n} maps refused")
    edges = q.edges()
    count = 0
    for f in product(range(p.n), repeat=q.n):
        if all(p.rel[f[x], f[y]] for x, y in edges):
            count += 1
    return count


def density_exact(q: Poset, p: Poset, budget: int | None = None) -> HomDensity:
    if p.n == 0:
        raise EmptyPosetError("density against an empty host is undefined")
    count = hom_count_exact(q, p, budget)
    total = p.n**q.n
    return HomDensity(
        mode="exact", estimate=Fraction(count, total), count=count, total=total
    )


def density_mc(
    q: Poset, p: Poset, trials: int, seed: int, delta: float = 0.05
) -> HomDensity:
    """Monte Carlo density with a two-sided Hoeffding confidence interval."""
    if p.n == 0:
        raise EmptyPosetError("density against an empty host is undefined")
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    maps = rng.integers(0, p.n, size=(trials, q.n))
    ok = np.ones(trials, dtype=bool)
    for x, y in q.edges():
        ok &= p.rel[maps[:, x], maps[:, y]]
    hits = int(ok.sum())
    half = math.sqrt(math.log(2.0 / delta) / (2.0 * trials))
    return HomDensity(
        mode="monte_carlo",
        estimate=hits / trials,
        trials=trials,
        ci_halfwidth=half,
        delta=delta,
    )


# -- subposet containment ---------------------------------------------------


def contains_subposet(
    q: Poset, p: Poset, budget: int | None = None
) -> Embedding | None:
    """Lexicographically least injective order-preserving map, or None.

    Containment is in the non-induced sense: only the pattern's relations
    must be preserved, incomparabilities carry no constraint.
    """
    budget = config.HOM_BUDGET if budget is None else budget
    if q.n == 0:
        return Embedding(())
    if q.n > p.n:
        return None
    succ, pred = p.succ_bits, p.pred_bits
    full = p.full_mask
    m = q.n
    above = [
        [x for x in range(d) if q.rel[x, d]] for d in range(m)
    ]  # placed x below d
    below = [[x for x in range(d) if q.rel[d, x]] for d in range(m)]
    img = [0] * m
    expansions = 0

    def rec(d: int, used: int) -> bool:
        nonlocal expansions
        cand = full & ~used
        for x in above[d]:
            cand &= succ[img[x]]
        for x in below[d]:
            cand &= pred[img[x]]
        while cand:
            low = cand & -cand
            cand ^= low
            expansions += 1
            if expansions > budget:
                raise BudgetError(f"embedding search exceeded budget {budget}")
            v = low.bit_length() - 1
            img[d] = v
            if d == m - 1 or rec(d + 1, used | low):
                return True
        return False

    if rec(0, 0):
        return Embedding(tuple(img))
    return None


def injective_hom_count(q: Poset, p: Poset, limit: int = 10**7) -> int:
    """Brute-force count of injective order-preserving maps (test oracle)."""
    if q.n == 0:
        return 1
    if p.n**q.n > limit:
        raise BudgetError("injective enumeration refused")
    edges = q.edges()
    count = 0
    for f in product(range(p.n), repeat=q.n):
        if len(set(f)) == q.n and all(p.rel[f[x], f[y]] for x, y in edges):
            count += 1
    return count


# -- the density inequality -------------------------------------------------


@dataclass(frozen=True)
class DensityInequalityReport:
    """Exact check of t(k_hw) >= t(alternating)^w >= t(chain)^(w^2)."""

    h: int
    w: int
    t_chain: Fraction
    t_alternating: Fraction
    t_box: Fraction
    alternating_vs_chain: bool  # t_alternating >= t_chain^w
    box_vs_alternating: bool  # t_box >= t_alternating^w
    composed: bool  # t_box >= t_chain^(w^2)

    @property
    def all_pass(self) -> bool:
        return self.alternating_vs_chain and self.box_vs_alternating and self.composed


def check_density_inequality(h: int, w: int, p: Poset) -> DensityInequalityReport:
    if h < 1 or w < 1:
        raise ParameterError("need h >= 1 and w >= 1")
    t_chain = density_exact(chain(h), p).estimate
    t_alt = density_exact(alternating(h, w), p).estimate
    t_box = density_exact(k_hw(h, w), p).estimate
    return DensityInequalityReport(
        h=h,
        w=w,
        t_chain=t_chain,
        t_alternating=t_alt,
        t_box=t_box,
        alternating_vs_chain=t_alt >= t_chain**w,
        box_vs_alternating=t_box >= t_alt**w,
        composed=t_box >= t_chain ** (w * w),
    )
