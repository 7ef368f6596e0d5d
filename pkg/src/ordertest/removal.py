"""Rank-based edge removal and the closeness constructions.

The rank function labels elements in linear-extension order; an element gets
rank k+1 when at least gamma*n of its predecessors already carry rank k.
Removing the same-rank edges and the edges into rank >= h elements leaves a
valid chain-free poset whose removed-edge count is controlled by gamma.

All threshold comparisons use exact rational arithmetic: a floating-point
"count >= gamma*n" can flip ranks at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import config
from .core import Poset
from .errors import OracleLimitError, ParameterError
from .generators import chain
from .hom import density_exact

__all__ = [
    "RankAssignment",
    "RemovalResult",
    "DensityTooHigh",
    "rank_function",
    "edge_removal",
    "chain_removal",
    "poset_removal",
    "interval_closeness",
    "min_removal_oracle",
    "indistinguishability_bound",
]


@dataclass(frozen=True)
class RankAssignment:
    gamma: Fraction
    ranks: tuple[int, ...]  # element -> positive integer


@dataclass(frozen=True)
class RemovalResult:
    survivor: Poset
    removed_same_rank: tuple[tuple[int, int], ...]
    removed_high_rank: tuple[tuple[int, int], ...]
    h: int
    budget_fraction: Fraction
    ranks: RankAssignment | None = None

    @property
    def removed_total(self) -> int:
        return len(self.removed_same_rank) + len(self.removed_high_rank)


@dataclass(frozen=True)
class DensityTooHigh:
    """Structured non-error: the removal lemma's density hypothesis fails."""

    density: Fraction
    threshold: Fraction


def rank_function(p: Poset, gamma: Fraction | str) -> RankAssignment:
    """Rank labels in linear-extension order, exact gamma*n threshold."""
    gamma = Fraction(gamma)
    if not 0 < gamma < 1:
        raise ParameterError("gamma must be in (0, 1)")
    n = p.n
    ranks = np.zeros(n, dtype=np.int64)
    num, den = gamma.numerator, gamma.denominator
    for y in p.lin_ext:
        pred_ranks = ranks[p.rel[:, y]]
        r = 1
        if pred_ranks.size:
            counts = np.bincount(pred_ranks)
            # count >= gamma*n, compared exactly.
            big = np.flatnonzero(counts * den >= num * n)
            if big.size:
                r = 1 + int(big.max())
        ranks[y] = r
    return RankAssignment(gamma=gamma, ranks=tuple(int(r) for r in ranks))


def edge_removal(p: Poset, gamma: Fraction | str, h: int) -> RemovalResult:
    """Remove same-rank edges and edges into rank >= h elements.

    The survivor is always a valid chain(h)-free poset; same-rank removals
    number at most gamma*n^2.
    """
    if h < 2:
        raise ParameterError("edge removal needs h >= 2")
    assignment = rank_function(p, gamma)
    ranks = np.asarray(assignment.ranks)
    same = p.rel & (ranks[:, None] == ranks[None, :])
    high = p.rel & (ranks[None, :] >= h) & ~same
    survivor_rel = p.rel & ~same & ~high
    survivor = Poset(survivor_rel)  # validation asserts the survivor is a poset
    n2 = p.n * p.n
    removed = int(same.sum() + high.sum())
    return RemovalResult(
        survivor=survivor,
        removed_same_rank=_pairs(same),
        removed_high_rank=_pairs(high),
        h=h,
        budget_fraction=Fraction(removed, n2) if n2 else Fraction(0),
        ranks=assignment,
    )


def _pairs(mask: np.ndarray) -> tuple[tuple[int, int], ...]:
    xs, ys = np.nonzero(mask)
    return tuple(zip(xs.tolist(), ys.tolist()))


def chain_removal(
    p: Poset, eps: Fraction | str, h: int
) -> RemovalResult | DensityTooHigh:
    """Chain removal lemma route: valid whenever t(chain(h), p) < (eps/2)^h."""
    eps = Fraction(eps)
    if h < 2:
        raise ParameterError("chain removal needs h >= 2")
    if eps <= 0:
        raise ParameterError("eps must be positive")
    gamma = eps / 2
    threshold = gamma**h
    t = density_exact(chain(h), p).estimate
    if t >= threshold:
        return DensityTooHigh(density=t, threshold=threshold)
    result = edge_removal(p, gamma, h)
    assert result.removed_total <= eps * p.n * p.n
    return result


def poset_removal(
    p: Poset, q: Poset, eps: Fraction | str
) -> RemovalResult | DensityTooHigh:
    """General-pattern removal, reduced to the chain case via h(q), w(q)."""
    eps = Fraction(eps)
    h, w = q.height(), q.width()
    if h < 2:
        raise ParameterError("pattern must have height at least two")
    threshold = (eps / 2) ** (h * w * w)
    t = density_exact(q, p).estimate
    if t >= threshold:
        return DensityTooHigh(density=t, threshold=threshold)
    result = chain_removal(p, eps, h)
    # t(chain(h))^(w^2) <= t(q) < (eps/2)^(h w^2) forces the chain hypothesis.
    assert isinstance(result, RemovalResult)
    return result


def interval_closeness(p: Poset, h: int) -> RemovalResult:
    """Remove all edges inside h-1 consecutive linear-extension intervals.

    The survivor has height at most h-1, so it is chain(h)-free; at most
    n^2/(2h-2) + O(n) edges go.
    """
    if h < 2:
        raise ParameterError("interval closeness needs h >= 2")
    n = p.n
    parts = h - 1
    base, extra = divmod(n, parts)
    interval = np.zeros(n, dtype=np.int64)
    pos = 0
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        interval[list(p.lin_ext[pos : pos + size])] = i
        pos += size
    same = p.rel & (interval[:, None] == interval[None, :])
    survivor = Poset(p.rel & ~same)
    n2 = n * n
    return RemovalResult(
        survivor=survivor,
        removed_same_rank=_pairs(same),
        removed_high_rank=(),
        h=h,
        budget_fraction=Fraction(int(same.sum()), n2) if n2 else Fraction(0),
    )


# -- brute-force minimum removal --------------------------------------------


def _as_union_of_chains(p: Poset) -> list[int] | None:
    """Chain lengths if p is a disjoint union of chains, else None."""
    n = p.n
    comp = -np.ones(n, dtype=np.int64)
    sym = p.rel | p.rel.T
    label = 0
    for v in range(n):
        if comp[v] == -1:
            stack = [v]
            comp[v] = label
            while stack:
                x = stack.pop()
                for y in np.flatnonzero(sym[x]):
                    if comp[y] == -1:
                        comp[y] = label
                        stack.append(int(y))
            label += 1
    lengths = []
    for c in range(label):
        members = np.flatnonzero(comp == c)
        block = sym[np.ix_(members, members)]
        size = len(members)
        if block.sum() != size * (size - 1):  # pairwise comparable
            return None
        lengths.append(size)
    return lengths


def _as_sharp_layered(p: Poset, h: int) -> int | None:
    """Closed-form answer for layered [a, w, ..., w] posets with a <= w."""
    widths = p.multipartite_layers()
    if not widths or len(widths) != h:
        return None
    a, rest = widths[0], widths[1:]
    if rest and all(r == rest[0] for r in rest) and a <= rest[0]:
        return a * rest[0]
    return None


def min_removal_oracle(p: Poset, h: int, cap: int | None = None) -> int:
    """Minimum edges whose removal leaves a transitive chain(h)-free relation.

    Uses closed forms for recognized constructions, otherwise exhaustive
    search in increasing removal-set size (edge count capped).
    """
    if h < 2:
        raise ParameterError("need h >= 2")
    if p.height() < h:
        return 0
    if h == 2:
        # Chain(2)-free means edgeless.
        return p.edge_count()
    chain_lengths = _as_union_of_chains(p)
    if chain_lengths is not None and all(
        length % (h - 1) == 0 for length in chain_lengths
    ):
        return sum(
            (h - 1) * comb(length // (h - 1), 2) for length in chain_lengths
        )
    closed = _as_sharp_layered(p, h)
    if closed is not None:
        return closed
    cap = config.MIN_REMOVAL_EDGE_CAP if cap is None else cap
    edges = p.edges()
    if len(edges) > cap:
        raise OracleLimitError(
            f"minimum-removal oracle capped at {cap} edges, poset has {len(edges)}"
        )
    rel = p.rel
    for size in range(len(edges) + 1):
        for combo in combinations(range(len(edges)), size):
            trial = rel.copy()
            for i in combo:
                x, y = edges[i]
                trial[x, y] = False
            if ((trial @ trial) & ~trial).any():
                continue
            if _height_of(trial) < h:
                return size
    raise AssertionError("removing all edges is always feasible")


def _height_of(rel: np.ndarray) -> int:
    n = rel.shape[0]
    if n == 0:
        return 0
    lev = np.zeros(n, dtype=np.int64)
    order = np.argsort(rel.sum(axis=0), kind="stable")
    for x in order:
        below = rel[:, x]
        lev[x] = 1 + (lev[below].max() if below.any() else 0)
    return int(lev.max())


def indistinguishability_bound(h: int, w: int, n: int) -> float:
    """Edge budget 2*(h^2 w^2 / n)^(1/(h w^2)) * n^2 for pattern-free posets."""
    if h < 2 or w < 1 or n < 1:
        raise ParameterError("need h >= 2, w >= 1, n >= 1")
    return 2.0 * (h * h * w * w / n) ** (1.0 / (h * w * w)) * n * n
