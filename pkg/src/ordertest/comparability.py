"""Comparability graphs and the graph-level removal and testing results.

The comparability promise is structural: operations needing poset structure
require the graph to carry its source poset.  Transitive orientation of an
arbitrary graph is never attempted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from . import config
from .core import Poset
from .errors import (
    BudgetError,
    EmptyPosetError,
    OracleLimitError,
    ParameterError,
    PromiseError,
)
from .hom import HomDensity
from .removal import (
    DensityTooHigh,
    RemovalResult,
    chain_removal,
    indistinguishability_bound,
)
from .testers import Embedding, TestOutcome, _draw, subposet_test_samples

__all__ = [
    "ComparabilityGraph",
    "GraphFamilySpec",
    "GraphRemovalResult",
    "from_poset",
    "graph_from_edges",
    "chromatic_number",
    "independence_number",
    "max_clique",
    "graph_density_exact",
    "graph_density_mc",
    "graph_removal",
    "subgraph_test",
    "graph_family_tester",
]


class ComparabilityGraph:
    """Symmetric irreflexive adjacency, optionally backed by a source poset."""

    def __init__(self, adj: np.ndarray, source: Poset | None = None):
        adj = np.asarray(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be square")
        if np.diagonal(adj).any() or not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric and irreflexive")
        if source is not None and not np.array_equal(adj, source.rel | source.rel.T):
            raise ValueError("adjacency does not match the source poset")
        adj.setflags(write=False)
        self.n: int = adj.shape[0]
        self.adj: np.ndarray = adj
        self.source: Poset | None = source
        self._adj_bits: list[int] | None = None

    @property
    def adj_bits(self) -> list[int]:
        if self._adj_bits is None:
            self._adj_bits = [
                int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
                for row in self.adj
            ]
        return self._adj_bits

    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        xs, ys = np.nonzero(np.triu(self.adj))
        return list(zip(xs.tolist(), ys.tolist()))

    def induced(self, vertices) -> "ComparabilityGraph":
        idx = np.asarray(list(vertices), dtype=np.intp)
        sub = self.adj[np.ix_(idx, idx)].copy()
        # Duplicate draws become distinct non-adjacent copies.
        np.fill_diagonal(sub, False)
        dup = idx[:, None] == idx[None, :]
        sub &= ~dup
        return ComparabilityGraph(sub)

    def __repr__(self):
        return f"ComparabilityGraph(n={self.n}, edges={self.edge_count()})"


def from_poset(p: Poset) -> ComparabilityGraph:
    return ComparabilityGraph(p.rel | p.rel.T, source=p)


def graph_from_edges(n: int, edges) -> ComparabilityGraph:
    adj = np.zeros((n, n), dtype=bool)
    for x, y in edges:
        if not (0 <= x < n and 0 <= y < n) or x == y:
            raise ValueError(f"bad edge ({x},{y})")
        adj[x, y] = adj[y, x] = True
    return ComparabilityGraph(adj)


# -- exact invariants for small graphs ---------------------------------------


def max_clique(g: ComparabilityGraph, stop_at: int | None = None) -> list[int]:
    """A maximum clique (or any clique of size stop_at, if requested early)."""
    bits = g.adj_bits
    best: list[int] = []

    def grow(clique: list[int], cand: int) -> bool:
        nonlocal best
        if len(clique) > len(best):
            best = clique.copy()
            if stop_at is not None and len(best) >= stop_at:
                return True
        if stop_at is None:
            if len(clique) + cand.bit_count() <= len(best):
                return False
        elif len(clique) + cand.bit_count() < stop_at:
            return False
        mm = cand
        while mm:
            low = mm & -mm
            mm ^= low
            v = low.bit_length() - 1
            if grow(clique + [v], cand & bits[v] & ~(low - 1) & ~low):
                return True
            cand ^= low
        return False

    grow([], (1 << g.n) - 1)
    return best


def _exact_cap(g: ComparabilityGraph) -> None:
    if g.n > config.GRAPH_EXACT_CAP:
        raise OracleLimitError(
            f"exact graph invariants capped at n={config.GRAPH_EXACT_CAP}"
        )


def _chromatic_exact(g: ComparabilityGraph) -> int:
    _exact_cap(g)
    if g.n == 0:
        return 0
    lower = len(max_clique(g))
    order = sorted(range(g.n), key=lambda v: -int(g.adj[v].sum()))
    adj = g.adj
    for k in range(lower, g.n + 1):
        colors = [-1] * g.n

        def feasible(i: int) -> bool:
            if i == g.n:
                return True
            v = order[i]
            used = {colors[u] for u in np.flatnonzero(adj[v]) if colors[u] != -1}
            limit = min(k, max([colors[order[j]] for j in range(i)], default=-1) + 2)
            for col in range(limit):
                if col not in used:
                    colors[v] = col
                    if feasible(i + 1):
                        return True
                    colors[v] = -1
            return False

        if feasible(0):
            return k
    raise AssertionError("n colors always suffice")


def _independence_exact(g: ComparabilityGraph) -> int:
    _exact_cap(g)
    comp = ComparabilityGraph(~g.adj & ~np.eye(g.n, dtype=bool))
    return len(max_clique(comp))


def chromatic_number(g: ComparabilityGraph, cross_check: bool = False) -> int:
    """Exact chromatic number: height of the source poset when available."""
    if g.source is not None:
        value = g.source.height()
        if cross_check and g.n <= config.GRAPH_EXACT_CAP:
            assert _chromatic_exact(g) == value
        return value
    return _chromatic_exact(g)


def independence_number(g: ComparabilityGraph, cross_check: bool = False) -> int:
    """Exact independence number: width of the source poset when available."""
    if g.source is not None:
        value = g.source.width()
        if cross_check and g.n <= config.GRAPH_EXACT_CAP:
            assert _independence_exact(g) == value
        return value
    return _independence_exact(g)


# -- graph homomorphism densities --------------------------------------------


def _graph_hom_count(f: ComparabilityGraph, g: ComparabilityGraph,
                     budget: int) -> int:
    if f.n == 0:
        return 1
    if g.n == 0:
        return 0
    neigh = g.adj_bits
    full = (1 << g.n) - 1
    placed_neighbors = [
        [x for x in range(d) if f.adj[x, d]] for d in range(f.n)
    ]
    img = [0] * f.n
    expansions = 0

    def rec(d: int) -> int:
        nonlocal expansions
        cand = full
        for x in placed_neighbors[d]:
            cand &= neigh[img[x]]
        if d == f.n - 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            expansions += 1
            if expansions > budget:
                raise BudgetError(f"graph hom counting exceeded budget {budget}")
            img[d] = low.bit_length() - 1
            total += rec(d + 1)
        return total

    return rec(0)


def graph_hom_count_naive(f: ComparabilityGraph, g: ComparabilityGraph,
                          limit: int = 10**7) -> int:
    """Full enumeration oracle for the graph hom counter."""
    if f.n == 0:
        return 1
    if g.n**f.n > limit:
        raise BudgetError("naive graph enumeration refused")
    edges = f.edges()
    count = 0
    for m in product(range(g.n), repeat=f.n):
        if all(g.adj[m[x], m[y]] for x, y in edges):
            count += 1
    return count


def graph_density_exact(f: ComparabilityGraph, g: ComparabilityGraph,
                        budget: int | None = None) -> HomDensity:
    if g.n == 0:
        raise EmptyPosetError("density against an empty graph is undefined")
    budget = config.HOM_BUDGET if budget is None else budget
    count = _graph_hom_count(f, g, budget)
    total = g.n**f.n
    return HomDensity(
        mode="exact", estimate=Fraction(count, total), count=count, total=total
    )


def graph_density_mc(f: ComparabilityGraph, g: ComparabilityGraph, trials: int,
                     seed: int, delta: float = 0.05) -> HomDensity:
    if g.n == 0:
        raise EmptyPosetError("density against an empty graph is undefined")
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    maps = rng.integers(0, g.n, size=(trials, f.n))
    ok = np.ones(trials, dtype=bool)
    for x, y in f.edges():
        ok &= g.adj[maps[:, x], maps[:, y]]
    hits = int(ok.sum())
    half = math.sqrt(math.log(2.0 / delta) / (2.0 * trials))
    return HomDensity(
        mode="monte_carlo", estimate=hits / trials, trials=trials,
        ci_halfwidth=half, delta=delta,
    )


# -- removal and testing ------------------------------------------------------


@dataclass(frozen=True)
class GraphFamilySpec:
    members: tuple[ComparabilityGraph, ...]
    chi: int
    alpha: int
    representative: int

    @classmethod
    def from_members(cls, members) -> "GraphFamilySpec":
        members = tuple(members)
        if not members:
            raise ParameterError("family must be non-empty")
        chis = [chromatic_number(m) for m in members]
        chi = min(chis)
        alphas = {
            i: independence_number(members[i])
            for i in range(len(members))
            if chis[i] == chi
        }
        representative = min(alphas, key=lambda i: (alphas[i], i))
        return cls(members=members, chi=chi, alpha=alphas[representative],
                   representative=representative)


@dataclass(frozen=True)
class GraphRemovalResult:
    survivor: ComparabilityGraph
    poset_result: RemovalResult


def graph_removal(
    g: ComparabilityGraph, f: ComparabilityGraph, eps: Fraction | str
) -> GraphRemovalResult | DensityTooHigh:
    """Removal lemma route for comparability graphs (promise: source known)."""
    if g.source is None:
        raise PromiseError("graph removal needs the underlying poset")
    if f.edge_count() == 0:
        raise ParameterError("forbidden graph must have at least one edge")
    eps = Fraction(eps)
    chi = chromatic_number(f)
    alpha = independence_number(f)
    threshold = (eps / 2) ** (chi * alpha * alpha)
    t = graph_density_exact(f, g).estimate
    if t >= threshold:
        return DensityTooHigh(density=t, threshold=threshold)
    result = chain_removal(g.source, eps, chi)
    assert isinstance(result, RemovalResult)
    return GraphRemovalResult(survivor=from_poset(result.survivor),
                              poset_result=result)


def subgraph_test(g: ComparabilityGraph, chi: int, eps: Fraction | float,
                  c: float, seed: int) -> TestOutcome:
    """Sample vertices, reject iff they span a clique on chi vertices."""
    if chi < 2:
        raise ParameterError("need chi >= 2")
    s = subposet_test_samples(chi, eps, c)
    return _clique_test(g, chi, s, seed)


def _clique_test(g: ComparabilityGraph, chi: int, s: int, seed: int) -> TestOutcome:
    if g.n < 1:
        raise ParameterError("host graph must be non-empty")

    sample = _draw(g.n, s, seed, True)
    sub = g.induced(sample)
    clique = max_clique(sub, stop_at=chi)
    witness = Embedding(tuple(sorted(clique))) if len(clique) >= chi else None
    return TestOutcome(
        verdict="reject" if witness else "accept",
        witness=witness,
        samples_used=s,
        sample_trace=tuple(int(x) for x in sample),
    )


def graph_family_tester(g: ComparabilityGraph, fam: GraphFamilySpec,
                        eps: Fraction | float, c: float, seed: int) -> TestOutcome:
    if fam.chi < 2:
        raise ParameterError("family chromatic number must be at least two")
    out = subgraph_test(g, fam.chi, eps, c, seed)
    bound = (
        indistinguishability_bound(fam.chi, fam.alpha, g.n)
        / (g.n * g.n)
        * math.comb(fam.chi, 2)
    )
    return TestOutcome(
        verdict=out.verdict,
        witness=out.witness,
        samples_used=out.samples_used,
        sample_trace=out.sample_trace,
        false_reject_bound=bound,
    )
