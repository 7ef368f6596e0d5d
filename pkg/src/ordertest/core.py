"""Validated finite strict partial orders.

A poset is stored as the full transitive closure of its relation in an n x n
boolean matrix (``rel[x, y]`` means x strictly below y), together with a
deterministic linear extension.  Elements are the dense indices 0..n-1.
Instances are immutable after construction and safe to share.
"""

from __future__ import annotations

import heapq
from itertools import combinations, permutations

import numpy as np

from . import config
from .errors import CycleError, OracleLimitError, TransitivityError

__all__ = [
    "Poset",
    "from_relations",
    "is_isomorphic",
    "min_antichain_cover",
    "min_chain_cover",
]


def _closure_inplace(rel: np.ndarray) -> None:
    # Warshall, row-vectorized.
    n = rel.shape[0]
    for k in range(n):
        below_k = rel[:, k]
        if below_k.any():
            rel[below_k, :] |= rel[k, :]


def _kahn_extension(rel: np.ndarray) -> tuple[int, ...]:
    # Smallest-index-first topological order of the strict relation.
    n = rel.shape[0]
    indeg = rel.sum(axis=0).tolist()
    heap = [x for x in range(n) if indeg[x] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        x = heapq.heappop(heap)
        order.append(x)
        for y in np.flatnonzero(rel[x]):
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, int(y))
    return tuple(order)


class Poset:
    """A finite strict partial order on elements 0..n-1.

    Do not call the constructor with non-closed relations; use
    :func:`from_relations`, which applies the transitive closure and
    validates everything.
    """

    def __init__(self, rel: np.ndarray, _validated: bool = False):
        rel = np.asarray(rel, dtype=bool)
        if not _validated:
            _validate(rel)
        rel.setflags(write=False)
        self.n: int = rel.shape[0]
        self.rel: np.ndarray = rel
        self.lin_ext: tuple[int, ...] = _kahn_extension(rel)
        self._succ_bits: list[int] | None = None
        self._pred_bits: list[int] | None = None

    # -- bitset views used by the backtracking searches -------------------

    @property
    def succ_bits(self) -> list[int]:
        if self._succ_bits is None:
            self._succ_bits = [
                int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
                for row in self.rel
            ]
        return self._succ_bits

    @property
    def pred_bits(self) -> list[int]:
        if self._pred_bits is None:
            self._pred_bits = [
                int.from_bytes(np.packbits(col, bitorder="little").tobytes(), "little")
                for col in self.rel.T
            ]
        return self._pred_bits

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- structural queries ------------------------------------------------

    def edge_count(self) -> int:
        """Number of comparable pairs, each counted once."""
        return int(self.rel.sum())

    def edges(self) -> list[tuple[int, int]]:
        xs, ys = np.nonzero(self.rel)
        return list(zip(xs.tolist(), ys.tolist()))

    def height(self) -> int:
        """Maximum number of elements in a chain (0 for the empty poset)."""
        return int(self.levels().max(initial=0))

    def levels(self) -> np.ndarray:
        """Longest-chain-ending-here label per element (the Mirsky levels)."""
        lev = np.zeros(self.n, dtype=np.int64)
        for x in self.lin_ext:
            below = self.rel[:, x]
            lev[x] = 1 + (lev[below].max() if below.any() else 0)
        return lev

    def width(self) -> int:
        """Size of the largest antichain (Dilworth, via bipartite matching)."""
        return len(self.max_antichain())

    def max_antichain(self) -> list[int]:
        """One maximum antichain, from Koenig's cover of the split graph."""
        n = self.n
        if n == 0:
            return []
        succ = [np.flatnonzero(self.rel[x]).tolist() for x in range(n)]
        match_right = [-1] * n  # right vertex -> matched left vertex

        def try_augment(x: int, seen: list[bool]) -> bool:
            for y in succ[x]:
                if not seen[y]:
                    seen[y] = True
                    if match_right[y] == -1 or try_augment(match_right[y], seen):
                        match_right[y] = x
                        return True
            return False

        match_left = [-1] * n
        for x in range(n):
            try_augment(x, [False] * n)
        for y, x in enumerate(match_right):
            if x != -1:
                match_left[x] = y

        # Alternating reachability from unmatched left vertices.
        reach_left = [match_left[x] == -1 for x in range(n)]
        reach_right = [False] * n
        queue = [x for x in range(n) if reach_left[x]]
        while queue:
            x = queue.pop()
            for y in succ[x]:
                if not reach_right[y] and match_left[x] != y:
                    reach_right[y] = True
                    z = match_right[y]
                    if z != -1 and not reach_left[z]:
                        reach_left[z] = True
                        queue.append(z)
        # Min cover = (left not reached) + (right reached); the antichain is
        # every element with neither copy in the cover.
        return [v for v in range(n) if reach_left[v] and not reach_right[v]]

    def induced(self, elems) -> "Poset":
        """Subposet on the given element multiset.

        A repeated index yields distinct, mutually incomparable copies
        (irreflexivity of the closure makes this automatic).
        """
        idx = np.asarray(list(elems), dtype=np.intp)
        if idx.size and (idx.min() < 0 or idx.max() >= self.n):
            raise IndexError("element index out of range")
        sub = self.rel[np.ix_(idx, idx)].copy()
        return Poset(sub, _validated=True)

    def remove_edges(self, doomed) -> "Poset":
        """Relation minus ``doomed``, if the result is still transitive.

        Raises :class:`TransitivityError` with a violating triple otherwise.
        """
        doomed = list(doomed)
        rel = self.rel.copy()
        for x, y in doomed:
            if not rel[x, y]:
                raise ValueError(f"({x},{y}) is not a relation pair")
            rel[x, y] = False
        bad = (rel @ rel) & ~rel
        if bad.any():
            x, z = map(int, np.argwhere(bad)[0])
            y = int(np.flatnonzero(rel[x] & rel[:, z])[0])
            raise TransitivityError((x, y, z))
        return Poset(rel, _validated=True)

    def hasse_pairs(self) -> list[tuple[int, int]]:
        """Cover pairs of the relation (display view only)."""
        cover = self.rel & ~(self.rel @ self.rel)
        xs, ys = np.nonzero(cover)
        return list(zip(xs.tolist(), ys.tolist()))

    def multipartite_layers(self) -> tuple[int, ...] | None:
        """Layer widths if this poset is complete multipartite, else None."""
        if self.n == 0:
            return ()
        lev = self.levels()
        expected = lev[:, None] < lev[None, :]
        if not np.array_equal(self.rel, expected):
            return None
        return tuple(np.bincount(lev, minlength=int(lev.max()) + 1)[1:].tolist())

    def __eq__(self, other):
        return isinstance(other, Poset) and np.array_equal(self.rel, other.rel)

    def __hash__(self):
        return hash((self.n, self.rel.tobytes()))

    def __repr__(self):
        return f"Poset(n={self.n}, edges={self.edge_count()})"


def _validate(rel: np.ndarray) -> None:
    if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
        raise ValueError("relation must be a square boolean matrix")
    diag = np.flatnonzero(np.diagonal(rel))
    if diag.size:
        raise CycleError(int(diag[0]))
    if (rel & rel.T).any():
        x, y = map(int, np.argwhere(rel & rel.T)[0])
        raise CycleError(x)
    bad = (rel @ rel) & ~rel
    if bad.any():
        x, z = map(int, np.argwhere(bad)[0])
        raise ValueError(f"relation is not transitively closed at ({x},{z})")


def from_relations(n: int, pairs) -> Poset:
    """Transitive closure of the given ordered pairs, as a validated poset."""
    rel = np.zeros((n, n), dtype=bool)
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise IndexError(f"pair ({x},{y}) out of range for n={n}")
        rel[x, y] = True
    _closure_inplace(rel)
    diag = np.flatnonzero(np.diagonal(rel))
    if diag.size:
        raise CycleError(int(diag[0]))
    return Poset(rel, _validated=True)


def is_isomorphic(p: Poset, q: Poset, cap: int | None = None) -> bool:
    """Brute-force isomorphism oracle (permutation search, small n only)."""
    cap = config.ISO_ORACLE_CAP if cap is None else cap
    if max(p.n, q.n) > cap:
        raise OracleLimitError(f"isomorphism oracle capped at n={cap}")
    if p.n != q.n or p.edge_count() != q.edge_count():
        return False
    prof_p = sorted(zip(p.rel.sum(axis=1).tolist(), p.rel.sum(axis=0).tolist()))
    prof_q = sorted(zip(q.rel.sum(axis=1).tolist(), q.rel.sum(axis=0).tolist()))
    if prof_p != prof_q:
        return False
    for perm in permutations(range(p.n)):
        pi = np.asarray(perm)
        if np.array_equal(p.rel[np.ix_(pi, pi)], q.rel):
            return True
    return False


def _cover_oracle(p: Poset, feasible) -> int:
    """Minimum number of ``feasible`` subsets covering all elements."""
    if p.n > config.COVER_ORACLE_CAP:
        raise OracleLimitError(
            f"exhaustive cover oracle capped at n={config.COVER_ORACLE_CAP}"
        )
    n = p.n
    if n == 0:
        return 0
    ok = [False] * (1 << n)
    for size in range(1, n + 1):
        for comb in combinations(range(n), size):
            if feasible(comb):
                ok[sum(1 << v for v in comb)] = True
    full = (1 << n) - 1
    INF = n + 1
    dp = [INF] * (full + 1)
    dp[0] = 0
    # A minimum cover can be taken disjoint (sub-blocks stay feasible), so
    # partition DP over the lowest uncovered element suffices.
    for mask in range(1, full + 1):
        low = mask & -mask
        block = mask
        while block:
            if block & low and ok[block]:
                cand = dp[mask & ~block] + 1
                if cand < dp[mask]:
                    dp[mask] = cand
            block = (block - 1) & mask
    return dp[full]


def min_chain_cover(p: Poset) -> int:
    """Exhaustive minimum chain cover (Dilworth cross-check, tiny n)."""
    rel = p.rel

    def is_chain(elems):
        return all(rel[a, b] or rel[b, a] for a, b in combinations(elems, 2))

    return _cover_oracle(p, is_chain)


def min_antichain_cover(p: Poset) -> int:
    """Exhaustive minimum antichain cover (Mirsky cross-check, tiny n)."""
    rel = p.rel

    def is_antichain(elems):
        return not any(rel[a, b] or rel[b, a] for a, b in combinations(elems, 2))

    return _cover_oracle(p, is_antichain)
