"""Constructors for the named poset families and seeded random posets.

Widths and thresholds are carried as exact :class:`fractions.Fraction`
values: several constructions require quantities like eps*w to be integers,
which floating point cannot certify.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .core import Poset, from_relations
from .errors import ParameterError

__all__ = [
    "chain",
    "antichain",
    "complete_multipartite",
    "k_hw",
    "alternating",
    "union_of_chains",
    "sharp_layered",
    "random_layered",
    "random_closure",
    "build",
]


def chain(h: int) -> Poset:
    """Total order on h elements, 0 at the bottom."""
    if h < 0:
        raise ParameterError("chain length must be non-negative")
    rel = np.triu(np.ones((h, h), dtype=bool), k=1)
    return Poset(rel, _validated=True)


def antichain(n: int) -> Poset:
    return Poset(np.zeros((n, n), dtype=bool), _validated=True)


def complete_multipartite(widths) -> Poset:
    """Stacked antichains: layer i entirely below layer j whenever i < j.

    Elements are numbered layer-major, bottom layer first.
    """
    widths = list(widths)
    if any(w < 1 for w in widths):
        raise ParameterError("layer widths must be positive")
    n = sum(widths)
    layer = np.repeat(np.arange(len(widths)), widths)
    rel = layer[:, None] < layer[None, :]
    return Poset(np.ascontiguousarray(rel), _validated=True)


def k_hw(h: int, w: int) -> Poset:
    """Complete h-partite poset with all layers of width w."""
    if h < 0 or w < 1:
        raise ParameterError("k_hw needs h >= 0 and w >= 1")
    return complete_multipartite([w] * h)


def alternating(h: int, w: int) -> Poset:
    """h layers alternating width w, 1, w, 1, ... starting with w.

    This is the edge-disjoint chain bundle used to bound the density of
    k_hw(h, w) by a power of the chain density.
    """
    if h < 1 or w < 1:
        raise ParameterError("alternating needs h >= 1 and w >= 1")
    return complete_multipartite([w if i % 2 == 0 else 1 for i in range(h)])


def union_of_chains(k: int, length: int) -> Poset:
    """Disjoint union of k chains of `length` elements each."""
    if k < 1 or length < 1:
        raise ParameterError("union_of_chains needs k >= 1 and length >= 1")
    pairs = [
        (c * length + i, c * length + i + 1)
        for c in range(k)
        for i in range(length - 1)
    ]
    return from_relations(k * length, pairs)


def sharp_layered(h: int, w: int, eps: Fraction | str) -> Poset:
    """Layered sharpness construction: widths [eps*w, w, ..., w], h layers.

    eps*w must be a positive integer.
    """
    eps = Fraction(eps)
    if h < 2 or w < 1:
        raise ParameterError("sharp_layered needs h >= 2 and w >= 1")
    first = eps * w
    if first.denominator != 1 or first <= 0:
        raise ParameterError(f"eps*w = {first} is not a positive integer")
    return complete_multipartite([int(first)] + [w] * (h - 1))


def random_layered(n: int, layers: int, p: float, seed: int) -> Poset:
    """Uniform layer assignment, each upward cross-layer pair kept with prob p."""
    if not 0 <= p <= 1:
        raise ParameterError("p must be a probability")
    if layers < 1:
        raise ParameterError("layers must be >= 1")
    rng = np.random.default_rng(seed)
    lab = rng.integers(0, layers, size=n)
    upward = lab[:, None] < lab[None, :]
    keep = rng.random((n, n)) < p
    pairs = zip(*np.nonzero(upward & keep))
    return from_relations(n, [(int(x), int(y)) for x, y in pairs])


def random_closure(n: int, p: float, seed: int) -> Poset:
    """Random permutation as underlying total order, forward pairs kept with prob p."""
    if not 0 <= p <= 1:
        raise ParameterError("p must be a probability")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    pos = np.empty(n, dtype=np.intp)
    pos[perm] = np.arange(n)
    forward = pos[:, None] < pos[None, :]
    keep = rng.random((n, n)) < p
    pairs = zip(*np.nonzero(forward & keep))
    return from_relations(n, [(int(x), int(y)) for x, y in pairs])


def build(kind: str, **params) -> Poset:
    """Dispatch a generator by name (the CLI `gen` surface)."""
    makers = {
        "chain": lambda: chain(params["h"]),
        "antichain": lambda: antichain(params["n"]),
        "multipartite": lambda: complete_multipartite(params["widths"]),
        "k_hw": lambda: k_hw(params["h"], params["w"]),
        "alternating": lambda: alternating(params["h"], params["w"]),
        "union_of_chains": lambda: union_of_chains(params["k"], params["len"]),
        "sharp_layered": lambda: sharp_layered(
            params["h"], params["w"], params["eps"]
        ),
        "random_layered": lambda: random_layered(
            params["n"], params["layers"], params["p"], params["seed"]
        ),
        "random_closure": lambda: random_closure(
            params["n"], params["p"], params["seed"]
        ),
    }
    if kind not in makers:
        raise ParameterError(f"unknown generator kind {kind!r}")
    return makers[kind]()
