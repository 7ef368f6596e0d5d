"""One- and two-sided sampling testers for forbidden-subposet properties.

All testers are pure functions of (inputs, seed).  Per-iteration seeds come
from a fixed splitmix64 stream so iterated runs are reproducible and could be
evaluated in parallel with a deterministic merge.

Sampling is with replacement by default: duplicate draws become incomparable
copies in the induced subposet, which can only weaken the tester and keeps
one-sidedness intact.  A without-replacement mode is available for the
"random subset" reading.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import config
from .core import Poset
from .errors import IterationOverflow, ParameterError
from .hom import Embedding, contains_subposet
from .removal import indistinguishability_bound

__all__ = [
    "TestOutcome",
    "FamilySpec",
    "derive_seed",
    "basic_test",
    "iterated_basic_test",
    "subposet_test_samples",
    "subposet_test",
    "family_tester",
]


@dataclass(frozen=True)
class TestOutcome:
    verdict: str  # "accept" | "reject"
    witness: Embedding | None
    samples_used: int
    sample_trace: tuple[int, ...] = field(default=())
    false_reject_bound: float | None = None

    @property
    def rejected(self) -> bool:
        return self.verdict == "reject"


@dataclass(frozen=True)
class FamilySpec:
    """Finite representative set of forbidden posets with its (h, w) profile."""

    members: tuple[Poset, ...]
    h: int
    w: int
    representative: int

    @classmethod
    def from_members(cls, members) -> "FamilySpec":
        members = tuple(members)
        if not members:
            raise ParameterError("family must be non-empty")
        heights = [m.height() for m in members]
        h = min(heights)
        widths = {
            i: members[i].width() for i in range(len(members)) if heights[i] == h
        }
        representative = min(widths, key=lambda i: (widths[i], i))
        return cls(members=members, h=h, w=widths[representative],
                   representative=representative)


_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


def _splitmix64(z: int) -> int:
    z = (z + _SPLITMIX_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Per-iteration seed: splitmix64 stream started at the master seed."""
    return _splitmix64((seed + index * _SPLITMIX_GAMMA) & _MASK64)


def _draw(n: int, size: int, seed: int, with_replacement: bool) -> np.ndarray:
    rng = np.random.default_rng(derive_seed(seed, 0))
    if with_replacement:
        return rng.integers(0, n, size=size)
    if size > n:
        raise ParameterError("cannot draw more distinct elements than the poset has")
    return rng.choice(n, size=size, replace=False)


def basic_test(p: Poset, q: Poset, seed: int,
               with_replacement: bool = True) -> TestOutcome:
    """Sample |q| elements, reject iff q embeds into the induced subposet."""
    if p.n < 1:
        raise ParameterError("host poset must be non-empty")
    sample = _draw(p.n, q.n, seed, with_replacement)
    sub = p.induced(sample)
    witness = contains_subposet(q, sub)
    return TestOutcome(
        verdict="reject" if witness else "accept",
        witness=witness,
        samples_used=q.n,
        sample_trace=tuple(int(x) for x in sample),
    )


def iterated_basic_test(p: Poset, q: Poset, eps: Fraction | str, seed: int,
                        ceiling: int | None = None) -> TestOutcome:
    """Repeat the basic test ceil((2/eps)^(h(q) w(q)^2)) times, reject on any hit."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ParameterError("eps must be positive")
    h, w = q.height(), q.width()
    if h < 2:
        raise ParameterError("pattern must have height at least two")
    ceiling = config.MAX_ITERATIONS if ceiling is None else ceiling
    reps = math.ceil((2 / eps) ** (h * w * w))
    if reps > ceiling:
        raise IterationOverflow(reps, ceiling)
    trace: list[int] = []
    for i in range(reps):
        out = basic_test(p, q, derive_seed(seed, i + 1))
        trace.extend(out.sample_trace)
        if out.rejected:
            return TestOutcome(
                verdict="reject",
                witness=out.witness,
                samples_used=(i + 1) * q.n,
                sample_trace=tuple(trace),
            )
    return TestOutcome(
        verdict="accept", witness=None, samples_used=reps * q.n,
        sample_trace=tuple(trace),
    )


def subposet_test_samples(h: int, eps: Fraction | float, c: float) -> int:
    """Sample count ceil((4 ln h + 4c + 1) / (2 eps)); natural logarithm."""
    if h < 2 or c <= 0:
        raise ParameterError("need h >= 2 and c > 0")
    eps = float(eps)
    if eps <= 0:
        raise ParameterError("eps must be positive")
    return math.ceil((4.0 * math.log(h) + 4.0 * c + 1.0) / (2.0 * eps))


def _longest_chain_positions(sub: Poset, h: int) -> tuple[int, ...] | None:
    """Positions of some chain of h elements in sub, if one exists."""
    n = sub.n
    if n == 0:
        return None
    lev = sub.levels()
    if int(lev.max()) < h:
        return None
    # Walk down from a maximal-level element.
    cur = int(np.argmax(lev))
    out = [cur]
    while lev[cur] > 1:
        preds = np.flatnonzero(sub.rel[:, cur] & (lev == lev[cur] - 1))
        cur = int(preds[0])
        out.append(cur)
    return tuple(reversed(out[-h:]))[:h] if len(out) >= h else None


def subposet_test(p: Poset, h: int, s: int, seed: int,
                  with_replacement: bool = True) -> TestOutcome:
    """Sample s elements, reject iff the induced subposet contains chain(h)."""
    if h < 2:
        raise ParameterError("need h >= 2")
    if s < 1:
        raise ParameterError("need s >= 1")
    if p.n < 1:
        raise ParameterError("host poset must be non-empty")
    sample = _draw(p.n, s, seed, with_replacement)
    sub = p.induced(sample)
    positions = _longest_chain_positions(sub, h)
    witness = Embedding(positions[:h]) if positions else None
    return TestOutcome(
        verdict="reject" if witness else "accept",
        witness=witness,
        samples_used=s,
        sample_trace=tuple(int(x) for x in sample),
    )


def family_tester(p: Poset, fam: FamilySpec, eps: Fraction | float, c: float,
                  seed: int) -> TestOutcome:
    """Two-sided monotone-family tester via the chain test at h(family).

    Rejects posets eps-far from family-free with probability >= 1 - e^-c;
    may falsely reject a family-free poset with probability vanishing in n,
    reported in false_reject_bound.
    """
    if fam.h < 2:
        raise ParameterError("family height must be at least two")
    s = subposet_test_samples(fam.h, eps, c)
    out = subposet_test(p, fam.h, s, seed)
    bound = (
        indistinguishability_bound(fam.h, fam.w, p.n)
        / (p.n * p.n)
        * math.comb(fam.h, 2)
    )
    return TestOutcome(
        verdict=out.verdict,
        witness=out.witness,
        samples_used=out.samples_used,
        sample_trace=out.sample_trace,
        false_reject_bound=bound,
    )
