"""Exact counting for the gamma statistic and its tail, plus a seeded sampler.

The central tool is a left-to-right dynamic program over string positions.
Its state is the last two chosen bits together with the total gamma
contribution of all positions whose windows are already complete, so it
never materializes strings and runs comfortably up to n = 512 with exact
big-integer counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

MAX_DP_LENGTH = 512
MAX_SAMPLING_LENGTH = 64

_MASK64 = (1 << 64) - 1
# SplitMix64 constants: fixed odd increment and the two finalizer multipliers.
_SM64_INCREMENT = 0x9E3779B97F4A7C15
_SM64_MIX1 = 0xBF58476D1CE4E5B9
_SM64_MIX2 = 0x94D049BB133111EB


class CrossoverNotFoundError(ValueError):
    """Raised when no scan prefix satisfies the requested inequality."""


def _check_dp_length(n: int) -> None:
    if not 1 <= n <= MAX_DP_LENGTH:
        raise ValueError(f"n must be in [1, {MAX_DP_LENGTH}], got {n}")


@dataclass(frozen=True)
class GammaDistribution:
    """Exact counts of length-n strings by their gamma value."""

    n: int
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def count_above(self, threshold: int) -> int:
        """Number of strings with gamma strictly greater than ``threshold``."""
        return sum(c for v, c in self.counts.items() if v > threshold)

    def weighted_sum(self) -> int:
        """Sum of gamma over all 2^n strings (an exact integer)."""
        return sum(v * c for v, c in self.counts.items())

    def expectation(self) -> Fraction:
        return Fraction(self.weighted_sum(), 1 << self.n)

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


def _distribution_sweep(max_n: int) -> Iterator[GammaDistribution]:
    """Yield the exact gamma distribution for every n = 1..max_n in one pass.

    DP state after choosing positions 1..i: (bit i-1, bit i) -> list indexed
    by the gamma total of the finalized positions 1..i-1. Choosing bit c at
    position i+1 finalizes position i's contribution, which is
    x_i + [x_{i-1} = 1 or c = 1]; emitting a distribution for length i
    finalizes the last position as x_i + [x_{i-1} = 1] instead.
    """
    # position 0 is an implicit 0
    state: dict[tuple[int, int], list[int]] = {(0, 0): [1], (0, 1): [1]}
    for n in range(1, max_n + 1):
        counts: dict[int, int] = {}
        for (a, b), accs in state.items():
            off = b + a
            for acc, c in enumerate(accs):
                if c:
                    counts[acc + off] = counts.get(acc + off, 0) + c
        yield GammaDistribution(n, counts)
        if n == max_n:
            return
        new: dict[tuple[int, int], list[int]] = {}
        for (a, b), accs in state.items():
            for c in (0, 1):
                off = b + (a | c)
                tgt = new.get((b, c))
                if tgt is None:
                    tgt = new[(b, c)] = [0] * (len(accs) + 2)
                elif len(tgt) < len(accs) + 2:
                    tgt.extend([0] * (len(accs) + 2 - len(tgt)))
                for acc, cnt in enumerate(accs):
                    if cnt:
                        tgt[acc + off] += cnt
        state = new


def gamma_distributions_upto(max_n: int) -> list[GammaDistribution]:
    """Distributions for every n in [1, max_n], sharing a single DP sweep."""
    _check_dp_length(max_n)
    return list(_distribution_sweep(max_n))


def gamma_distribution(n: int) -> GammaDistribution:
    """Exact distribution of gamma over all 2^n strings of length n."""
    _check_dp_length(n)
    for dist in _distribution_sweep(n):
        if dist.n == n:
            return dist
    raise AssertionError("unreachable")


def count_C(n: int) -> int:
    """Number of length-n strings whose gamma exceeds n."""
    return gamma_distribution(n).count_above(n)


def tail_probability(n: int) -> Fraction:
    """Exact probability that a uniform length-n string has gamma <= n."""
    dist = gamma_distribution(n)
    return Fraction((1 << n) - dist.count_above(n), 1 << n)


def expected_gamma(n: int) -> Fraction:
    """Exact expectation of gamma for a uniform length-n string."""
    return gamma_distribution(n).expectation()


def fibonacci_count(n: int) -> int:
    """Number of length-n strings with no two adjacent 1s.

    The sequence starts 2, 3 and obeys f(n) = f(n-1) + f(n-2).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    prev, cur = 1, 2
    for _ in range(n - 1):
        prev, cur = cur, prev + cur
    return cur


def floor_kth_root(x: int, k: int) -> int:
    """Largest integer r with r**k <= x.

    Newton descent on exact integers. The seed comes from a float log2
    estimate nudged strictly above the true root, so the descent reaches the
    answer in a handful of steps even for large k (a plain bit-length seed
    would converge only linearly, with error shrinking by ~1/k per step).
    """
    if x < 0 or k < 1:
        raise ValueError("x must be >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    xb = x.bit_length()
    root_bits = xb / k
    if root_bits <= 980.0:
        top = x >> max(0, xb - 64)
        log2x = (xb - 64 if xb > 64 else 0) + math.log2(top)
        seed = math.ldexp(2.0 ** ((log2x / k) % 1.0) * (1.0 + 1e-9), int(log2x / k))
        r = max(int(seed) + 1, 2)
    else:
        r = 1 << -(-xb // k)  # astronomically large x: factor-2 seed
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


@lru_cache(maxsize=None)
def floor_pow2(numerator: int, denominator: int) -> int:
    """floor(2**(numerator/denominator)), exactly, via an integer k-th root."""
    if denominator < 1 or numerator < 0:
        raise ValueError("exponent must be a nonnegative rational")
    q, r = divmod(numerator, denominator)
    if r == 0:
        return 1 << q
    return floor_kth_root(1 << numerator, denominator)


def ceil_pow2(numerator: int, denominator: int) -> int:
    """ceil(2**(numerator/denominator)), exactly."""
    f = floor_pow2(numerator, denominator)
    q, r = divmod(numerator, denominator)
    return f if r == 0 else f + 1


def crossover_scan(max_n: int) -> int:
    """Smallest N such that 2^n - count_C(n) <= 2^(0.96 n) for all n in [N, max_n].

    The right side is an irrational power of two; since the left side is an
    integer, comparing against floor(2^(24n/25)) computed by an exact
    integer 25th root decides the true inequality.
    """
    if not 2 <= max_n <= MAX_DP_LENGTH:
        raise ValueError(f"max_n must be in [2, {MAX_DP_LENGTH}], got {max_n}")
    last_violation = 0
    for dist in _distribution_sweep(max_n):
        n = dist.n
        lhs = (1 << n) - dist.count_above(n)
        if lhs > floor_pow2(24 * n, 25):
            last_violation = n
    if last_violation >= max_n:
        raise CrossoverNotFoundError(
            f"inequality still violated at n = {last_violation}; no crossover up to {max_n}"
        )
    return last_violation + 1


@dataclass(frozen=True)
class TailEstimate:
    """Monte Carlo estimate of the probability that gamma <= n."""

    n: int
    samples: int
    seed: int
    estimate: float
    standard_error: float


class SplitMix64:
    """SplitMix64 generator: 64-bit state, fixed odd increment, avalanche mix.

    Deterministic for a given seed and splittable: ``split`` derives an
    independent child stream from the next output. The step is

        state += 0x9E3779B97F4A7C15
        z = state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
        return z ^ (z >> 31)

    with all arithmetic modulo 2^64.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _SM64_INCREMENT) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _SM64_MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _SM64_MIX2) & _MASK64
        return z ^ (z >> 31)

    def next_bits(self, n: int) -> int:
        """A uniform n-bit integer, n <= 64."""
        if not 1 <= n <= 64:
            raise ValueError(f"n must be in [1, 64], got {n}")
        return self.next_uint64() & ((1 << n) - 1)

    def split(self) -> SplitMix64:
        """A child generator seeded from the next output of this one."""
        return SplitMix64(self.next_uint64())


def monte_carlo_tail(n: int, samples: int, seed: int) -> TailEstimate:
    """Estimate Pr{gamma <= n} from ``samples`` seeded uniform draws.

    Reproducible: the draws are exactly the SplitMix64 stream for ``seed``
    (the generator step is inlined here because this loop dominates the
    module's runtime).
    """
    if not 1 <= n <= MAX_SAMPLING_LENGTH:
        raise ValueError(f"n must be in [1, {MAX_SAMPLING_LENGTH}], got {n}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    mask = (1 << n) - 1
    state = seed & _MASK64
    hits = 0
    for _ in range(samples):
        state = (state + _SM64_INCREMENT) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * _SM64_MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _SM64_MIX2) & _MASK64
        x = (z ^ (z >> 31)) & mask
        if x.bit_count() + (((x << 1) | (x >> 1)) & mask).bit_count() <= n:
            hits += 1
    estimate = hits / samples
    stderr = math.sqrt(estimate * (1.0 - estimate) / samples)
    return TailEstimate(n, samples, seed & _MASK64, estimate, stderr)
