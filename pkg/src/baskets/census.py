"""Classification of N and exact counting/enumeration of pear distributions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .arith import DivisorSieve, is_highly_composite, is_prime, triangular
from .solver import InfeasibleError, PearDistribution, Solution, feasible

NEAR_PERFECT_THRESHOLD = 0.9

# Display precedence when several flags are set (classes are non-exclusive).
DISPLAY_ORDER = ("perfect", "prime", "near_perfect", "highly_composite")


@dataclass(frozen=True)
class ClassificationFlags:
    perfect: bool
    prime: bool
    near_perfect: bool
    highly_composite: bool

    @property
    def display_class(self) -> str:
        for name in DISPLAY_ORDER:
            if getattr(self, name):
                return name
        return "plain"


@dataclass(frozen=True)
class DistributionCount:
    n_baskets: int
    n_input: int
    count: int


def classify(solution: Solution, sieve: DivisorSieve) -> ClassificationFlags:
    """Non-exclusive flags for one solved N.

    Perfect is decided in exact integers (2N = n(n-1) with n odd), never by
    comparing efficiency against 1.0.
    """
    n, n_max = solution.n_input, solution.n_max
    perfect = 2 * n == n_max * (n_max - 1) and n_max % 2 == 1
    return ClassificationFlags(
        perfect=perfect,
        prime=is_prime(n, sieve),
        near_perfect=solution.efficiency > NEAR_PERFECT_THRESHOLD and not perfect,
        highly_composite=is_highly_composite(n, sieve),
    )


def count_distributions(n: int, n_input: int) -> DistributionCount:
    """Exact number of sets of n distinct non-negative integers summing to n_input.

    Subtracting the forced minimum {0, 1, ..., n-1} leaves a surplus S to
    spread while keeping the counts distinct; the arrangements correspond
    one-to-one with partitions of S into at most n parts, counted here by
    dynamic programming in O(S*n).  Counts are exact bignums.
    """
    if not feasible(n, n_input):
        raise InfeasibleError(
            f"{n} baskets cannot hold distinct pear counts summing to {n_input}"
        )
    surplus = n_input - triangular(n)
    # partitions of `surplus` into parts of size <= n (conjugate of "at most n parts")
    ways = [0] * (surplus + 1)
    ways[0] = 1
    for part in range(1, min(n, surplus) + 1):
        for total in range(part, surplus + 1):
            ways[total] += ways[total - part]
    return DistributionCount(n_baskets=n, n_input=n_input, count=ways[surplus])


def _ascending_choices(slots: int, lowest: int, remaining: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if slots == 1:
        if remaining >= lowest:
            yield prefix + (remaining,)
        return
    # all `slots` remaining values are >= v, so v can be at most remaining // slots
    for v in range(lowest, remaining // slots + 1):
        yield from _ascending_choices(slots - 1, v + 1, remaining - v, prefix + (v,))


def enumerate_distributions(n: int, n_input: int, limit: int) -> list[PearDistribution]:
    """First `limit` valid distributions in lexicographic order.

    When not truncated, the list length equals count_distributions(n, n_input);
    the canonical distribution is always present (it sorts first).
    """
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    if not feasible(n, n_input):
        raise InfeasibleError(
            f"{n} baskets cannot hold distinct pear counts summing to {n_input}"
        )
    chosen = islice(_ascending_choices(n, 0, n_input, ()), limit)
    return [PearDistribution(counts) for counts in chosen]


def perfect_values(limit: int) -> list[tuple[int, int]]:
    """All (N, n) with N <= limit, N = n(n-1)/2 and n odd, ascending.

    These are the inputs where the pear constraint is exactly tight and the
    tight basket count still divides N; efficiency is exactly 1 there.
    """
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    out = []
    n = 3
    while triangular(n) <= limit:
        out.append((triangular(n), n))
        n += 2
    return out
