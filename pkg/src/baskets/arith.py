"""Integer arithmetic substrate: sieve, divisors, primality, triangular numbers.

Single queries work without any sieve (trial division).  Batch callers build a
:class:`DivisorSieve` once and pass it in; the two paths return identical
results.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import isqrt

import numpy as np

# Hard cap on sieve size; beyond this the spf table no longer fits int32.
SIEVE_CEILING = 2**31 - 1


class CapacityError(ValueError):
    """Requested sieve limit is outside the supported range."""


class DivisorSieve:
    """Smallest-prime-factor table for every integer in [2, limit].

    ``spf[n]`` is the smallest prime dividing ``n``; ``spf[n] == n`` exactly
    when ``n`` is prime.  Instances are immutable after construction and safe
    to share across threads.
    """

    def __init__(self, limit: int, spf: np.ndarray):
        self.limit = limit
        self.spf = spf
        self._hc_lock = threading.Lock()
        self._hc_table: np.ndarray | None = None

    def smallest_prime_factor(self, n: int) -> int:
        if not 2 <= n <= self.limit:
            raise ValueError(f"n={n} outside sieve range [2, {self.limit}]")
        return int(self.spf[n])

    def highly_composite_table(self) -> np.ndarray:
        """Boolean table of divisor-count record holders, built on first use."""
        if self._hc_table is None:
            with self._hc_lock:
                if self._hc_table is None:
                    self._hc_table = _divisor_count_records(self.limit)
        return self._hc_table


def build_sieve(limit: int) -> DivisorSieve:
    """Build a smallest-prime-factor sieve covering [2, limit]."""
    if limit < 2 or limit > SIEVE_CEILING:
        raise CapacityError(f"sieve limit must be in [2, {SIEVE_CEILING}], got {limit}")
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            spf[p] = p
            tail = spf[p * p :: p]
            tail[tail == 0] = p
    # anything still unset in [2, limit] is a prime above sqrt(limit)
    unset = np.nonzero(spf[2:] == 0)[0] + 2
    spf[unset] = unset
    return DivisorSieve(limit, spf)


@dataclass(frozen=True)
class DivisorList:
    """All positive divisors of ``value``, sorted ascending."""

    value: int
    divisors: tuple[int, ...]


def factorize(n: int, sieve: DivisorSieve) -> list[tuple[int, int]]:
    """Prime factorization of n as (prime, exponent) pairs, primes ascending."""
    if not 1 <= n <= sieve.limit:
        raise ValueError(f"n={n} outside sieve range [1, {sieve.limit}]")
    spf = sieve.spf
    out = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def divisors(n: int, sieve: DivisorSieve | None = None) -> DivisorList:
    """Complete sorted divisor list of n.

    With a sieve: factor via smallest prime factors, then expand products.
    Without: trial division up to sqrt(n).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if sieve is not None:
        divs = [1]
        for p, e in factorize(n, sieve):
            powers = [p**i for i in range(1, e + 1)]
            divs += [d * q for d in divs for q in powers]
        divs.sort()
        return DivisorList(n, tuple(divs))
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return DivisorList(n, tuple(small + large[::-1]))


def is_prime(n: int, sieve: DivisorSieve | None = None) -> bool:
    """True iff n has exactly two divisors."""
    if n < 2:
        return False
    if sieve is not None and n <= sieve.limit:
        return int(sieve.spf[n]) == n
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def triangular(m: int) -> int:
    """m(m-1)/2, the minimum sum of m distinct non-negative integers."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return m * (m - 1) // 2


def is_highly_composite(n: int, sieve: DivisorSieve) -> bool:
    """True iff n has strictly more divisors than every smaller positive integer.

    1 and 2 qualify; ties do not.
    """
    if not 1 <= n <= sieve.limit:
        raise ValueError(f"n={n} outside sieve range [1, {sieve.limit}]")
    return bool(sieve.highly_composite_table()[n])


def _divisor_counts(limit: int) -> np.ndarray:
    """tau(n) for all n <= limit via the paired-divisor sieve."""
    tau = np.zeros(limit + 1, dtype=np.int32)
    for d in range(1, isqrt(limit) + 1):
        tau[d * d] += 1  # d pairs with itself
        tau[d * d + d :: d] += 2  # d pairs with n // d > d
    return tau


def _divisor_count_records(limit: int) -> np.ndarray:
    tau = _divisor_counts(limit)
    records = np.zeros(limit + 1, dtype=bool)
    records[1] = True  # vacuous: nothing below 1
    if limit >= 2:
        best_below = np.maximum.accumulate(tau)
        records[2:] = tau[2:] > best_below[1:-1]
    return records
