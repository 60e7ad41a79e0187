"""Brute-force cross-check for the solver.

Recomputes the answer from scratch: divisors by direct remainder scan, and
achievability of each basket count by subset-sum search over the explicit
value set {0, ..., n}.  No minimum-sum shortcut and no shared code with the
solver, so agreement is meaningful.
"""

from __future__ import annotations

from .solver import solve

# Existence search is superlinear in n; keep the CLI honest about scale.
MAX_LIMIT = 2000


def reachable_basket_counts(n: int) -> list[int]:
    """Bitmask rows: bit s of row c is set iff some c distinct values in
    [0, n] sum to s.  Row list stops growing once no larger selection fits."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    mask = (1 << (n + 1)) - 1
    rows = [1]  # row 0: empty selection reaches sum 0
    for v in range(n + 1):
        if (rows[-1] << v) & mask:
            rows.append(0)
        for c in range(len(rows) - 1, 0, -1):
            rows[c] |= (rows[c - 1] << v) & mask
    return rows


def brute_force_n_max(n: int) -> int:
    """Largest basket count that divides n and can absorb the pears."""
    rows = reachable_basket_counts(n)
    for d in range(n, 0, -1):
        if n % d == 0 and d < len(rows) and rows[d] >> n & 1:
            return d
    raise AssertionError(f"no achievable basket count for n={n}")  # d=1 always works


def verify_range(limit: int) -> list[tuple[int, int, int]]:
    """Compare brute force against the solver for every N in [1, limit].

    Returns (N, brute_force, solver) triples for any disagreement.
    """
    if not 1 <= limit <= MAX_LIMIT:
        raise ValueError(f"limit must be in [1, {MAX_LIMIT}], got {limit}")
    mismatches = []
    for n in range(1, limit + 1):
        expected = brute_force_n_max(n)
        got = solve(n).n_max
        if expected != got:
            mismatches.append((n, expected, got))
    return mismatches
