"""Direct searches for additive prime structure of even numbers 2a:
sum partitions, difference representations, reflective points around a,
three-prime decompositions of odd numbers, and fixed-gap pair censuses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoDecompositionError, SieveRangeError
from .primes import PrimeSet, prime_pi


@dataclass
class GoldbachPartition:
    a: int
    pairs: list[tuple[int, int]]   # (p, q), p <= q, p + q = 2a, both prime, ascending in p


@dataclass
class DiffRepresentation:
    a: int
    pairs: list[tuple[int, int]]   # (p, q), q - p = 2a, p prime <= a, q prime, ascending in p


@dataclass
class PrpResult:
    a: int
    points: list[int]              # ascending b with a-b and a+b both prime, 0 < b <= a-2
    min_point: int | None


@dataclass
class GapCensus:
    gap: int
    limit: int
    count: int                     # prime pairs (p, p + gap) with both members <= limit


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _require_range(ps: PrimeSet, needed: int, what: str) -> None:
    if needed > ps.limit:
        raise SieveRangeError(f"{what} needs sieve limit >= {needed}, have {ps.limit}")


def goldbach_partitions(a: int, ps: PrimeSet) -> GoldbachPartition:
    """All unordered prime pairs (p, q) with p + q = 2a.

    An empty list is a legal outcome; it would be a counterexample for
    the even number 2a.
    """
    _require(a >= 2, f"a must be >= 2, got {a}")
    _require_range(ps, 2 * a, "goldbach_partitions")
    tbl = ps.table
    two_a = 2 * a
    pairs = []
    for p in ps.prime_list[: prime_pi(a, ps)]:
        q = two_a - p
        if (tbl[q >> 3] >> (q & 7)) & 1:
            pairs.append((p, q))
    return GoldbachPartition(a=a, pairs=pairs)


def has_goldbach(a: int, ps: PrimeSet) -> bool:
    """True iff some prime p <= a has 2a - p prime (early exit, p ascending)."""
    _require(a >= 2, f"a must be >= 2, got {a}")
    _require_range(ps, 2 * a, "has_goldbach")
    tbl = ps.table
    two_a = 2 * a
    for p in ps.prime_list:
        if p > a:
            return False
        q = two_a - p
        if (tbl[q >> 3] >> (q & 7)) & 1:
            return True
    return False


def diff_representations(a: int, ps: PrimeSet) -> DiffRepresentation:
    """All (p, 2a + p) with p prime <= a and 2a + p prime."""
    _require(a >= 2, f"a must be >= 2, got {a}")
    _require_range(ps, 3 * a, "diff_representations")
    tbl = ps.table
    two_a = 2 * a
    pairs = []
    for p in ps.prime_list[: prime_pi(a, ps)]:
        q = two_a + p
        if (tbl[q >> 3] >> (q & 7)) & 1:
            pairs.append((p, q))
    return DiffRepresentation(a=a, pairs=pairs)


def has_diff_representation(a: int, ps: PrimeSet) -> bool:
    """Early-exit version of diff_representations emptiness."""
    _require(a >= 2, f"a must be >= 2, got {a}")
    _require_range(ps, 3 * a, "has_diff_representation")
    tbl = ps.table
    two_a = 2 * a
    for p in ps.prime_list:
        if p > a:
            return False
        q = two_a + p
        if (tbl[q >> 3] >> (q & 7)) & 1:
            return True
    return False


def prime_reflective_points(a: int, ps: PrimeSet) -> PrpResult:
    """All b in 1..a-2 with a - b and a + b both prime, plus the minimum.

    b = 0 is excluded by definition; the upper bound keeps a - b >= 2.
    """
    _require(a >= 4, f"a must be >= 4, got {a}")
    _require_range(ps, 2 * a, "prime_reflective_points")
    tbl = ps.table
    points = []
    for b in range(1, a - 1):
        lo = a - b
        hi = a + b
        if (tbl[lo >> 3] >> (lo & 7)) & 1 and (tbl[hi >> 3] >> (hi & 7)) & 1:
            points.append(b)
    return PrpResult(a=a, points=points, min_point=points[0] if points else None)


def min_prime_reflective_point(a: int, ps: PrimeSet) -> int | None:
    """Smallest b > 0 with a +- b both prime, or None (early exit)."""
    _require(a >= 4, f"a must be >= 4, got {a}")
    _require_range(ps, 2 * a, "min_prime_reflective_point")
    tbl = ps.table
    for b in range(1, a - 1):
        lo = a - b
        hi = a + b
        if (tbl[lo >> 3] >> (lo & 7)) & 1 and (tbl[hi >> 3] >> (hi & 7)) & 1:
            return b
    return None


def ternary_decomposition(n: int, ps: PrimeSet) -> tuple[int, int, int]:
    """First three-odd-prime decomposition (3, p, q) of odd n, fixing the
    leading prime at 3 and taking the partition of n - 3 with smallest p."""
    _require(n >= 9 and n % 2 == 1, f"n must be odd and >= 9, got {n}")
    _require_range(ps, n, "ternary_decomposition")
    tbl = ps.table
    m = n - 3
    for p in ps.prime_list:
        if p == 2:
            continue
        if 2 * p > m:
            break
        q = m - p
        if (tbl[q >> 3] >> (q & 7)) & 1:
            return (3, p, q)
    raise NoDecompositionError(f"{n} has no decomposition 3 + p + q with odd primes p, q", n)


def polignac_census(gap: int, limit: int, ps: PrimeSet) -> GapCensus:
    """Count prime pairs (p, p + gap) that fit below the limit.

    Both members must be <= limit, so the census counts whole pairs in
    the window and is monotone in the limit.
    """
    _require(gap >= 2 and gap % 2 == 0, f"gap must be even and >= 2, got {gap}")
    _require(limit >= 0, f"limit must be non-negative, got {limit}")
    _require_range(ps, limit + gap, "polignac_census")
    k = prime_pi(max(limit - gap, 0), ps)
    p = ps.primes[:k]
    q = p + gap
    bits = (ps.table_view[q >> 3] >> (q & 7).astype(np.uint8)) & 1
    return GapCensus(gap=gap, limit=limit, count=int(bits.sum()))
