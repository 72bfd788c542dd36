"""Prime generation and primality services shared by the whole toolkit.

The sieve is built in fixed-size segments so only one segment's boolean
scratch array is live at a time; the finished product is a packed bit
table (bit n set iff n prime) plus the ascending prime list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, SieveRangeError

DEFAULT_SEGMENT = 1 << 20          # numbers per sieve segment
DEFAULT_MAX_LIMIT = 1 << 35        # refuse sieves beyond this without an explicit override
DEFAULT_PRIMORIAL_CAP = 10**6      # primorial(a) is ~O(a) bits; cap keeps it desk-scale

# Deterministic strong-pseudoprime witness sets.
# 7-base set covering all n < 2^64 (Sinclair, via miller-rabin.appspot.com).
_WITNESSES_U64 = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
# First 12 primes: deterministic for n < 3317044064679887385961981
# (Sorenson & Webster bound).
_WITNESSES_EXT = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_EXT_BOUND = 3317044064679887385961981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)


@dataclass
class PrimeSet:
    """Primality bit table and ordered prime list up to `limit` (inclusive)."""

    limit: int
    table: bytes                   # bit (table[n >> 3] >> (n & 7)) & 1 marks n prime
    primes: np.ndarray             # ascending int64 primes <= limit

    def is_prime(self, n: int) -> bool:
        """Bit-table lookup; only valid for 0 <= n <= limit."""
        return bool((self.table[n >> 3] >> (n & 7)) & 1)

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.limit and self.is_prime(n)

    @property
    def table_view(self) -> np.ndarray:
        """uint8 view of the bit table for vectorized lookups (zero-copy)."""
        view = self.__dict__.get("_table_view")
        if view is None:
            view = np.frombuffer(self.table, dtype=np.uint8)
            self.__dict__["_table_view"] = view
        return view

    @property
    def prime_list(self) -> list[int]:
        """Primes as plain Python ints (cached; used by big-integer code)."""
        lst = self.__dict__.get("_prime_list")
        if lst is None:
            lst = self.primes.tolist()
            self.__dict__["_prime_list"] = lst
        return lst

    def __getstate__(self):
        return {"limit": self.limit, "table": self.table, "primes": self.primes}

    def __setstate__(self, state):
        self.__dict__.update(state)


def _simple_sieve(limit: int) -> np.ndarray:
    """Plain boolean sieve used for the base primes up to sqrt(limit)."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


def build_sieve(
    limit: int,
    segment_size: int = DEFAULT_SEGMENT,
    max_limit: int = DEFAULT_MAX_LIMIT,
) -> PrimeSet:
    """Sieve all n <= limit into a PrimeSet.

    Runs segment by segment so peak scratch memory is O(segment_size)
    on top of the packed output table.
    """
    if limit < 0:
        raise ValueError(f"sieve limit must be non-negative, got {limit}")
    if limit > max_limit:
        raise CapacityError(f"sieve limit {limit} exceeds configured maximum {max_limit}")
    if segment_size < 16 or segment_size % 8:
        raise ValueError("segment_size must be a multiple of 8 and at least 16")

    n_cells = limit + 1
    table = bytearray((n_cells + 7) >> 3)
    base_flags = _simple_sieve(max(math.isqrt(limit), 2)) if limit >= 4 else None
    base_primes = np.flatnonzero(base_flags) if base_flags is not None else np.array([], dtype=np.int64)

    prime_chunks: list[np.ndarray] = []
    for lo in range(0, n_cells, segment_size):
        hi = min(lo + segment_size, n_cells)  # exclusive
        seg = np.ones(hi - lo, dtype=bool)
        if lo == 0:
            seg[: min(2, hi)] = False
        for p in base_primes:
            p = int(p)
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start < hi:
                seg[start - lo :: p] = False
        prime_chunks.append(np.flatnonzero(seg).astype(np.int64) + lo)
        if seg.size % 8:
            seg = np.concatenate([seg, np.zeros(8 - seg.size % 8, dtype=bool)])
        table[lo >> 3 : (lo >> 3) + (seg.size >> 3)] = np.packbits(seg, bitorder="little").tobytes()

    primes = np.concatenate(prime_chunks) if prime_chunks else np.array([], dtype=np.int64)
    return PrimeSet(limit=limit, table=bytes(table), primes=primes)


def _mr_witness_composite(n: int, d: int, s: int, a: int) -> bool:
    """True iff witness a proves n composite (n - 1 = d * 2^s, d odd)."""
    a %= n
    if a == 0:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int, ps: PrimeSet | None = None) -> bool:
    """Exact primality test.

    Uses the sieve table when available and in range, otherwise a
    deterministic Miller-Rabin witness set (proven exhaustive below
    2^64, and below ~3.3e24 with the extended set). Inputs beyond the
    proven bound raise CapacityError rather than degrade to a
    probabilistic answer.
    """
    if n < 2:
        return False
    if ps is not None and n <= ps.limit:
        return ps.is_prime(n)
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 63 * 63:
        return True
    if n >= _EXT_BOUND:
        raise CapacityError(f"no deterministic witness set configured for n >= {_EXT_BOUND}")
    witnesses = _WITNESSES_U64 if n < 1 << 64 else _WITNESSES_EXT
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return not any(_mr_witness_composite(n, d, s, a) for a in witnesses)


def prime_pi(a: int, ps: PrimeSet) -> int:
    """Number of primes <= a."""
    if a > ps.limit:
        raise SieveRangeError(f"prime_pi({a}) exceeds sieve limit {ps.limit}")
    if a < 2:
        return 0
    return int(np.searchsorted(ps.primes, a, side="right"))


def primes_upto(a: int, ps: PrimeSet) -> list[int]:
    """Ascending primes <= a as Python ints."""
    if a > ps.limit:
        raise SieveRangeError(f"primes_upto({a}) exceeds sieve limit {ps.limit}")
    return ps.prime_list[: prime_pi(a, ps)]


def _product(vals: list[int], lo: int, hi: int) -> int:
    # balanced product tree keeps intermediate operands similar-sized
    if hi - lo <= 8:
        out = 1
        for v in vals[lo:hi]:
            out *= v
        return out
    mid = (lo + hi) // 2
    return _product(vals, lo, mid) * _product(vals, mid, hi)


def primorial(a: int, ps: PrimeSet, cap: int = DEFAULT_PRIMORIAL_CAP) -> int:
    """Product of all primes <= a (1 for a < 2)."""
    if a > cap:
        raise CapacityError(f"primorial argument {a} exceeds cap {cap}")
    if a > ps.limit:
        raise SieveRangeError(f"primorial({a}) exceeds sieve limit {ps.limit}")
    vals = primes_upto(a, ps)
    return _product(vals, 0, len(vals))
