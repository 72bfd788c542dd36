"""Exact big-integer algebra on the prime-product polynomials.

For a given a, both variants expand a monic integer polynomial whose
roots are the primes up to a:

    sum variant    prod (x - p_i)   evaluated at x = 2a gives prod (2a - p_i)
    diff variant   prod (x + p_i)   evaluated at x = 2a gives prod (2a + p_i)

Everything here is exact integer arithmetic; nothing is approximated.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import CapacityError, GcdMismatchError
from .primes import PrimeSet, is_prime, primes_upto

DEFAULT_ALGEBRA_CAP = 10**4     # pi(10^4) = 1229 coefficients keeps full expansions fast


class Variant(enum.Enum):
    SUM = "sum"
    DIFF = "diff"


@dataclass
class ComplementSet:
    a: int
    variant: Variant
    values: list[int]            # q_i = 2a - p_i (sum) or 2a + p_i (diff), indexed like p_i


@dataclass
class VietaCoefficients:
    a: int
    variant: Variant
    coeffs: list[int]            # ascending by degree; coeffs[-1] == 1

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def c0(self) -> int:
        return self.coeffs[0]

    @property
    def c1(self) -> int:
        return self.coeffs[1]

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass
class SmoothnessReport:
    value: int                   # the factored integer T
    bound: int                   # trial-division bound a
    exponents: dict[int, int]    # prime p <= bound -> multiplicity (only p | T)
    a_plus_1_exponent: int       # multiplicity of bound+1 when bound+1 is prime, else 0
    leftover: int                # cofactor with no prime factor <= bound and != bound+1

    def reconstruct(self) -> int:
        out = self.leftover * (self.bound + 1) ** self.a_plus_1_exponent
        for p, e in self.exponents.items():
            out *= p**e
        return out

    @property
    def above_bound_part(self) -> int:
        """Portion of value made of prime factors > bound (bound+1 included)."""
        return self.leftover * (self.bound + 1) ** self.a_plus_1_exponent


@dataclass
class BezoutWitness:
    a: int
    variant: Variant
    kind: str                    # "quadratic" or "unit"
    u: int
    v: int
    verified: bool


def _checked_primes(a: int, ps: PrimeSet, cap: int) -> list[int]:
    if a < 2:
        raise ValueError(f"a must be >= 2, got {a}")
    if a > cap:
        raise CapacityError(f"a = {a} exceeds algebra cap {cap}")
    return primes_upto(a, ps)


def complement_set(a: int, variant: Variant, ps: PrimeSet, cap: int = DEFAULT_ALGEBRA_CAP) -> ComplementSet:
    """The q_i paired with each prime p_i <= a so that q_i +- p_i = 2a."""
    plist = _checked_primes(a, ps, cap)
    two_a = 2 * a
    if variant is Variant.SUM:
        values = [two_a - p for p in plist]
    else:
        values = [two_a + p for p in plist]
    return ComplementSet(a=a, variant=variant, values=values)


def complement_product(a: int, variant: Variant, ps: PrimeSet, cap: int = DEFAULT_ALGEBRA_CAP) -> int:
    """Exact product of the complements q_i."""
    return math.prod(complement_set(a, variant, ps, cap).values)


def vieta_coefficients(a: int, variant: Variant, ps: PrimeSet, cap: int = DEFAULT_ALGEBRA_CAP) -> VietaCoefficients:
    """Coefficients of prod (x -+ p_i), ascending by degree, via incremental
    multiplication by one linear factor per prime."""
    plist = _checked_primes(a, ps, cap)
    coeffs = _expand(plist, variant)
    return VietaCoefficients(a=a, variant=variant, coeffs=coeffs)


def _mul_linear(c: list[int], s: int) -> None:
    """In-place multiply the ascending coefficient list by (x + s)."""
    c.append(c[-1])
    for k in range(len(c) - 2, 0, -1):
        c[k] = c[k - 1] + s * c[k]
    c[0] = s * c[0]


def _expand(plist: list[int], variant: Variant) -> list[int]:
    sign = -1 if variant is Variant.SUM else 1
    c = [1]
    for p in plist:
        _mul_linear(c, sign * p)
    return c


def q_and_c1(a: int, variant: Variant, ps: PrimeSet, cap: int = DEFAULT_ALGEBRA_CAP) -> tuple[int, int]:
    """The degree-split of the expansion at x = 2a.

    Returns (Q_value, c1) where Q_value = sum_{k>=2} c_k (2a)^(k-1), so the
    full evaluation equals c0 + 2a*(Q_value + c1). Q_value is divisible by
    2a by construction (every term carries at least one factor of 2a).
    """
    vc = vieta_coefficients(a, variant, ps, cap)
    return _q_and_c1_from(vc.coeffs, 2 * a)


def _q_and_c1_from(coeffs: list[int], two_a: int) -> tuple[int, int]:
    acc = 0
    for c in reversed(coeffs[2:]):
        acc = acc * two_a + c
    return acc * two_a, coeffs[1] if len(coeffs) > 1 else 0


def realized_difference(a: int, variant: Variant, ps: PrimeSet, cap: int = DEFAULT_ALGEBRA_CAP) -> int:
    """D = complement product minus the polynomial's constant term.

    D equals 2a * (Q_value + c1) exactly; the constant term is
    (-1)^pi(a) * primorial(a) for the sum variant and +primorial(a) for
    the diff variant.
    """
    vc = vieta_coefficients(a, variant, ps, cap)
    prod = complement_product(a, variant, ps, cap)
    return prod - vc.c0


def beta(n: int) -> int:
    """1 if n is prime else 0."""
    return 1 if is_prime(n) else 0


def smoothness_factorization(value: int, bound: int, ps: PrimeSet) -> SmoothnessReport:
    """Trial-divide value by every prime <= bound, then by bound+1 if prime.

    The leftover cofactor is kept unfactored; the report satisfies
    value == leftover * (bound+1)^e * prod p^alpha exactly.
    """
    if value < 1:
        raise ValueError(f"value must be >= 1, got {value}")
    t = value
    exponents: dict[int, int] = {}
    for p in primes_upto(bound, ps):
        if t == 1:
            break
        if t % p == 0:
            e = 1
            t //= p
            while t % p == 0:
                t //= p
                e += 1
            exponents[p] = e
    ap1 = bound + 1
    e1 = 0
    if t > 1 and is_prime(ap1, ps):
        while t % ap1 == 0:
            t //= ap1
            e1 += 1
    return SmoothnessReport(value=value, bound=bound, exponents=exponents,
                            a_plus_1_exponent=e1, leftover=t)


def solve_quadratic_bezout(two_a: int, d: int) -> tuple[int, int]:
    """Least-non-negative-u solution of (2a)^2 u + (-d) v = 2a.

    u is the inverse of 2a modulo |d|/2a (extended Euclid), v follows
    exactly. Requires gcd((2a)^2, d) == 2a; raises GcdMismatchError
    otherwise, which would falsify the realized divisibility facts.
    """
    g = math.gcd(two_a * two_a, d)
    if g != two_a:
        raise GcdMismatchError(
            f"gcd((2a)^2, D) = {g} != 2a = {two_a}", two_a // 2,
            {"two_a": two_a, "D": d, "gcd": g})
    c0 = -d
    m = abs(d) // two_a
    u = pow(two_a, -1, m)
    v, rem = divmod(two_a - two_a * two_a * u, c0)
    assert rem == 0
    return u, v


def solve_unit_bezout(two_a: int, b: int) -> tuple[int, int]:
    """Least-non-negative-u solution of (2a) u + b v = 1.

    Requires gcd(2a, b) == 1; raises GcdMismatchError otherwise.
    """
    g = math.gcd(two_a, b)
    if g != 1:
        raise GcdMismatchError(
            f"gcd(2a, Q + c1) = {g} != 1", two_a // 2,
            {"two_a": two_a, "q_plus_c1": b, "gcd": g})
    m = abs(b)
    u = pow(two_a, -1, m) if m != 1 else 0
    v, rem = divmod(1 - two_a * u, b)
    assert rem == 0
    return u, v


def bezout_quadratic(a: int, variant: Variant, ps: PrimeSet, cap: int = DEFAULT_ALGEBRA_CAP) -> BezoutWitness:
    """Witness for (2a)^2 u + c0 v = 2a on the realized c0 = -D."""
    d = realized_difference(a, variant, ps, cap)
    two_a = 2 * a
    u, v = solve_quadratic_bezout(two_a, d)
    verified = two_a * two_a * u + (-d) * v == two_a
    return BezoutWitness(a=a, variant=variant, kind="quadratic", u=u, v=v, verified=verified)


def bezout_unit(a: int, variant: Variant, ps: PrimeSet, cap: int = DEFAULT_ALGEBRA_CAP) -> BezoutWitness:
    """Witness for (2a) u + (Q + c1) v = 1."""
    q_value, c1 = q_and_c1(a, variant, ps, cap)
    two_a = 2 * a
    u, v = solve_unit_bezout(two_a, q_value + c1)
    verified = two_a * u + (q_value + c1) * v == 1
    return BezoutWitness(a=a, variant=variant, kind="unit", u=u, v=v, verified=verified)
