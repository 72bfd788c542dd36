"""Claim registry and range-audit harness.

Every audited statement has a short code (G-* for the sum variant, D-*
for the difference variant, plus P-CENSUS and B-PRIMO). run_claim walks
a range of a-values, recording per-a outcomes; run_suite does so for a
list of claims and assembles a deterministic report.

Determinism: ranges are cut into fixed-size chunks independent of the
job count, chunk results are merged in range order, and witness lists
are capped per kind after the ordered merge, so --jobs never changes
the deterministic report body.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import time
from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable

from . import __version__
from .algebra import (
    Variant,
    _mul_linear,
    _q_and_c1_from,
    smoothness_factorization,
    solve_quadratic_bezout,
    solve_unit_bezout,
)
from .errors import CapacityError, GcdMismatchError
from .partitions import polignac_census
from .primes import PrimeSet, build_sieve

PASS = "PASS"
FAIL = "FAIL"
GAP_WITNESSED = "GAP-WITNESSED"
SKIPPED = "SKIPPED"

_STATUS_RANK = {SKIPPED: 0, PASS: 1, GAP_WITNESSED: 2, FAIL: 3}

ALGEBRA_SUITE_CAP = 2000     # big-integer claims clamp here when running --claims all
SEARCH_SUITE_CAP = 10**6     # search claims clamp here when running --claims all
ALGEBRA_CHUNK = 1024
SEARCH_CHUNK = 65536


@dataclass(frozen=True)
class AuditConfig:
    algebra_cap: int = 10**4         # hard ceiling for full-expansion claims
    census_limit: int = 10**6        # pair-census window for P-CENSUS
    census_max_gap: int = 1000       # gaps above this are SKIPPED by P-CENSUS
    witness_limit: int = 16          # recorded witnesses per kind per claim


@dataclass
class ClaimResult:
    claim: str
    a_lo: int
    a_hi: int
    status: str
    checked: int
    skipped: int
    witnesses: list[dict]            # {"a": int, "kind": "fail"|"gap"|"info", "detail": {...}}

    @property
    def witness_count(self) -> int:
        return len(self.witnesses)


@dataclass
class AuditReport:
    results: list[ClaimResult]
    meta: dict
    elapsed_s: float
    jobs: int

    @property
    def overall_status(self) -> str:
        worst = SKIPPED
        for r in self.results:
            if _STATUS_RANK[r.status] > _STATUS_RANK[worst]:
                worst = r.status
        return worst if self.results else PASS

    @property
    def exit_code(self) -> int:
        return 1 if any(r.status == FAIL for r in self.results) else 0


@dataclass
class _AuditContext:
    ps: PrimeSet
    config: AuditConfig


# ---------------------------------------------------------------------------
# per-claim check factories
#
# A factory receives (ctx, chunk_lo, chunk_hi) and returns check(a) ->
# (kind, detail) with kind in {"ok", "fail", "skip", "gap"}. Factories own
# any incremental per-chunk state (polynomial coefficients, running
# primorial), which is rebuilt at each chunk boundary.
# ---------------------------------------------------------------------------


class _PolyState:
    """Ascending-a incremental expansion of prod (x -+ p) over primes <= a."""

    def __init__(self, variant: Variant, plist: list[int]):
        self.sign = -1 if variant is Variant.SUM else 1
        self.plist = plist
        self.coeffs = [1]
        self.idx = 0

    def advance(self, a: int) -> list[int]:
        plist = self.plist
        while self.idx < len(plist) and plist[self.idx] <= a:
            _mul_linear(self.coeffs, self.sign * plist[self.idx])
            self.idx += 1
        return self.coeffs


class _PrimorialState:
    """Running primorial, kept exact only while it can still matter."""

    def __init__(self, plist: list[int], threshold: int | None = None):
        self.plist = plist
        self.threshold = threshold   # None: always exact
        self.prod = 1
        self.idx = 0
        self.cleared = False         # True once prod has exceeded the threshold

    def advance(self, a: int) -> int:
        plist = self.plist
        while self.idx < len(plist) and plist[self.idx] <= a:
            if not self.cleared:
                self.prod *= plist[self.idx]
                if self.threshold is not None and self.prod > self.threshold:
                    self.cleared = True
            self.idx += 1
        return self.prod


def _complements(plist: list[int], k: int, a: int, variant: Variant) -> list[int]:
    two_a = 2 * a
    if variant is Variant.SUM:
        return [two_a - p for p in plist[:k]]
    return [two_a + p for p in plist[:k]]


def _mk_close(variant: Variant):
    def make(ctx: _AuditContext, lo: int, hi: int):
        plist = ctx.ps.prime_list

        def check(a: int):
            k = bisect_right(plist, a)
            two_a = 2 * a
            qs = _complements(plist, k, a, variant)
            problems = {}
            if variant is Variant.SUM:
                if any(q + p != two_a for p, q in zip(plist[:k], qs)):
                    problems["pair_identity"] = False
                if any(qs[i] <= qs[i + 1] for i in range(len(qs) - 1)):
                    problems["strictly_decreasing"] = False
                if qs and not (a <= qs[-1] and qs[0] <= two_a - 2):
                    problems["bounds"] = [qs[-1], qs[0]]
            else:
                if any(q - p != two_a for p, q in zip(plist[:k], qs)):
                    problems["pair_identity"] = False
                if any(qs[i] >= qs[i + 1] for i in range(len(qs) - 1)):
                    problems["strictly_increasing"] = False
                if qs and not (two_a + 2 <= qs[0] and qs[-1] <= 3 * a):
                    problems["bounds"] = [qs[0], qs[-1]]
            if len(qs) != k:
                problems["count"] = [len(qs), k]
            return ("fail", problems) if problems else ("ok", None)

        return check

    return make


def _mk_equiv(variant: Variant):
    def make(ctx: _AuditContext, lo: int, hi: int):
        ps = ctx.ps
        plist = ps.prime_list
        tbl = ps.table

        def check(a: int):
            if variant is Variant.SUM and ps.is_prime(a):
                return ("skip", None)
            k = bisect_right(plist, a)
            two_a = 2 * a
            comps = _complements(plist, k, a, variant)
            prod = math.prod(comps)
            rep = smoothness_factorization(prod, a, ps)
            if variant is Variant.SUM:
                pairs = [[p, two_a - p] for p in plist[:k]
                         if (tbl[(two_a - p) >> 3] >> ((two_a - p) & 7)) & 1]
                residue = rep.above_bound_part
                detail = {"leftover": residue, "partitions": pairs}
            else:
                pairs = [[p, two_a + p] for p in plist[:k]
                         if (tbl[(two_a + p) >> 3] >> ((two_a + p) & 7)) & 1]
                residue = rep.leftover
                detail = {"leftover": residue, "pairs": pairs}
            if (residue == 1) == (not pairs):
                return ("ok", detail)
            detail["product"] = prod
            return ("fail", detail)

        return check

    return make


def _mk_cong(variant: Variant):
    def make(ctx: _AuditContext, lo: int, hi: int):
        plist = ctx.ps.prime_list

        def check(a: int):
            k = bisect_right(plist, a)
            m = 2 * a
            lhs = 1
            rhs = 1
            if variant is Variant.SUM:
                for p in plist[:k]:
                    lhs = lhs * (m - p) % m
                    rhs = rhs * p % m
                if k % 2:
                    rhs = -rhs % m
            else:
                for p in plist[:k]:
                    lhs = lhs * (m + p) % m
                    rhs = rhs * p % m
            if lhs == rhs:
                return ("ok", None)
            return ("fail", {"product_mod_2a": lhs, "signed_primorial_mod_2a": rhs})

        return check

    return make


def _mk_c1(variant: Variant):
    def make(ctx: _AuditContext, lo: int, hi: int):
        plist = ctx.ps.prime_list
        poly = _PolyState(variant, plist)

        def check(a: int):
            c = poly.advance(a)
            c1 = c[1]
            bad = [p for p in plist[: poly.idx] if c1 % p == 0]
            g = math.gcd(2 * a, c1)
            if not bad and g == 1:
                return ("ok", None)
            return ("fail", {"shared_primes": bad[:8], "gcd_2a_c1": g})

        return check

    return make


def _mk_qdiv(variant: Variant):
    def make(ctx: _AuditContext, lo: int, hi: int):
        plist = ctx.ps.prime_list
        poly = _PolyState(variant, plist)

        def check(a: int):
            c = poly.advance(a)
            two_a = 2 * a
            value = 0
            for ck in reversed(c):
                value = value * two_a + ck
            prod = math.prod(_complements(plist, poly.idx, a, variant))
            q_value, _ = _q_and_c1_from(c, two_a)
            problems = {}
            if value != prod:
                problems["expansion_identity"] = False
            if q_value % two_a:
                problems["q_mod_2a"] = q_value % two_a
            return ("fail", problems) if problems else ("ok", None)

        return check

    return make


def _mk_c0(variant: Variant):
    def make(ctx: _AuditContext, lo: int, hi: int):
        plist = ctx.ps.prime_list
        poly = _PolyState(variant, plist)

        def check(a: int):
            c = poly.advance(a)
            two_a = 2 * a
            prod = math.prod(_complements(plist, poly.idx, a, variant))
            d = prod - c[0]
            q_value, c1 = _q_and_c1_from(c, two_a)
            bracket = q_value + c1
            problems = {}
            if d == 0:
                problems["d_zero"] = True
            if d % two_a:
                problems["d_mod_2a"] = d % two_a
            elif math.gcd(two_a, d // two_a) != 1:
                problems["gcd_2a_d_over_2a"] = math.gcd(two_a, d // two_a)
            if abs(d) != two_a * abs(bracket):
                problems["d_vs_bracket"] = [abs(d), abs(bracket)]
            if abs(d) <= abs(bracket):
                problems["d_not_larger"] = True
            return ("fail", problems) if problems else ("ok", None)

        return check

    return make


def _mk_bez2(variant: Variant):
    def make(ctx: _AuditContext, lo: int, hi: int):
        plist = ctx.ps.prime_list
        primo = _PrimorialState(plist)

        def check(a: int):
            primorial = primo.advance(a)
            two_a = 2 * a
            c0 = primorial if variant is Variant.DIFF or primo.idx % 2 == 0 else -primorial
            prod = math.prod(_complements(plist, primo.idx, a, variant))
            d = prod - c0
            try:
                u, v = solve_quadratic_bezout(two_a, d)
            except GcdMismatchError as exc:
                return ("fail", dict(exc.detail))
            if two_a * two_a * u + (-d) * v != two_a:
                return ("fail", {"u": u, "v": v, "identity": False})
            return ("ok", None)

        return check

    return make


def _mk_deg(variant: Variant):
    def make(ctx: _AuditContext, lo: int, hi: int):
        plist = ctx.ps.prime_list
        primo = _PrimorialState(plist)

        def check(a: int):
            primorial = primo.advance(a)
            two_a = 2 * a
            c0 = primorial if variant is Variant.DIFF or primo.idx % 2 == 0 else -primorial
            prod = math.prod(_complements(plist, primo.idx, a, variant))
            bracket, rem = divmod(prod - c0, two_a)
            if rem:
                return ("fail", {"d_mod_2a": rem})
            try:
                u, v = solve_unit_bezout(two_a, bracket)
            except GcdMismatchError as exc:
                return ("fail", dict(exc.detail))
            verified = two_a * u + bracket * v == 1
            if not verified:
                return ("fail", {"u": u, "v": v, "identity": False})
            deg = primo.idx - 1
            if deg > 1:
                return ("gap", {"deg": deg, "unit_bezout_verified": True})
            return ("ok", None)

        return check

    return make


def _mk_emp(ctx: _AuditContext, lo: int, hi: int):
    tbl = ctx.ps.table
    plist = ctx.ps.prime_list

    def check(a: int):
        two_a = 2 * a
        for p in plist:
            if p > a:
                break
            q = two_a - p
            if (tbl[q >> 3] >> (q & 7)) & 1:
                return ("ok", None)
        return ("fail", {"partitions": []})

    return check


def _mk_demp(ctx: _AuditContext, lo: int, hi: int):
    tbl = ctx.ps.table
    plist = ctx.ps.prime_list

    def check(a: int):
        two_a = 2 * a
        for p in plist:
            if p > a:
                break
            q = two_a + p
            if (tbl[q >> 3] >> (q & 7)) & 1:
                return ("ok", None)
        return ("fail", {"pairs": []})

    return check


def _mk_prp(ctx: _AuditContext, lo: int, hi: int):
    tbl = ctx.ps.table

    def check(a: int):
        for b in range(1, a - 1):
            pl = a - b
            ph = a + b
            if (tbl[pl >> 3] >> (pl & 7)) & 1 and (tbl[ph >> 3] >> (ph & 7)) & 1:
                return ("ok", None)
        return ("fail", {"points": []})

    return check


def _mk_tern(ctx: _AuditContext, lo: int, hi: int):
    tbl = ctx.ps.table
    plist = ctx.ps.prime_list

    def check(n: int):
        if n % 2 == 0 or n < 9:
            return ("skip", None)
        m = n - 3
        for i in range(1, len(plist)):
            p = plist[i]
            if 2 * p > m:
                break
            q = m - p
            if (tbl[q >> 3] >> (q & 7)) & 1:
                return ("ok", None)
        return ("fail", {"n": n})

    return check


def _mk_census(ctx: _AuditContext, lo: int, hi: int):
    cfg = ctx.config
    checkpoints = sorted({cfg.census_limit // 100, cfg.census_limit // 10, cfg.census_limit})

    def check(gap: int):
        if gap % 2 or gap > cfg.census_max_gap:
            return ("skip", None)
        counts = [polignac_census(gap, cl, ctx.ps).count for cl in checkpoints]
        if all(counts[i] <= counts[i + 1] for i in range(len(counts) - 1)) and counts[-1] > 0:
            return ("ok", None)
        return ("fail", {"checkpoints": checkpoints, "counts": counts})

    return check


def _mk_bprimo(ctx: _AuditContext, lo: int, hi: int):
    plist = ctx.ps.prime_list
    primo = _PrimorialState(plist, threshold=2 * hi)

    def check(a: int):
        primorial = primo.advance(a)
        problems = {}
        nxt = plist[primo.idx] if primo.idx < len(plist) else None
        if nxt is None or nxt >= 2 * a:
            problems["prime_between_a_and_2a"] = nxt
        if a > 4 and not primo.cleared and primorial <= 2 * a:
            problems["primorial"] = primorial
        return ("fail", problems) if problems else ("ok", None)

    return check


def _mk_beta(ctx: _AuditContext, lo: int, hi: int):
    ps = ctx.ps
    plist = ps.prime_list

    def check(a: int):
        ap1 = a + 1
        expected = 1 if ps.is_prime(ap1) else 0
        exponent = 0
        if expected:
            k = bisect_right(plist, a)
            two_a = 2 * a
            for p in plist[:k]:
                q = two_a + p
                while q % ap1 == 0:
                    exponent += 1
                    q //= ap1
        if exponent == expected:
            return ("ok", None)
        return ("fail", {"beta": expected, "exponent": exponent})

    return check


@dataclass(frozen=True)
class ClaimSpec:
    code: str
    summary: str
    group: str                                  # "algebra" or "search"
    make_check: Callable
    sieve_need: Callable[[int, AuditConfig], int]
    suite_cap: int
    chunk: int


def _algebra_claim(code, summary, make, need=lambda hi, cfg: hi):
    return ClaimSpec(code, summary, "algebra", make, need, ALGEBRA_SUITE_CAP, ALGEBRA_CHUNK)


def _search_claim(code, summary, make, need):
    return ClaimSpec(code, summary, "search", make, need, SEARCH_SUITE_CAP, SEARCH_CHUNK)


_CLAIM_LIST = [
    _algebra_claim("G-CLOSE", "sum complements pair with every prime <= a and stay in [a, 2a-2]",
                   _mk_close(Variant.SUM)),
    _algebra_claim("G-EQUIV", "sum product has a prime factor > a iff 2a is a sum of two primes (composite a)",
                   _mk_equiv(Variant.SUM), need=lambda hi, cfg: 2 * hi),
    _algebra_claim("G-CONG", "prod(2a - p) is congruent to (-1)^pi(a) primorial(a) mod 2a",
                   _mk_cong(Variant.SUM)),
    _algebra_claim("G-C1", "sum-variant degree-1 coefficient is coprime to every prime <= a and to 2a",
                   _mk_c1(Variant.SUM)),
    _algebra_claim("G-QDIV", "sum expansion evaluates back to the product and 2a divides Q",
                   _mk_qdiv(Variant.SUM)),
    _algebra_claim("G-C0", "sum realized difference D: nonzero, 2a | D, gcd(2a, D/2a) = 1, |D| = 2a|Q+c1|",
                   _mk_c0(Variant.SUM)),
    _algebra_claim("G-BEZ2", "sum quadratic Bezout identity (2a)^2 u + c0 v = 2a verifies",
                   _mk_bez2(Variant.SUM)),
    _algebra_claim("G-DEG", "sum bracket degree is pi(a) - 1 while the unit Bezout identity verifies",
                   _mk_deg(Variant.SUM)),
    _search_claim("G-EMP", "every even 2a is a sum of two primes",
                  _mk_emp, need=lambda hi, cfg: 2 * hi),
    _search_claim("G-PRP", "every a > 3 has a non-zero b with a - b and a + b both prime",
                  _mk_prp, need=lambda hi, cfg: 2 * hi),
    _search_claim("G-TERN", "every odd n >= 9 splits as 3 + p + q with odd primes p, q",
                  _mk_tern, need=lambda hi, cfg: hi),
    _algebra_claim("D-CLOSE", "diff complements pair with every prime <= a and stay in [2a+2, 3a]",
                   _mk_close(Variant.DIFF)),
    _algebra_claim("D-EQUIV", "diff product keeps a prime factor > a (beyond a+1) iff 2a is a prime difference",
                   _mk_equiv(Variant.DIFF), need=lambda hi, cfg: 3 * hi),
    _algebra_claim("D-CONG", "prod(2a + p) is congruent to primorial(a) mod 2a",
                   _mk_cong(Variant.DIFF)),
    _algebra_claim("D-C1", "diff-variant degree-1 coefficient is coprime to every prime <= a and to 2a",
                   _mk_c1(Variant.DIFF)),
    _algebra_claim("D-QDIV", "diff expansion evaluates back to the product and 2a divides Q",
                   _mk_qdiv(Variant.DIFF)),
    _algebra_claim("D-C0", "diff realized difference D: nonzero, 2a | D, gcd(2a, D/2a) = 1, |D| = 2a|Q+c1|",
                   _mk_c0(Variant.DIFF)),
    _algebra_claim("D-BEZ2", "diff quadratic Bezout identity (2a)^2 u + c0 v = 2a verifies",
                   _mk_bez2(Variant.DIFF)),
    _algebra_claim("D-DEG", "diff bracket degree is pi(a) - 1 while the unit Bezout identity verifies",
                   _mk_deg(Variant.DIFF)),
    _search_claim("D-EMP", "every even 2a is a difference q - p of primes with p <= a",
                  _mk_demp, need=lambda hi, cfg: 3 * hi),
    _algebra_claim("D-BETA", "(a+1)-exponent of the diff product is exactly beta(a+1)",
                   _mk_beta, need=lambda hi, cfg: hi + 1),
    _search_claim("P-CENSUS", "pair census for each even gap is positive and monotone in the window",
                  _mk_census, need=lambda hi, cfg: cfg.census_limit + min(hi, cfg.census_max_gap)),
    _search_claim("B-PRIMO", "a prime lies strictly between a and 2a; 2a < primorial(a) for a > 4",
                  _mk_bprimo, need=lambda hi, cfg: 2 * hi),
]

CLAIMS: dict[str, ClaimSpec] = {spec.code: spec for spec in _CLAIM_LIST}


def claim_codes() -> list[str]:
    """Catalog codes in registry order."""
    return [spec.code for spec in _CLAIM_LIST]


# ---------------------------------------------------------------------------
# range execution
# ---------------------------------------------------------------------------

_WORKER_CTX: _AuditContext | None = None


def _eval_chunk(task: tuple[str, int, int]) -> dict:
    code, lo, hi = task
    ctx = _WORKER_CTX
    spec = CLAIMS[code]
    check = spec.make_check(ctx, lo, hi)
    limit = ctx.config.witness_limit
    checked = skipped = 0
    counts = {"fail": 0, "gap": 0, "info": 0}
    kept: dict[str, list[dict]] = {"fail": [], "gap": [], "info": []}
    for a in range(lo, hi + 1):
        kind, detail = check(a)
        if kind == "skip":
            skipped += 1
            continue
        checked += 1
        if detail is None and kind == "ok":
            continue
        key = "info" if kind == "ok" else kind
        counts[key] += 1
        if len(kept[key]) < limit:
            kept[key].append({"a": a, "kind": key, "detail": detail})
    return {"checked": checked, "skipped": skipped, "counts": counts, "kept": kept}


def _chunks(code: str, lo: int, hi: int) -> list[tuple[str, int, int]]:
    size = CLAIMS[code].chunk
    return [(code, c, min(c + size - 1, hi)) for c in range(lo, hi + 1, size)]


class _Runner:
    """Owns the worker pool (if any) and the shared context."""

    def __init__(self, ps: PrimeSet, config: AuditConfig, jobs: int):
        self.ctx = _AuditContext(ps=ps, config=config)
        self.jobs = max(1, jobs)
        self.pool = None

    def __enter__(self):
        global _WORKER_CTX
        _WORKER_CTX = self.ctx
        if self.jobs > 1:
            # fork inherits _WORKER_CTX (sieve included) without pickling
            self.pool = multiprocessing.get_context("fork").Pool(self.jobs)
        return self

    def __exit__(self, exc_type, exc, tb):
        if self.pool is not None:
            if exc_type is None:
                self.pool.close()
            else:
                self.pool.terminate()
            self.pool.join()
            self.pool = None
        return False

    def run(self, code: str, lo: int, hi: int) -> ClaimResult:
        if hi < lo:
            return ClaimResult(claim=code, a_lo=lo, a_hi=hi, status=SKIPPED,
                               checked=0, skipped=0, witnesses=[])
        tasks = _chunks(code, lo, hi)
        if self.pool is not None and len(tasks) > 1:
            outs = list(self.pool.imap(_eval_chunk, tasks, chunksize=1))
        else:
            outs = [_eval_chunk(t) for t in tasks]
        checked = sum(o["checked"] for o in outs)
        skipped = sum(o["skipped"] for o in outs)
        counts = {"fail": 0, "gap": 0, "info": 0}
        kept: dict[str, list[dict]] = {"fail": [], "gap": [], "info": []}
        limit = self.ctx.config.witness_limit
        for o in outs:
            for key in counts:
                counts[key] += o["counts"][key]
                room = limit - len(kept[key])
                if room > 0:
                    kept[key].extend(o["kept"][key][:room])
        witnesses = sorted(kept["fail"] + kept["gap"] + kept["info"], key=lambda w: w["a"])
        if counts["fail"]:
            status = FAIL
        elif counts["gap"]:
            status = GAP_WITNESSED
        elif checked:
            status = PASS
        else:
            status = SKIPPED
        return ClaimResult(claim=code, a_lo=lo, a_hi=hi, status=status,
                           checked=checked, skipped=skipped, witnesses=witnesses)


def _resolve_claims(claims: list[str] | str) -> tuple[list[str], bool]:
    """Returns (codes, clamp_to_suite_caps)."""
    if claims == "all" or claims == ["all"]:
        return claim_codes(), True
    if isinstance(claims, str):
        claims = [claims]
    seen = []
    for code in claims:
        if code not in CLAIMS:
            raise ValueError(f"unknown claim code {code!r}; known: {', '.join(claim_codes())} or 'all'")
        if code not in seen:
            seen.append(code)
    return seen, False


def _validate_range(spec: ClaimSpec, a_lo: int, a_hi: int, config: AuditConfig) -> None:
    if not 3 < a_lo <= a_hi:
        raise ValueError(f"need 3 < a_lo <= a_hi, got [{a_lo}, {a_hi}]")
    if spec.group == "algebra" and a_hi > config.algebra_cap:
        raise CapacityError(
            f"{spec.code} is capped at a <= {config.algebra_cap} (full expansions); requested {a_hi}")


def run_claim(claim: str, a_lo: int, a_hi: int, jobs: int = 1,
              ps: PrimeSet | None = None, config: AuditConfig = AuditConfig()) -> ClaimResult:
    """Check one claim for every applicable a in [a_lo, a_hi]."""
    codes, clamp = _resolve_claims(claim)
    if clamp or len(codes) != 1:
        raise ValueError("run_claim takes exactly one claim code; use run_suite for several")
    spec = CLAIMS[codes[0]]
    _validate_range(spec, a_lo, a_hi, config)
    need = spec.sieve_need(a_hi, config)
    if ps is None or ps.limit < need:
        ps = build_sieve(max(need, 64))
    with _Runner(ps, config, jobs) as runner:
        return runner.run(codes[0], a_lo, a_hi)


def run_suite(claims: list[str] | str, a_lo: int, a_hi: int, jobs: int = 1,
              ps: PrimeSet | None = None, config: AuditConfig = AuditConfig()) -> AuditReport:
    """Run a list of claims (or 'all') and assemble a deterministic report.

    With 'all', each claim's upper bound is clamped to its suite cap;
    explicitly listed claims run the requested range unclamped.
    """
    start = time.monotonic()
    codes, clamp = _resolve_claims(claims)
    if codes and not 3 < a_lo <= a_hi:
        raise ValueError(f"need 3 < a_lo <= a_hi, got [{a_lo}, {a_hi}]")
    bounds = {}
    for code in codes:
        spec = CLAIMS[code]
        if clamp:
            bounds[code] = min(a_hi, spec.suite_cap)
        else:
            _validate_range(spec, a_lo, a_hi, config)
            bounds[code] = a_hi
    active = [c for c in codes if bounds[c] >= a_lo]
    if active:
        need = max(CLAIMS[c].sieve_need(bounds[c], config) for c in active)
        if ps is None or ps.limit < need:
            ps = build_sieve(max(need, 64))
    results = []
    if codes:
        with _Runner(ps, config, jobs) as runner:
            for code in codes:
                results.append(runner.run(code, a_lo, bounds[code]))
    results.sort(key=lambda r: (r.claim, r.a_lo, r.a_hi))
    meta = {
        "tool": "primeaudit",
        "version": __version__,
        "claims": codes if not clamp else ["all"],
        "a_lo": a_lo,
        "a_hi": a_hi,
        "sieve_limit": ps.limit if ps is not None else 0,
        "algebra_cap": config.algebra_cap,
        "census_limit": config.census_limit,
        "census_max_gap": config.census_max_gap,
        "witness_limit": config.witness_limit,
    }
    return AuditReport(results=results, meta=meta,
                       elapsed_s=time.monotonic() - start, jobs=max(1, jobs))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def emit_report(report: AuditReport, fmt: str = "json") -> str:
    """Serialize a report; the deterministic body is every line except the
    final timing trailer (see deterministic_body)."""
    if fmt in ("json", "jsonl"):
        lines = [_dumps({"meta": report.meta})]
        for r in report.results:
            rec = {"claim": r.claim, "a_lo": r.a_lo, "a_hi": r.a_hi, "status": r.status,
                   "checked": r.checked, "skipped": r.skipped, "witness_count": r.witness_count}
            if r.witnesses:
                rec["witnesses"] = r.witnesses
            lines.append(_dumps(rec))
        lines.append(_dumps({"trailer": {"elapsed_s": f"{report.elapsed_s:.3f}", "jobs": report.jobs}}))
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        lines = ["claim,a_lo,a_hi,status,checked,witness_count"]
        for r in report.results:
            lines.append(f"{r.claim},{r.a_lo},{r.a_hi},{r.status},{r.checked},{r.witness_count}")
        lines.append(f"# elapsed_s={report.elapsed_s:.3f} jobs={report.jobs}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r} (expected json or csv)")


def deterministic_body(text: str) -> str:
    """Strip the timing trailer so outputs can be compared byte-for-byte."""
    kept = [ln for ln in text.splitlines()
            if not (ln.startswith('{"trailer"') or ln.startswith("#"))]
    return "\n".join(kept) + "\n"
