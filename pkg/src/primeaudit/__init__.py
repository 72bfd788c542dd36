"""primeaudit: exact-arithmetic partition searches, prime-product polynomial
identities, and a range-audit harness over even numbers."""

__version__ = "0.1.0"

from .errors import CapacityError, GcdMismatchError, NoDecompositionError, SieveRangeError
from .primes import PrimeSet, build_sieve, is_prime, prime_pi, primes_upto, primorial
from .partitions import (
    DiffRepresentation,
    GapCensus,
    GoldbachPartition,
    PrpResult,
    diff_representations,
    goldbach_partitions,
    has_diff_representation,
    has_goldbach,
    min_prime_reflective_point,
    polignac_census,
    prime_reflective_points,
    ternary_decomposition,
)
from .algebra import (
    BezoutWitness,
    ComplementSet,
    SmoothnessReport,
    Variant,
    VietaCoefficients,
    beta,
    bezout_quadratic,
    bezout_unit,
    complement_product,
    complement_set,
    q_and_c1,
    realized_difference,
    smoothness_factorization,
    vieta_coefficients,
)
from .audit import (
    AuditConfig,
    AuditReport,
    ClaimResult,
    claim_codes,
    deterministic_body,
    emit_report,
    run_claim,
    run_suite,
)

__all__ = [
    "__version__",
    "CapacityError",
    "GcdMismatchError",
    "NoDecompositionError",
    "SieveRangeError",
    "PrimeSet",
    "build_sieve",
    "is_prime",
    "prime_pi",
    "primes_upto",
    "primorial",
    "DiffRepresentation",
    "GapCensus",
    "GoldbachPartition",
    "PrpResult",
    "diff_representations",
    "goldbach_partitions",
    "has_diff_representation",
    "has_goldbach",
    "min_prime_reflective_point",
    "polignac_census",
    "prime_reflective_points",
    "ternary_decomposition",
    "BezoutWitness",
    "ComplementSet",
    "SmoothnessReport",
    "Variant",
    "VietaCoefficients",
    "beta",
    "bezout_quadratic",
    "bezout_unit",
    "complement_product",
    "complement_set",
    "q_and_c1",
    "realized_difference",
    "smoothness_factorization",
    "vieta_coefficients",
    "AuditConfig",
    "AuditReport",
    "ClaimResult",
    "claim_codes",
    "deterministic_body",
    "emit_report",
    "run_claim",
    "run_suite",
]
