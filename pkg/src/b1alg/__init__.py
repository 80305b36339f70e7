"""Computational algebra for finite characteristic-one semirings.

Build or load a finite B1-algebra (idempotent addition, 1 + 1 = 1), then
compute its ideals, saturations, radicals, spectra, associated primes,
weak primary decompositions and Evans reports, or run the full audit that
checks every structural law on the given instance.
"""

__version__ = "0.1.0"

from .algebra import (
    Algebra,
    AlgebraError,
    AxiomError,
    AxiomReport,
    EnumerationBoundError,
    EnumerationBoundWarning,
    Violation,
    build_algebra,
    builtin,
    chain_algebra,
    check_axioms,
    direct_product,
    enumeration_bound,
)
from .ideals import (
    Congruence,
    QuotientMap,
    annihilator,
    annihilator_set,
    bits,
    bourne_congruence,
    conductor,
    congruence_violation,
    enumerate_ideals,
    enumerate_saturated_ideals,
    full_mask,
    generated_ideal,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    ideal_violation,
    is_ideal,
    is_saturated,
    mask_of,
    member_labels,
    preimage_ideal,
    quotient,
    radical,
    saturation,
)
from .spectrum import (
    SpectrumResult,
    associated_primes,
    divisor_set,
    is_primary,
    is_prime,
    is_standard,
    max_saturated,
    min_primes,
    min_saturated_primes,
    nilradical,
    primes,
    saturated_primes,
    spectrum,
    zero_divisors,
)
from .decompose import (
    AuditCheck,
    AuditResult,
    DecompositionResult,
    EvansReport,
    LaskerianReport,
    audit,
    evans_report,
    laskerian_check,
    minimalize,
    radical_decomposition,
    weak_decompose,
)

__all__ = [
    "__version__",
    "Algebra",
    "AlgebraError",
    "AxiomError",
    "AxiomReport",
    "EnumerationBoundError",
    "EnumerationBoundWarning",
    "Violation",
    "build_algebra",
    "builtin",
    "chain_algebra",
    "check_axioms",
    "direct_product",
    "enumeration_bound",
    "Congruence",
    "QuotientMap",
    "annihilator",
    "annihilator_set",
    "bits",
    "bourne_congruence",
    "conductor",
    "congruence_violation",
    "enumerate_ideals",
    "enumerate_saturated_ideals",
    "full_mask",
    "generated_ideal",
    "ideal_intersect",
    "ideal_product",
    "ideal_sum",
    "ideal_violation",
    "is_ideal",
    "is_saturated",
    "mask_of",
    "member_labels",
    "preimage_ideal",
    "quotient",
    "radical",
    "saturation",
    "SpectrumResult",
    "associated_primes",
    "divisor_set",
    "is_primary",
    "is_prime",
    "is_standard",
    "max_saturated",
    "min_primes",
    "min_saturated_primes",
    "nilradical",
    "primes",
    "saturated_primes",
    "spectrum",
    "zero_divisors",
    "AuditCheck",
    "AuditResult",
    "DecompositionResult",
    "EvansReport",
    "LaskerianReport",
    "audit",
    "evans_report",
    "laskerian_check",
    "minimalize",
    "radical_decomposition",
    "weak_decompose",
]
