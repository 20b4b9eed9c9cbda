"""Ramanujan primes, window-derived sequences, additive constructions, and
exhaustive inequality verification."""

from .additive import (
    Pairing,
    Representation,
    RichertInduction,
    greenfield_pairing,
    largest_unrepresentable,
    pairing_oracle,
    richert_induction,
    richert_represent,
    verify_pairing,
    verify_representation,
)
from .bfile import BFileEntry, crosscheck, parse_bfile, parse_bfile_text
from .cache import cache_read, cache_write, resolve_cache_path
from .derivation import (
    CRamanujanQuery,
    DerivedSequence,
    c_ramanujan,
    derive,
    derived_ramanujan_primes,
    interval_prime_count,
    level_k_sequence,
    ramanujan_primes,
)
from .errors import (
    BFileParseError,
    CacheIoError,
    CorruptCache,
    EmptyLevel,
    Infeasible,
    InvalidLimit,
    InvalidSequence,
    NoRepresentation,
    OracleTooLarge,
    OutOfRange,
    RkitError,
)
from .sequences import (
    MonotoneCounter,
    PrimeCounter,
    PrimeSet,
    build_prime_set,
    counter_from_elements,
    window,
)
from .verification import (
    CASES,
    VerificationReport,
    dyadic_ratio_trend,
    run_case,
    theorem6_growth_report,
)

__version__ = "0.1.0"
