"""Computational harmonic analysis on the ring of p-adic integers.

Fixed-precision digit arithmetic in Z_p, the character theory of its dual
(the Pruefer group), exact and floating Fourier analysis on the finite
quotients Z/p^nZ, ball indicators with their closed-form character
expansions, and the spectral data of an equivariant Dirac operator.
"""

__version__ = "0.1.0"

from .balls import (
    Ball,
    K0Generator,
    PartitionReport,
    ball_coefficients,
    ball_indicator,
    k0_generators,
    monna_interval,
    verify_partition,
)
from .characters import CharIndex, Phase, enumerate_chars, parse_char, reduce_index
from .cyclotomic import Cyclotomic
from .dirac import (
    CommutatorReport,
    DiracOperator,
    ResolventReport,
    TraceReport,
    TraceRow,
    level_count,
)
from .errors import (
    CannotLower,
    DivisionByZero,
    ExactnessCapExceeded,
    InsufficientLevel,
    InsufficientPrecision,
    InvalidPrecision,
    InvalidPrime,
    LevelMismatch,
    NotAUnit,
    PrimeMismatch,
)
from .harmonic import (
    EXACT_CAP_DEFAULT,
    CoefficientMap,
    LevelFunction,
    coefficient_rows,
    coefficients_to_csv,
    coefficients_to_json,
    dft,
    fft,
    haar_inner,
    lift,
    sample_char,
    synthesize,
)
from .padic import PadicInt, Valuation, format_padic, is_prime, parse_padic

__all__ = [
    "Ball",
    "CannotLower",
    "CharIndex",
    "CoefficientMap",
    "CommutatorReport",
    "Cyclotomic",
    "DiracOperator",
    "DivisionByZero",
    "EXACT_CAP_DEFAULT",
    "ExactnessCapExceeded",
    "InsufficientLevel",
    "InsufficientPrecision",
    "InvalidPrecision",
    "InvalidPrime",
    "K0Generator",
    "LevelFunction",
    "LevelMismatch",
    "NotAUnit",
    "PadicInt",
    "PartitionReport",
    "Phase",
    "PrimeMismatch",
    "ResolventReport",
    "TraceReport",
    "TraceRow",
    "Valuation",
    "ball_coefficients",
    "ball_indicator",
    "coefficient_rows",
    "coefficients_to_csv",
    "coefficients_to_json",
    "dft",
    "enumerate_chars",
    "fft",
    "format_padic",
    "haar_inner",
    "is_prime",
    "k0_generators",
    "level_count",
    "lift",
    "monna_interval",
    "parse_char",
    "parse_padic",
    "reduce_index",
    "sample_char",
    "synthesize",
    "verify_partition",
]
