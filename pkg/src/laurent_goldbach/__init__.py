"""Constructive Goldbach decompositions in N0[x, x^-1].

Any Laurent polynomial with positive integer coefficients, at least two terms
and value at one greater than 3 is a sum of two irreducibles.
"""
from .decompose import (
    DecompositionResult,
    SplitIndices,
    SplitPlan,
    Trace,
    decompose,
    decompose_binomial,
    decompose_by_prime_pair,
    decompose_nagura,
    decompose_small,
    peel_units,
    split_hyper_monolithic,
    split_indices,
    split_plan,
    verify_result,
)
from .irreducibility import (
    HyperMonolithicGcd1,
    OracleExhaustion,
    PrimeEvaluation,
    QuadrinomialGap,
    certify_irreducible,
    check_quadrinomial_gap,
    is_hyper_monolithic,
    verify_certificate,
)
from .laurent import LaurentPoly, add, from_terms, multiply
from .notation import format_poly, parse_poly
from .oracle import (
    FactorizationWitness,
    OracleBounds,
    SemiringMode,
    enumerate_two_irreducible_splits,
    find_factorization,
    is_irreducible_oracle,
    is_monolithic_oracle,
)
from .primes import PrimePair, goldbach_pair, is_prime, largest_prime_below, nagura_prime_for

__version__ = "0.1.0"
