"""Exclusion sieve for primes n*a^2 + 1, representation-based certificates
and idoneal-number tests."""

from .arith import DomainError, FactorPair, PrimeFactorization, divisor_pairs, factorize, is_prime, same_parity_pairs
from .forms import IdonealVerdict, QuadraticForm, idoneal_up_to, is_idoneal, mu, reduced_forms
from .reps import Certificate, Representation, certify, enumerate_reps, factor_from_two_reps
from .sieve import ExclusionWitness, SieveConfig, SieveReport, ZIndex, admissible_y, exclusions_for_y, run_sieve, survivors, z_sign_of_y

__all__ = [
    "Certificate",
    "DomainError",
    "ExclusionWitness",
    "FactorPair",
    "IdonealVerdict",
    "PrimeFactorization",
    "QuadraticForm",
    "Representation",
    "SieveConfig",
    "SieveReport",
    "ZIndex",
    "admissible_y",
    "certify",
    "divisor_pairs",
    "enumerate_reps",
    "exclusions_for_y",
    "factor_from_two_reps",
    "factorize",
    "idoneal_up_to",
    "is_idoneal",
    "is_prime",
    "mu",
    "reduced_forms",
    "run_sieve",
    "same_parity_pairs",
    "survivors",
    "z_sign_of_y",
]
