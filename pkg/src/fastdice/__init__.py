"""Entropy-optimal discrete sampling from raw coin flips.

Exact uniform integers, batched uniforms, Bernoulli draws with rational
bias, and uniform random permutations, all fed bit by bit from a
pluggable source and all meeting the Knuth-Yao expected-bit optimum.
The cost side computes the expected bit counts exactly (as rationals),
their toll over the entropy floor, and the smooth zeta-based
approximation.
"""

from .batch import BatchPlan, MAX_BATCH_SIZE, auto_batch_size, batch_uniform, plan_batch
from .bernoulli import MAX_DENOMINATOR, Rational, bernoulli_rational, binary_expansion
from .bitsource import (BufferedWordSource, RandomBitSource, ScriptedBitSource,
                        ScriptedWords, SplitMix64Words, WordGenerator)
from .core import MAX_UNIFORM_RANGE, FdrOutcome, fdr_uniform, fdr_uniform_range
from .cost import (AsymptoticParams, CostBreakdown, EULER_GAMMA, asymptotic_cost,
                   batch_cost, cost_breakdown, cost_partial_sum, exact_cost,
                   exact_cost_rational, nu, nu_exact, periodic_fluctuation,
                   toll, zeta_complex)
from .errors import (DigitOutOfRange, EmptyRange, FactorialOverflow,
                     FastdiceError, ImproperFraction, Overflow, PoleAtOne,
                     RangeTooLarge, RankOutOfRange, ScriptExhausted)
from .permutation import (LehmerCode, MAX_UNRANK_SIZE, Rank,
                          factorial_compose, factorial_decompose,
                          fisher_yates, inversion_count,
                          lehmer_to_permutation_fy,
                          lehmer_to_permutation_selection,
                          random_permutation_unranked)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticParams", "BatchPlan", "BufferedWordSource", "CostBreakdown",
    "DigitOutOfRange", "EULER_GAMMA", "EmptyRange", "FactorialOverflow",
    "FastdiceError", "FdrOutcome", "ImproperFraction", "LehmerCode",
    "MAX_BATCH_SIZE", "MAX_DENOMINATOR", "MAX_UNIFORM_RANGE",
    "MAX_UNRANK_SIZE", "Overflow", "PoleAtOne", "RandomBitSource",
    "RangeTooLarge", "Rank", "RankOutOfRange", "Rational", "ScriptExhausted",
    "ScriptedBitSource", "ScriptedWords", "SplitMix64Words", "WordGenerator",
    "auto_batch_size", "asymptotic_cost", "batch_cost", "batch_uniform",
    "bernoulli_rational", "binary_expansion", "cost_breakdown",
    "cost_partial_sum", "exact_cost", "exact_cost_rational", "factorial_compose",
    "factorial_decompose", "fdr_uniform", "fdr_uniform_range", "fisher_yates",
    "inversion_count", "lehmer_to_permutation_fy",
    "lehmer_to_permutation_selection", "nu", "nu_exact",
    "periodic_fluctuation", "plan_batch", "random_permutation_unranked",
    "toll", "zeta_complex",
]
