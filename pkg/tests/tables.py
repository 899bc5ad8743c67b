"""Frozen expected values shared across test modules.

Every number here was computed by an independent route before the library
code existed: exhaustive enumeration over all strings for the counts and
gamma histograms, subset-scan search for the small family maxima, and two
agreeing methods (chain covers and clique-over-incomparability) for the
antichain maxima. Tests compare library output against these literals.
"""

from fractions import Fraction

# number of length-n strings with gamma > n, by exhaustive enumeration
COUNT_C = {
    1: 0,
    2: 1,
    3: 3,
    4: 8,
    5: 17,
    6: 38,
    7: 80,
    8: 164,
    9: 346,
    10: 701,
    11: 1446,
    12: 2953,
}

# histograms {gamma: count} by exhaustive enumeration
GAMMA_HIST = {
    1: {0: 1, 1: 1},
    2: {0: 1, 2: 2, 4: 1},
    3: {0: 1, 2: 2, 3: 2, 5: 2, 6: 1},
    4: {0: 1, 2: 2, 3: 2, 4: 3, 5: 2, 6: 3, 7: 2, 8: 1},
}

EXPECTED_GAMMA = {1: Fraction(1, 2), 2: Fraction(2), 3: Fraction(13, 4)}

TAIL = {1: Fraction(1), 2: Fraction(3, 4), 3: Fraction(5, 8)}

# maximum pairwise-skewincident family sizes; n <= 3 confirmed by scanning
# all subsets of the string universe, n = 4 by the incremental subset table
MAX_FAMILY = {1: 1, 2: 3, 3: 5, 4: 11, 5: 22, 6: 46}

MAX_FAMILY_WITNESS_3 = {"001", "010", "011", "110", "111"}

# maximum antichain sizes among no-adjacent-ones strings; n <= 10 confirmed
# by the independent clique-over-incomparability route
ANTICHAIN_MAX = {
    1: 1,
    2: 2,
    3: 3,
    4: 4,
    5: 6,
    6: 10,
    7: 15,
    8: 21,
    9: 35,
    10: 56,
    11: 84,
    12: 126,
    13: 210,
    14: 330,
    15: 495,
    16: 792,
    17: 1287,
    18: 2002,
    19: 3003,
    20: 5005,
}

FIBONACCI = {1: 2, 2: 3, 3: 5, 4: 8, 5: 13, 6: 21, 7: 34, 8: 55}

# first n at which 2^n - |C_n| <= 2^(0.96 n) starts holding for good (<= 512)
CROSSOVER_N = 2

# SplitMix64 outputs for seed 0, from the published reference sequence
SPLITMIX64_SEED0 = (0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F)
