"""Shared brute-force oracles and random-value helpers.

The oracles here are deliberately independent of the library's own
computation paths: set partitions are enumerated as actual block
structures, the classical recurrence is iterated q-free over plain
integers, and classical EGFs are expanded by rational series arithmetic.
"""

import random
from fractions import Fraction
from math import factorial

from qwhitney import LaurentPoly


def enumerate_set_partitions(n):
    """Yield every partition of {0..n-1} as a list of blocks."""
    if n == 0:
        yield []
        return
    for part in enumerate_set_partitions(n - 1):
        elem = n - 1
        yield part + [[elem]]
        for i in range(len(part)):
            yield part[:i] + [part[i] + [elem]] + part[i + 1:]


def stirling2_enum(n, k):
    """S(n,k) by counting enumerated partitions with exactly k blocks."""
    return sum(1 for part in enumerate_set_partitions(n) if len(part) == k)


def bell_enum(n):
    return sum(1 for _ in enumerate_set_partitions(n))


def classical_whitney_recurrence(m, r, n, k):
    """q-free recurrence W(n,k) = W(n-1,k-1) + (mk+r) W(n-1,k)."""
    if n < 0 or k < 0 or n < k:
        return 0
    row = [1]
    for nn in range(1, n + 1):
        row = [(row[kk - 1] if kk >= 1 else 0)
               + (m * kk + r) * (row[kk] if kk < nn else 0)
               for kk in range(nn + 1)]
    return row[k]


def classical_egf_coeffs(m, r, k, order):
    """Rational t^n coefficients of e^(rt) (e^(mt)-1)^k / (k! m^k)."""
    exp_r = [Fraction(r) ** i / factorial(i) for i in range(order + 1)]
    expm1 = [Fraction(0)] + [Fraction(m) ** i / factorial(i)
                             for i in range(1, order + 1)]

    def convolve(a, b):
        return [sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0))
                for n in range(order + 1)]

    power = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(k):
        power = convolve(power, expm1)
    out = convolve(exp_r, power)
    scale = Fraction(1, factorial(k) * m ** k)
    return [c * scale for c in out]


def random_laurent(rng: random.Random, max_terms=5, exp_range=(-4, 6),
                   coeff_range=(-9, 9)) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        e = rng.randint(*exp_range)
        c = rng.randint(*coeff_range)
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(terms)
