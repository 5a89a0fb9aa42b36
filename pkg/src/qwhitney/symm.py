"""Symmetric-function route and tableau oracle for the normalized numbers.

W*_{m,r}[n,k]_q is the complete homogeneous symmetric polynomial of degree
n-k in the k+1 values [r]_q, [m+r]_q, ..., [mk+r]_q.  A brute-force sum over
weakly increasing column-length lists (A-tableaux) provides the independent
exponential-time oracle, and the two convolution identities are checked as
exact polynomial equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .qcore import LaurentPoly, ONE, ZERO, q_int
from .whitney import WhitneyParams, w_star


class EnumerationTooLarge(ValueError):
    """Tableau enumeration would exceed the configured cap."""


DEFAULT_ENUMERATION_CAP = 10 ** 6


@dataclass(frozen=True)
class ATableau:
    """Weakly increasing column lengths drawn from {0, ..., k}."""

    column_lengths: tuple

    def __post_init__(self):
        if any(b < a for a, b in zip(self.column_lengths, self.column_lengths[1:])):
            raise ValueError("column lengths must be weakly increasing")
        if self.column_lengths and self.column_lengths[0] < 0:
            raise ValueError("column lengths must be nonnegative")


def a_tableaux(k: int, length: int):
    """All tableaux with `length` columns of lengths in {0..k}."""
    for lens in combinations_with_replacement(range(k + 1), length):
        yield ATableau(lens)


def h_complete(values, d: int) -> LaurentPoly:
    """Complete homogeneous symmetric polynomial of degree d in `values`.

    Uses h_d(x_1..x_j) = h_d(x_1..x_{j-1}) + x_j h_{d-1}(x_1..x_j), which is
    polynomial-time; tableau_sum keeps the enumeration route separate.
    """
    values = list(values)
    if d == 0:
        return ONE
    if not values:
        return ZERO
    # row[i] = h_i over the first j values, grown one variable at a time
    row = [ONE] + [ZERO] * d
    for x in values:
        for i in range(1, d + 1):
            row[i] = row[i] + x * row[i - 1]
    return row[d]


def _whitney_values(params: WhitneyParams, lo: int, hi: int) -> list:
    return [q_int(params.m * i + params.r) for i in range(lo, hi + 1)]


def w_star_symmetric(params: WhitneyParams, n: int, k: int) -> LaurentPoly:
    """W*_{m,r}[n,k]_q = h_{n-k}([r]_q, [m+r]_q, ..., [mk+r]_q)."""
    if not 0 <= k <= n:
        raise ValueError("requires 0 <= k <= n")
    return h_complete(_whitney_values(params, 0, k), n - k)


def tableau_sum(params: WhitneyParams, n: int, k: int,
                cap: int = DEFAULT_ENUMERATION_CAP) -> LaurentPoly:
    """Brute-force W*_{m,r}[n,k]_q: sum of column-weight products over all
    A-tableaux with n-k columns of lengths in {0..k}."""
    if not 0 <= k <= n:
        raise ValueError("requires 0 <= k <= n")
    count = comb(n, n - k)
    if count > cap:
        raise EnumerationTooLarge(f"{count} tableaux exceeds cap {cap}")
    weights = _whitney_values(params, 0, k)
    acc = ZERO
    for phi in a_tableaux(k, n - k):
        prod = ONE
        for c in phi.column_lengths:
            prod = prod * weights[c]
        acc = acc + prod
    return acc


def shifted_w_star(params: WhitneyParams, shift_k: int, s: int, t: int) -> LaurentPoly:
    """W*_{m,r+m*shift_k}[s, t-shift_k]_q, the parameter-shifted value that
    equals h_{s-t+shift_k} over the values indexed shift_k..t."""
    if shift_k < 0 or t < shift_k:
        raise ValueError("requires 0 <= shift_k <= t")
    shifted = WhitneyParams(params.m, params.r + params.m * shift_k)
    return w_star(shifted, s, t - shift_k)


def convolution_first(params: WhitneyParams, n: int, l: int, j: int) -> bool:
    """W*[n+1, l+j+1]_q = sum_{k=0}^{n} W*_{m,r}[k,l]_q W*_{m,r+m(l+1)}[n-k,j]_q?"""
    if n < 0 or l < 0 or j < 0:
        raise ValueError("n, l, j must be >= 0")
    lhs = w_star(params, n + 1, l + j + 1)
    shifted = WhitneyParams(params.m, params.r + params.m * (l + 1))
    rhs = ZERO
    for k in range(n + 1):
        rhs = rhs + w_star(params, k, l) * w_star(shifted, n - k, j)
    return lhs == rhs


def convolution_second(params: WhitneyParams, s: int, p: int, t: int) -> bool:
    """W*[s+p,t]_q = sum_{k=max(0,t-p)}^{min(t,s)} W*[s,k]_q W*_{m,r+mk}[p,t-k]_q?"""
    if s < 0 or p < 0 or t < 0:
        raise ValueError("s, p, t must be >= 0")
    lhs = w_star(params, s + p, t)
    rhs = ZERO
    for k in range(max(0, t - p), min(t, s) + 1):
        shifted = WhitneyParams(params.m, params.r + params.m * k)
        rhs = rhs + w_star(params, s, k) * w_star(shifted, p, t - k)
    return lhs == rhs
