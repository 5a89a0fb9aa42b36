"""q-difference operator and the explicit (Newton interpolation) route.

The operator of order k with step h and base q^b is the product
prod_{j=0}^{k-1} (E_h - q^(bj)), E_h the shift f(x) -> f(x+h).  Applied to
f(x) = [x+c]_q^n at integer x everything stays inside the Laurent ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .qcore import (LaurentPoly, ZERO, laurent_exact_div, q_binomial,
                    q_factorial_base, q_int)
from .whitney import WhitneyParams


@dataclass(frozen=True)
class QPowerFunction:
    """f(x) = [x + offset]_q ** power, evaluated at integer x only."""

    offset: int
    power: int

    def __post_init__(self):
        if self.power < 0:
            raise ValueError("power must be >= 0")

    def evaluate(self, x: int) -> LaurentPoly:
        return q_int(x + self.offset) ** self.power


def q_diff_recursive(f: QPowerFunction, qbase_exp: int, h: int, k: int,
                     x: int) -> LaurentPoly:
    """Order-k q-difference of f at x via the operator product itself.

    Peels one factor per recursion level:
    D^k f(x) = D^(k-1) f(x+h) - q^(b(k-1)) D^(k-1) f(x); D^0 is the identity.
    """
    if k < 0:
        raise ValueError("operator order must be >= 0")
    if k == 0:
        return f.evaluate(x)
    upper = q_diff_recursive(f, qbase_exp, h, k - 1, x + h)
    lower = q_diff_recursive(f, qbase_exp, h, k - 1, x)
    return upper - lower.shift(qbase_exp * (k - 1))


def q_diff_explicit(f: QPowerFunction, qbase_exp: int, h: int, k: int,
                    x: int) -> LaurentPoly:
    """Order-k q-difference of f at x via the alternating binomial sum

        sum_{j=0}^{k} (-1)^(k-j) q^(b C(k-j,2)) [k j]_{q^b} f(x+jh).
    """
    if k < 0:
        raise ValueError("operator order must be >= 0")
    acc = ZERO
    for j in range(k + 1):
        sign = -1 if (k - j) % 2 else 1
        term = q_binomial(k, j, qbase_exp).shift(qbase_exp * comb(k - j, 2))
        acc = acc + term * f.evaluate(x + j * h) * sign
    return acc


def _normalizer(params: WhitneyParams, k: int) -> LaurentPoly:
    """[k]_{q^m}! * [m]_q^k, the exact divisor of the k-th difference."""
    return q_factorial_base(k, params.m) * q_int(params.m) ** k


def whitney_explicit(params: WhitneyParams, n: int, k: int) -> LaurentPoly:
    """W_{m,r}[n,k]_q from the explicit formula

        (1/([k]_{q^m}! [m]_q^k)) sum_j (-1)^(k-j) q^(m C(k-j,2))
                                        [k j]_{q^m} [jm+r]_q^n.

    The division is exact; a NonExactDivision here is a bug, not bad input.
    """
    if not 0 <= k <= n:
        raise ValueError("whitney_explicit requires 0 <= k <= n")
    m, r = params.m, params.r
    acc = ZERO
    for j in range(k + 1):
        sign = -1 if (k - j) % 2 else 1
        term = q_binomial(k, j, m).shift(m * comb(k - j, 2))
        acc = acc + term * q_int(j * m + r) ** n * sign
    return laurent_exact_div(acc, _normalizer(params, k))


def newton_coefficients(params: WhitneyParams, n: int, kmax: int = None) -> list:
    """Interpolation coefficients of f_q(x) = [x+r]_q^n on nodes 0, m, 2m, ...

    The k-th coefficient is D^k_{q^m,m} f_q(0) / ([k]_{q^m}! [m]_q^k) and
    equals W_{m,r}[n,k]_q; this route goes through q_diff_explicit.
    """
    if kmax is None:
        kmax = n
    if kmax > n:
        raise ValueError("kmax must be <= n")
    f = QPowerFunction(params.r, n)
    out = []
    for k in range(kmax + 1):
        diff = q_diff_explicit(f, params.m, params.m, k, 0)
        out.append(laurent_exact_div(diff, _normalizer(params, k)))
    return out
