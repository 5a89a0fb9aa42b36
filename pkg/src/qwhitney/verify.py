"""Identity verification suites.

Each suite sweeps a parameter grid and cross-checks two or more independent
computation routes; a cell failure records the witnessing parameters and the
two mismatched values.  Grids default to the ranges each identity is claimed
to have been checked on, and can be overridden from a JSON config.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import hankel as hk
from . import qcalculus, series, symm
from .qcore import PolyFraction, q_factorial
from .whitney import WhitneyParams, w, w_horizontal, w_star, w_vertical

SUITES = ("recurrences", "explicit", "genfun", "symmetric", "convolution",
          "hankel", "all")

DEFAULT_GRID = {
    "m": [1, 2, 3],
    "r": [0, 1, 2],
    "nmax": 9,
    "nmax_tableau": 8,
    "nmax_genfun": 12,
    "nmax_egf": 10,
    "nmax_horizontal": 8,
    "kmax_genfun": 5,
    "t": list(range(-3, 13)),
    "qvals": ["2", "1/2", "3/5", "-2"],
    "nmax_conv": 6,
    "spmax_conv": 5,
    "smax_hankel": 3,
    "nmax_hankel": 4,
}


@dataclass
class Failure:
    params: dict
    identity: str
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"params": self.params, "identity": self.identity,
                "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class SuiteResult:
    suite: str
    cells: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, params: dict, identity: str,
              lhs="", rhs=""):
        self.cells += 1
        if not condition:
            self.failures.append(Failure(params, identity, str(lhs), str(rhs)))

    def to_json(self) -> dict:
        return {"suite": self.suite, "cells": self.cells,
                "failures": [f.to_json() for f in self.failures]}


def _grid(overrides: dict = None) -> dict:
    g = dict(DEFAULT_GRID)
    if overrides:
        g.update(overrides)
    return g


def _param_cells(g):
    return [WhitneyParams(m, r) for m in g["m"] for r in g["r"]]


def suite_recurrences(grid: dict = None) -> SuiteResult:
    """Vertical and horizontal recurrences against the triangular route."""
    g = _grid(grid)
    res = SuiteResult("recurrences")
    for p in _param_cells(g):
        base = {"m": p.m, "r": p.r}
        for n in range(g["nmax"] + 1):
            for k in range(n + 1):
                expected = w(p, n, k)
                if n >= 1 and k >= 1:
                    got = w_vertical(p, n - 1, k - 1)
                    res.check(got == expected, {**base, "n": n, "k": k},
                              "vertical", got, expected)
                got = w_horizontal(p, n, k)
                res.check(got == expected, {**base, "n": n, "k": k},
                          "horizontal", got, expected)
    return res


def suite_explicit(grid: dict = None) -> SuiteResult:
    """Explicit q-difference formula and Newton coefficients vs recurrence."""
    g = _grid(grid)
    res = SuiteResult("explicit")
    for p in _param_cells(g):
        base = {"m": p.m, "r": p.r}
        for n in range(g["nmax"] + 1):
            newton = qcalculus.newton_coefficients(p, n)
            for k in range(n + 1):
                expected = w(p, n, k)
                got = qcalculus.whitney_explicit(p, n, k)
                res.check(got == expected, {**base, "n": n, "k": k},
                          "explicit", got, expected)
                res.check(newton[k] == expected, {**base, "n": n, "k": k},
                          "newton", newton[k], expected)
    return res


def suite_genfun(grid: dict = None) -> SuiteResult:
    """Rational GF, EGF, and the horizontal generating function."""
    g = _grid(grid)
    res = SuiteResult("genfun")
    qvals = [Fraction(s) for s in g["qvals"]]
    for p in _param_cells(g):
        base = {"m": p.m, "r": p.r}
        nmax = g["nmax_genfun"]
        for k in range(min(g["kmax_genfun"], nmax) + 1):
            psi = series.rational_gf(p, k, nmax)
            for n in range(nmax + 1):
                expected = w(p, n, k)
                res.check(psi[n] == expected, {**base, "n": n, "k": k},
                          "rational_gf", psi[n].num, expected)
        negf = g["nmax_egf"]
        for k in range(min(g["kmax_genfun"], negf) + 1):
            e = series.egf(p, k, negf)
            for n in range(negf + 1):
                # coefficient of z^n must equal W[n,k]/[n]_q! (cross-multiplied)
                expected = PolyFraction(w(p, n, k), q_factorial(n))
                res.check(e[n] == expected, {**base, "n": n, "k": k}, "egf",
                          e[n].num, expected.num)
        for n in range(g["nmax_horizontal"] + 1):
            for t in g["t"]:
                for qv in qvals:
                    ok = series.horizontal_gf_check(p, n, t, qv)
                    res.check(ok, {**base, "n": n, "t": t, "q": str(qv)},
                              "horizontal_gf")
    return res


def suite_symmetric(grid: dict = None) -> SuiteResult:
    """Symmetric-function and tableau routes against the normalized values."""
    g = _grid(grid)
    res = SuiteResult("symmetric")
    for p in _param_cells(g):
        base = {"m": p.m, "r": p.r}
        for n in range(g["nmax_tableau"] + 1):
            for k in range(n + 1):
                expected = w_star(p, n, k)
                got = symm.w_star_symmetric(p, n, k)
                res.check(got == expected, {**base, "n": n, "k": k},
                          "h_complete", got, expected)
                got = symm.tableau_sum(p, n, k)
                res.check(got == expected, {**base, "n": n, "k": k},
                          "tableau", got, expected)
    return res


def suite_convolution(grid: dict = None) -> SuiteResult:
    """The two convolution-type identities for the normalized values."""
    g = _grid(grid)
    res = SuiteResult("convolution")
    for p in _param_cells(g):
        base = {"m": p.m, "r": p.r}
        nmax = g["nmax_conv"]
        for n in range(nmax + 1):
            for l in range(n + 1):
                for j in range(n - l + 1):
                    res.check(symm.convolution_first(p, n, l, j),
                              {**base, "n": n, "l": l, "j": j},
                              "convolution_first")
        sp = g["spmax_conv"]
        for s in range(sp + 1):
            for pp in range(sp + 1):
                for t in range(s + pp + 1):
                    res.check(symm.convolution_second(p, s, pp, t),
                              {**base, "s": s, "p": pp, "t": t},
                              "convolution_second")
    return res


def suite_hankel(grid: dict = None) -> SuiteResult:
    """Hankel transform, LU factorization, and classical q=1 corollary."""
    g = _grid(grid)
    res = SuiteResult("hankel")
    for p in _param_cells(g):
        base = {"m": p.m, "r": p.r}
        for s in range(g["smax_hankel"] + 1):
            for n in range(g["nmax_hankel"] + 1):
                spec = hk.HankelSpec(p, s, n)
                res.check(hk.hankel_transform_check(spec),
                          {**base, "s": s, "n": n}, "hankel_transform")
                res.check(hk.lu_check(spec),
                          {**base, "s": s, "n": n}, "lu_factorization")
                res.check(hk.classical_hankel_check(p.m, p.r, s, n),
                          {**base, "s": s, "n": n}, "classical_hankel")
    return res


_SUITE_FUNCS = {
    "recurrences": suite_recurrences,
    "explicit": suite_explicit,
    "genfun": suite_genfun,
    "symmetric": suite_symmetric,
    "convolution": suite_convolution,
    "hankel": suite_hankel,
}


def run_suite(name: str, grid: dict = None) -> list:
    """Run one suite (or all); returns a list of SuiteResult."""
    if name == "all":
        return [fn(grid) for fn in _SUITE_FUNCS.values()]
    if name not in _SUITE_FUNCS:
        raise KeyError(f"unknown suite {name!r}")
    return [_SUITE_FUNCS[name](grid)]
