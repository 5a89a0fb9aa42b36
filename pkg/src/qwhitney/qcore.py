"""Exact arithmetic foundation: Laurent polynomials in q, q-integers,
q-factorials, Gaussian binomials, and q-binomial inversion.

Every value in the library is either a :class:`LaurentPoly`, a
:class:`PolyFraction` (an unreduced quotient of two Laurent polynomials),
or an exact rational (``fractions.Fraction``).  Nothing here ever touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


class NonExactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class DivisionByZero(ZeroDivisionError):
    """Division by the zero polynomial."""


class EvalAtZero(ValueError):
    """Evaluation at q=0 is not defined for Laurent polynomials."""


class DenominatorVanishes(ZeroDivisionError):
    """A PolyFraction denominator evaluated to zero."""


class LaurentPoly:
    """Sparse Laurent polynomial in q with arbitrary-precision integer
    coefficients.

    Terms map exponent (possibly negative) to a nonzero coefficient; zero
    coefficients are pruned on construction, so equality and hashing are
    plain structural operations on the term dict.  Instances are immutable;
    all operations return new values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        object.__setattr__(self, "_terms",
                           {int(e): int(c) for e, c in dict(terms).items() if c != 0})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-other if isinstance(other, LaurentPoly) else LaurentPoly.const(-other))

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.const(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by the monomial q^e."""
        return LaurentPoly({k + e: c for k, c in self._terms.items()})

    def stretch(self, b: int) -> "LaurentPoly":
        """Substitute q -> q^b (b >= 1)."""
        if b < 1:
            raise ValueError("stretch factor must be positive")
        return LaurentPoly({k * b: c for k, c in self._terms.items()})

    def eval(self, a: Fraction) -> Fraction:
        a = Fraction(a)
        if a == 0:
            raise EvalAtZero("cannot evaluate a Laurent polynomial at q=0")
        return sum((c * a ** e for e, c in self._terms.items()), Fraction(0))

    def to_pairs(self) -> list:
        """JSON form: sorted [exponent, coefficient-as-decimal-string] pairs."""
        return [[e, str(self._terms[e])] for e in sorted(self._terms)]

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in pairs})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                term = str(abs(c))
            else:
                qpow = "q" if e == 1 else f"q^{e}"
                term = qpow if abs(c) == 1 else f"{abs(c)}*{qpow}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"


Q = LaurentPoly.monomial(1)
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()


class PolyFraction:
    """Unreduced quotient num/den of Laurent polynomials.

    Never reduced to lowest terms; equality is cross-multiplication
    (a/b == c/d  iff  a*d == c*b).  The denominator is never zero.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = None):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if den is None:
            den = ONE
        elif isinstance(den, int):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise DivisionByZero("PolyFraction denominator is zero")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("PolyFraction is immutable")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = _as_fraction(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("PolyFraction is unhashable (equality is not structural)")

    def __neg__(self) -> "PolyFraction":
        return PolyFraction(-self.num, self.den)

    def __add__(self, other) -> "PolyFraction":
        other = _as_fraction(other)
        if other is None:
            return NotImplemented
        return PolyFraction(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "PolyFraction":
        other = _as_fraction(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "PolyFraction":
        other = _as_fraction(other)
        if other is None:
            return NotImplemented
        return PolyFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "PolyFraction":
        if self.num.is_zero():
            raise DivisionByZero("reciprocal of zero")
        return PolyFraction(self.den, self.num)

    def as_laurent(self) -> LaurentPoly:
        """Collapse to a Laurent polynomial; raises NonExactDivision if the
        denominator does not divide the numerator exactly."""
        return laurent_exact_div(self.num, self.den)

    def eval(self, a: Fraction) -> Fraction:
        d = self.den.eval(a)
        if d == 0:
            raise DenominatorVanishes(f"denominator vanishes at q={a}")
        return self.num.eval(a) / d

    def __repr__(self) -> str:
        return f"PolyFraction({self.num!r}, {self.den!r})"


def _as_fraction(x):
    if isinstance(x, PolyFraction):
        return x
    if isinstance(x, (LaurentPoly, int)):
        return PolyFraction(x)
    return None


def q_int(n: int) -> LaurentPoly:
    """The q-integer [n]_q = (1-q^n)/(1-q) as a Laurent polynomial.

    For n >= 0 this is 1 + q + ... + q^(n-1); for n < 0 it is
    -q^n - q^(n+1) - ... - q^(-1), the unique Laurent extension.
    """
    if n >= 0:
        return LaurentPoly({e: 1 for e in range(n)})
    return LaurentPoly({e: -1 for e in range(n, 0)})


def q_int_base(n: int, b: int) -> LaurentPoly:
    """[n]_{q^b}."""
    return q_int(n).stretch(b)


def q_factorial(n: int) -> LaurentPoly:
    """[n]_q! = [n]_q [n-1]_q ... [1]_q; empty product 1 for n=0."""
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


def q_factorial_base(n: int, b: int) -> LaurentPoly:
    """[n]_{q^b}!."""
    return q_factorial(n).stretch(b)


def laurent_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division in the Laurent ring: the c with a = b*c.

    Both operands are shifted down to ordinary polynomials, then eliminated
    coefficient by coefficient from the lowest exponent upward.  Raises
    NonExactDivision if no exact quotient exists, DivisionByZero if b = 0.
    """
    if b.is_zero():
        raise DivisionByZero("division by zero polynomial")
    if a.is_zero():
        return ZERO
    offset = a.min_exp() - b.min_exp()
    da = a.max_exp() - a.min_exp()
    db = b.max_exp() - b.min_exp()
    if da < db:
        raise NonExactDivision("divisor support exceeds dividend support")
    rem = [a.coeff(a.min_exp() + i) for i in range(da + 1)]
    bb = [b.coeff(b.min_exp() + i) for i in range(db + 1)]
    lead = bb[0]
    quot = [0] * (da - db + 1)
    for i in range(len(quot)):
        if rem[i] == 0:
            continue
        q_, r_ = divmod(rem[i], lead)
        if r_ != 0:
            raise NonExactDivision("remainder in coefficient elimination")
        quot[i] = q_
        for j, bc in enumerate(bb):
            rem[i + j] -= q_ * bc
    if any(rem):
        raise NonExactDivision("nonzero remainder")
    return LaurentPoly({offset + i: c for i, c in enumerate(quot)})


def q_binomial(n: int, k: int, base_exponent: int = 1) -> LaurentPoly:
    """Gaussian binomial coefficient [n k] in the variable q^base_exponent.

    Computed by exact division of q-factorials; zero for k < 0 or k > n.
    """
    if n < 0:
        raise ValueError("q_binomial requires n >= 0")
    if k < 0 or k > n:
        return ZERO
    num = q_factorial(n)
    den = q_factorial(k) * q_factorial(n - k)
    return laurent_exact_div(num, den).stretch(base_exponent)


def q_falling(t: int, r: int, m: int, k: int) -> PolyFraction:
    """The generalized falling factor [t-r|m]_{k,q} = prod_{i<k} [t-r-im]_q.

    Arguments t-r-im may be negative; the result is a PolyFraction with
    denominator 1 so it composes with series code.
    """
    out = ONE
    for i in range(k):
        out = out * q_int(t - r - i * m)
        if out.is_zero():
            break
    return PolyFraction(out)


def eval_q(p, a) -> Fraction:
    """Exact evaluation of a LaurentPoly or PolyFraction at rational q=a."""
    a = Fraction(a)
    if isinstance(p, (LaurentPoly, PolyFraction)):
        return p.eval(a)
    raise TypeError(f"cannot evaluate {type(p).__name__}")


def q_binomial_transform(g, n: int):
    """Forward transform f_n = sum_k [n k]_q g_k, for n' = 0..n."""
    g = list(g)
    return [sum((q_binomial(j, k) * g[k] for k in range(j + 1)), ZERO)
            for j in range(n + 1)]


def q_binomial_inverse(f, n: int):
    """Inverse transform g_n = sum_k (-1)^(n-k) q^C(n-k,2) [n k]_q f_k."""
    f = list(f)
    out = []
    for j in range(n + 1):
        acc = ZERO
        for k in range(j + 1):
            sign = -1 if (j - k) % 2 else 1
            acc = acc + q_binomial(j, k).shift(comb(j - k, 2)) * f[k] * sign
        out.append(acc)
    return out


def gauss_product_check(n: int) -> bool:
    """Does sum_k q^C(k,2) [n k]_q x^k equal (1+x)(1+xq)...(1+xq^(n-1))?

    Both sides are compared as coefficient lists in x.
    """
    lhs = [q_binomial(n, k).shift(comb(k, 2)) for k in range(n + 1)]
    rhs = [ONE]
    for i in range(n):
        qi = LaurentPoly.monomial(i)
        new = [ZERO] * (len(rhs) + 1)
        for d, c in enumerate(rhs):
            new[d] = new[d] + c
            new[d + 1] = new[d + 1] + c * qi
        rhs = new
    return lhs == rhs
