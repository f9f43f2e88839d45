"""Certified comparison of sums of products of logarithms of rationals.

The dominance definitions compare quantities of the form
``c1*ln(a1)*ln(b1) + c2*ln(a2)*ln(b2) + ...`` with rational coefficients and
positive rational log arguments.  Over the prime-factor basis every such form
is a rational linear combination of 1, ln p and ln p * ln q, so two forms are
literally identical exactly when all basis coefficients cancel.  Equality is
therefore certified symbolically; a strict order is certified by interval
arithmetic with escalating precision.  When neither succeeds the comparison
refuses to answer rather than guess.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath
from sympy import factorint

LESS = -1
EQUAL = 0
GREATER = 1

DEFAULT_START_BITS = 128
DEFAULT_MAX_BITS = 1024


class ComparisonUncertain(ArithmeticError):
    """Intervals never separated and symbolic cancellation failed."""


@lru_cache(maxsize=None)
def _prime_vector(n: int) -> tuple[tuple[int, int], ...]:
    if n <= 0:
        raise ValueError("log arguments must be positive integers")
    return tuple(sorted(factorint(n).items()))


def _ratio_vector(num: int, den: int) -> dict[int, int]:
    vec: dict[int, int] = {}
    for p, e in _prime_vector(num):
        vec[p] = vec.get(p, 0) + e
    for p, e in _prime_vector(den):
        vec[p] = vec.get(p, 0) - e
    return {p: e for p, e in vec.items() if e}


class LogForm:
    """A rational linear combination of products of at most two prime logs.

    Basis keys are sorted tuples of primes of length 0, 1 or 2; the empty key
    is the rational constant term.  Forms add, subtract, scale by rationals
    and multiply (as long as the total log degree stays at most 2).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, ...], Fraction] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @staticmethod
    def zero() -> "LogForm":
        return LogForm()

    @staticmethod
    def rational(c) -> "LogForm":
        return LogForm({(): Fraction(c)})

    @staticmethod
    def ln(num: int, den: int = 1) -> "LogForm":
        """The form ln(num/den) for positive integers num, den."""
        vec = _ratio_vector(num, den)
        return LogForm({(p,): Fraction(e) for p, e in vec.items()})

    def __add__(self, other: "LogForm") -> "LogForm":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return LogForm(out)

    def __sub__(self, other: "LogForm") -> "LogForm":
        return self + (-other)

    def __neg__(self) -> "LogForm":
        return LogForm({k: -v for k, v in self.coeffs.items()})

    def scale(self, c) -> "LogForm":
        c = Fraction(c)
        return LogForm({k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other: "LogForm") -> "LogForm":
        out: dict[tuple[int, ...], Fraction] = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                key = tuple(sorted(k1 + k2))
                if len(key) > 2:
                    raise ValueError("log degree above 2 is not supported")
                out[key] = out.get(key, Fraction(0)) + v1 * v2
        return LogForm(out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((len(k) for k in self.coeffs), default=0)

    def eval_interval(self, prec: int) -> "mpmath.iv.mpf":
        """Enclosing interval at the given binary precision."""
        iv = mpmath.iv
        old = iv.prec
        try:
            iv.prec = prec
            total = iv.mpf(0)
            for key, c in sorted(self.coeffs.items()):
                term = iv.mpf(c.numerator) / c.denominator
                for p in key:
                    term = term * iv.log(iv.mpf(p))
                total = total + term
            return total
        finally:
            iv.prec = old

    def eval_mpf(self, prec: int = 200) -> mpmath.mpf:
        with mpmath.workprec(prec):
            total = mpmath.mpf(0)
            for key, c in sorted(self.coeffs.items()):
                term = mpmath.mpf(c.numerator) / c.denominator
                for p in key:
                    term *= mpmath.log(p)
                total += term
            return +total

    def sign(
        self,
        start_bits: int = DEFAULT_START_BITS,
        max_bits: int = DEFAULT_MAX_BITS,
    ) -> int:
        """-1, 0 or +1; zero only via symbolic cancellation.

        Raises :class:`ComparisonUncertain` if the coefficients do not cancel
        yet no interval up to ``max_bits`` excludes zero.
        """
        if self.is_zero():
            return EQUAL
        prec = start_bits
        while True:
            box = self.eval_interval(prec)
            if box.a > 0:
                return GREATER
            if box.b < 0:
                return LESS
            if prec >= max_bits:
                raise ComparisonUncertain(
                    f"form did not separate from zero at {prec} bits: {self}"
                )
            prec = min(2 * prec, max_bits)

    def __repr__(self):
        if not self.coeffs:
            return "LogForm(0)"
        parts = []
        for key, c in sorted(self.coeffs.items()):
            logs = "*".join(f"ln{p}" for p in key) or "1"
            parts.append(f"{c}*{logs}")
        return "LogForm(" + " + ".join(parts) + ")"


def certified_compare(
    x: LogForm,
    y: LogForm,
    start_bits: int = DEFAULT_START_BITS,
    max_bits: int = DEFAULT_MAX_BITS,
) -> int:
    """LESS / EQUAL / GREATER verdict on two forms, never a guess."""
    return (x - y).sign(start_bits, max_bits)


def log_ratio_as_fraction(num1: int, den1: int, num2: int, den2: int) -> Fraction | None:
    """ln(num1/den1) / ln(num2/den2) as an exact Fraction, or None if irrational.

    The ratio of two logarithms of rationals is rational exactly when the two
    ratios are multiplicatively dependent, i.e. their prime exponent vectors
    are parallel.
    """
    v1 = _ratio_vector(num1, den1)
    v2 = _ratio_vector(num2, den2)
    if not v2:
        raise ZeroDivisionError("denominator log is zero")
    if not v1:
        return Fraction(0)
    if set(v1) != set(v2):
        return None
    items = sorted(v2)
    ratio = Fraction(v1[items[0]], v2[items[0]])
    for p in items[1:]:
        if Fraction(v1[p], v2[p]) != ratio:
            return None
    return ratio
