"""
Exact scalars of the field Q(i)(√2).

Every coefficient in the operator algebras is an element a + b√2 with a, b
Gaussian rationals. Values are immutable and hashable so they can key
dictionaries and sit inside frozen containers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Any, Union

import sympy

ScalarLike = Union["Scalar", int, Fraction]

_SQRT2_FLOAT = math.sqrt(2.0)


def _frac(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Cannot convert {value!r} to an exact rational")


def _format_rational(value: Fraction) -> str:
    """Render a rational as the "p/q" string used in reports."""
    return f"{value.numerator}/{value.denominator}"


class Scalar:
    """Element (a_re + i a_im) + (b_re + i b_im)√2 with rational parts."""

    __slots__ = ("a_re", "a_im", "b_re", "b_im", "_hash")

    def __init__(
        self,
        a_re: Any = 0,
        a_im: Any = 0,
        b_re: Any = 0,
        b_im: Any = 0,
    ):
        object.__setattr__(self, "a_re", _frac(a_re))
        object.__setattr__(self, "a_im", _frac(a_im))
        object.__setattr__(self, "b_re", _frac(b_re))
        object.__setattr__(self, "b_im", _frac(b_im))
        object.__setattr__(
            self, "_hash", hash((self.a_re, self.a_im, self.b_re, self.b_im))
        )

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Scalar is immutable")

    # ------------------------------------------------------------------
    # Construction helpers
    # ------------------------------------------------------------------

    @classmethod
    def coerce(cls, value: ScalarLike) -> Scalar:
        """Return ``value`` as a Scalar (ints and Fractions are embedded)."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"Cannot coerce {type(value).__name__} to Scalar")

    @classmethod
    def gaussian(cls, re: Any, im: Any = 0) -> Scalar:
        """Gaussian rational re + i·im."""
        return cls(re, im)

    @classmethod
    def parse(cls, data: Any) -> Scalar:
        """Parse the JSON form ``[re, im]`` or ``[re, im, re√2, im√2]``."""
        if isinstance(data, (int, str)):
            return cls(_frac(data))
        if not isinstance(data, (list, tuple)) or len(data) not in (2, 4):
            raise ValueError(f"Invalid scalar encoding: {data!r}")
        parts = [_frac(part) for part in data]
        if len(parts) == 2:
            return cls(parts[0], parts[1])
        return cls(*parts)

    @classmethod
    def from_sympy(cls, expr: Any) -> Scalar:
        """
        Convert an exact sympy number of the form a + b√2 (a, b in Q(i)).

        Raises:
            ValueError: if the expression is not in the field
        """
        expanded = sympy.expand(sympy.sympify(expr))
        sqrt2 = sympy.sqrt(2)
        b_part = sympy.expand(expanded.coeff(sqrt2))
        a_part = sympy.expand(expanded - b_part * sqrt2)
        values = []
        for part in (a_part, b_part):
            re_part, im_part = sympy.re(part), sympy.im(part)
            if not (re_part.is_Rational and im_part.is_Rational):
                raise ValueError(f"{expr} is not an element of Q(i)(sqrt 2)")
            values.append(Fraction(int(re_part.p), int(re_part.q)))
            values.append(Fraction(int(im_part.p), int(im_part.q)))
        return cls(values[0], values[1], values[2], values[3])

    # ------------------------------------------------------------------
    # Predicates and conversions
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.a_re or self.a_im or self.b_re or self.b_im)

    def is_rational(self) -> bool:
        return not (self.a_im or self.b_re or self.b_im)

    def is_gaussian(self) -> bool:
        return not (self.b_re or self.b_im)

    def as_fraction(self) -> Fraction:
        """Return the value as a Fraction; only valid for rational scalars."""
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.a_re

    def conjugate(self) -> Scalar:
        """Complex conjugate (i -> -i, √2 fixed)."""
        return Scalar(self.a_re, -self.a_im, self.b_re, -self.b_im)

    def to_complex(self) -> complex:
        re = float(self.a_re) + float(self.b_re) * _SQRT2_FLOAT
        im = float(self.a_im) + float(self.b_im) * _SQRT2_FLOAT
        return complex(re, im)

    def to_sympy(self) -> sympy.Expr:
        a = sympy.Rational(self.a_re.numerator, self.a_re.denominator)
        a += sympy.I * sympy.Rational(self.a_im.numerator, self.a_im.denominator)
        b = sympy.Rational(self.b_re.numerator, self.b_re.denominator)
        b += sympy.I * sympy.Rational(self.b_im.numerator, self.b_im.denominator)
        return a + b * sympy.sqrt(2)

    def to_json(self) -> list[str]:
        parts = [_format_rational(self.a_re), _format_rational(self.a_im)]
        if self.b_re or self.b_im:
            parts += [_format_rational(self.b_re), _format_rational(self.b_im)]
        return parts

    def magnitude(self) -> float:
        return abs(self.to_complex())

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: ScalarLike) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(
            self.a_re + o.a_re,
            self.a_im + o.a_im,
            self.b_re + o.b_re,
            self.b_im + o.b_im,
        )

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self.a_re, -self.a_im, -self.b_re, -self.b_im)

    def __sub__(self, other: ScalarLike) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        # (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2 with a, b, c, d in Q(i)
        ac = _gmul(self.a_re, self.a_im, o.a_re, o.a_im)
        bd = _gmul(self.b_re, self.b_im, o.b_re, o.b_im)
        ad = _gmul(self.a_re, self.a_im, o.b_re, o.b_im)
        bc = _gmul(self.b_re, self.b_im, o.a_re, o.a_im)
        return Scalar(
            ac[0] + 2 * bd[0],
            ac[1] + 2 * bd[1],
            ad[0] + bc[0],
            ad[1] + bc[1],
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("Scalar division by zero")
        # 1/(a + b√2) = (a - b√2) / (a² - 2b²)
        a2 = _gmul(self.a_re, self.a_im, self.a_re, self.a_im)
        b2 = _gmul(self.b_re, self.b_im, self.b_re, self.b_im)
        norm_re, norm_im = a2[0] - 2 * b2[0], a2[1] - 2 * b2[1]
        denom = norm_re * norm_re + norm_im * norm_im
        inv_re, inv_im = norm_re / denom, -norm_im / denom
        conj = Scalar(self.a_re, self.a_im, -self.b_re, -self.b_im)
        return conj * Scalar(inv_re, inv_im)

    def __truediv__(self, other: ScalarLike) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> Scalar:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # Comparison and display
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return (
                self.a_re == other.a_re
                and self.a_im == other.a_im
                and self.b_re == other.b_re
                and self.b_im == other.b_im
            )
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and self.a_re == other
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        a = _gaussian_text(self.a_re, self.a_im)
        if not (self.b_re or self.b_im):
            return a
        b = _gaussian_text(self.b_re, self.b_im)
        if not (self.a_re or self.a_im):
            return f"{b}*sqrt2"
        return f"({a} + {b}*sqrt2)"


def _gmul(
    a_re: Fraction, a_im: Fraction, b_re: Fraction, b_im: Fraction
) -> tuple[Fraction, Fraction]:
    return a_re * b_re - a_im * b_im, a_re * b_im + a_im * b_re


def _gaussian_text(re: Fraction, im: Fraction) -> str:
    if not im:
        return str(re)
    if not re:
        return f"{im}i" if im.denominator == 1 else f"({im})i"
    sign = "+" if im > 0 else "-"
    return f"({re}{sign}{abs(im)}i)"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)  # noqa: E741
HALF = Scalar(Fraction(1, 2))
SQRT2 = Scalar(0, 0, 1)
INV_SQRT2 = Scalar(0, 0, Fraction(1, 2))
