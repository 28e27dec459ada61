"""Exact complex-rational scalars.

Every quantity in the subspace layer is a Gaussian rational: a complex
number whose real and imaginary parts are arbitrary-precision rationals.
The field is closed under all constructions used here (intersections,
orthocomplements, projections, witness bases), so equality tests are exact
and no tolerances exist anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


def _frac(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """A complex number re + im*i with exact rational parts.

    `Fraction` keeps both parts in lowest terms with positive denominators,
    so equality of values is equality of representations.
    """

    re: Fraction
    im: Fraction

    def __add__(self, other: "GaussianRational | RationalLike") -> "GaussianRational":
        o = as_gaussian(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: "GaussianRational | RationalLike") -> "GaussianRational":
        o = as_gaussian(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: "GaussianRational | RationalLike") -> "GaussianRational":
        return as_gaussian(other) - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational | RationalLike") -> "GaussianRational":
        o = as_gaussian(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "GaussianRational | RationalLike") -> "GaussianRational":
        o = as_gaussian(other)
        d = o.norm_sq()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other: "GaussianRational | RationalLike") -> "GaussianRational":
        return as_gaussian(other) / self

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """|z|^2 = re^2 + im^2; a nonnegative rational, zero iff z = 0."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        im = f"{self.im}i" if abs(self.im) != 1 else ("i" if self.im > 0 else "-i")
        if not self.re:
            return im
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{im}"


def as_gaussian(x: "GaussianRational | RationalLike") -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(_frac(x), Fraction(0))


def gr(re: RationalLike = 0, im: RationalLike = 0) -> GaussianRational:
    """Shorthand constructor from ints or Fractions."""
    return GaussianRational(_frac(re), _frac(im))


ZERO = gr(0)
ONE = gr(1)
I = gr(0, 1)
