"""Intersection numbers on a symmetric product of a curve.

Classes on the d-th symmetric product X^(d) of a genus-g curve are written as
truncated polynomials in the tautological classes x (the divisor p + X^(d-1))
and theta (the pullback of the theta divisor).  Top-degree monomials integrate
by the classical rule

    integral over X^(d) of x^(d-k) theta^k  =  g! / (g-k)!   (0 if k > g),

which reproduces the familiar degree-1 and degree-2 values (theta on X^(1)
integrates to g, theta^2 on X^(2) to g(g-1)).

The headline computation: on X^(4) for g = 5, the locus of divisors moving in
a pencil has class (theta^2 - 2 x theta)/2, the image of the doubling map
(p, q) -> 2p + 2q has class 4(32 x^2 + theta^2 - 10 x theta), their product
expands to 104 x^2 theta^2 + 2 theta^4 - 24 x theta^3 - 128 x^3 theta, and
the integral is exactly 240.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .errors import DomainMismatchError, VerificationError


@dataclass(frozen=True)
class XThetaClass:
    """A truncated polynomial in x and theta on X^(d) for a genus-g curve.

    ``coeffs`` maps (i, j) for the monomial x^i theta^j, i + j <= d, to exact
    rationals.  ``truncated`` records whether a product ever dropped terms of
    total degree above d (those do not contribute to integrals but dropping
    them is flagged, never silent).
    """

    g: int
    d: int
    coeffs: Mapping[tuple[int, int], Fraction]
    truncated: bool = False

    def __post_init__(self) -> None:
        clean = {}
        for (i, j), c in self.coeffs.items():
            if i < 0 or j < 0 or i + j > self.d:
                raise ValueError(f"monomial x^{i} theta^{j} exceeds degree {self.d}")
            c = Fraction(c)
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    def _check(self, other: "XThetaClass") -> None:
        if (self.g, self.d) != (other.g, other.d):
            raise DomainMismatchError("classes live on different symmetric products")

    def __add__(self, other: "XThetaClass") -> "XThetaClass":
        self._check(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, Fraction(0)) + c
        return XThetaClass(self.g, self.d, out, self.truncated or other.truncated)

    def __sub__(self, other: "XThetaClass") -> "XThetaClass":
        self._check(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, Fraction(0)) - c
        return XThetaClass(self.g, self.d, out, self.truncated or other.truncated)

    def __mul__(self, other) -> "XThetaClass":
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            return XThetaClass(
                self.g, self.d, {k: c * scalar for k, c in self.coeffs.items()}, self.truncated
            )
        self._check(other)
        out: dict = {}
        dropped = False
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i + j > self.d:
                    dropped = True
                    continue
                key = (i, j)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return XThetaClass(self.g, self.d, out, self.truncated or other.truncated or dropped)

    __rmul__ = __mul__

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.coeffs.get((i, j), Fraction(0))

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        ordered = sorted(self.coeffs, key=lambda k: (k[0] + k[1], k[0]), reverse=True)
        pieces = []
        for i, j in ordered:
            c = self.coeffs[(i, j)]
            mono = "*".join(
                part
                for part in (
                    "x" if i == 1 else f"x^{i}" if i else "",
                    "theta" if j == 1 else f"theta^{j}" if j else "",
                )
                if part
            )
            text = str(abs(c))
            body = mono if text == "1" and mono else (f"{text}*{mono}" if mono else text)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = body if sign == "+" else f"-{body}"
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_text


def monomial_value(g: int, d: int, i: int, j: int) -> int:
    """Integral of x^i theta^j over X^(d) when i + j = d, else 0."""
    if i + j != d:
        return 0
    return math.perm(g, j)


def eval_top(c: XThetaClass) -> Fraction:
    """Integrate the top-degree part of a class over X^(d)."""
    total = Fraction(0)
    for (i, j), coeff in c.coeffs.items():
        if i + j == c.d:
            total += coeff * monomial_value(c.g, c.d, i, j)
    return total


def xtheta(g: int, d: int, coeffs: Mapping[tuple[int, int], object]) -> XThetaClass:
    return XThetaClass(g, d, {k: Fraction(v) for k, v in coeffs.items()})


def class_c14() -> XThetaClass:
    """Class on X^(4), g = 5, of divisors moving in a pencil: (theta^2 - 2 x theta)/2."""
    return xtheta(5, 4, {(0, 2): Fraction(1, 2), (1, 1): -1})


def class_delta2() -> XThetaClass:
    """Class on X^(4), g = 5, of the locus of divisors 2p + 2q:
    4(32 x^2 + theta^2 - 10 x theta)."""
    return xtheta(5, 4, {(2, 0): 128, (0, 2): 4, (1, 1): -40})


EXPECTED_PRODUCT = {(2, 2): Fraction(104), (0, 4): Fraction(2), (1, 3): Fraction(-24), (3, 1): Fraction(-128)}


def product_and_eval() -> tuple[XThetaClass, Fraction]:
    """Expand class_c14 * class_delta2 and integrate; re-checks the expansion
    term by term and the final value 240 before returning them."""
    product = class_c14() * class_delta2()
    if dict(product.coeffs) != EXPECTED_PRODUCT:
        raise VerificationError(f"unexpected expansion: {product}")
    value = eval_top(product)
    if value != 240:
        raise VerificationError(f"unexpected intersection number: {value}")
    return product, value
