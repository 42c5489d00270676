"""Integer polynomials, torus-knot Alexander polynomials and resultants.

The order of H_1 of the n-fold cyclic branched cover of a knot with
Alexander polynomial D is |Res(D, t^n - 1)|, a zero resultant meaning
infinite H_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .homology import INFINITE, determinant


class PolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    """Exact integer polynomial; ``coeffs[i]`` is the coefficient of t^i."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * t + c
        return out

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return IntPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m))

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def divmod(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Division by a polynomial with leading coefficient +-1."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise PolynomialError("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * lead
            if c:
                quot[k - dq] = c
                for j, y in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * y
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise PolynomialError(f"{other} does not divide {self}")
        return q

    def __str__(self):
        return format_polynomial(self)


def format_polynomial(f: IntPolynomial) -> str:
    """Ascending-degree rendering, e.g. ``-1 + 3*t - t^2``."""
    terms = []
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) or "0"


def t_power_minus_one(n: int) -> IntPolynomial:
    return IntPolynomial.monomial(n) - IntPolynomial([1])


def word_polynomial(w) -> IntPolynomial:
    """Coefficient of t^i is the exponent sum of x_i in ``w``."""
    return IntPolynomial(w.exponent_sums())


def torus_alexander(p: int, q: int) -> IntPolynomial:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for a torus knot T(p, q)."""
    if p < 2 or q < 2:
        raise PolynomialError("need p, q >= 2")
    if gcd(p, q) != 1:
        raise PolynomialError(f"T({p},{q}) is a link with {gcd(p, q)} components, not a knot")
    num = t_power_minus_one(p * q) * t_power_minus_one(1)
    return num.exact_div(t_power_minus_one(p) * t_power_minus_one(q))


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return rows


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Determinant of the Sylvester matrix, computed exactly."""
    if f.is_zero() and g.is_zero():
        raise PolynomialError("resultant of two zero polynomials is undefined")
    if f.is_zero() or g.is_zero():
        return 0
    return determinant(sylvester_matrix(f, g))


def branched_cover_order(delta: IntPolynomial, n: int):
    """|H_1| of the n-fold cyclic branched cover, or INFINITE."""
    if n < 1:
        raise PolynomialError("cover degree must be positive")
    r = abs(resultant(delta, t_power_minus_one(n)))
    return INFINITE if r == 0 else r
