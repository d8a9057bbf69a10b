"""Dense univariate polynomials and rational functions with Fraction coefficients.

Plumbing for Molien series and Hilbert-series reconstruction.  Everything is
exact; rational functions are kept reduced with a monic denominator so equal
functions have equal representations.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Polynomial over Q, coefficient list in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = _strip([Fraction(c) for c in coeffs])

    @classmethod
    def zero(cls) -> "Poly":
        return cls([])

    @classmethod
    def one(cls) -> "Poly":
        return cls([1])

    @classmethod
    def monomial(cls, deg: int, coeff=1) -> "Poly":
        return cls([0] * deg + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1 by convention."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self or not other:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly([a * c for a in self.coeffs])

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.coeffs[-1]
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i]:
                f = rem[i] / lead
                q[i - d] = f
                for j, c in enumerate(other.coeffs):
                    rem[i - d + j] -= f * c
        return Poly(q), Poly(rem)

    def monic(self) -> "Poly":
        return self.scale(1 / self.coeffs[-1]) if self else self

    def is_palindromic(self) -> bool:
        return bool(self) and self.coeffs == tuple(reversed(self.coeffs))

    def pow(self, k: int) -> "Poly":
        out = Poly.one()
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self) -> str:
        if not self:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                t = "t" if i == 1 else f"t^{i}"
                parts.append(t if c == 1 else f"-{t}" if c == -1 else f"{c}*{t}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic() if a else a


class RatFunc:
    """Reduced rational function num/den over Q with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if g and g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.coeffs[-1]
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p, Poly.one())

    def __eq__(self, other) -> bool:
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def scale(self, c) -> "RatFunc":
        return RatFunc(self.num.scale(c), self.den)

    def degree_difference(self) -> int:
        """deg(num) - deg(den); the a-invariant when this is a Hilbert series."""
        if not self.num:
            raise InputError("degree difference of the zero function")
        return self.num.degree - self.den.degree

    def series_normal_form(self) -> tuple[Poly, Poly]:
        """(num, den) scaled so den(0) = 1; the power-series presentation.

        The internal representation keeps the denominator monic instead, which
        can flip both signs relative to forms like (1+t^2)/(1-t^2)^3.
        """
        d0 = self.den.coeff(0)
        if d0 == 0:
            return self.num, self.den
        return self.num.scale(1 / d0), self.den.scale(1 / d0)

    def series_coeffs(self, count: int) -> list[Fraction]:
        """First `count` Taylor coefficients at t=0; den(0) must be nonzero."""
        d0 = self.den.coeff(0)
        if d0 == 0:
            raise InputError("rational function has a pole at t=0")
        out = []
        for k in range(count):
            acc = self.num.coeff(k)
            for j in range(1, min(k, self.den.degree) + 1):
                acc -= self.den.coeff(j) * out[k - j]
            out.append(acc / d0)
        return out

    def __repr__(self) -> str:
        return f"({self.num!r})/({self.den!r})"


def det_poly_matrix(entries: list[list[Poly]]) -> Poly:
    """Determinant of a square matrix of polynomials by minor expansion.

    Memoized on column subsets; fine for the small matrix sizes that arise
    from finite matrix groups.
    """
    n = len(entries)
    if n == 0:
        return Poly.one()
    cache: dict[tuple[int, ...], Poly] = {}

    def minor(cols: tuple[int, ...]) -> Poly:
        if not cols:
            return Poly.one()
        if cols in cache:
            return cache[cols]
        row = n - len(cols)
        acc = Poly.zero()
        for k, c in enumerate(cols):
            e = entries[row][c]
            if e:
                sub = minor(cols[:k] + cols[k + 1 :])
                term = e * sub
                acc = acc + (term if k % 2 == 0 else -term)
        cache[cols] = acc
        return acc

    return minor(tuple(range(n)))


def reconstruct_rational(coeffs, den: Poly) -> RatFunc:
    """Recover num/den from a truncated series and a candidate denominator.

    pre: len(coeffs) exceeds deg(den) plus the true numerator degree.
    post: multiplying the series back by den leaves no coefficient in the
    trailing deg(den) positions of the window; otherwise the window was too
    short or the denominator wrong, and that is an error.
    """
    coeffs = [Fraction(c) for c in coeffs]
    w = len(coeffs)
    prod = [Fraction(0)] * w
    for j, dc in enumerate(den.coeffs):
        if dc:
            for k in range(w - j):
                prod[j + k] += dc * coeffs[k]
    top = -1
    for i, c in enumerate(prod):
        if c:
            top = i
    if top > w - 1 - den.degree:
        raise InputError(
            "series window too short (or wrong denominator) for reconstruction: "
            f"nonzero product coefficient at degree {top}, window {w}"
        )
    return RatFunc(Poly(prod[: top + 1]), den)
