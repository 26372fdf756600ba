"""Exact polynomial and rational-function arithmetic over the rationals.

Univariate polynomials are coefficient tuples (low degree first).  Rational
functions are kept in a canonical integer form: numerator and denominator are
coprime integer-coefficient polynomials, jointly primitive, denominator with a
positive leading coefficient.  Bivariate polynomials are polynomials in the
inner variable whose coefficients are polynomials in the outer variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(Fraction(c) for c in coeffs[:n])


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial with exact rational coefficients."""

    coeffs: tuple[Fraction, ...] = ()

    @staticmethod
    def of(*coeffs) -> "Poly":
        return Poly(_trim([Fraction(c) for c in coeffs]))

    @staticmethod
    def const(c) -> "Poly":
        return Poly.of(c)

    @staticmethod
    def x() -> "Poly":
        return Poly.of(0, 1)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(_trim(out))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return Poly(_trim(out))

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly()
        return Poly(tuple(a * c for a in self.coeffs))

    def eval(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        d, lead = other.degree, other.lead
        while len(_trim(r)) - 1 >= d:
            r = list(_trim(r))
            k = len(r) - 1 - d
            f = r[-1] / lead
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[k + i] -= f * c
        return Poly(_trim(q)), Poly(_trim(r))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def cauchy_bound(self) -> Fraction:
        """Every real root x satisfies |x| <= the returned bound."""
        if self.is_zero() or self.is_const():
            return Fraction(0)
        lead = abs(self.lead)
        return 1 + max(abs(c) for c in self.coeffs[:-1]) / lead

    def integer_points(self) -> tuple[int, ...]:
        """All integer roots, exactly (empty for the zero polynomial)."""
        if self.is_zero():
            raise ValueError("zero polynomial vanishes everywhere")
        coeffs = list(self.coeffs)
        roots = set()
        shift = 0
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            shift += 1
        if shift:
            roots.add(0)
        if len(coeffs) <= 1:
            return tuple(sorted(roots))
        denlcm = 1
        for c in coeffs:
            denlcm = denlcm * c.denominator // gcd(denlcm, c.denominator)
        ints = [int(c * denlcm) for c in coeffs]
        a0 = abs(ints[0])
        bound = Poly(_trim([Fraction(c) for c in ints])).cauchy_bound()
        for d in _divisors(a0):
            if d <= bound:
                for cand in (d, -d):
                    if Poly(tuple(Fraction(c) for c in ints)).eval(cand) == 0:
                        roots.add(cand)
        return tuple(sorted(roots))


def _divisors(n: int) -> Iterable[int]:
    if n == 0:
        return
    n = abs(n)
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            yield d
            if d != n // d:
                yield n // d


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the rationals (zero polynomial if both are zero)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def _clear_to_int(p: Poly) -> tuple[Poly, Fraction]:
    """Return (primitive integer polynomial, scalar) with p = scalar * primitive."""
    if p.is_zero():
        return p, Fraction(1)
    denlcm = 1
    for c in p.coeffs:
        denlcm = denlcm * c.denominator // gcd(denlcm, c.denominator)
    ints = [int(c * denlcm) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    prim = Poly(tuple(Fraction(c // g) for c in ints))
    return prim, Fraction(g, denlcm)


@dataclass(frozen=True)
class RatFunc:
    """Canonical ratio of integer-coefficient polynomials.

    gcd(num, den) = 1, the pair is jointly primitive over the integers and the
    denominator's leading coefficient is positive.  Equality of values (on a
    cofinite set) coincides with structural equality.
    """

    num: Poly
    den: Poly

    @staticmethod
    def make(num: Poly, den: Poly) -> "RatFunc":
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            return RatFunc(Poly(), Poly.of(1))
        g = poly_gcd(num, den)
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
        pn, sn = _clear_to_int(num)
        pd, sd = _clear_to_int(den)
        scalar = sn / sd  # num/den == scalar * pn/pd
        pn = pn.scale(scalar.numerator)
        pd = pd.scale(scalar.denominator)
        if pd.lead < 0:
            pn, pd = -pn, -pd
        return RatFunc(pn, pd)

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc.make(Poly.of(c), Poly.of(1))

    @staticmethod
    def x() -> "RatFunc":
        return RatFunc.make(Poly.x(), Poly.of(1))

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_integer_poly(self) -> bool:
        """True when the value is a polynomial with integer coefficients."""
        return self.den == Poly.of(1) and all(c.denominator == 1 for c in self.num.coeffs)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(self.num * other.num, self.den * other.den)

    def div(self, other: "RatFunc") -> "RatFunc":
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc.make(self.num * other.den, self.den * other.num)

    def eval(self, x) -> Fraction:
        d = self.den.eval(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return self.num.eval(x) / d

    def eventual_sign(self) -> int:
        """Sign of the value as the variable grows without bound."""
        if self.num.is_zero():
            return 0
        s = 1 if self.num.lead > 0 else -1
        return s if self.den.lead > 0 else -s

    def growth(self) -> int:
        """Degree of growth: deg(num) - deg(den) (zero function -> very negative)."""
        if self.num.is_zero():
            return -(10**9)
        return self.num.degree - self.den.degree

    def root_bound(self) -> Fraction:
        """Bound beyond which neither numerator nor denominator vanishes."""
        b = self.den.cauchy_bound()
        if not self.num.is_zero():
            b = max(b, self.num.cauchy_bound())
        return b


# ---------------------------------------------------------------------------
# Bivariate layer: polynomials in the inner variable whose coefficients are
# polynomials in the outer variable.
# ---------------------------------------------------------------------------


def _trim2(coeffs: Sequence[Poly]) -> tuple[Poly, ...]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class Poly2:
    """Polynomial in (outer, inner): sum of coeffs[j](outer) * inner**j."""

    coeffs: tuple[Poly, ...] = ()

    @staticmethod
    def const(c) -> "Poly2":
        return Poly2(_trim2([Poly.of(c)]))

    @staticmethod
    def outer() -> "Poly2":
        return Poly2((Poly.x(),))

    @staticmethod
    def inner() -> "Poly2":
        return Poly2(_trim2([Poly(), Poly.of(1)]))

    @staticmethod
    def from_poly_inner(p: Poly) -> "Poly2":
        return Poly2(_trim2([Poly.of(c) for c in p.coeffs]))

    @property
    def degree_inner(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return self.degree_inner <= 0 and (not self.coeffs or self.coeffs[0].is_const())

    def const_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_const():
            raise ValueError("not a constant")
        return self.coeffs[0].const_value()

    def __add__(self, other: "Poly2") -> "Poly2":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly2(_trim2(out))

    def __neg__(self) -> "Poly2":
        return Poly2(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly2") -> "Poly2":
        return self + (-other)

    def __mul__(self, other: "Poly2") -> "Poly2":
        if self.is_zero() or other.is_zero():
            return Poly2()
        out = [Poly() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly2(_trim2(out))

    def specialize_outer(self, m) -> Poly:
        """Fix the outer variable to a concrete value; polynomial in the inner one."""
        return Poly(_trim([c.eval(m) for c in self.coeffs]))

    def eval(self, m, n) -> Fraction:
        return self.specialize_outer(m).eval(n)

    def outer_common_zeros(self) -> tuple[int, ...]:
        """Integer outer values at which every inner coefficient vanishes."""
        if self.is_zero():
            raise ValueError("zero polynomial vanishes everywhere")
        nonzero = [c for c in self.coeffs if not c.is_zero()]
        candidates = set(nonzero[0].integer_points())
        for c in nonzero[1:]:
            if not candidates:
                break
            candidates &= set(c.integer_points())
        return tuple(sorted(candidates))

    def outer_bound(self) -> Fraction:
        """Bound beyond which no nonzero inner coefficient vanishes."""
        b = Fraction(0)
        for c in self.coeffs:
            if not c.is_zero():
                b = max(b, c.cauchy_bound())
        return b


@dataclass(frozen=True)
class RatFunc2:
    """Ratio of bivariate polynomials, lightly normalized (no bivariate gcd)."""

    num: Poly2
    den: Poly2

    @staticmethod
    def make(num: Poly2, den: Poly2) -> "RatFunc2":
        if den.is_zero():
            raise ZeroDivisionError("bivariate rational function with zero denominator")
        if num.is_zero():
            return RatFunc2(Poly2(), Poly2.const(1))
        if den.coeffs[-1].lead < 0:
            num, den = -num, -den
        return RatFunc2(num, den)

    @staticmethod
    def const(c) -> "RatFunc2":
        return RatFunc2.make(Poly2.const(c), Poly2.const(1))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return (
            self.num.is_const()
            and self.den.is_const()
        )

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    def is_integer_poly(self) -> bool:
        return (
            self.den.is_const()
            and self.den.const_value() == 1
            and all(c.denominator == 1 for p in self.num.coeffs for c in p.coeffs)
        )

    def __add__(self, other: "RatFunc2") -> "RatFunc2":
        return RatFunc2.make(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc2":
        return RatFunc2(-self.num, self.den)

    def __sub__(self, other: "RatFunc2") -> "RatFunc2":
        return self + (-other)

    def __mul__(self, other: "RatFunc2") -> "RatFunc2":
        return RatFunc2.make(self.num * other.num, self.den * other.den)

    def div(self, other: "RatFunc2") -> "RatFunc2":
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc2.make(self.num * other.den, self.den * other.num)

    def value_eq(self, other: "RatFunc2") -> bool:
        """Equality as rational functions (cross multiplication)."""
        return (self.num * other.den - other.num * self.den).is_zero()

    def specialize_outer(self, m) -> RatFunc:
        den = self.den.specialize_outer(m)
        if den.is_zero():
            raise ZeroDivisionError(f"denominator slice vanishes identically at outer index {m}")
        return RatFunc.make(self.num.specialize_outer(m), den)


def solve_nullspace(rows: list[list[Fraction]], ncols: int) -> list[Fraction] | None:
    """A nonzero rational solution of the homogeneous system, or None.

    Gaussian elimination over Fraction; returns the free-variable solution with
    the first free column set to 1.
    """
    mat = [list(map(Fraction, r)) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    sol = [Fraction(0)] * ncols
    f0 = free[0]
    sol[f0] = Fraction(1)
    for i, c in enumerate(pivots):
        sol[c] = -mat[i][f0]
    return sol
