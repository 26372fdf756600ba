"""Canonical piecewise-rational normal forms for terms.

A term in the single index variable normalizes to a piecewise family of
rational functions with a unique minimal period: branch r gives the value on
indices congruent to r.  Two terms are fragment-equal iff their normal forms
coincide branch by branch.  Terms in the outer/inner index pair normalize to a
doubly periodic family of bivariate rational functions.

Normal forms also carry a bound `def_from`: the raw term is defined (no
vanishing denominator) at every index >= def_from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidTerm, SortError, UnsupportedTerm
from .polys import Poly, Poly2, RatFunc, RatFunc2
from .terms import (
    INNER,
    OUTER,
    Add,
    Const,
    Div,
    Mod,
    Mul,
    Piecewise,
    Sub,
    Term,
    Var,
    free_vars,
)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _bound_int(b: Fraction) -> int:
    return max(0, math.floor(b) + 1)


# ---------------------------------------------------------------------------
# Univariate normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiecewiseRF:
    """Minimal-period family of canonical rational functions."""

    period: int
    branches: tuple[RatFunc, ...]

    @staticmethod
    def make(period: int, branches: tuple[RatFunc, ...]) -> "PiecewiseRF":
        for d in range(1, period + 1):
            if period % d:
                continue
            if all(branches[r] == branches[r % d] for r in range(period)):
                return PiecewiseRF(d, branches[:d])
        raise AssertionError("unreachable")

    @staticmethod
    def const(c) -> "PiecewiseRF":
        return PiecewiseRF(1, (RatFunc.const(c),))

    def branch_at(self, n: int) -> RatFunc:
        return self.branches[n % self.period]

    def is_const_value(self) -> Fraction | None:
        if self.period == 1 and self.branches[0].is_const():
            return self.branches[0].const_value()
        return None


@dataclass(frozen=True)
class NormalForm:
    prf: PiecewiseRF
    def_from: int

    def combine(self, other: "NormalForm", op) -> "NormalForm":
        p = _lcm(self.prf.period, other.prf.period)
        branches = tuple(op(self.prf.branch_at(r), other.prf.branch_at(r)) for r in range(p))
        return NormalForm(PiecewiseRF.make(p, branches), max(self.def_from, other.def_from))


@lru_cache(maxsize=None)
def normalize(t: Term) -> NormalForm:
    """Canonical form of a term over the inner index variable alone."""
    stray = free_vars(t) - {INNER}
    if stray:
        raise UnsupportedTerm(f"term has free variables besides the index: {sorted(stray)}")
    return _norm1(t)


def _norm1(t: Term) -> NormalForm:
    if isinstance(t, Const):
        return NormalForm(PiecewiseRF.const(t.value), 0)
    if isinstance(t, Var):
        return NormalForm(PiecewiseRF(1, (RatFunc.x(),)), 0)
    if isinstance(t, Add):
        return _norm1(t.left).combine(_norm1(t.right), RatFunc.__add__)
    if isinstance(t, Sub):
        return _norm1(t.left).combine(_norm1(t.right), RatFunc.__sub__)
    if isinstance(t, Mul):
        return _norm1(t.left).combine(_norm1(t.right), RatFunc.__mul__)
    if isinstance(t, Div):
        num, den = _norm1(t.left), _norm1(t.right)
        def_from = max(num.def_from, den.def_from)
        for r, rf in enumerate(den.prf.branches):
            if rf.is_zero():
                raise InvalidTerm(f"denominator vanishes identically on residue class {r}")
            def_from = max(def_from, _bound_int(rf.num.cauchy_bound()))
        combined = num.combine(den, RatFunc.div)
        return NormalForm(combined.prf, def_from)
    if isinstance(t, Mod):
        inner = _norm1(t.operand)
        k = t.modulus
        for rf in inner.prf.branches:
            if not rf.is_integer_poly():
                raise SortError(t.operand, "mod operand must be an integer-polynomial sequence")
        p = _lcm(inner.prf.period, k)
        branches = []
        for r in range(p):
            val = inner.prf.branch_at(r).num.eval(r)
            branches.append(RatFunc.const(int(val) % k))
        return NormalForm(PiecewiseRF.make(p, tuple(branches)), inner.def_from)
    if isinstance(t, Piecewise):
        if t.selector != INNER:
            raise UnsupportedTerm(f"piecewise selector {t.selector!r} in a single-index term")
        parts = [_norm1(b) for b in t.branches]
        p = t.period
        for part in parts:
            p = _lcm(p, part.prf.period)
        branches = tuple(parts[r % t.period].prf.branch_at(r) for r in range(p))
        return NormalForm(PiecewiseRF.make(p, branches), max(part.def_from for part in parts))
    raise TypeError(f"unknown term node {t!r}")


def fragment_equal(a: Term, b: Term) -> bool:
    """Equality of the induced sequences on a cofinite set of indices."""
    return normalize(a).prf == normalize(b).prf


# ---------------------------------------------------------------------------
# Bivariate normal form (outer index m, inner index n)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiecewiseRF2:
    """Doubly periodic family: branches[r][s] on (outer % pm == r, inner % pn == s)."""

    pm: int
    pn: int
    branches: tuple[tuple[RatFunc2, ...], ...]

    @staticmethod
    def make(pm: int, pn: int, branches) -> "PiecewiseRF2":
        dm = pm
        for d in range(1, pm + 1):
            if pm % d:
                continue
            if all(
                branches[r][s].value_eq(branches[r % d][s])
                for r in range(pm)
                for s in range(pn)
            ):
                dm = d
                break
        dn = pn
        for d in range(1, pn + 1):
            if pn % d:
                continue
            if all(
                branches[r][s].value_eq(branches[r][s % d])
                for r in range(dm)
                for s in range(pn)
            ):
                dn = d
                break
        return PiecewiseRF2(dm, dn, tuple(tuple(branches[r][s] for s in range(dn)) for r in range(dm)))

    @staticmethod
    def const(c) -> "PiecewiseRF2":
        return PiecewiseRF2(1, 1, ((RatFunc2.const(c),),))

    def branch_at(self, r: int, s: int) -> RatFunc2:
        return self.branches[r % self.pm][s % self.pn]

    def value_eq(self, other: "PiecewiseRF2") -> bool:
        pm, pn = _lcm(self.pm, other.pm), _lcm(self.pn, other.pn)
        return all(
            self.branch_at(r, s).value_eq(other.branch_at(r, s))
            for r in range(pm)
            for s in range(pn)
        )

    def constant_value(self) -> Fraction | None:
        """The single constant value when the family is one, else None."""
        first = self.branches[0][0]
        if not first.is_const():
            return None
        v = first.const_value()
        for row in self.branches:
            for rf in row:
                if not rf.value_eq(RatFunc2.const(v)):
                    return None
        return v


def _combine2(a: PiecewiseRF2, b: PiecewiseRF2, op) -> PiecewiseRF2:
    pm, pn = _lcm(a.pm, b.pm), _lcm(a.pn, b.pn)
    branches = tuple(
        tuple(op(a.branch_at(r, s), b.branch_at(r, s)) for s in range(pn)) for r in range(pm)
    )
    return PiecewiseRF2.make(pm, pn, branches)


def _check_outer_slices(prf: PiecewiseRF2, what: str) -> None:
    """Reject families whose numerator slice vanishes at some outer index."""
    for r in range(prf.pm):
        for s in range(prf.pn):
            num = prf.branches[r][s].num
            if num.is_zero():
                raise InvalidTerm(f"{what} vanishes identically on class ({r},{s})")
            for z in num.outer_common_zeros():
                if z >= 0 and z % prf.pm == r % prf.pm:
                    raise InvalidTerm(f"{what} vanishes on the whole slice at outer index {z}")


@lru_cache(maxsize=None)
def normalize2(t: Term) -> PiecewiseRF2:
    """Canonical form of a term over the (outer, inner) index pair."""
    stray = free_vars(t) - {INNER, OUTER}
    if stray:
        raise UnsupportedTerm(f"term has free variables besides the indices: {sorted(stray)}")
    return _norm2(t)


def _norm2(t: Term) -> PiecewiseRF2:
    if isinstance(t, Const):
        return PiecewiseRF2.const(t.value)
    if isinstance(t, Var):
        if t.name == OUTER:
            return PiecewiseRF2(1, 1, ((RatFunc2.make(Poly2.outer(), Poly2.const(1)),),))
        return PiecewiseRF2(1, 1, ((RatFunc2.make(Poly2.inner(), Poly2.const(1)),),))
    if isinstance(t, Add):
        return _combine2(_norm2(t.left), _norm2(t.right), RatFunc2.__add__)
    if isinstance(t, Sub):
        return _combine2(_norm2(t.left), _norm2(t.right), RatFunc2.__sub__)
    if isinstance(t, Mul):
        return _combine2(_norm2(t.left), _norm2(t.right), RatFunc2.__mul__)
    if isinstance(t, Div):
        den = _norm2(t.right)
        _check_outer_slices(den, "divisor")
        return _combine2(_norm2(t.left), den, RatFunc2.div)
    if isinstance(t, Mod):
        inner = _norm2(t.operand)
        k = t.modulus
        for row in inner.branches:
            for rf in row:
                if not rf.is_integer_poly():
                    raise SortError(t.operand, "mod operand must be an integer-polynomial family")
        pm, pn = _lcm(inner.pm, k), _lcm(inner.pn, k)
        branches = tuple(
            tuple(
                RatFunc2.const(int(inner.branch_at(r, s).num.eval(r, s)) % k)
                for s in range(pn)
            )
            for r in range(pm)
        )
        return PiecewiseRF2.make(pm, pn, branches)
    if isinstance(t, Piecewise):
        parts = [_norm2(b) for b in t.branches]
        if t.selector == INNER:
            pm = 1
            pn = t.period
            for part in parts:
                pm, pn = _lcm(pm, part.pm), _lcm(pn, part.pn)
            branches = tuple(
                tuple(parts[s % t.period].branch_at(r, s) for s in range(pn)) for r in range(pm)
            )
        elif t.selector == OUTER:
            pm = t.period
            pn = 1
            for part in parts:
                pm, pn = _lcm(pm, part.pm), _lcm(pn, part.pn)
            branches = tuple(
                tuple(parts[r % t.period].branch_at(r, s) for s in range(pn)) for r in range(pm)
            )
        else:
            raise UnsupportedTerm(f"piecewise selector {t.selector!r} is not an index variable")
        return PiecewiseRF2.make(pm, pn, branches)
    raise TypeError(f"unknown term node {t!r}")
