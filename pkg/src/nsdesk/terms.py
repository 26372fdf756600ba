"""Term algebra for definable sequences and their comparison predicates.

Terms are closed-form expressions over index variables: exact rational
constants, variables, +, -, *, /, integer mod, and periodic piecewise
selection by ``index mod p``.  The reserved variable names are ``n`` (inner
index) and ``m`` (outer index); other names act as free parameters in
predicates and standard functions.

Every value is immutable; all operations are pure functions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from .errors import DivisionByZeroAt, InvalidTerm, SortError

INNER = "n"
OUTER = "m"


class Sort(enum.Enum):
    NAT = "Nat"
    INT = "Int"
    RAT = "Rat"

    def join(self, other: "Sort") -> "Sort":
        order = {Sort.NAT: 0, Sort.INT: 1, Sort.RAT: 2}
        return self if order[self] >= order[other] else other


@dataclass(frozen=True)
class Term:
    """Base class of term AST nodes."""

    def __add__(self, other):
        return Add(self, as_term(other))

    def __radd__(self, other):
        return Add(as_term(other), self)

    def __sub__(self, other):
        return Sub(self, as_term(other))

    def __rsub__(self, other):
        return Sub(as_term(other), self)

    def __mul__(self, other):
        return Mul(self, as_term(other))

    def __rmul__(self, other):
        return Mul(as_term(other), self)

    def __neg__(self):
        return Sub(Const(Fraction(0)), self)


@dataclass(frozen=True)
class Const(Term):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Var(Term):
    name: str
    sort: Sort = Sort.NAT


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Sub(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Mul(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Div(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Mod(Term):
    operand: Term
    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus <= 0:
            raise InvalidTerm("mod requires a positive integer constant modulus")


@dataclass(frozen=True)
class Piecewise(Term):
    """Branch selected by the selector index mod period; branch k applies on residue k."""

    period: int
    branches: tuple[Term, ...]
    selector: str = INNER

    def __post_init__(self):
        if self.period != len(self.branches) or self.period <= 0:
            raise InvalidTerm("piecewise needs exactly `period` branches")


def as_term(x) -> Term:
    if isinstance(x, Term):
        return x
    if isinstance(x, (int, Fraction)):
        return Const(Fraction(x))
    raise TypeError(f"cannot interpret {x!r} as a term")


def term_sort(t: Term) -> Sort:
    """Inferred value sort (Nat <= Int <= Rat)."""
    if isinstance(t, Const):
        if t.value.denominator != 1:
            return Sort.RAT
        return Sort.NAT if t.value >= 0 else Sort.INT
    if isinstance(t, Var):
        return t.sort
    if isinstance(t, (Add, Mul)):
        return term_sort(t.left).join(term_sort(t.right))
    if isinstance(t, Sub):
        return term_sort(t.left).join(term_sort(t.right)).join(Sort.INT)
    if isinstance(t, Div):
        return Sort.RAT
    if isinstance(t, Mod):
        s = term_sort(t.operand)
        if s == Sort.RAT:
            raise SortError(t.operand, "mod operand must have sort Nat or Int")
        return Sort.NAT
    if isinstance(t, Piecewise):
        s = term_sort(t.branches[0])
        for b in t.branches[1:]:
            s = s.join(term_sort(b))
        return s
    raise TypeError(f"unknown term node {t!r}")


def free_vars(t: Term) -> frozenset[str]:
    if isinstance(t, Const):
        return frozenset()
    if isinstance(t, Var):
        return frozenset({t.name})
    if isinstance(t, (Add, Sub, Mul, Div)):
        return free_vars(t.left) | free_vars(t.right)
    if isinstance(t, Mod):
        return free_vars(t.operand)
    if isinstance(t, Piecewise):
        out: frozenset[str] = frozenset({t.selector})
        for b in t.branches:
            out |= free_vars(b)
        return out
    raise TypeError(f"unknown term node {t!r}")


def eval_term(t: Term, env: Mapping[str, Fraction]) -> Fraction:
    """Exact value of a term under an assignment of all its variables.

    Raises DivisionByZeroAt (tagged with the inner index when available) when a
    denominator vanishes, and SortError for a fractional mod operand.
    """
    if isinstance(t, Const):
        return t.value
    if isinstance(t, Var):
        try:
            return Fraction(env[t.name])
        except KeyError:
            raise SortError(t.name, f"unbound variable {t.name!r}") from None
    if isinstance(t, Add):
        return eval_term(t.left, env) + eval_term(t.right, env)
    if isinstance(t, Sub):
        return eval_term(t.left, env) - eval_term(t.right, env)
    if isinstance(t, Mul):
        return eval_term(t.left, env) * eval_term(t.right, env)
    if isinstance(t, Div):
        denom = eval_term(t.right, env)
        if denom == 0:
            raise DivisionByZeroAt(env.get(INNER, env.get(OUTER)))
        return eval_term(t.left, env) / denom
    if isinstance(t, Mod):
        v = eval_term(t.operand, env)
        if v.denominator != 1:
            raise SortError(t.operand, "mod of a non-integer value")
        return Fraction(int(v) % t.modulus)
    if isinstance(t, Piecewise):
        idx = env.get(t.selector)
        if idx is None or Fraction(idx).denominator != 1:
            raise SortError(t.selector, "piecewise selection needs an integer index")
        return eval_term(t.branches[int(idx) % t.period], env)
    raise TypeError(f"unknown term node {t!r}")


def substitute(t: Term, mapping: Mapping[str, Term]) -> Term:
    """Capture-free substitution of terms for variables."""
    if isinstance(t, Const):
        return t
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Add):
        return Add(substitute(t.left, mapping), substitute(t.right, mapping))
    if isinstance(t, Sub):
        return Sub(substitute(t.left, mapping), substitute(t.right, mapping))
    if isinstance(t, Mul):
        return Mul(substitute(t.left, mapping), substitute(t.right, mapping))
    if isinstance(t, Div):
        return Div(substitute(t.left, mapping), substitute(t.right, mapping))
    if isinstance(t, Mod):
        return Mod(substitute(t.operand, mapping), t.modulus)
    if isinstance(t, Piecewise):
        branches = tuple(substitute(b, mapping) for b in t.branches)
        target = mapping.get(t.selector)
        if target is None:
            return Piecewise(t.period, branches, t.selector)
        if isinstance(target, Var):
            return Piecewise(t.period, branches, target.name)
        if isinstance(target, Const) and target.value.denominator == 1:
            return branches[int(target.value) % t.period]
        from .errors import UnsupportedTerm

        raise UnsupportedTerm("piecewise selector can only be renamed or fixed to an integer")
    raise TypeError(f"unknown term node {t!r}")


def rename_var(t: Term, old: str, new: str) -> Term:
    return substitute(t, {old: Var(new, Sort.NAT)})


# ---------------------------------------------------------------------------
# Boolean terms: comparisons closed under not/and/or.
# ---------------------------------------------------------------------------


class Rel(enum.Enum):
    EQ = "="
    NE = "!="
    LT = "<"
    LE = "<="


@dataclass(frozen=True)
class BoolTerm:
    pass


@dataclass(frozen=True)
class Cmp(BoolTerm):
    rel: Rel
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(BoolTerm):
    operand: BoolTerm


@dataclass(frozen=True)
class And(BoolTerm):
    left: BoolTerm
    right: BoolTerm


@dataclass(frozen=True)
class Or(BoolTerm):
    left: BoolTerm
    right: BoolTerm


def cmp_terms(rel: Rel, left, right) -> Cmp:
    left, right = as_term(left), as_term(right)
    term_sort(left), term_sort(right)  # sorts are always mutually comparable; validates mod operands
    return Cmp(rel, left, right)


def bool_free_vars(b: BoolTerm) -> frozenset[str]:
    if isinstance(b, Cmp):
        return free_vars(b.left) | free_vars(b.right)
    if isinstance(b, Not):
        return bool_free_vars(b.operand)
    if isinstance(b, (And, Or)):
        return bool_free_vars(b.left) | bool_free_vars(b.right)
    raise TypeError(f"unknown boolean node {b!r}")


def bool_substitute(b: BoolTerm, mapping: Mapping[str, Term]) -> BoolTerm:
    if isinstance(b, Cmp):
        return Cmp(b.rel, substitute(b.left, mapping), substitute(b.right, mapping))
    if isinstance(b, Not):
        return Not(bool_substitute(b.operand, mapping))
    if isinstance(b, And):
        return And(bool_substitute(b.left, mapping), bool_substitute(b.right, mapping))
    if isinstance(b, Or):
        return Or(bool_substitute(b.left, mapping), bool_substitute(b.right, mapping))
    raise TypeError(f"unknown boolean node {b!r}")


_REL_NEG = {Rel.EQ: Rel.NE, Rel.NE: Rel.EQ, Rel.LT: None, Rel.LE: None}


def to_nnf(b: BoolTerm, negate: bool = False) -> BoolTerm:
    """Negation normal form; strict/loose comparisons negate by swapping sides."""
    if isinstance(b, Cmp):
        if not negate:
            return b
        flipped = _REL_NEG[b.rel]
        if flipped is not None:
            return Cmp(flipped, b.left, b.right)
        if b.rel == Rel.LT:  # not (a < b)  <=>  b <= a
            return Cmp(Rel.LE, b.right, b.left)
        return Cmp(Rel.LT, b.right, b.left)  # not (a <= b)  <=>  b < a
    if isinstance(b, Not):
        return to_nnf(b.operand, not negate)
    if isinstance(b, And):
        l, r = to_nnf(b.left, negate), to_nnf(b.right, negate)
        return Or(l, r) if negate else And(l, r)
    if isinstance(b, Or):
        l, r = to_nnf(b.left, negate), to_nnf(b.right, negate)
        return And(l, r) if negate else Or(l, r)
    raise TypeError(f"unknown boolean node {b!r}")


def eval_bool(b: BoolTerm, env: Mapping[str, Fraction]) -> bool:
    if isinstance(b, Cmp):
        lv, rv = eval_term(b.left, env), eval_term(b.right, env)
        if b.rel == Rel.EQ:
            return lv == rv
        if b.rel == Rel.NE:
            return lv != rv
        if b.rel == Rel.LT:
            return lv < rv
        return lv <= rv
    if isinstance(b, Not):
        return not eval_bool(b.operand, env)
    if isinstance(b, And):
        return eval_bool(b.left, env) and eval_bool(b.right, env)
    if isinstance(b, Or):
        return eval_bool(b.left, env) or eval_bool(b.right, env)
    raise TypeError(f"unknown boolean node {b!r}")


# ---------------------------------------------------------------------------
# Printing (round-trips through the s-expression reader in nsdesk.sexpr).
# ---------------------------------------------------------------------------


def _frac_str(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def term_to_sexpr(t: Term) -> str:
    if isinstance(t, Const):
        return _frac_str(t.value)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Add):
        return f"(+ {term_to_sexpr(t.left)} {term_to_sexpr(t.right)})"
    if isinstance(t, Sub):
        return f"(- {term_to_sexpr(t.left)} {term_to_sexpr(t.right)})"
    if isinstance(t, Mul):
        return f"(* {term_to_sexpr(t.left)} {term_to_sexpr(t.right)})"
    if isinstance(t, Div):
        return f"(/ {term_to_sexpr(t.left)} {term_to_sexpr(t.right)})"
    if isinstance(t, Mod):
        return f"(mod {term_to_sexpr(t.operand)} {t.modulus})"
    if isinstance(t, Piecewise):
        body = " ".join(term_to_sexpr(b) for b in t.branches)
        return f"(pw {t.selector} {t.period} {body})"
    raise TypeError(f"unknown term node {t!r}")


def bool_to_sexpr(b: BoolTerm) -> str:
    if isinstance(b, Cmp):
        return f"({b.rel.value} {term_to_sexpr(b.left)} {term_to_sexpr(b.right)})"
    if isinstance(b, Not):
        return f"(not {bool_to_sexpr(b.operand)})"
    if isinstance(b, And):
        return f"(and {bool_to_sexpr(b.left)} {bool_to_sexpr(b.right)})"
    if isinstance(b, Or):
        return f"(or {bool_to_sexpr(b.left)} {bool_to_sexpr(b.right)})"
    raise TypeError(f"unknown boolean node {b!r}")


# Convenience constructors used across the code base and tests.

def index() -> Var:
    return Var(INNER, Sort.NAT)


def outer_index() -> Var:
    return Var(OUTER, Sort.NAT)


def const(c) -> Const:
    return Const(Fraction(c))
