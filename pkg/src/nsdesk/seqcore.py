"""Decision procedure for comparison predicates on definable sequences.

The truth set of a boolean term over the index is eventually periodic: beyond
a computable onset, membership depends only on the index's residue class, and
per class the answer follows from the eventual sign of a rational function
(degree and leading coefficient).  Indices where a subterm is undefined (a
vanishing denominator) are excluded from the truth set; this convention only
moves finitely many points and never changes a verdict.

True / False verdicts are exactly the answers that hold modulo every
ultrafilter extending the Frechet filter; genuinely periodic questions depend
on the ultrafilter and stay Undetermined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZeroAt, SortError
from .normal import _bound_int, normalize
from .polys import RatFunc
from .terms import (
    INNER,
    And,
    BoolTerm,
    Cmp,
    Not,
    Or,
    Rel,
    Sub,
    Term,
    eval_term,
)


# ---------------------------------------------------------------------------
# Truth-set classifications and verdicts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruthSetClass:
    pass


@dataclass(frozen=True)
class Finite(TruthSetClass):
    indices: frozenset[int]


@dataclass(frozen=True)
class Cofinite(TruthSetClass):
    complement: frozenset[int]


@dataclass(frozen=True)
class PeriodicTail(TruthSetClass):
    period: int
    residues: frozenset[int]
    onset: int


@dataclass(frozen=True)
class Unknown(TruthSetClass):
    """Outer-level classification blocked by undecided inner slices."""


@dataclass(frozen=True)
class Verdict:
    """Three-valued decision result with classification evidence."""

    truth: bool | None
    evidence: TruthSetClass | None = None

    @staticmethod
    def yes() -> "Verdict":
        return Verdict(True)

    @staticmethod
    def no() -> "Verdict":
        return Verdict(False)

    @staticmethod
    def undetermined(evidence: TruthSetClass) -> "Verdict":
        return Verdict(None, evidence)

    @property
    def is_true(self) -> bool:
        return self.truth is True

    @property
    def is_false(self) -> bool:
        return self.truth is False

    @property
    def is_decided(self) -> bool:
        return self.truth is not None

    def __str__(self) -> str:
        if self.truth is None:
            return "Undetermined"
        return "True" if self.truth else "False"


def verdict_of_class(cls: TruthSetClass) -> Verdict:
    if isinstance(cls, Cofinite):
        return Verdict(True, cls)
    if isinstance(cls, Finite):
        return Verdict(False, cls)
    return Verdict.undetermined(cls)


# ---------------------------------------------------------------------------
# Profiles: exact eventually periodic boolean sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Profile:
    """Membership for all indices: explicit below onset, periodic beyond."""

    period: int
    onset: int
    tail: tuple[bool, ...]
    explicit: tuple[bool, ...]

    def at(self, n: int) -> bool:
        if n < self.onset:
            return self.explicit[n]
        return self.tail[n % self.period]

    def negate(self) -> "Profile":
        return Profile(
            self.period,
            self.onset,
            tuple(not b for b in self.tail),
            tuple(not b for b in self.explicit),
        )

    def combine(self, other: "Profile", op) -> "Profile":
        period = self.period * other.period // math.gcd(self.period, other.period)
        onset = max(self.onset, other.onset)
        tail = tuple(op(self.tail[r % self.period], other.tail[r % other.period]) for r in range(period))
        explicit = tuple(op(self.at(n), other.at(n)) for n in range(onset))
        return Profile(period, onset, tail, explicit)

    def reduced(self) -> "Profile":
        period, tail = self.period, self.tail
        for d in range(1, period + 1):
            if period % d:
                continue
            if all(tail[r] == tail[r % d] for r in range(period)):
                period, tail = d, tail[:d]
                break
        onset, explicit = self.onset, list(self.explicit)
        while onset > 0 and explicit[onset - 1] == tail[(onset - 1) % period]:
            onset -= 1
            explicit.pop()
        return Profile(period, onset, tail, tuple(explicit))


def truth_at(b: BoolTerm, n: int) -> bool:
    """Pointwise truth at index n; an atom whose term is undefined at n is false."""
    if isinstance(b, Cmp):
        env = {INNER: Fraction(n)}
        try:
            lv, rv = eval_term(b.left, env), eval_term(b.right, env)
        except (DivisionByZeroAt, ZeroDivisionError):
            return False
        if b.rel == Rel.EQ:
            return lv == rv
        if b.rel == Rel.NE:
            return lv != rv
        if b.rel == Rel.LT:
            return lv < rv
        return lv <= rv
    if isinstance(b, Not):
        return not truth_at(b.operand, n)
    if isinstance(b, And):
        return truth_at(b.left, n) and truth_at(b.right, n)
    if isinstance(b, Or):
        return truth_at(b.left, n) or truth_at(b.right, n)
    raise TypeError(f"unknown boolean node {b!r}")


def _tail_truth(rf: RatFunc, rel: Rel) -> bool:
    """Truth of `value rel 0` for all sufficiently large indices."""
    if rf.is_zero():
        return rel in (Rel.EQ, Rel.LE)
    sign = rf.eventual_sign()
    if rel == Rel.EQ:
        return False
    if rel == Rel.NE:
        return True
    return sign < 0  # eventually nonzero, so < and <= coincide


def _atom_profile(atom: Cmp) -> Profile:
    diff = normalize(Sub(atom.left, atom.right))
    prf = diff.prf
    onset = diff.def_from
    for rf in prf.branches:
        onset = max(onset, _bound_int(rf.root_bound()))
    tail = tuple(_tail_truth(prf.branch_at(r), atom.rel) for r in range(prf.period))
    explicit = tuple(truth_at(atom, n) for n in range(onset))
    return Profile(prf.period, onset, tail, explicit)


def truth_profile(b: BoolTerm) -> Profile:
    """Exact membership profile of the truth set (reduced onset and period)."""
    return _profile(b).reduced()


def _profile(b: BoolTerm) -> Profile:
    if isinstance(b, Cmp):
        return _atom_profile(b)
    if isinstance(b, Not):
        return _profile(b.operand).negate()
    if isinstance(b, And):
        return _profile(b.left).combine(_profile(b.right), lambda x, y: x and y)
    if isinstance(b, Or):
        return _profile(b.left).combine(_profile(b.right), lambda x, y: x or y)
    raise TypeError(f"unknown boolean node {b!r}")


def classify_truth_set(b: BoolTerm) -> TruthSetClass:
    """Exact classification of {n : b holds at n} as finite/cofinite/periodic."""
    p = truth_profile(b)
    if not any(p.tail):
        return Finite(frozenset(n for n in range(p.onset) if p.explicit[n]))
    if all(p.tail):
        return Cofinite(frozenset(n for n in range(p.onset) if not p.explicit[n]))
    return PeriodicTail(p.period, frozenset(r for r in range(p.period) if p.tail[r]), p.onset)


def compare_mod_frechet(a: Term, b: Term, rel: Rel) -> Verdict:
    """Verdict of `a rel b` modulo every ultrafilter extending the Frechet filter."""
    return verdict_of_class(classify_truth_set(Cmp(rel, a, b)))


def check_profile_bruteforce(b: BoolTerm, factor: int = 10) -> bool:
    """Oracle check: the claimed profile matches pointwise evaluation.

    Evaluates every index below factor * max(onset, period) and additionally
    confirms periodicity of one further whole period.
    """
    p = truth_profile(b)
    bound = factor * max(p.onset, p.period, 1)
    for n in range(bound + p.period):
        if truth_at(b, n) != p.at(n):
            return False
    return True
