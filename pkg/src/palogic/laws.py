"""Catalogue of checkable laws on a probability algebra, and the checkers.

Laws L1-L12 are the carrier-level translations of the consistency
constraints on belief functions; L13 (divisibility) is induced by the
richness constraints, by the same mechanism that motivates residual symbols
in the symbolic algebra: whenever q <= p there must already be an r solving
h(p, r) = q.

The DEFAULT set is L1-L11.  L12 (total order) and L13 (divisibility) are
catalogued but not default; named variants combine them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .algebra import Element, ProbabilityAlgebra

EqFn = Callable[[Element, Element], bool]


@dataclass(frozen=True)
class CounterexampleReport:
    """First witnessing tuple, in carrier-rank lexicographic order."""

    law: str
    witness: tuple
    detail: str

    def __str__(self) -> str:
        return f"{self.law} fails at {self.witness}: {self.detail}"


@dataclass(frozen=True)
class Law:
    law_id: str
    arity: int
    description: str
    check: Callable[[ProbabilityAlgebra, tuple, EqFn], Optional[str]]


def _l1(alg, args, eq):
    p, q, r = args
    if alg.le(p, p) is not True:
        return f"le({p},{p}) is not reflexive"
    if alg.le(p, q) is True and alg.le(q, p) is True and not eq(p, q):
        return f"antisymmetry: {p} <= {q} <= {p} but {p} != {q}"
    if alg.le(p, q) is True and alg.le(q, r) is True and alg.le(p, r) is not True:
        return f"transitivity: {p} <= {q} <= {r} but not {p} <= {r}"
    return None


def _l2(alg, args, eq):
    p, q, r = args
    if alg.le(p, q) is True:
        if alg.le(alg.h(p, r), alg.h(q, r)) is not True:
            return f"h not monotone in first argument at r={r}"
        if alg.le(alg.h(r, p), alg.h(r, q)) is not True:
            return f"h not monotone in second argument at r={r}"
    return None


def _l3(alg, args, eq):
    p, q = args
    if alg.le(p, q) is True and alg.le(alg.i(q), alg.i(p)) is not True:
        return f"i not antitone: {p} <= {q} but not i({q}) <= i({p})"
    return None


def _l4(alg, args, eq):
    (p,) = args
    if not eq(alg.h(p, alg.one), p):
        return f"h({p}, one) != {p}"
    if not eq(alg.h(alg.one, p), p):
        return f"h(one, {p}) != {p}"
    return None


def _l5(alg, args, eq):
    (p,) = args
    if not eq(alg.h(p, alg.zero), alg.zero):
        return f"h({p}, zero) != zero"
    if not eq(alg.h(alg.zero, p), alg.zero):
        return f"h(zero, {p}) != zero"
    return None


def _l6(alg, args, eq):
    p, q = args
    if eq(alg.h(p, q), alg.zero) and not (eq(p, alg.zero) or eq(q, alg.zero)):
        return f"nontrivial zero: h({p},{q}) = zero with both factors nonzero"
    return None


def _l7(alg, args, eq):
    (p,) = args
    if not eq(alg.i(alg.i(p)), p):
        return f"i(i({p})) != {p}"
    return None


def _l8(alg, args, eq):
    if not eq(alg.i(alg.zero), alg.one):
        return "i(zero) != one"
    if not eq(alg.i(alg.one), alg.zero):
        return "i(one) != zero"
    return None


def _l9(alg, args, eq):
    p, q, r = args
    if not eq(alg.h(alg.h(p, q), r), alg.h(p, alg.h(q, r))):
        return f"associativity fails at ({p},{q},{r})"
    return None


def _l10(alg, args, eq):
    p, q = args
    if not eq(alg.h(p, q), alg.h(q, p)):
        return f"h({p},{q}) != h({q},{p})"
    return None


def _l11(alg, args, eq):
    p, q = args
    if alg.le(alg.h(p, q), p) is not True:
        return f"not h({p},{q}) <= {p}"
    if alg.le(alg.h(p, q), q) is not True:
        return f"not h({p},{q}) <= {q}"
    return None


def _l12(alg, args, eq):
    p, q = args
    if alg.le(p, q) is not True and alg.le(q, p) is not True:
        return f"{p} and {q} are incomparable"
    return None


def _divide(alg, q, p, eq):
    """Some r with h(p, r) = q, or None.  Scans a finite carrier; sampled
    carriers must provide a divide() solver."""
    solver = getattr(alg, "divide", None)
    if solver is not None:
        return solver(q, p)
    for r in alg.carrier():
        if eq(alg.h(p, r), q):
            return r
    return None


def _l13(alg, args, eq):
    p, q = args
    if alg.le(q, p) is True:
        r = _divide(alg, q, p, eq)
        if r is None:
            return f"no r with h({p}, r) = {q} although {q} <= {p}"
        if not eq(alg.h(p, r), q):
            return f"divide() returned r={r} but h({p},{r}) != {q}"
    return None


LAWS: dict[str, Law] = {
    law.law_id: law
    for law in (
        Law("L1", 3, "partial order: le reflexive, antisymmetric, transitive", _l1),
        Law("L2", 3, "h monotone in each argument", _l2),
        Law("L3", 2, "i monotone non-increasing", _l3),
        Law("L4", 1, "one is a two-sided identity for h", _l4),
        Law("L5", 1, "zero annihilates h", _l5),
        Law("L6", 2, "no nontrivial zeroes: h(p,q)=0 implies p=0 or q=0", _l6),
        Law("L7", 1, "i is an involution", _l7),
        Law("L8", 0, "i swaps the bounds", _l8),
        Law("L9", 3, "h associative", _l9),
        Law("L10", 2, "h commutative", _l10),
        Law("L11", 2, "h(p,q) <= p and h(p,q) <= q", _l11),
        Law("L12", 2, "total order: every pair comparable", _l12),
        Law("L13", 2, "divisibility: q <= p implies some r solves h(p,r)=q", _l13),
    )
}

DEFAULT_LAW_IDS = ("L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9", "L10", "L11")


@dataclass(frozen=True)
class LawSet:
    """Named, ordered selection of catalogued laws."""

    name: str
    law_ids: tuple[str, ...]

    def __post_init__(self):
        for law_id in self.law_ids:
            if law_id not in LAWS:
                raise ValueError(f"unknown law identifier: {law_id}")

    def __contains__(self, law_id: str) -> bool:
        return law_id in self.law_ids

    def __iter__(self):
        return iter(self.law_ids)

    def without(self, *drop: str) -> "LawSet":
        kept = tuple(l for l in self.law_ids if l not in drop)
        return LawSet(self.name + "".join(f"-{d}" for d in drop), kept)

    def plus(self, *add: str) -> "LawSet":
        extra = tuple(l for l in add if l not in self.law_ids)
        return LawSet(self.name + "".join(f"+{a}" for a in extra), self.law_ids + extra)


DEFAULT_LAW_SET = LawSet("default", DEFAULT_LAW_IDS)

LAW_SET_VARIANTS: dict[str, LawSet] = {
    "default": DEFAULT_LAW_SET,
    "no-L6": LawSet("no-L6", tuple(l for l in DEFAULT_LAW_IDS if l != "L6")),
    "divisible": LawSet("divisible", DEFAULT_LAW_IDS + ("L13",)),
    "no-L6-divisible": LawSet(
        "no-L6-divisible", tuple(l for l in DEFAULT_LAW_IDS if l != "L6") + ("L13",)
    ),
}


def parse_law_set(text: str, name: str = "custom") -> LawSet:
    """One law identifier per line; '#' starts a comment."""
    ids = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line not in LAWS:
            raise ValueError(f"line {lineno}: unknown law identifier {line!r}")
        ids.append(line)
    return LawSet(name, tuple(ids))


def format_law_set(law_set: LawSet) -> str:
    return "".join(f"{law_id}\n" for law_id in law_set.law_ids)


def load_law_set(path: str, name: Optional[str] = None) -> LawSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_law_set(fh.read(), name=name or path)


# ---------------------------------------------------------------------------


def check_law(
    algebra: ProbabilityAlgebra, law_id: str
) -> Optional[CounterexampleReport]:
    """Exhaustive check over a finite carrier.

    Quantifies in carrier rank order with lexicographic tuples, so the
    returned counterexample is deterministic.  Returns None on pass.
    """
    law = LAWS[law_id]
    carrier = list(algebra.carrier())
    eq = algebra.eq
    stack = [()]
    args: list = []

    def rec(depth: int):
        if depth == law.arity:
            return law.check(algebra, tuple(args), eq)
        for x in carrier:
            args.append(x)
            detail = rec(depth + 1)
            if detail is not None:
                return detail
            args.pop()
        return None

    detail = rec(0)
    if detail is None:
        return None
    return CounterexampleReport(law_id, tuple(args), detail)


def check_law_sampled(
    algebra: ProbabilityAlgebra,
    law_id: str,
    trials: int,
    tolerance: float,
    seed: int = 0,
) -> Optional[CounterexampleReport]:
    """Statistical check on `trials` independently sampled tuples.

    Equality uses |x - y| <= tolerance when tolerance > 0 (numeric carriers),
    exact equality otherwise.  Deterministic given the seed.
    """
    if tolerance < 0:
        raise ValueError(f"tolerance must be >= 0, got {tolerance}")
    law = LAWS[law_id]
    rng = random.Random(seed)
    if tolerance == 0:
        eq = algebra.eq
    else:
        eq = lambda x, y: abs(x - y) <= tolerance
    for _ in range(trials):
        args = tuple(algebra.sample(rng) for _ in range(law.arity))
        detail = law.check(algebra, args, eq)
        if detail is not None:
            return CounterexampleReport(law_id, args, detail)
    return None


def check_laws(
    algebra: ProbabilityAlgebra, law_set: LawSet
) -> list[CounterexampleReport]:
    """check_law aggregated over a law set; empty list means pass."""
    reports = []
    for law_id in law_set:
        report = check_law(algebra, law_id)
        if report is not None:
            reports.append(report)
    return reports
