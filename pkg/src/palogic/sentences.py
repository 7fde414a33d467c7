"""The free boolean algebra of sentences over primitive propositions.

Equivalence is decided by exhaustive valuation, capped at ATOM_CAP atoms.
TRUE and FALSE are canonical singleton sentences, so the certain and the
absurd hypothesis do not depend on a choice of designated atom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping

ATOM_CAP = 16


class AtomCapError(ValueError):
    pass


class SentenceParseError(ValueError):
    pass


@dataclass(frozen=True)
class Sentence:
    pass


@dataclass(frozen=True)
class Atom(Sentence):
    name: str


@dataclass(frozen=True)
class Not(Sentence):
    arg: Sentence


@dataclass(frozen=True)
class And(Sentence):
    left: Sentence
    right: Sentence


@dataclass(frozen=True)
class Or(Sentence):
    left: Sentence
    right: Sentence


@dataclass(frozen=True)
class _Top(Sentence):
    pass


@dataclass(frozen=True)
class _Bottom(Sentence):
    pass


TOP = _Top()
BOTTOM = _Bottom()


def atoms(s: Sentence) -> tuple[str, ...]:
    found: set[str] = set()

    def walk(t: Sentence):
        if isinstance(t, Atom):
            found.add(t.name)
        elif isinstance(t, Not):
            walk(t.arg)
        elif isinstance(t, (And, Or)):
            walk(t.left)
            walk(t.right)

    walk(s)
    return tuple(sorted(found))


def evaluate(s: Sentence, valuation: Mapping[str, bool]) -> bool:
    if isinstance(s, Atom):
        return valuation[s.name]
    if isinstance(s, Not):
        return not evaluate(s.arg, valuation)
    if isinstance(s, And):
        return evaluate(s.left, valuation) and evaluate(s.right, valuation)
    if isinstance(s, Or):
        return evaluate(s.left, valuation) or evaluate(s.right, valuation)
    if s is TOP:
        return True
    if s is BOTTOM:
        return False
    raise TypeError(f"not a sentence: {s!r}")


def _check_cap(names: tuple[str, ...], cap: int):
    if len(names) > cap:
        raise AtomCapError(f"{len(names)} atoms exceed the cap of {cap}")


def truth_mask(s: Sentence, names: tuple[str, ...]) -> int:
    """Bitmask of `s` over all valuations of `names`; bit k is the
    valuation where atom j is true iff bit j of k is set."""
    mask = 0
    for k in range(1 << len(names)):
        valuation = {name: bool(k >> j & 1) for j, name in enumerate(names)}
        if evaluate(s, valuation):
            mask |= 1 << k
    return mask


def equivalent(a: Sentence, b: Sentence, cap: int = ATOM_CAP) -> bool:
    names = tuple(sorted(set(atoms(a)) | set(atoms(b))))
    _check_cap(names, cap)
    return truth_mask(a, names) == truth_mask(b, names)


def is_absurd(q: Sentence, cap: int = ATOM_CAP) -> bool:
    names = atoms(q)
    _check_cap(names, cap)
    return truth_mask(q, names) == 0


def is_tautology(q: Sentence, cap: int = ATOM_CAP) -> bool:
    names = atoms(q)
    _check_cap(names, cap)
    return truth_mask(q, names) == (1 << (1 << len(names))) - 1


def semantic_key(s: Sentence, cap: int = ATOM_CAP) -> tuple[tuple[str, ...], int]:
    """Canonical identity of the boolean function: (relevant atoms, mask).

    Irrelevant atoms are projected away, so boolean-equivalent sentences
    share a key regardless of which atoms they happen to mention.
    """
    names = atoms(s)
    _check_cap(names, cap)
    mask = truth_mask(s, names)
    relevant = []
    for j, name in enumerate(names):
        bit = 1 << j
        for k in range(1 << len(names)):
            if not k & bit and (mask >> k & 1) != (mask >> (k | bit) & 1):
                relevant.append(name)
                break
    if len(relevant) != len(names):
        reduced = 0
        for k in range(1 << len(relevant)):
            valuation = {name: False for name in names}
            for j, name in enumerate(relevant):
                valuation[name] = bool(k >> j & 1)
            if evaluate(s, valuation):
                reduced |= 1 << k
        return tuple(relevant), reduced
    return names, mask


# ---------------------------------------------------------------------------
# text form

_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_]*)|([&|~()]))")


def _tokens(text: str) -> Iterator[tuple[str, str]]:
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SentenceParseError(f"bad character at position {pos}: {text[pos:]!r}")
        pos = m.end()
        if m.group(1):
            yield ("word", m.group(1))
        else:
            yield ("op", m.group(2))
    yield ("end", "")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.stream = _tokens(text)
        self.current = next(self.stream)

    def advance(self):
        self.current = next(self.stream)

    def expect_op(self, op: str):
        if self.current != ("op", op):
            raise SentenceParseError(f"expected {op!r}, found {self.current[1]!r}")
        self.advance()

    def parse(self) -> Sentence:
        s = self.or_expr()
        if self.current[0] != "end":
            raise SentenceParseError(f"trailing input: {self.current[1]!r}")
        return s

    def or_expr(self) -> Sentence:
        s = self.and_expr()
        while self.current == ("op", "|"):
            self.advance()
            s = Or(s, self.and_expr())
        return s

    def and_expr(self) -> Sentence:
        s = self.unary()
        while self.current == ("op", "&"):
            self.advance()
            s = And(s, self.unary())
        return s

    def unary(self) -> Sentence:
        if self.current == ("op", "~"):
            self.advance()
            return Not(self.unary())
        kind, value = self.current
        if kind == "word":
            self.advance()
            if value == "TRUE":
                return TOP
            if value == "FALSE":
                return BOTTOM
            return Atom(value)
        if self.current == ("op", "("):
            self.advance()
            s = self.or_expr()
            self.expect_op(")")
            return s
        raise SentenceParseError(f"unexpected {value!r} in {self.text!r}")


def parse_sentence(text: str) -> Sentence:
    return _Parser(text).parse()


def format_sentence(s: Sentence) -> str:
    def go(t: Sentence, parent: str) -> str:
        if isinstance(t, Atom):
            return t.name
        if t is TOP:
            return "TRUE"
        if t is BOTTOM:
            return "FALSE"
        if isinstance(t, Not):
            return "~" + go(t.arg, "~")
        if isinstance(t, And):
            body = f"{go(t.left, '&')} & {go(t.right, '&')}"
            return f"({body})" if parent == "~" else body
        if isinstance(t, Or):
            body = f"{go(t.left, '|')} | {go(t.right, '|')}"
            return f"({body})" if parent in ("~", "&") else body
        raise TypeError(f"not a sentence: {t!r}")

    return go(s, "")
