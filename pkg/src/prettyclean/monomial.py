"""Monomials and monomial ideals over a fixed set of variables.

A monomial is a plain tuple of non-negative exponents.  A :class:`MonomialIdeal`
stores its minimal generators in a canonical order, so two ideals are equal
exactly when their generator tuples are equal.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Monomial = tuple  # tuple[int, ...]

MAX_EXPONENT = 2**31 - 1
DEFAULT_NAMES = ("x", "y", "z", "w")


class AmbientMismatch(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Ambient:
    n: int = 4
    names: tuple = DEFAULT_NAMES

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient needs at least one variable")
        if len(self.names) != self.n:
            raise ValueError(f"expected {self.n} variable names, got {len(self.names)}")
        if len(set(self.names)) != self.n:
            raise ValueError("variable names must be distinct")

    @classmethod
    def from_names(cls, names: Sequence[str]) -> "Ambient":
        names = tuple(s.strip() for s in names)
        return cls(len(names), names)

    def one(self) -> Monomial:
        return (0,) * self.n

    def var(self, i: int, e: int = 1) -> Monomial:
        return tuple(e if j == i else 0 for j in range(self.n))

    def index(self, name: str) -> int:
        return self.names.index(name)


DEFAULT_AMBIENT = Ambient()


# -- monomial arithmetic ------------------------------------------------------

def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / gcd(a, b)."""
    return tuple(x - min(x, y) for x, y in zip(a, b))


def degree(a: Monomial) -> int:
    return sum(a)


def support(a: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(a) if e)


def squarefree(a: Monomial) -> Monomial:
    return tuple(1 if e else 0 for e in a)


def grlex_key(a: Monomial):
    # ascending total degree; within a degree the lex-larger monomial (x > y > ...) comes first
    return (sum(a), tuple(-e for e in a))


def monomial_ops(m1: Monomial, m2: Monomial) -> dict:
    if len(m1) != len(m2):
        raise AmbientMismatch("monomials live in different ambients")
    return {
        "divides": divides(m1, m2),
        "lcm": lcm(m1, m2),
        "gcd": gcd(m1, m2),
        "quotient": quotient(m1, m2),
    }


def box(bound: Sequence[int]) -> Iterable[Monomial]:
    """All exponent vectors with 0 <= e_i <= bound[i]."""
    return itertools.product(*(range(b + 1) for b in bound))


def monomials_of_degree(n: int, t: int) -> Iterable[Monomial]:
    if n == 1:
        yield (t,)
        return
    for first in range(t, -1, -1):
        for rest in monomials_of_degree(n - 1, t - first):
            yield (first,) + rest


def format_monomial(m: Monomial, names: Sequence[str] = DEFAULT_NAMES) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# -- ideals --------------------------------------------------------------------

def _minimal(gens: Iterable[Monomial]) -> tuple:
    uniq = sorted(set(gens), key=grlex_key)
    kept: list = []
    for g in uniq:
        # anything dividing g has degree <= deg g and so is already in kept
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    ambient: Ambient
    gens: tuple = field(default=())

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.ambient.n:
                raise AmbientMismatch(f"generator {g} has wrong length for {self.ambient.n} variables")
            if any(e < 0 or e > MAX_EXPONENT for e in g):
                raise ValueError(f"exponent out of range in {g}")
        object.__setattr__(self, "gens", _minimal(tuple(g) for g in self.gens))

    # construction helpers
    @classmethod
    def unit(cls, ambient: Ambient = DEFAULT_AMBIENT) -> "MonomialIdeal":
        return cls(ambient, (ambient.one(),))

    @classmethod
    def zero(cls, ambient: Ambient = DEFAULT_AMBIENT) -> "MonomialIdeal":
        return cls(ambient, ())

    @classmethod
    def principal(cls, u: Monomial, ambient: Ambient = DEFAULT_AMBIENT) -> "MonomialIdeal":
        return cls(ambient, (tuple(u),))

    # predicates
    @property
    def n(self) -> int:
        return self.ambient.n

    def is_unit(self) -> bool:
        return self.gens == (self.ambient.one(),)

    def is_zero(self) -> bool:
        return not self.gens

    def is_proper(self) -> bool:
        return not self.is_unit()

    def __contains__(self, m: Monomial) -> bool:
        if len(m) != self.n:
            raise AmbientMismatch("monomial and ideal live in different ambients")
        return any(divides(g, m) for g in self.gens)

    def issubset(self, other: "MonomialIdeal") -> bool:
        self._check(other)
        return all(g in other for g in self.gens)

    def lcm_exponents(self) -> Monomial:
        out = self.ambient.one()
        for g in self.gens:
            out = lcm(out, g)
        return out

    # arithmetic
    def _check(self, other: "MonomialIdeal") -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatch("ideals live in different ambients")

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.ambient, self.gens + other.gens)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.ambient, [lcm(a, b) for a in self.gens for b in other.gens])

    def add(self, *monomials: Monomial) -> "MonomialIdeal":
        return MonomialIdeal(self.ambient, self.gens + tuple(tuple(m) for m in monomials))

    def colon(self, u: Monomial) -> "MonomialIdeal":
        if len(u) != self.n:
            raise AmbientMismatch("monomial and ideal live in different ambients")
        return MonomialIdeal(self.ambient, [quotient(g, u) for g in self.gens])

    def radical(self) -> "MonomialIdeal":
        return MonomialIdeal(self.ambient, [squarefree(g) for g in self.gens])

    def permuted(self, perm: Sequence[int]) -> "MonomialIdeal":
        """Rename variable i to variable perm[i]."""
        return MonomialIdeal(self.ambient, [permute(g, perm) for g in self.gens])

    def standard_monomials(self, bound: Sequence[int]) -> list:
        return [m for m in box(bound) if m not in self]

    def format(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, self.ambient.names) for g in self.gens) + ")"

    def gen_strings(self) -> list:
        return [format_monomial(g, self.ambient.names) for g in self.gens]

    def __str__(self) -> str:
        return self.format()


def permute(m: Monomial, perm: Sequence[int]) -> Monomial:
    out = [0] * len(m)
    for i, e in enumerate(m):
        out[perm[i]] = e
    return tuple(out)


def minimalize(gens: Iterable[Monomial], ambient: Ambient = DEFAULT_AMBIENT) -> MonomialIdeal:
    return MonomialIdeal(ambient, tuple(gens))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I + J


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    if not ideals:
        raise ValueError("intersect needs at least one ideal")
    out = ideals[0]
    for J in ideals[1:]:
        out = out & J
    return out


def colon(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    return I.colon(u)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return I.radical()


def membership(I: MonomialIdeal, m: Monomial) -> bool:
    return m in I


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I.issubset(J) and J.issubset(I)


# -- primes --------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialPrime:
    vars: tuple

    def __post_init__(self):
        vs = tuple(sorted(set(self.vars)))
        if not vs:
            raise ValueError("a monomial prime needs at least one variable")
        object.__setattr__(self, "vars", vs)

    @property
    def height(self) -> int:
        return len(self.vars)

    def ideal(self, ambient: Ambient = DEFAULT_AMBIENT) -> MonomialIdeal:
        return MonomialIdeal(ambient, [ambient.var(i) for i in self.vars])

    def complement(self, n: int) -> tuple:
        return tuple(i for i in range(n) if i not in self.vars)

    def permuted(self, perm: Sequence[int]) -> "MonomialPrime":
        return MonomialPrime(tuple(perm[i] for i in self.vars))

    def names(self, ambient: Ambient = DEFAULT_AMBIENT) -> list:
        return [ambient.names[i] for i in self.vars]

    def format(self, ambient: Ambient = DEFAULT_AMBIENT) -> str:
        return "(" + ",".join(self.names(ambient)) + ")"

    def issubset(self, other: "MonomialPrime") -> bool:
        return set(self.vars) <= set(other.vars)

    def sort_key(self):
        return (len(self.vars), self.vars)


def prime_of(I: MonomialIdeal):
    """The MonomialPrime equal to ``I`` if ``I`` is generated by variables, else None."""
    if not I.gens or I.is_unit():
        return None
    vs = []
    for g in I.gens:
        if sum(g) != 1:
            return None
        vs.append(g.index(1))
    return MonomialPrime(tuple(vs))


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[(),*^]))")


class _Parser:
    def __init__(self, text: str, ambient: Ambient):
        self.text = text
        self.ambient = ambient
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def take(self, value=None, kind=None):
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def ideal(self) -> MonomialIdeal:
        tok = self.peek()
        if tok[0] == "name" and tok[1] == "intersect":
            self.take("intersect")
            self.take("(")
            parts = [self.ideal()]
            while self.peek()[1] == ",":
                self.take(",")
                parts.append(self.ideal())
            self.take(")")
            return intersect(*parts)
        self.take("(")
        gens = []
        m = self.monomial()
        if m is not None:
            gens.append(m)
        while self.peek()[1] == ",":
            self.take(",")
            m = self.monomial()
            if m is not None:
                gens.append(m)
        self.take(")")
        return MonomialIdeal(self.ambient, gens)

    def monomial(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            if tok[1] == "1":
                return self.ambient.one()
            if tok[1] == "0":
                return None
            raise ParseError(f"coefficients are not supported: {tok[1]!r}", tok[2])
        exps = [0] * self.ambient.n
        self.term(exps)
        while self.peek()[1] == "*":
            self.take("*")
            self.term(exps)
        return tuple(exps)

    def term(self, exps):
        kind, name, pos = self.take(kind="name")
        if name not in self.ambient.names:
            raise ParseError(f"unknown variable {name!r}", pos)
        e = 1
        if self.peek()[1] == "^":
            self.take("^")
            _, digits, dpos = self.take(kind="int")
            e = int(digits)
            if e > MAX_EXPONENT:
                raise ParseError("exponent too large", dpos)
        exps[self.ambient.index(name)] += e
        if exps[self.ambient.index(name)] > MAX_EXPONENT:
            raise ParseError("exponent too large", pos)


def parse_ideal(text: str, ambient: Ambient = DEFAULT_AMBIENT) -> MonomialIdeal:
    p = _Parser(text, ambient)
    I = p.ideal()
    tok = p.peek()
    if tok[0] != "eof":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return I


def parse_monomial(text: str, ambient: Ambient = DEFAULT_AMBIENT) -> Monomial:
    p = _Parser(text, ambient)
    m = p.monomial()
    tok = p.peek()
    if tok[0] != "eof":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    if m is None:
        raise ParseError("zero is not a monomial", 0)
    return m
