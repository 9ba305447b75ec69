"""Irreducible and primary decomposition of monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .monomial import (
    Ambient,
    MonomialIdeal,
    MonomialPrime,
    grlex_key,
    intersect,
)


class ImproperIdeal(ValueError):
    """Raised when an operation needs a proper, non-zero ideal."""


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal (x_i^{a_i} : a_i > 0), stored as the exponent vector a."""

    exponents: tuple

    def __post_init__(self):
        if not any(self.exponents):
            raise ValueError("irreducible component must have at least one generator")
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")

    @property
    def prime(self) -> MonomialPrime:
        return MonomialPrime(tuple(i for i, e in enumerate(self.exponents) if e))

    def entries(self) -> dict:
        return {i: e for i, e in enumerate(self.exponents) if e}

    def ideal(self, ambient: Ambient) -> MonomialIdeal:
        return MonomialIdeal(ambient, [ambient.var(i, e) for i, e in self.entries().items()])

    def to_json(self, ambient: Ambient) -> dict:
        return {ambient.names[i]: e for i, e in self.entries().items()}


@dataclass(frozen=True)
class PrimaryComponent:
    ideal: MonomialIdeal
    radical: MonomialPrime
    irreducibles: tuple = ()

    def to_json(self) -> dict:
        amb = self.ideal.ambient
        return {"radical": self.radical.names(amb), "gens": self.ideal.gen_strings()}


def _check_proper(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise ImproperIdeal("the zero ideal has no irreducible decomposition")
    if I.is_unit():
        raise ImproperIdeal("the unit ideal has no irreducible decomposition")


def _split_target(gens):
    """First non-pure-power generator and the index of its first variable."""
    for g in gens:  # gens are canonically sorted
        supp = [i for i, e in enumerate(g) if e]
        if len(supp) > 1:
            return g, supp[0]
    return None, None


@lru_cache(maxsize=65536)
def _irreducibles(n: int, gens: tuple) -> frozenset:
    g, i = _split_target(gens)
    if g is None:
        exps = [0] * n
        for h in gens:
            j = next(k for k, e in enumerate(h) if e)
            exps[j] = h[j]
        return frozenset([tuple(exps)])
    # (G, x_i^a * h) = (G, x_i^a) ∩ (G, h) for coprime x_i^a, h
    rest = [h for h in gens if h != g]
    power = tuple(g[i] if k == i else 0 for k in range(n))
    cofactor = tuple(0 if k == i else e for k, e in enumerate(g))
    amb = Ambient(n, tuple(f"v{k}" for k in range(n)))
    left = MonomialIdeal(amb, rest + [power]).gens
    right = MonomialIdeal(amb, rest + [cofactor]).gens
    return _irreducibles(n, left) | _irreducibles(n, right)


def _contains(big: tuple, small: tuple) -> bool:
    """Whether irreducible ideal ``big`` contains irreducible ideal ``small``."""
    # every generator x_i^{s_i} of small must be divisible by x_i^{b_i} of big
    return all(s == 0 or (b and b <= s) for b, s in zip(big, small))


def _irredundant(comps) -> list:
    comps = sorted(set(comps), key=grlex_key)
    kept = list(comps)
    for c in comps:
        # an irreducible component is redundant iff it contains another one
        if any(d != c and _contains(c, d) for d in kept):
            kept.remove(c)
    return kept


def irreducible_decomposition(I: MonomialIdeal) -> list:
    _check_proper(I)
    comps = _irredundant(_irreducibles(I.n, I.gens))
    return [IrreducibleComponent(c) for c in comps]


def primary_components(I: MonomialIdeal) -> list:
    groups: dict = {}
    for comp in irreducible_decomposition(I):
        groups.setdefault(comp.prime, []).append(comp)
    out = []
    for prime in sorted(groups, key=lambda p: p.sort_key()):
        comps = groups[prime]
        Q = intersect(*(c.ideal(I.ambient) for c in comps))
        out.append(PrimaryComponent(Q, prime, tuple(comps)))
    return out


def ass_primes(I: MonomialIdeal) -> list:
    return sorted({c.prime for c in irreducible_decomposition(I)}, key=lambda p: p.sort_key())


def minimal_primes(I: MonomialIdeal) -> list:
    ps = ass_primes(I)
    return [p for p in ps if not any(q != p and q.issubset(p) for q in ps)]


def height(I: MonomialIdeal) -> int:
    return min(p.height for p in ass_primes(I))


def dim(I: MonomialIdeal) -> int:
    """Krull dimension of S/I (the zero ideal gives n)."""
    if I.is_unit():
        raise ImproperIdeal("S/S has no dimension")
    if I.is_zero():
        return I.n
    return I.n - height(I)


def height_dim(I) -> dict:
    if isinstance(I, MonomialPrime):
        raise TypeError("pass the prime as an ideal, e.g. P.ideal(ambient)")
    h = 0 if I.is_zero() else height(I)
    return {"height": h, "dim": I.n - h}


def decomposition_json(I: MonomialIdeal) -> dict:
    amb = I.ambient
    return {
        "irreducible": [c.to_json(amb) for c in irreducible_decomposition(I)],
        "primary": [c.to_json() for c in primary_components(I)],
        "ass": [p.names(amb) for p in ass_primes(I)],
    }
