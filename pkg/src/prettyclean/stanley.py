"""Stanley decompositions read off prime filtrations."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnverifiedFiltration
from .filtration import PrimeFiltration, verify_prime_filtration
from .monomial import MonomialIdeal, box, divides, format_monomial, lcm
from . import oracle


@dataclass(frozen=True)
class StanleySpace:
    """The K-space u * K[Z]."""

    u: tuple
    free: tuple  # variable indices in Z

    def __contains__(self, m) -> bool:
        if not divides(self.u, m):
            return False
        return all(i in self.free for i, (a, b) in enumerate(zip(m, self.u)) if a > b)


@dataclass
class StanleyDecomposition:
    ideal: MonomialIdeal
    spaces: list = field(default_factory=list)

    @property
    def sdepth(self) -> int:
        if not self.spaces:
            return self.ideal.n
        return min(len(s.free) for s in self.spaces)

    def to_json(self) -> list:
        names = self.ideal.ambient.names
        return [{"u": format_monomial(s.u, names), "free": [names[i] for i in s.free]} for s in self.spaces]


def to_stanley(pf: PrimeFiltration, verified: bool = False) -> StanleyDecomposition:
    """One space u_i K[Z_i] per step, Z_i the variables outside P_i."""
    if pf.target is not None:
        raise UnverifiedFiltration("only full filtrations of S/I give Stanley decompositions")
    if not verified and not verify_prime_filtration(pf).ok:
        raise UnverifiedFiltration("to_stanley needs a verified prime filtration")
    n = pf.base.n
    spaces = [StanleySpace(s.u, s.prime.complement(n)) for s in pf.steps]
    return StanleyDecomposition(pf.base, spaces)


def default_box(sd: StanleyDecomposition) -> tuple:
    bound = sd.ideal.lcm_exponents()
    for s in sd.spaces:
        bound = lcm(bound, s.u)
    return tuple(b + 1 for b in bound)


def verify_stanley(sd: StanleyDecomposition, bound=None) -> bool:
    """Box check: every monomial outside I lies in exactly one space, none inside I."""
    bound = tuple(bound) if bound is not None else default_box(sd)
    for m in box(bound):
        hits = sum(1 for s in sd.spaces if m in s)
        if m in sd.ideal:
            if hits:
                return False
        elif hits != 1:
            return False
    return True


def stanley_report(I: MonomialIdeal, sd: StanleyDecomposition) -> dict:
    sdepth = sd.sdepth
    d = I.n if I.is_unit() else oracle.depth(I)
    return {"sdepth": sdepth, "depth": d, "stanley_ok": sdepth >= d}
