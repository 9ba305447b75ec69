"""Dimension filtrations, prime filtrations and their verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .decomposition import minimal_primes, primary_components, ass_primes
from .errors import InternalVerificationFailure, UnverifiedFiltration
from .monomial import (
    MonomialIdeal,
    MonomialPrime,
    degree,
    format_monomial,
    intersect,
    mul,
    prime_of,
)
from . import oracle


@dataclass(frozen=True)
class DimensionFiltration:
    """Levels D_{-1} = I, D_0, ..., D_{n-1} = S."""

    ideal: MonomialIdeal
    levels: tuple

    def level(self, i: int) -> MonomialIdeal:
        return self.levels[i + 1]

    def to_json(self) -> list:
        return [{"level": i - 1, "gens": D.gen_strings()} for i, D in enumerate(self.levels)]


@dataclass(frozen=True)
class FiltrationStep:
    u: tuple
    prime: MonomialPrime

    @property
    def shift(self) -> int:
        return degree(self.u)


@dataclass
class PrimeFiltration:
    """Steps (u_i, P_i) with F_i = F_{i-1} + (u_i) and (F_{i-1} : u_i) = P_i.

    ``target`` is the last ideal of the chain; None means the unit ideal.
    """

    base: MonomialIdeal
    steps: list = field(default_factory=list)
    target: Optional[MonomialIdeal] = None

    def ideals(self) -> list:
        """The chain F_0 = base, F_1, ..., F_r."""
        out = [self.base]
        for s in self.steps:
            out.append(out[-1].add(s.u))
        return out

    def primes(self) -> list:
        return [s.prime for s in self.steps]

    def to_json(self, classification: Optional[dict] = None) -> dict:
        amb = self.base.ambient
        out = {
            "base": self.base.gen_strings(),
            "steps": [{"u": format_monomial(s.u, amb.names), "prime": s.prime.names(amb)} for s in self.steps],
        }
        if classification is not None:
            out.update(classification)
        return out


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failing_step: Optional[int] = None
    reason: str = ""


def dimension_filtration(I: MonomialIdeal) -> DimensionFiltration:
    n = I.n
    comps = primary_components(I)
    levels = []
    for i in range(-1, n):
        keep = [c.ideal for c in comps if n - c.radical.height > i]
        levels.append(intersect(*keep) if keep else MonomialIdeal.unit(I.ambient))
    return DimensionFiltration(I, tuple(levels))


def principal_part(I: MonomialIdeal) -> tuple:
    """The monomial u with D_{n-2}(I) = (u); 1 when that level is S."""
    D = dimension_filtration(I).level(I.n - 2)
    if len(D.gens) != 1:
        raise InternalVerificationFailure(f"codimension-1 level {D} is not principal")
    return D.gens[0]


def verify_prime_filtration(pf: PrimeFiltration) -> VerificationReport:
    F = pf.base
    for k, step in enumerate(pf.steps):
        if step.u in F:
            return VerificationReport(False, k, "step monomial already in the ideal")
        expected = step.prime.ideal(F.ambient)
        if F.colon(step.u) != expected:
            return VerificationReport(False, k, f"colon is {F.colon(step.u)}, expected {expected}")
        F = F.add(step.u)
    end = pf.target if pf.target is not None else MonomialIdeal.unit(F.ambient)
    if F != end:
        return VerificationReport(False, len(pf.steps), f"chain ends at {F}, not {end}")
    return VerificationReport(True)


def classify_filtration(pf: PrimeFiltration, verified: bool = False) -> dict:
    if not verified and not verify_prime_filtration(pf).ok:
        raise UnverifiedFiltration("classify_filtration needs a verified prime filtration")
    primes = pf.primes()
    pretty = not any(
        primes[i] != primes[j] and primes[i].issubset(primes[j])
        for i in range(len(primes))
        for j in range(i, len(primes))
    )
    if pf.base.is_unit():
        clean = True
    else:
        mins = set(minimal_primes(pf.base))
        clean = all(p in mins for p in primes)
    return {"clean": clean, "pretty_clean": pretty}


def lift(steps, multiplier: tuple) -> list:
    """Lift a filtration of S/(F : m) to the interval F ⊆ F + (m)."""
    return [FiltrationStep(mul(s.u, multiplier), s.prime) for s in steps]


def codim2_layer(I: MonomialIdeal):
    """(D_{n-3}, u, D_{n-3} : u) for the dimension-(n-2) factor."""
    dims = dimension_filtration(I)
    n = I.n
    u = principal_part(I)
    D = dims.level(n - 3)
    return D, u, D.colon(u)


def is_scm(I: MonomialIdeal) -> bool:
    """Whether S/I is sequentially Cohen-Macaulay (four variables).

    The factors D_0/I and D_1/D_0 are CM automatically (finite length, resp.
    dimension one with the maximal ideal not associated) and S/D_2 = S/(u) is
    a hypersurface, so only D_2/D_1 ≅ S/(D_1 : u) needs the depth oracle.
    """
    if I.n != 4:
        raise ValueError("is_scm is implemented for four variables only")
    if I.is_zero() or I.is_unit():
        raise ValueError("is_scm needs a proper non-zero ideal")
    D1, u, J = codim2_layer(I)
    if J.is_unit():
        return True
    bad = [p for p in ass_primes(J) if p.height != 2]
    if bad:
        raise InternalVerificationFailure(f"codimension-2 layer {J} has associated primes {bad}")
    return oracle.is_cm(J)


def layer_hilbert_identity(I: MonomialIdeal, tmax: int) -> bool:
    """HF(S/D_1) - HF(S/D_2) equals HF(S/(D_1 : u)) shifted by deg(u)."""
    dims = dimension_filtration(I)
    n = I.n
    D1, D2 = dims.level(n - 3), dims.level(n - 2)
    u = principal_part(I)
    lhs = [a - b for a, b in zip(oracle.hilbert_function(D1, tmax), oracle.hilbert_function(D2, tmax))]
    J = D1.colon(u)
    d = degree(u)
    hj = [0] * (tmax + 1) if J.is_unit() else oracle.hilbert_function(J, tmax)
    rhs = [hj[t - d] if t >= d else 0 for t in range(tmax + 1)]
    return lhs == rhs


def scm_report(I: MonomialIdeal) -> dict:
    dims = dimension_filtration(I)
    u = principal_part(I)
    return {
        "dimfilt": dims.to_json(),
        "u": format_monomial(u, I.ambient.names),
        "scm": is_scm(I) if I.n == 4 else None,
    }


def prime_filtration_from_ideals(base: MonomialIdeal, monomials) -> PrimeFiltration:
    """Build steps from a list of monomials, reading each prime off the colon.

    Raises ValueError when some colon is not a prime ideal.
    """
    F = base
    steps = []
    for u in monomials:
        P = prime_of(F.colon(u))
        if P is None:
            raise ValueError(f"({F} : {format_monomial(u, F.ambient.names)}) is not a monomial prime")
        steps.append(FiltrationStep(tuple(u), P))
        F = F.add(u)
    return PrimeFiltration(base, steps)
