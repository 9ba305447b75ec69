"""Clean and pretty clean prime filtrations in four variables.

The height-2 layer is handled by configuration: the set of height-2
associated primes is a graph on the four variables, and there are ten such
graphs up to relabeling.  Each kind has a Cohen-Macaulay criterion made of
inclusions ``P_i ⊆ P_j + P_k`` between primary components, and a peeling
recipe: choose an irreducible component Q = (v^a, w^b) with b maximal, then
filter

    I ⊆ (I, v^a) ⊆ Q ⊆ S

using (I, v^a)/I ≅ S/(I : v^a) and Q/(I, v^a) ≅ S/((I, v^a) : w^b), both of
which are handled recursively.  Every filtration is re-verified before it is
returned.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .decomposition import ass_primes, irreducible_decomposition, primary_components
from .errors import (
    InternalVerificationFailure,
    NotCohenMacaulay,
    NotSequentiallyCM,
    SearchExhausted,
)
from .filtration import (
    FiltrationStep,
    PrimeFiltration,
    classify_filtration,
    dimension_filtration,
    is_scm,
    lift,
    principal_part,
    verify_prime_filtration,
)
from .monomial import (
    MonomialIdeal,
    MonomialPrime,
    box,
    grlex_key,
    lcm,
    quotient,
)

log = logging.getLogger(__name__)

X, Y, Z, W = range(4)


@dataclass(frozen=True)
class Kind:
    name: str
    primes: tuple  # canonical P_1, P_2, ... as variable pairs
    clauses: tuple = ()  # conjunction of disjunctions of (i, j, k): P_i ⊆ P_j + P_k
    case: tuple = ()  # inclusions assumed by the worked case
    rule: Optional[Callable] = None  # canonical ideal -> (v, w)
    always: Optional[bool] = None  # None: decided by the clauses


def _max_power(J: MonomialIdeal, pair, var) -> int:
    prime = MonomialPrime(pair)
    return max((c.exponents[var] for c in irreducible_decomposition(J) if c.prime == prime), default=0)


def _five_rule(J: MonomialIdeal):
    # peel (x^a, y^b) unless some (y,z)-component carries a larger power of y,
    # in which case peel (y^r, z^t) along z
    b = _max_power(J, (X, Y), Y)
    r = _max_power(J, (Y, Z), Y)
    return (X, Y) if r <= b else (Z, Y)


KINDS = (
    Kind("Single", ((X, Y),), always=True),
    Kind("TwoShared", ((X, Y), (X, Z)), rule=lambda J: (X, Y), always=True),
    Kind("TwoDisjoint", ((X, Y), (Z, W)), always=False),
    Kind("Triangle", ((X, Y), (X, Z), (Y, Z)), rule=lambda J: (X, Y), always=True),
    Kind("Star3", ((X, Y), (X, Z), (X, W)), rule=lambda J: (X, Y), always=True),
    Kind(
        "Path3",
        ((X, Y), (X, Z), (Z, W)),
        clauses=(((2, 1, 3),),),
        case=((2, 1, 3),),
        rule=lambda J: (Z, W),
    ),
    Kind(
        "Paw4",
        ((X, Y), (X, W), (Y, W), (X, Z)),
        clauses=(((1, 3, 4), (2, 3, 4)),),
        case=((1, 3, 4),),
        rule=lambda J: (X, Y),
    ),
    Kind(
        "Cycle4",
        ((X, Y), (X, Z), (Z, W), (Y, W)),
        clauses=(((1, 2, 4), (3, 2, 4)), ((2, 1, 3), (4, 1, 3))),
        case=((1, 2, 4), (2, 1, 3)),
        rule=lambda J: (X, Y),
    ),
    Kind(
        "Five",
        ((X, Y), (X, Z), (Z, W), (Y, W), (Y, Z)),
        clauses=(((1, 2, 4), (3, 2, 4), (5, 2, 4)), ((2, 1, 3), (4, 1, 3), (5, 1, 3))),
        case=((1, 2, 4), (2, 1, 3)),
        rule=_five_rule,
    ),
    Kind(
        "Six",
        ((X, Y), (X, Z), (Z, W), (Y, W), (Y, Z), (X, W)),
        clauses=(
            ((1, 5, 6), (2, 5, 6), (3, 5, 6), (4, 5, 6)),
            ((1, 2, 4), (3, 2, 4), (5, 2, 4), (6, 2, 4)),
            ((2, 1, 3), (4, 1, 3), (5, 1, 3), (6, 1, 3)),
        ),
        case=((1, 5, 6), (1, 2, 4), (2, 1, 3)),
        rule=lambda J: (X, Y),
    ),
)
KIND_BY_NAME = {k.name: k for k in KINDS}
KIND_NAMES = tuple(k.name for k in KINDS)
UNCONDITIONAL = ("Single", "TwoShared", "Triangle", "Star3")
CONDITIONAL = ("Path3", "Paw4", "Cycle4", "Five", "Six")


def _prime_set(kind: Kind) -> frozenset:
    return frozenset(MonomialPrime(p) for p in kind.primes)


@dataclass(frozen=True)
class AssConfiguration:
    kind: str
    perm: tuple  # input variable i becomes canonical variable perm[i]

    @property
    def inverse(self) -> tuple:
        inv = [0] * 4
        for i, j in enumerate(self.perm):
            inv[j] = i
        return tuple(inv)

    def canonical_prime(self, index: int) -> MonomialPrime:
        """The input-coordinate prime playing the role of P_index (1-based)."""
        return MonomialPrime(KIND_BY_NAME[self.kind].primes[index - 1]).permuted(self.inverse)

    def to_json(self, ambient) -> dict:
        return {"config": self.kind, "perm": [ambient.names[j] for j in self.perm]}


@lru_cache(maxsize=None)
def _classify(primes: frozenset) -> AssConfiguration:
    found = []
    for kind in KINDS:
        target = _prime_set(kind)
        if len(target) != len(primes):
            continue
        for perm in itertools.permutations(range(4)):
            if frozenset(p.permuted(perm) for p in primes) == target:
                found.append(AssConfiguration(kind.name, perm))
                break
    if len(found) != 1:
        raise InternalVerificationFailure(f"{len(found)} configuration kinds match {sorted(primes, key=lambda p: p.vars)}")
    return found[0]


def classify_ass_config(primes) -> AssConfiguration:
    primes = frozenset(primes)
    if not 1 <= len(primes) <= 6:
        raise ValueError("expected between one and six height-2 primes")
    for p in primes:
        if p.height != 2 or max(p.vars) > 3:
            raise ValueError(f"{p.vars} is not a height-2 prime in four variables")
    return _classify(primes)


@dataclass(frozen=True)
class CmConditionReport:
    kind: str
    clauses: tuple  # ((label, holds), ...)
    satisfied: bool

    def to_json(self) -> dict:
        return {
            "clauses": [{"test": label, "holds": holds} for label, holds in self.clauses],
            "satisfied": self.satisfied,
        }

    def failing(self) -> list:
        return [label for label, holds in self.clauses if not holds]


def _components_by_prime(comps) -> dict:
    return {c.radical: c.ideal for c in comps}


def _inclusion(by_prime: dict, config: AssConfiguration, i: int, j: int, k: int) -> bool:
    Pi, Pj, Pk = (by_prime[config.canonical_prime(t)] for t in (i, j, k))
    return Pi.issubset(Pj + Pk)


def cm_condition(config: AssConfiguration, comps) -> CmConditionReport:
    kind = KIND_BY_NAME[config.kind]
    by_prime = _components_by_prime(comps)
    expected = {config.canonical_prime(t) for t in range(1, len(kind.primes) + 1)}
    if set(by_prime) != expected:
        raise ValueError("primary components do not match the configuration")
    clauses = []
    ok = True
    for group in kind.clauses:
        hold_any = False
        for i, j, k in group:
            holds = _inclusion(by_prime, config, i, j, k)
            clauses.append((f"P{i} ⊆ P{j}+P{k}", holds))
            hold_any = hold_any or holds
        ok = ok and hold_any
    if kind.always is not None:
        ok = kind.always
    return CmConditionReport(config.kind, tuple(clauses), ok)


def layer_condition(J: MonomialIdeal):
    """Configuration and criterion report for a height-2-pure ideal."""
    comps = primary_components(J)
    if any(c.radical.height != 2 for c in comps):
        raise ValueError(f"{J} has associated primes of height other than 2")
    config = classify_ass_config([c.radical for c in comps])
    return config, cm_condition(config, comps)


# -- building blocks -----------------------------------------------------------

def clean_filtration_primary(Q: MonomialIdeal, P: MonomialPrime) -> PrimeFiltration:
    """Peel the standard monomials of a P-primary ideal, socle first."""
    if Q.radical() != P.ideal(Q.ambient):
        raise ValueError(f"{Q} is not primary to {P.format(Q.ambient)}")
    if any(e and i not in P.vars for g in Q.gens for i, e in enumerate(g)):
        raise ValueError(f"{Q} has generators outside the variables of {P.format(Q.ambient)}")
    standard = Q.standard_monomials(Q.lcm_exponents())
    standard.sort(key=lambda m: (-sum(m), grlex_key(m)))
    pf = PrimeFiltration(Q, [FiltrationStep(m, P) for m in standard])
    _verified(pf)
    return pf


def clean_filtration_principal(u: tuple, ambient=None) -> PrimeFiltration:
    """Divide u by one variable at a time: S/(u) has factors S/(x_i)."""
    if not any(u):
        raise ValueError("u = 1 gives the unit ideal, which has an empty filtration")
    ambient = ambient or MonomialIdeal.unit().ambient
    steps = []
    cur = list(u)
    for i, e in enumerate(u):
        for _ in range(e):
            cur[i] -= 1
            steps.append(FiltrationStep(tuple(cur), MonomialPrime((i,))))
    pf = PrimeFiltration(MonomialIdeal.principal(u, ambient), steps)
    _verified(pf)
    return pf


def _verified(pf: PrimeFiltration) -> PrimeFiltration:
    report = verify_prime_filtration(pf)
    if not report.ok:
        raise InternalVerificationFailure(f"step {report.failing_step}: {report.reason}")
    return pf


# -- the height-2 layer ----------------------------------------------------------

def _automorphisms(kind: Kind) -> list:
    target = _prime_set(kind)
    return [s for s in itertools.permutations(range(4)) if frozenset(p.permuted(s) for p in target) == target]


_AUTOS = {k.name: _automorphisms(k) for k in KINDS}


def _invert(perm) -> tuple:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


def _branch_candidates(J: MonomialIdeal, config: AssConfiguration) -> list:
    """Ordered (v, w) peel choices in input coordinates.

    First the worked case of the kind's recipe and its images under the
    symmetries of the configuration, each used only when its assumed
    inclusions hold; then every other ordered edge as a fallback.
    """
    kind = KIND_BY_NAME[config.kind]
    canon = J.permuted(config.perm)
    canon_config = AssConfiguration(kind.name, (0, 1, 2, 3))
    out = []
    if kind.rule is not None:
        for sigma in _AUTOS[kind.name]:
            inv = _invert(sigma)
            Jp = canon.permuted(inv)
            by_prime = _components_by_prime(primary_components(Jp))
            if all(_inclusion(by_prime, canon_config, i, j, k) for i, j, k in kind.case):
                v, w = kind.rule(Jp)
                out.append((config.inverse[sigma[v]], config.inverse[sigma[w]]))
    for p in ass_primes(J):
        a, b = p.vars
        out.extend([(a, b), (b, a)])
    seen = set()
    return [c for c in out if not (c in seen or seen.add(c))]


def _pure(K: MonomialIdeal) -> bool:
    return K.is_unit() or all(p.height == 2 for p in ass_primes(K))


def _admissible(K: MonomialIdeal) -> bool:
    return K.is_unit() or (_pure(K) and layer_condition(K)[1].satisfied)


def _peel(J: MonomialIdeal, v: int, w: int, Q1):
    amb = J.ambient
    va, wb = amb.var(v, Q1.exponents[v]), amb.var(w, Q1.exponents[w])
    return va, wb, J.colon(va), J.add(va).colon(wb)


def _max_component(irr, v, w):
    prime = MonomialPrime((v, w))
    group = [c for c in irr if c.prime == prime]
    top = max(c.exponents[w] for c in group)
    return min((c for c in group if c.exponents[w] == top), key=lambda c: grlex_key(c.exponents))


@lru_cache(maxsize=8192)
def _clean_steps(J: MonomialIdeal, extended: bool = True) -> tuple:
    if J.is_unit():
        return ()
    config, report = layer_condition(J)
    if config.kind == "Single":
        return tuple(clean_filtration_primary(J, ass_primes(J)[0]).steps)
    if not report.satisfied:
        if extended:
            return _search_steps(J)
        raise NotCohenMacaulay(f"{J} fails the {config.kind} criterion", report)
    irr = irreducible_decomposition(J)
    for attempt, (v, w) in enumerate(_branch_candidates(J, config)):
        Q1 = _max_component(irr, v, w)
        va, wb, bottom, middle = _peel(J, v, w, Q1)
        if not (_admissible(bottom) and _admissible(middle)):
            continue
        try:
            steps = (
                lift(_clean_steps(bottom, extended), va)
                + lift(_clean_steps(middle, extended), wb)
                + clean_filtration_primary(Q1.ideal(J.ambient), Q1.prime).steps
            )
        except (NotCohenMacaulay, InternalVerificationFailure):
            continue
        if attempt:
            log.debug("%s: peel choice #%d used for %s", config.kind, attempt, J)
        return tuple(steps)
    raise InternalVerificationFailure(f"no peel choice works for {J} ({config.kind}) although its criterion holds")


def _search_steps(J: MonomialIdeal) -> tuple:
    """Peel search for ideals outside the inclusion criterion.

    Tries every irreducible component and both peel directions, recursing on
    the two colon pieces; NotCohenMacaulay when nothing works.
    """
    irr = irreducible_decomposition(J)
    for Q1 in irr:
        for v, w in (Q1.prime.vars, Q1.prime.vars[::-1]):
            va, wb, bottom, middle = _peel(J, v, w, Q1)
            if not (_pure(bottom) and _pure(middle)):
                continue
            try:
                steps = (
                    lift(_clean_steps(bottom, True), va)
                    + lift(_clean_steps(middle, True), wb)
                    + clean_filtration_primary(Q1.ideal(J.ambient), Q1.prime).steps
                )
            except NotCohenMacaulay:
                continue
            log.info("clean filtration found outside the inclusion criterion for %s", J)
            return tuple(steps)
    raise NotCohenMacaulay(f"no clean peel of {J} exists")


def build_codim2_clean(I: MonomialIdeal, strict: bool = False) -> PrimeFiltration:
    """Clean filtration of S/I for I with all associated primes of height 2.

    When the inclusion criterion of the configuration holds, the recipe of
    that configuration is followed.  Otherwise ``strict`` raises
    NotCohenMacaulay at once, and the default runs a backtracking peel search
    that raises NotCohenMacaulay only if it finds nothing.
    """
    if I.n != 4:
        raise ValueError("the height-2 construction is for four variables")
    if I.is_zero() or I.is_unit():
        raise ValueError("need a proper non-zero ideal")
    config, report = layer_condition(I)
    if strict and not report.satisfied:
        raise NotCohenMacaulay(f"{I} fails the {config.kind} criterion", report)
    try:
        steps = _clean_steps(I, not strict)
    except NotCohenMacaulay as exc:
        exc.report = report
        raise
    pf = _verified(PrimeFiltration(I, list(steps)))
    if not classify_filtration(pf, verified=True)["clean"]:
        raise InternalVerificationFailure("constructed filtration is not clean")
    return pf


def codim2_report(I: MonomialIdeal, strict: bool = False) -> dict:
    amb = I.ambient
    config, report = layer_condition(I)
    out = dict(config.to_json(amb))
    out["condition"] = report.to_json()
    try:
        pf = build_codim2_clean(I, strict)
    except NotCohenMacaulay:
        out.update(filtration=None, error="NotCohenMacaulay")
    else:
        out.update(filtration=pf.to_json(classify_filtration(pf, verified=True)), error=None)
    return out


# -- lower-dimensional factors -----------------------------------------------------

def _colon_prime(F: MonomialIdeal, m: tuple):
    """The prime (F : m), or None when the colon is not a prime (or m is in F)."""
    quots = [quotient(g, m) for g in F.gens]
    linear = {i for q in quots if sum(q) == 1 for i, e in enumerate(q) if e}
    if not linear or any(not any(q[i] for i in linear) for q in quots):
        return None
    return MonomialPrime(tuple(sorted(linear)))


def generic_clean_search(base: MonomialIdeal, target: MonomialIdeal, allowed_primes=None) -> PrimeFiltration:
    """Backtracking search for a prime filtration of target/base.

    Candidates are monomials of ``target`` outside the current ideal with
    exponents capped by the generators involved; at each state they are
    tried by (prime height desc, degree desc, grlex).
    """
    if not base.issubset(target):
        raise ValueError("base must be contained in target")
    allowed = None if allowed_primes is None else set(allowed_primes)
    bound = lcm(base.lcm_exponents(), target.lcm_exponents())
    pool = sorted((m for m in box(bound) if m in target), key=lambda m: (-sum(m), grlex_key(m)))
    heights = sorted({p.height for p in allowed} if allowed is not None else range(1, base.n + 1), reverse=True)
    dead: set = set()

    def options(F):
        # primes of colons by pool monomials; a colon that is a prime outside
        # ``allowed`` is an associated prime of target/F that no filtration
        # can avoid, so the state is dead
        found = []
        for m in pool:
            P = _colon_prime(F, m)
            if P is None:
                continue
            if allowed is not None and P not in allowed:
                return []
            found.append((m, P))
        return [(m, P) for h in heights for m, P in found if P.height == h]

    def search(F, acc):
        if F == target:
            return acc
        if F in dead:
            return None
        for m, P in options(F):
            found = search(F.add(m), acc + [FiltrationStep(m, P)])
            if found is not None:
                return found
        dead.add(F)
        return None

    steps = search(base, [])
    if steps is None:
        raise SearchExhausted(f"no prime filtration from {base} to {target}")
    return _verified(PrimeFiltration(base, steps, target))


def _assemble_pretty_clean(I: MonomialIdeal, strict: bool = False) -> PrimeFiltration:
    n = I.n
    dims = dimension_filtration(I)
    D0, D1, D2 = dims.level(0), dims.level(1), dims.level(2)
    ass = ass_primes(I)
    steps = []
    if D0 != I:
        steps += generic_clean_search(I, D0, [p for p in ass if p.height == n]).steps
    if D1 != D0:
        steps += generic_clean_search(D0, D1, [p for p in ass if p.height == n - 1]).steps
    u = principal_part(I)
    if D2 != D1:
        steps += lift(build_codim2_clean(D1.colon(u), strict).steps, u)
    if any(u):
        steps += clean_filtration_principal(u, I.ambient).steps
    pf = _verified(PrimeFiltration(I, steps))
    if not classify_filtration(pf, verified=True)["pretty_clean"]:
        raise InternalVerificationFailure("assembled filtration is not pretty clean")
    return pf


def build_pretty_clean(I: MonomialIdeal, check: bool = True, strict: bool = False) -> PrimeFiltration:
    """Pretty clean filtration of S/I, dimension layer by dimension layer.

    With ``check`` the depth oracle gates the call (NotSequentiallyCM);
    without it a non-SCM ideal surfaces as NotCohenMacaulay from the
    height-2 layer.
    """
    if I.n != 4:
        raise ValueError("pretty clean construction is for four variables")
    if I.is_zero() or I.is_unit():
        raise ValueError("need a proper non-zero ideal")
    if check and not is_scm(I):
        raise NotSequentiallyCM(f"S/{I} is not sequentially Cohen-Macaulay")
    return _assemble_pretty_clean(I, strict)
