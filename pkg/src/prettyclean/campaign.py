"""Randomized cross-validation of the constructions against the oracles.

Random numbers come from SplitMix64 so that the sample stream is fixed by
the seed alone::

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    return z ^ (z >> 31)

``below(k)`` is ``next() % k``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .construction import (
    KIND_BY_NAME,
    KIND_NAMES,
    build_codim2_clean,
    build_pretty_clean,
    classify_ass_config,
    layer_condition,
)
from .decomposition import ass_primes, dim
from .errors import NotCohenMacaulay
from .filtration import classify_filtration, is_scm, layer_hilbert_identity, verify_prime_filtration
from .monomial import DEFAULT_AMBIENT, MonomialIdeal, intersect
from . import oracle
from .stanley import stanley_report, to_stanley, verify_stanley

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        return self.next() % k

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def permutation(self, n: int) -> list:
        p = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            p[i], p[j] = p[j], p[i]
        return p


@dataclass
class CampaignConfig:
    seed: int = 1
    count: int = 100
    max_exp: int = 3
    max_comps: int = 8
    kinds: Optional[list] = None
    tmax: int = 8

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.max_exp < 1:
            raise ValueError("max_exp must be at least 1")
        if self.max_comps < 1:
            raise ValueError("max_comps must be at least 1")
        for k in self.kinds or []:
            if k not in KIND_BY_NAME:
                raise ValueError(f"unknown configuration kind {k!r}")


def irreducible(support, rng: SplitMix64, max_exp: int, ambient=DEFAULT_AMBIENT) -> MonomialIdeal:
    return MonomialIdeal(ambient, [ambient.var(i, rng.between(1, max_exp)) for i in sorted(support)])


def sample_kind(kind: str, rng: SplitMix64, max_exp: int, max_comps: int) -> MonomialIdeal:
    """Height-2-pure ideal whose associated primes form the given configuration."""
    canonical = KIND_BY_NAME[kind].primes
    perm = rng.permutation(4)
    primes = [tuple(perm[v] for v in p) for p in canonical]
    k = len(primes)
    total = rng.between(k, max(k, max_comps))
    chosen = primes + [primes[rng.below(k)] for _ in range(total - k)]
    return intersect(*(irreducible(p, rng, max_exp) for p in chosen))


def sample_mixed(rng: SplitMix64, max_exp: int, max_comps: int) -> MonomialIdeal:
    """Intersection of 1..max_comps irreducible ideals.

    The height-2 supports are the edges of a configuration drawn uniformly
    from the ten kinds or from "none", so that every kind turns up; the other
    supports are random subsets of one, three or four variables.
    """
    choice = rng.below(len(KIND_NAMES) + 1)
    edges = []
    if choice < len(KIND_NAMES) and len(KIND_BY_NAME[KIND_NAMES[choice]].primes) <= max_comps:
        perm = rng.permutation(4)
        edges = [tuple(sorted(perm[v] for v in p)) for p in KIND_BY_NAME[KIND_NAMES[choice]].primes]
    supports = list(edges)
    total = rng.between(max(1, len(supports)), max_comps)
    while len(supports) < total:
        mask = rng.between(1, 15)
        support = [i for i in range(4) if mask >> i & 1]
        if len(support) == 2:
            if not edges:
                continue
            support = edges[rng.below(len(edges))]
        supports.append(support)
    return intersect(*(irreducible(s, rng, max_exp) for s in supports))


def _tally(kinds) -> dict:
    return {k: {"samples": 0, "cm_true": 0, "condition_true": 0, "construction_ok": 0, "mismatches": 0} for k in kinds}


@dataclass
class CampaignReport:
    config: CampaignConfig
    kinds: dict = field(default_factory=dict)
    scm: dict = field(default_factory=lambda: {
        "samples": 0, "scm_true": 0, "pretty_clean_ok": 0, "stanley_ok": 0, "mismatches": 0, "stanley_mismatches": 0,
    })
    two_disjoint: dict = field(default_factory=lambda: {"samples": 0, "depth_one": 0, "dim_two": 0})
    oracle: dict = field(default_factory=lambda: {"samples": 0, "auslander_buchsbaum_fail": 0, "hilbert_layer_fail": 0})
    coverage: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    @property
    def mismatches(self) -> int:
        return (
            sum(t["mismatches"] for t in self.kinds.values())
            + self.scm["mismatches"]
            + self.scm["stanley_mismatches"]
            + self.oracle["auslander_buchsbaum_fail"]
            + self.oracle["hilbert_layer_fail"]
        )

    def to_json(self) -> dict:
        c = self.config
        return {
            "config": {
                "seed": c.seed, "count": c.count, "max_exp": c.max_exp, "max_comps": c.max_comps,
                "kinds": c.kinds, "tmax": c.tmax,
            },
            "kinds": self.kinds,
            "scm": self.scm,
            "two_disjoint": self.two_disjoint,
            "oracle": self.oracle,
            "coverage": self.coverage,
            "counterexamples": self.counterexamples,
            "mismatches": self.mismatches,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2, ensure_ascii=False)


def _codim2_ok(I: MonomialIdeal) -> bool:
    try:
        pf = build_codim2_clean(I)
    except NotCohenMacaulay:
        return False
    return verify_prime_filtration(pf).ok and classify_filtration(pf)["clean"]


def _pretty_clean_ok(I: MonomialIdeal):
    try:
        pf = build_pretty_clean(I, check=False)
    except NotCohenMacaulay:
        return False, None
    ok = verify_prime_filtration(pf).ok and classify_filtration(pf)["pretty_clean"]
    return ok, pf


def check_layer(I: MonomialIdeal, report: CampaignReport) -> None:
    """The three-way equivalence for a height-2-pure ideal."""
    config, cond = layer_condition(I)
    t = report.kinds.setdefault(config.kind, _tally([config.kind])[config.kind])
    t["samples"] += 1
    cm = oracle.is_cm(I)
    built = _codim2_ok(I)
    t["cm_true"] += cm
    t["condition_true"] += cond.satisfied
    t["construction_ok"] += built
    if not (cm == cond.satisfied == built):
        t["mismatches"] += 1
        report.counterexamples.append({
            "ideal": I.format(), "check": "layer", "kind": config.kind,
            "cm": cm, "condition": cond.satisfied, "construction": built,
        })
    if config.kind == "TwoDisjoint":
        report.two_disjoint["samples"] += 1
        report.two_disjoint["depth_one"] += oracle.depth(I) == 1
        report.two_disjoint["dim_two"] += dim(I) == 2


def check_scm(I: MonomialIdeal, report: CampaignReport) -> None:
    s = report.scm
    s["samples"] += 1
    scm = is_scm(I)
    built, pf = _pretty_clean_ok(I)
    s["scm_true"] += scm
    s["pretty_clean_ok"] += built
    if scm != built:
        s["mismatches"] += 1
        report.counterexamples.append({"ideal": I.format(), "check": "scm", "scm": scm, "pretty_clean": built})
    if built:
        sd = to_stanley(pf)
        rep = stanley_report(I, sd)
        good = rep["stanley_ok"] and verify_stanley(sd)
        s["stanley_ok"] += good
        if not good:
            s["stanley_mismatches"] += 1
            report.counterexamples.append({"ideal": I.format(), "check": "stanley", **rep})


def check_oracles(I: MonomialIdeal, report: CampaignReport) -> None:
    o = report.oracle
    o["samples"] += 1
    table = oracle.betti_table(I)
    if oracle.depth(I) + table.projective_dimension != I.n:
        o["auslander_buchsbaum_fail"] += 1
        report.counterexamples.append({"ideal": I.format(), "check": "auslander_buchsbaum"})
    if not layer_hilbert_identity(I, report.config.tmax):
        o["hilbert_layer_fail"] += 1
        report.counterexamples.append({"ideal": I.format(), "check": "hilbert_layer"})


def run_sample(I: MonomialIdeal, report: CampaignReport) -> None:
    try:
        h2 = [p for p in ass_primes(I) if p.height == 2]
        if h2:
            kind = classify_ass_config(h2).kind
            report.coverage[kind] = report.coverage.get(kind, 0) + 1
        if len(h2) == len(ass_primes(I)):
            check_layer(I, report)
        check_scm(I, report)
        check_oracles(I, report)
    except Exception as exc:  # noqa: BLE001 - every failure becomes a reproducible entry
        report.counterexamples.append({"ideal": I.format(), "check": "exception", "error": f"{type(exc).__name__}: {exc}"})


def samples(cfg: CampaignConfig):
    rng = SplitMix64(cfg.seed)
    for _ in range(cfg.count):
        if cfg.kinds:
            kind = cfg.kinds[rng.below(len(cfg.kinds))]
            yield sample_kind(kind, rng, cfg.max_exp, cfg.max_comps)
        else:
            yield sample_mixed(rng, cfg.max_exp, cfg.max_comps)


def fuzz_campaign(cfg: CampaignConfig) -> CampaignReport:
    report = CampaignReport(cfg, kinds=_tally(cfg.kinds or KIND_NAMES))
    for I in samples(cfg):
        run_sample(I, report)
    report.coverage = dict(sorted(report.coverage.items()))
    return report
