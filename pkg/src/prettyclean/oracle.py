"""Brute-force ground truth: Betti numbers, depth, Hilbert functions.

Multigraded Betti numbers come from the upper Koszul simplicial complex

    K^b(I) = { squarefree tau <= supp(b) : x^(b - tau) in I },

with beta_{i,b}(I) = dim H~_{i-1}(K^b(I); Q), so that
beta_{i,b}(S/I) = beta_{i-1,b}(I) for i >= 1.  Depth then follows from
Auslander-Buchsbaum.  None of this code looks at decompositions or
filtrations, so it can referee them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .decomposition import dim as krull_dim
from .monomial import MonomialIdeal, box, divides, lcm, monomials_of_degree


@dataclass
class BettiTable:
    ambient: object
    entries: dict = field(default_factory=dict)  # (i, multidegree) -> rank

    @property
    def projective_dimension(self) -> int:
        return max(i for (i, _), r in self.entries.items() if r)

    def total(self, i: int) -> int:
        return sum(r for (j, _), r in self.entries.items() if j == i)

    def to_json(self) -> list:
        names = self.ambient.names
        rows = []
        for (i, b), r in sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            deg = {names[k]: e for k, e in enumerate(b) if e}
            rows.append({"i": i, "deg": deg, "rank": r})
        return rows


def rank(rows: list) -> int:
    """Rank over Q by Gaussian elimination on Fractions."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for k in range(r + 1, len(m)):
            if m[k][c] != 0:
                f = m[k][c] / m[r][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def reduced_homology(faces: set) -> dict:
    """Ranks of reduced homology H~_k over Q of a simplicial complex.

    ``faces`` is a downward closed set of sorted vertex tuples, possibly
    containing the empty face.  The void complex (no faces) is acyclic.
    """
    by_dim: dict = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort()
    index = {d: {f: k for k, f in enumerate(fs)} for d, fs in by_dim.items()}

    def boundary_rank(d):
        # boundary map C_d -> C_{d-1}
        if d not in by_dim or d - 1 not in by_dim:
            return 0
        rows = []
        for f in by_dim[d]:
            row = [0] * len(by_dim[d - 1])
            for k in range(len(f)):
                row[index[d - 1][f[:k] + f[k + 1:]]] = (-1) ** k
            rows.append(row)
        return rank(rows)

    ranks = {d: boundary_rank(d) for d in by_dim}
    out = {}
    for d, fs in by_dim.items():
        h = len(fs) - ranks[d] - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def upper_koszul_complex(I: MonomialIdeal, b) -> set:
    supp = [i for i, e in enumerate(b) if e]
    faces = set()
    for k in range(len(supp) + 1):
        for tau in itertools.combinations(supp, k):
            m = list(b)
            for i in tau:
                m[i] -= 1
            if tuple(m) in I:
                faces.add(tau)
    return faces


def _in_lcm_lattice(I: MonomialIdeal, b) -> bool:
    # outside the lcm lattice K^b is a cone, hence acyclic
    acc = I.ambient.one()
    for g in I.gens:
        if divides(g, b):
            acc = lcm(acc, g)
    return acc == tuple(b)


def betti_table(I: MonomialIdeal, prune: bool = True) -> BettiTable:
    """Multigraded Betti numbers of S/I."""
    if I.is_zero() or I.is_unit():
        raise ValueError("betti_table needs a proper non-zero ideal")
    table = BettiTable(I.ambient, {(0, I.ambient.one()): 1})
    for b in box(I.lcm_exponents()):
        if not any(b):
            continue
        if prune and not _in_lcm_lattice(I, b):
            continue
        for k, h in reduced_homology(upper_koszul_complex(I, b)).items():
            table.entries[(k + 2, b)] = h
    return table


def projective_dimension(I: MonomialIdeal) -> int:
    if I.is_zero():
        return 0
    return betti_table(I).projective_dimension


def depth(I: MonomialIdeal) -> int:
    if I.is_unit():
        raise ValueError("depth of the zero module is not defined")
    return I.n - projective_dimension(I)


def is_cm(I: MonomialIdeal) -> bool:
    return depth(I) == krull_dim(I)


def depth_report(I: MonomialIdeal) -> dict:
    table = betti_table(I)
    pd = table.projective_dimension
    d = krull_dim(I)
    return {
        "depth": I.n - pd,
        "dim": d,
        "pd": pd,
        "cm": I.n - pd == d,
        "betti": table.to_json(),
    }


def hilbert_function(I: MonomialIdeal, tmax: int) -> list:
    """Number of monomials of degree t outside I, for t = 0..tmax."""
    if tmax < 0:
        raise ValueError("tmax must be non-negative")
    return [sum(1 for m in monomials_of_degree(I.n, t) if m not in I) for t in range(tmax + 1)]


def ses_additivity_check(J: MonomialIdeal, P: MonomialIdeal, tmax: int) -> bool:
    """HF(S/(J∩P)) + HF(S/(J+P)) == HF(S/J) + HF(S/P) in degrees <= tmax."""
    lhs = [a + b for a, b in zip(hilbert_function(J & P, tmax), hilbert_function(J + P, tmax))]
    rhs = [a + b for a, b in zip(hilbert_function(J, tmax), hilbert_function(P, tmax))]
    return lhs == rhs
