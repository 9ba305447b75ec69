from hypothesis import given, settings

from prettyclean.decomposition import ass_primes, dim
from prettyclean.monomial import Ambient, parse_ideal
from prettyclean.oracle import (
    betti_table,
    depth,
    depth_report,
    hilbert_function,
    is_cm,
    reduced_homology,
    ses_additivity_check,
    upper_koszul_complex,
)

from conftest import proper_ideals

EX = parse_ideal("intersect((x^2,y),(x,z),(z,w))")


def test_reduced_homology_small_complexes():
    assert reduced_homology(set()) == {}  # void complex
    assert reduced_homology({()}) == {-1: 1}
    two_points = {(), (0,), (1,)}
    assert reduced_homology(two_points) == {0: 1}
    circle = two_points | {(2,), (0, 1), (1, 2), (0, 2)}
    assert reduced_homology(circle) == {1: 1}
    assert reduced_homology(circle | {(0, 1, 2)}) == {}


def test_upper_koszul_complex_of_complete_intersection():
    I = parse_ideal("(x^2, y^3)")
    K = upper_koszul_complex(I, (2, 3, 0, 0))
    assert K == {(), (0,), (1,)}


def test_complete_intersection():
    table = betti_table(parse_ideal("(x^2, y^3)"))
    assert table.entries == {(0, (0, 0, 0, 0)): 1, (1, (2, 0, 0, 0)): 1, (1, (0, 3, 0, 0)): 1, (2, (2, 3, 0, 0)): 1}
    assert depth_report(parse_ideal("(x^2, y^3)"))["cm"] is True


def test_maximal_ideal_koszul():
    table = betti_table(parse_ideal("(x, y, z, w)"))
    assert [table.total(i) for i in range(5)] == [1, 4, 6, 4, 1]
    assert table.projective_dimension == 4
    assert depth(parse_ideal("(x, y, z, w)")) == 0


def test_worked_example_is_not_cohen_macaulay():
    table = betti_table(EX)
    assert [table.total(i) for i in range(5)] == [1, 4, 4, 1, 0]
    assert table.projective_dimension == 3
    assert depth(EX) == 1 and dim(EX) == 2
    assert not is_cm(EX)
    assert is_cm(EX.radical())


def test_disjoint_primes_have_depth_one():
    assert depth(parse_ideal("(x*z, x*w, y*z, y*w)")) == 1


def test_report_shape():
    rep = depth_report(EX)
    assert (rep["depth"], rep["dim"], rep["pd"], rep["cm"]) == (1, 2, 3, False)
    assert {"i": 0, "deg": {}, "rank": 1} in rep["betti"]


def test_hilbert_function_examples():
    assert hilbert_function(parse_ideal("(x, y, z, w)"), 2) == [1, 0, 0]
    two = Ambient.from_names(["x", "y"])
    assert hilbert_function(parse_ideal("(x*y)", two), 3) == [1, 2, 2, 2]
    assert hilbert_function(EX, 5) == [1, 4, 9, 13, 17, 21]


def test_ses_additivity_examples():
    assert ses_additivity_check(parse_ideal("(x, y)"), parse_ideal("(z, w)"), 6)
    assert ses_additivity_check(parse_ideal("(x^2, y)"), parse_ideal("(z, w)"), 6)


@settings(max_examples=60, deadline=None)
@given(proper_ideals)
def test_pruned_table_matches_full_scan(I):
    assert betti_table(I).entries == betti_table(I, prune=False).entries


@settings(max_examples=100, deadline=None)
@given(proper_ideals)
def test_depth_bounds_and_maximal_ideal(I):
    table = betti_table(I)
    d = depth(I)
    assert d + table.projective_dimension == 4
    assert 0 <= d <= dim(I) <= 4
    assert (d == 0) == (len(ass_primes(I)[-1].vars) == 4 or any(p.height == 4 for p in ass_primes(I)))
    assert sorted(g for (i, g) in table.entries if i == 1) == sorted(I.gens)
    assert table.entries[(0, (0, 0, 0, 0))] == 1


@settings(max_examples=60, deadline=None)
@given(proper_ideals, proper_ideals)
def test_ses_additivity_random(J, P):
    assert ses_additivity_check(J, P, 6)


@settings(max_examples=60, deadline=None)
@given(proper_ideals)
def test_euler_characteristic_vanishes_below_full_dimension(I):
    # the alternating sum of Betti numbers is the multiplicity of S/I at dimension 4
    table = betti_table(I)
    assert sum((-1) ** i * r for (i, _), r in table.entries.items()) == 0
