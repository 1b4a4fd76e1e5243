"""Smoke tests for the python bindings."""
import cmath
import math
from fractions import Fraction

import wrtlens


def test_continued_fractions():
    assert wrtlens.cf_expand(5, 2) == [2, 3]
    assert wrtlens.cf_expand(1, 2) == [-2, 0]
    cf, u = wrtlens.cf_for_lens(5, -2)
    assert cf == [2, 3, 0]
    assert u == (-2, 1, 5, -3)
    assert wrtlens.nested_value([2, 3]) == Fraction(5, 2)


def test_number_theory():
    assert wrtlens.dedekind_sum(1, 3) == Fraction(1, 18)
    assert wrtlens.rademacher_phi(5, -3, 2, -1) == 2
    assert wrtlens.rademacher_phi_cf([2, 3, 0]) == -1
    lhs, rhs = wrtlens.gauss_reciprocity(4, 1, 1, 4)
    assert abs(lhs - 2) < 1e-12 and abs(rhs - 2) < 1e-12


def test_linking_data():
    link = wrtlens.linking_data([2, 0])
    assert link["trace"] == 2
    assert link["signature"] == 1
    assert link["weight"] == 1


def test_invariant_paths_agree():
    oracle, closed = wrtlens.invariant(5, -2, 13, method="both")
    assert oracle["method"] == "oracle" and closed["method"] == "closed"
    assert abs(oracle["value"] - closed["value"]) < 1e-9
    assert abs(oracle["value"] - (-0.36783426864756424)) < 1e-9
    assert oracle["phi"] == -1 and oracle["cf"] == [2, 3, 0]


def test_three_sphere():
    res = wrtlens.invariant(1, 0, 5, method="oracle")
    expected = 2 / math.sqrt(5) * math.sin(2 * math.pi / 5)
    assert abs(res["value"] - expected) < 1e-12


def test_exact_backend():
    res = wrtlens.invariant(2, -1, 5, method="closed", exact=True)
    assert res["exact"]["conductor"] >= 1
    assert abs(res["value"] - (-0.5257311121191336)) < 1e-9


def test_rep_and_im():
    mat = wrtlens.rep_matrix(5, [2, 0])
    assert len(mat) == 2
    assert abs(mat[0][0] - (-0.3090169943749475 - 0.42532540417602j)) < 1e-12
    direct = wrtlens.im_sum(5, [2, 3], 1, 1, "direct")
    closed = wrtlens.im_sum(5, [2, 3], 1, 1, "closed")
    assert abs(direct - closed) < 1e-9
    entry = wrtlens.rep_closed_entry(13, [2, 3, 0], 1, 1)
    prod = wrtlens.rep_matrix(13, [2, 3, 0])
    assert abs(entry - prod[0][0]) < 1e-9


def test_sqrt_and_roots():
    root5 = wrtlens.sqrt_exact(5)
    assert abs(root5["value"] - math.sqrt(5)) < 1e-12
    zeta8 = wrtlens.e_frac(1, 8)
    assert abs(zeta8["value"] - cmath.exp(0.25j * math.pi)) < 1e-12
    assert zeta8["exact"]["conductor"] == 8


def test_verify_summary():
    rep = wrtlens.verify(6, [5])
    assert rep["pass"]
    assert rep["lens_count"] == 11
    assert rep["max_deviation"] < 1e-9
