"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import staircase as sc


def test_colength_and_multiplicities():
    ring = sc.make_ring(2)
    ideal = sc.make_ideal(2, [[2, 0], [1, 1], [0, 3]])
    assert sc.colength(ring, ideal) == 4
    assert sc.min_gens(ring, ideal) == 3
    assert sc.socle_length(ring, ideal) == 2

    e = sc.hs_multiplicity(ring, ideal)
    assert e["value"] == Fraction(5)
    assert e["method"] == "exact-volume"
    hk = sc.hk_multiplicity(ring, ideal)
    assert hk["value"] == Fraction(4)
    assert hk["method"] == "exact-regular-colength"


def test_quotient_ring():
    ring = sc.make_ring(2, [[2, 0]])
    assert ring.krull_dim == 1
    m = sc.make_ideal(2, [[1, 0], [0, 1]])
    i4 = sc.ideal_sum(
        sc.ideal_power(m, 4),
        sc.ideal_product(sc.make_ideal(2, [[1, 0]]), sc.ideal_power(m, 2)),
    )
    assert sc.colength(ring, i4) == 6
    assert sc.hs_multiplicity(ring, i4)["value"] == Fraction(8)
    assert sc.hk_multiplicity(ring, i4)["value"] == Fraction(8)


def test_ideal_arithmetic():
    a = sc.make_ideal(2, [[2, 0], [1, 1], [0, 3]])
    m = sc.make_ideal(2, [[1, 0], [0, 1]])
    assert sc.colon(a, m) == sc.make_ideal(2, [[1, 0], [0, 2]])
    assert sc.contains(a, [3, 1])
    assert not sc.contains(a, [0, 2])
    assert sc.frobenius_power(a, 2) == sc.make_ideal(2, [[4, 0], [2, 2], [0, 6]])
    assert sc.ord(sc.make_ring(2), a) == 2


def test_integral_closure_and_volume():
    a = sc.make_ideal(2, [[2, 0], [0, 2]])
    assert sc.integral_closure(a) == sc.make_ideal(2, [[2, 0], [1, 1], [0, 2]])
    assert not sc.is_integrally_closed(a)
    assert sc.complement_volume(a) == Fraction(2)


def test_parse_and_format():
    ring, ideal, names = sc.parse_ideal_file("vars: x y\nideal: x^2, x*y, y^3\n")
    assert names == ["x", "y"]
    assert sc.format_ideal(ideal, names) == "x^2, x*y, y^3"
    with pytest.raises(ValueError):
        sc.parse_ideal_file("vars: x\nideal: x^0\n")


def test_preconditions_raise():
    ring = sc.make_ring(2)
    with pytest.raises(ValueError):
        sc.colength(ring, sc.make_ideal(2, [[1, 1]]))


def test_experiment():
    rep = sc.run_experiment("dim-one-limit", {"N": "1..5"})
    assert rep["pass"]
    assert rep["max_dev"] == Fraction(1)
    assert rep["csv"].startswith(
        "sample,param_n,colength,mu,ord,socle_len,e_num,e_den,ehk_num,ehk_den,"
        "ratio_num,ratio_den,verdict"
    )


def test_sequences():
    ring = sc.make_ring(2)
    a = sc.make_ideal(2, [[2, 0], [1, 1], [0, 3]])
    assert sc.hs_sequence(ring, a, 2) == [4, 13]
    assert sc.hk_sequence(ring, a, 2, 3) == [Fraction(4)] * 3
    est = sc.hs_estimate(ring, a, 12)
    assert est["value"] == Fraction(5)
    assert est["method"] == "sequence-estimate"
