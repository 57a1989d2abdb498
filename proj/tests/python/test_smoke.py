"""Smoke tests for the randicenergy extension module."""

import math
from fractions import Fraction

import pytest

import randicenergy as re


def test_graph_basics():
    g = re.Graph(4, [(0, 1), (1, 2)])
    assert g.n == 4
    assert g.edge_count() == 2
    assert g.degrees() == [1, 2, 1, 0]
    assert not g.is_connected()
    with pytest.raises(ValueError):
        re.Graph(2, [(0, 0)])


def test_constructors_and_graph6():
    p = re.petersen()
    assert p.vertex_count() == 10
    assert p.regularity() == 3
    assert re.graph6_encode(re.cycle(3)) == "Bw"
    assert re.graph6_decode(re.graph6_encode(p)) == p
    with pytest.raises(ValueError):
        re.graph6_decode("")
    d = re.dutch_windmill(5, 3)
    assert (d.vertex_count(), d.edge_count()) == (13, 15)


def test_charpoly():
    assert re.charpoly(re.cycle(3)) == [-2, -3, 0, 1]
    assert re.charpoly(re.petersen()) == [48, -160, 120, 120, -165, -24, 75, 0, -15, 0, 1]
    assert re.charpoly_str(re.cycle(3)) == "x^3 - 3x - 2"


def test_rational_polynomials():
    assert re.lambda_recurrence(4) == [Fraction(1, 16), 0, Fraction(-3, 4), 0, 1]
    assert re.randic_charpoly_cycle(4) == [0, 0, -1, 0, 1]
    assert re.randic_charpoly_windmill(3, 1) == re.randic_charpoly_cycle(3)
    with pytest.raises(ValueError):
        re.randic_charpoly_regular(re.complete_bipartite_minus_edge(2, 3), 2)


def test_energies():
    assert math.isclose(re.energy(re.petersen()), 16.0, abs_tol=1e-9)
    assert math.isclose(re.randic_energy(re.petersen()), 16.0 / 3.0, abs_tol=1e-9)
    spectrum = re.adjacency_spectrum(re.cycle(4))
    assert spectrum == sorted(spectrum, reverse=True)
    assert math.isclose(spectrum[0], 2.0, abs_tol=1e-10)
    report = re.energy_report(re.cycle(4), "c4")
    assert report["method"] == "regular-shortcut"
    assert math.isclose(report["randic_energy"], 2.0, abs_tol=1e-9)


def test_permanent():
    assert re.permanent_matrix([[1, 0], [0, 1]]) == 1
    assert re.permanent_matrix([[1, 1, 1]] * 3) == 6
    assert re.permanent(re.petersen()) == 60


def test_catalog_and_classes():
    cat = re.catalog()
    assert len(cat) == 21
    by_name = {e.name: e for e in cat}
    assert math.isclose(by_name["G_17"].energy, 16.0, abs_tol=1e-9)
    assert by_name["G_7"].permanent == 85
    assert sum(not e.connected for e in cat) == 2
    classes = re.equivalence_classes("energy", 1e-6)
    assert ["G_12", "G_17"] in classes
    assert len(re.enumerate_cubic(6)) == 2


def test_families():
    exact, value = re.closed_form_re("windmill4", 3)
    assert exact == "2 + 2*sqrt(2)"
    assert math.isclose(value, 2 + 2 * math.sqrt(2), abs_tol=1e-12)
    witnesses = re.density_probe(4.99, 5.01)
    assert [w["family"] for w in witnesses] == ["friendship"]
    assert witnesses[0]["n"] == 4


def test_verify_harness():
    assert all(ok for _, ok, _ in re.verify_tables(2e-4))
    assert all(ok for _, ok, _ in re.verify_windmill(1e-8))
