import math
from fractions import Fraction

import numpy as np
import pytest

from randic.closed_forms import (
    PairingError,
    QuarticCoeffs,
    conjectured_max,
    cross_validate,
    double_sun_energy_corrected,
    double_sun_energy_from_spectrum,
    double_sun_energy_printed,
    double_sun_quartic,
    double_sun_spectrum,
    quartic_pairing,
    sun_energy,
    sun_spectrum,
)
from randic.families import balanced_double_sun, double_sun, path, sun
from randic.graph import Graph

import oracles

SQ2, SQ5 = math.sqrt(2), math.sqrt(5)
SHAPES = [(p, q) for s in range(2, 31) for p in range(s + 1) for q in (s - p,) if p >= q]


@pytest.mark.parametrize("p, value", [(1, 2), (2, 2 + SQ2), (3, 2 + 2 * SQ2)])
def test_sun_energy_examples(p, value):
    assert sun_energy(p) == pytest.approx(value, abs=1e-12)


def test_sun_formula_domain():
    with pytest.raises(ValueError):
        sun_energy(0)
    with pytest.raises(ValueError):
        sun_spectrum(0)


def test_sun_spectrum_examples():
    assert sun_spectrum(1) == [0, 1, 2]
    assert np.allclose(sun_spectrum(2), sorted([0, 1, 2, (2 - SQ2) / 2, (2 + SQ2) / 2]))
    assert len(sun_spectrum(3)) == 7 and sum(sun_spectrum(3)) == pytest.approx(7)


@pytest.mark.parametrize("p", range(1, 31))
def test_sun_spectrum_matches_eigensolver(p):
    assert np.allclose(sun_spectrum(p), np.sort(oracles.nlap_eigs(sun(p))), atol=1e-9)


@pytest.mark.parametrize(
    "p, q, coeffs",
    [
        (1, 1, (-4, Fraction(21, 4), Fraction(-5, 2), Fraction(5, 16))),
        (2, 1, (-4, Fraction(21, 4), Fraction(-5, 2), Fraction(7, 24))),
        (2, 2, (-4, Fraction(47, 9), Fraction(-22, 9), Fraction(1, 4))),
    ],
)
def test_quartic_examples(p, q, coeffs):
    c = double_sun_quartic(p, q)
    assert (c.c3, c.c2, c.c1, c.c0) == coeffs


def test_quartic_preconditions():
    for p, q in [(1, 0), (1, 2), (0, 0), (2, -1)]:
        with pytest.raises(ValueError):
            double_sun_quartic(p, q)


@pytest.mark.parametrize("p, q", SHAPES)
def test_pairing_is_exact_and_roots_in_range(p, q):
    c = double_sun_quartic(p, q)
    assert c.c1 == -2 * (c.c2 - 4)
    u, v = quartic_pairing(c)
    assert abs(float(c.c1) + 2 * (u + v)) < 1e-12
    assert 0 <= u <= v <= 1
    for w in (u, v):
        for r in (1 - math.sqrt(1 - w), 1 + math.sqrt(1 - w)):
            assert abs(c(r)) < 1e-10


def test_pairing_rejects_inconsistent_quartic():
    with pytest.raises(PairingError):
        quartic_pairing(QuarticCoeffs(Fraction(-4), Fraction(5), Fraction(-1), Fraction(0)))
    with pytest.raises(PairingError):
        quartic_pairing(QuarticCoeffs(Fraction(-3), Fraction(5), Fraction(-2), Fraction(0)))


def test_double_sun_spectrum_examples():
    p6 = double_sun_spectrum(1, 1)
    assert np.allclose(p6, np.sort(oracles.nlap_eigs(path(6))), atol=1e-12)
    u, v = sorted(np.roots([1, -5 / 4, 5 / 16]).real)
    assert np.allclose(p6, sorted([0, 2, 1 - math.sqrt(1 - u), 1 + math.sqrt(1 - u), 1 - math.sqrt(1 - v), 1 + math.sqrt(1 - v)]))
    s21 = double_sun_spectrum(2, 1)
    assert len(s21) == 8 and sum(s21) == pytest.approx(8)
    s22 = double_sun_spectrum(2, 2)
    assert sum(abs(x - (2 + SQ2) / 2) < 1e-12 for x in s22) == 2
    assert sum(abs(x - (2 - SQ2) / 2) < 1e-12 for x in s22) == 2


@pytest.mark.parametrize("p, q", SHAPES)
def test_double_sun_spectrum_matches_eigensolver(p, q):
    assert np.allclose(double_sun_spectrum(p, q), np.sort(oracles.nlap_eigs(double_sun(p, q))), atol=1e-9)


def test_printed_formula_examples():
    assert double_sun_energy_printed(1, 1) == pytest.approx(SQ5, abs=1e-12)
    assert double_sun_energy_printed(2, 2) == pytest.approx(2 * SQ2 + 2 * math.sqrt(160) / 12, abs=1e-12)
    assert double_sun_energy_printed(2, 2) == pytest.approx(4.9366, abs=1e-4)
    # the q = p - 1 formula evaluated at n = 8
    assert double_sun_energy_printed(2, 1) == pytest.approx(4.8041, abs=1e-4)


def test_corrected_formula_examples():
    assert double_sun_energy_corrected(1, 1) == pytest.approx(2 + SQ5, abs=1e-12)
    assert double_sun_energy_corrected(2, 1) == pytest.approx(oracles.randic_energy(double_sun(2, 1)), abs=1e-9)
    assert double_sun_energy_corrected(2, 1) == pytest.approx(5.5666, abs=1e-4)
    assert double_sun_energy_corrected(2, 2) == pytest.approx(6.9366, abs=1e-4)


def test_formula_shapes():
    for bad in [(3, 1), (4, 0)]:
        with pytest.raises(ValueError):
            double_sun_energy_printed(*bad)
        with pytest.raises(ValueError):
            double_sun_energy_corrected(*bad)


@pytest.mark.parametrize("s", range(2, 61))
def test_corrected_formula_matches_eigensolver(s):
    p, q = (s + 1) // 2, s // 2
    g = double_sun(p, q)
    assert double_sun_energy_corrected(p, q) == pytest.approx(oracles.randic_energy(g), abs=1e-9)
    assert double_sun_energy_from_spectrum(p, q) == pytest.approx(oracles.randic_energy(g), abs=1e-9)


@pytest.mark.parametrize("p", range(1, 51))
def test_sun_energy_matches_eigensolver(p):
    assert sun_energy(p) == pytest.approx(oracles.randic_energy(sun(p)), abs=1e-9)


def test_conjectured_max_examples():
    value, g = conjectured_max(5)
    assert value == pytest.approx(2 + SQ2) and g == sun(2)
    value, g = conjectured_max(6)
    assert value == pytest.approx(2 + SQ5) and g == balanced_double_sun(6)
    value, g = conjectured_max(2)
    assert value == pytest.approx(2) and g == Graph.from_edges(2, [(0, 1)])
    assert conjectured_max(1) == (0.0, Graph(1))
    value, g = conjectured_max(4)
    assert value == pytest.approx(3) and g == double_sun(1, 0)
    with pytest.raises(ValueError):
        conjectured_max(0)


def test_cross_validate_examples():
    r = cross_validate(10)
    assert r.family == "sun" and r.n == 21 and r.discrepancy_printed < 1e-9
    r = cross_validate(1, 1)
    assert r.discrepancy_printed == pytest.approx(2.0, abs=1e-6)
    assert r.discrepancy_corrected < 1e-9
    assert cross_validate(3, 2).discrepancy_corrected < 1e-9
    d = cross_validate(2, 1).as_dict()
    assert d["params"] == [2, 1] and d["discrepancy_corrected"] < 1e-9
