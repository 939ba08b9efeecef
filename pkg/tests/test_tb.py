import math
from fractions import Fraction

import pytest

from randic.families import complete, cycle, edge_double_subdivision, enumerate_trees, path, star, sun
from randic.graph import Bipartition, Graph, is_TB
from randic.tb import (
    NotTBError,
    diag_R2_A,
    diag_R2_A_bounds,
    odd_tb_vs_sun,
    tb_decompose,
    tb_energy_bound,
    trace_R2_tb_bound,
    trace_RA2_bound,
)

import oracles

SQ2 = math.sqrt(2)
C6 = edge_double_subdivision(complete(3))


def test_decompose_examples():
    d = tb_decompose(path(4), Bipartition(frozenset({0, 2}), frozenset({1, 3})))
    assert d.b2 == {1} and d.b1 == {3}
    d = tb_decompose(star(4))
    assert d.b1 == {1, 2, 3} and d.b2 == set()
    d = tb_decompose(C6)
    assert d.b1 == set() and d.b2 == {3, 4, 5}


def test_decompose_errors():
    with pytest.raises(NotTBError):
        tb_decompose(complete(3))
    with pytest.raises(NotTBError):
        tb_decompose(path(3), Bipartition(frozenset({0, 1}), frozenset({2})))
    with pytest.raises(NotTBError):
        # K1,3 with the center on B
        tb_decompose(star(4), Bipartition(frozenset({1, 2, 3}), frozenset({0})))


def test_diag_examples():
    d = tb_decompose(path(4), Bipartition(frozenset({0, 2}), frozenset({1, 3})))
    diag = diag_R2_A(path(4), d)
    assert diag[2] == Fraction(3, 4) == diag_R2_A_bounds(1)[1]
    assert diag[0] == Fraction(1, 2) == diag_R2_A_bounds(0)[0]
    assert diag_R2_A(sun(2))[0] == Fraction(1, 2)


def test_diag_matches_matrix_square():
    for t in filter(is_TB, enumerate_trees(9)):
        d = tb_decompose(t)
        r = oracles.randic_array(t)
        r2 = r @ r
        for a, v in diag_R2_A(t, d).items():
            assert float(v) == pytest.approx(r2[a, a], abs=1e-12)


def test_trace_RA2_examples():
    assert trace_RA2_bound(path(4)) == (Fraction(5, 4), Fraction(5, 4))
    assert trace_RA2_bound(path(5)) == (Fraction(3, 2), Fraction(3, 2))
    assert trace_RA2_bound(C6) == (Fraction(3, 2), Fraction(7, 4))


def test_trace_R2_examples():
    assert trace_R2_tb_bound(path(4)) == (Fraction(5, 2), Fraction(5, 2))
    assert trace_R2_tb_bound(path(5)) == (Fraction(3), Fraction(3))
    assert trace_R2_tb_bound(star(4)) == (Fraction(2), Fraction(5, 2))


def test_energy_bound_examples():
    b = tb_energy_bound(path(5))
    assert b.value == pytest.approx(SQ2 + 2) and b.nullity == 1
    assert b.sun_form == pytest.approx(SQ2 + 2)
    b = tb_energy_bound(star(4))
    assert b.value == pytest.approx(2) and b.nullity == 2 and not b.degenerate
    b = tb_energy_bound(cycle(6))
    assert b.nullity == 0 and b.sun_form is None
    assert b.value == pytest.approx(2 * math.sqrt(3) * SQ2 / 2 + 2)
    assert b.value == pytest.approx(4.449, abs=1e-3)
    assert b.value >= oracles.randic_energy(cycle(6))


def test_energy_bound_flags_degenerate_nullity():
    b = tb_energy_bound(star(6))  # n - 2 - null = 6 - 2 - 4 = 0
    assert not b.degenerate
    b = tb_energy_bound(path(5), null=4)
    assert b.degenerate and b.value == pytest.approx(2)


def test_odd_tb_vs_sun_examples():
    re, target, ok = odd_tb_vs_sun(star(5))
    assert re == pytest.approx(2) and target == pytest.approx(2 + SQ2) and ok
    for p in range(1, 8):
        re, target, ok = odd_tb_vs_sun(sun(p))
        assert ok and re == pytest.approx(target, abs=1e-9)
    with pytest.raises(ValueError):
        odd_tb_vs_sun(path(4))


def test_preconditions():
    with pytest.raises(ValueError):
        diag_R2_A(Graph.from_edges(2, [(0, 1)]))
    with pytest.raises(ValueError):
        tb_energy_bound(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(NotTBError):
        tb_energy_bound(complete(4))


def test_is_TB_choice_is_the_one_decomposed():
    for t in filter(is_TB, enumerate_trees(8)):
        b = is_TB(t)
        d = tb_decompose(t)
        assert d.bipartition == b
        other = Bipartition(b.side_b, b.side_a)
        if all(t.degrees[v] <= 2 for v in other.side_b):
            assert len(tb_decompose(t, other).b2) <= len(d.b2)
