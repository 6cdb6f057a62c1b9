import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from occulab import data
from occulab.exactalg import sign_profile
from occulab.graph_core import generate_regular, named_graph
from occulab.indpoly import convolve, enumerate_independent_sets
from occulab.occupancy import (
    WeightedSet,
    compare_normalized_partition,
    compare_occupancy,
    critical_filter,
    expected_difference_polynomial,
    expected_value,
    log_normalized_count_compare,
    lower_envelope,
    occupancy_fraction,
    ratio_dominance,
    restrict_at_least,
    truncate_below,
)
from oracles import expected_value_at

PET = WeightedSet(data.PETERSEN_VECTOR, 10, "petersen")
DOD = WeightedSet(data.DODECAHEDRON_VECTOR, 20, "dod")
G14 = WeightedSet(data.G14_VECTOR, 14, "g14")

vectors = st.lists(st.integers(1, 10**6), min_size=1, max_size=8)
positive_rationals = st.fractions(min_value=Fraction(1, 1000), max_value=100, max_denominator=1000).filter(lambda x: x > 0)


def test_expected_value_examples():
    ev = expected_value(WeightedSet((1, 1)))
    assert ev.evaluate(Fraction(1, 3)) == Fraction(1, 4)
    assert ev.evaluate(1) == Fraction(1, 2)
    assert expected_value(PET).evaluate(1) == Fraction(180, 76)


def test_decreasing_an_element_can_raise_the_expectation():
    s = WeightedSet((1, 0, 1, 0, 1))   # {0, 2, 4}
    t = WeightedSet((1, 1, 0, 0, 1))   # {0, 1, 4}
    x = Fraction(1, 10)
    assert expected_value(s).evaluate(x) < expected_value(t).evaluate(x)
    prof = sign_profile(expected_difference_polynomial(s, t))
    assert prof.signs[0] == -1 and 1 in prof.signs


def test_occupancy_fraction_examples():
    assert occupancy_fraction(PET).evaluate(1) == Fraction(9, 38)
    single = occupancy_fraction(WeightedSet((1, 1), 1))
    assert abs(single.evaluate(10**9) - 1) < Fraction(1, 10**8)
    expected = Fraction(sum(i * c for i, c in enumerate(data.DODECAHEDRON_VECTOR)), 20 * sum(data.DODECAHEDRON_VECTOR))
    assert occupancy_fraction(DOD).evaluate(1) == expected
    with pytest.raises(ValueError):
        occupancy_fraction(WeightedSet((1, 1)))


def test_restrict_at_least():
    assert restrict_at_least(PET, 2).vector == (0, 0, 30, 30, 5)
    assert restrict_at_least(PET, 0).vector == PET.vector
    assert restrict_at_least(G14, 5).vector == (0, 0, 0, 0, 0, 48)
    with pytest.raises(ValueError):
        restrict_at_least(PET, 5)


def test_ratio_dominance_examples():
    assert ratio_dominance(PET, PET)
    assert ratio_dominance(WeightedSet((1, 2)), WeightedSet((1, 3)))
    doubled = WeightedSet(convolve(PET.vector, PET.vector), 20)
    # the two graphs' occupancies cross, so neither direction can hold
    assert not ratio_dominance(doubled, DOD) or not ratio_dominance(DOD, doubled)
    assert not ratio_dominance(doubled, DOD) and not ratio_dominance(DOD, doubled)
    with pytest.raises(ValueError):
        ratio_dominance(PET, DOD)


def test_ratio_dominance_unequal_alpha():
    # shorter vector compared only up to its own length
    assert ratio_dominance(WeightedSet((1, 4, 2)), WeightedSet((1, 4, 3, 1)))
    assert not ratio_dominance(WeightedSet((1, 4, 3, 1)), WeightedSet((1, 4, 2)))


def test_compare_occupancy_examples():
    assert compare_occupancy(PET, PET).signs == [0]
    g38 = WeightedSet(data.G38_VECTOR, 38)
    h38 = WeightedSet(data.TUTTE_COXETER_VECTOR, 30)
    prof = compare_occupancy(g38, h38)
    assert len(prof.breakpoints) == 1 and prof.signs == [-1, 1] and prof.roots()[0] < 17
    (l1,) = compare_occupancy(PET, DOD).roots()
    assert abs(l1 - Fraction("1.21338")) < Fraction(1, 10**4)
    (l2,) = compare_occupancy(DOD, G14).roots()
    assert abs(l2 - Fraction("6.87002")) < Fraction(1, 10**4)


def test_compare_is_antisymmetric():
    for a, b in ((PET, DOD), (DOD, G14), (PET, G14)):
        ab, ba = compare_occupancy(a, b), compare_occupancy(b, a)
        assert ab.breakpoints == ba.breakpoints
        assert ab.signs == [-s for s in ba.signs]


def test_compare_normalized_partition_examples():
    assert compare_normalized_partition(PET, PET).signs == [0]
    left = compare_normalized_partition(DOD, PET)
    assert left.signs == [1, -1] and abs(left.roots()[0] - Fraction("2.0927")) < Fraction(1, 10**4)
    right = compare_normalized_partition(DOD, G14)
    assert right.signs == [-1, 1] and abs(right.roots()[0] - Fraction("17.264")) < Fraction(1, 10**2)


def test_critical_filter_examples():
    assert critical_filter([PET]) == [PET]
    assert critical_filter([PET, WeightedSet(PET.vector, 10)]) == [PET]
    with pytest.raises(ValueError):
        critical_filter([PET, DOD])


def test_critical_filter_max_mode_swaps():
    lo, hi = WeightedSet((1, 2), 2), WeightedSet((1, 3), 2)
    assert critical_filter([lo, hi], "min") == [lo]
    assert critical_filter([lo, hi], "max") == [hi]


def test_critical_filter_n10_cubic_keeps_petersen():
    sets = [WeightedSet.from_graph(g) for g in generate_regular(10, 3, 4)]
    survivors = critical_filter(sets)
    assert any(s.vector == data.PETERSEN_VECTOR for s in survivors)
    # pairwise oracle: a survivor is never strictly dominated
    for s in survivors:
        assert not any(ratio_dominance(t, s) and not ratio_dominance(s, t) for t in sets)


def test_log_normalized_count_compare():
    g22 = WeightedSet.from_graph(named_graph("g22"))
    rob = WeightedSet.from_graph(named_graph("robertson"))
    assert log_normalized_count_compare(g22, rob) == -1
    assert 6447 ** 19 < 1950 ** 22
    assert log_normalized_count_compare(PET, PET) == 0
    assert log_normalized_count_compare(PET, WeightedSet(convolve(PET.vector, PET.vector), 20)) == 0


def test_lower_envelope_cubic():
    pieces = lower_envelope([PET, DOD, G14])
    assert [p[1] for p in pieces] == [[0], [1], [2]]
    assert abs(pieces[0][0] - 1.21338) < 1e-4 and abs(pieces[1][0] - 6.87002) < 1e-4


# -- properties -------------------------------------------------------------


@settings(max_examples=300, deadline=None)
@given(vectors, st.integers(1, 7), positive_rationals)
def test_subset_sandwich(vec, split, x):
    s = WeightedSet(vec)
    if split > s.top:
        return
    low, high = truncate_below(s, split), restrict_at_least(s, split)
    e_low, e_all, e_high = (expected_value(w).evaluate(x) for w in (low, s, high))
    assert e_low <= split - 1 <= split <= e_high
    assert e_low <= e_all <= e_high


@settings(max_examples=300, deadline=None)
@given(vectors, vectors)
def test_dominance_implies_pointwise(a, b):
    wa, wb = WeightedSet(a), WeightedSet(b)
    if not ratio_dominance(wa, wb):
        return
    rng = random.Random(len(a) * 31 + len(b))
    for _ in range(20):
        x = Fraction(rng.randint(1, 10**5), 1000)
        assert expected_value_at(a, x) <= expected_value_at(b, x)


def test_expected_value_strictly_increasing_on_graphs():
    rng = random.Random(9)
    for name in ("petersen", "g14", "dodecahedron", "robertson", "cyc13", "g22"):
        ev = expected_value(WeightedSet.from_graph(named_graph(name)))
        d = ev.derivative()
        for _ in range(50):
            x = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**4))
            assert d.num.sign_at(x) * d.den.sign_at(x) > 0


def test_occupancy_tends_to_independence_ratio():
    for name in ("petersen", "g14", "dodecahedron", "robertson", "g20", "g22"):
        s = WeightedSet.from_graph(named_graph(name))
        value = occupancy_fraction(s).evaluate(10**6)
        assert abs(value - Fraction(s.top, s.order)) < Fraction(1, 1000)
