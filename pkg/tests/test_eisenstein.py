from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from mannheim.eisenstein import (INT64_MAX, ONE, UNITS, W, WBAR, ZERO, EisensteinInt, eis_add, eis_conj,
                                 eis_mul, eis_norm, from_wbar_coords, parse, render, unit_difference_norms,
                                 unit_set, wbar_coords)

E = EisensteinInt
small = st.integers(-10**4, 10**4)
elements = st.builds(E, small, small)


@pytest.mark.parametrize("a, b, expected", [
    (E(1, 2), E(0, 0), E(1, 2)),
    (E(-7, 7), E(7, -7), E(0, 0)),
    (E(2, -8), E(-9, 15), E(-7, 7)),
])
def test_add(a, b, expected):
    assert eis_add(a, b) == expected


@pytest.mark.parametrize("a, b, expected", [
    (E(0, 1), E(0, 1), E(-1, 1)),
    (E(1, 2), E(3, -2), E(7, 0)),
    (E(1, 0), E(5, -3), E(5, -3)),
])
def test_mul(a, b, expected):
    assert eis_mul(a, b) == expected


@pytest.mark.parametrize("a, expected", [(E(0, 1), E(1, -1)), (E(5, 0), E(5, 0)), (E(2, -8), E(-6, 8))])
def test_conj(a, expected):
    assert eis_conj(a) == expected


@pytest.mark.parametrize("a, expected", [(E(7, 9), 193), (E(-7, 7), 49), (E(0, 0), 0)])
def test_norm(a, expected):
    assert eis_norm(a) == expected


@pytest.mark.parametrize("a, expected", [(E(-1, 1), (0, -1)), (E(5, 0), (5, 0)), (E(2, -8), (-6, 8))])
def test_wbar_coords(a, expected):
    assert wbar_coords(a) == expected


def test_units():
    assert unit_set() == (E(1, 0), E(-1, 0), E(0, 1), E(0, -1), E(1, -1), E(-1, 1))
    assert all(u.norm() == 1 for u in UNITS)
    assert {-u for u in UNITS} == set(UNITS)
    assert {a * b for a in UNITS for b in UNITS} == set(UNITS)


def test_no_other_norm_one_elements():
    box = range(-5, 6)
    assert {E(x, y) for x in box for y in box if E(x, y).norm() == 1} == set(UNITS)


def test_unit_difference_norms():
    norms = [(a - b).norm() for a, b in combinations(UNITS, 2)]
    assert len(norms) == 15
    assert unit_difference_norms() == {1, 3, 4}
    # the norm form never takes the value 2
    assert all(x * x + x * y + y * y != 2 for x in range(-3, 4) for y in range(-3, 4))


def test_w_identities():
    assert W * WBAR == ONE
    assert W + WBAR == ONE
    assert W * W == W - ONE


def test_overflow_detected():
    big = E(INT64_MAX, 0)
    with pytest.raises(OverflowError):
        big + ONE
    with pytest.raises(OverflowError):
        E(2**40, 2**40) * E(2**40, 0)
    with pytest.raises(OverflowError):
        E(2**62, 2**62).norm()
    with pytest.raises(OverflowError):
        E(2**63, 0)


@pytest.mark.parametrize("a, text", [
    (E(-7, 7), "-7+7w"), (E(2, -8), "2-8w"), (E(0, 0), "0"), (E(0, -1), "-w"),
    (E(1, -1), "1-w"), (E(0, 3), "3w"), (E(-4, 0), "-4"),
])
def test_render(a, text):
    assert render(a) == text
    assert parse(text) == a


@pytest.mark.parametrize("bad", ["", "w w", "1+", "x", "2w3", "1+2+w"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse(bad)


@given(elements, elements)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()


@given(elements)
def test_norm_zero_only_at_zero(a):
    assert (a.norm() == 0) == (a == ZERO)


@given(elements, elements)
def test_conj_is_automorphism(a, b):
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a


@given(elements)
def test_times_conj_is_norm(a):
    assert a * a.conj() == E(a.norm(), 0)


@given(elements)
def test_wbar_round_trip(a):
    assert from_wbar_coords(*wbar_coords(a)) == a


@given(elements)
def test_render_round_trip(a):
    assert parse(render(a)) == a
