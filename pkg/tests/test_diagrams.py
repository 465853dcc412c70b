from hypothesis import given, strategies as st

from arcext.diagrams import (
    arc_degree,
    bruhat_leq,
    cap_diagram_of,
    check_weight,
    cup_diagram_of,
    enumerate_weights,
    is_oriented,
    nesting_numbers,
    weight_length,
    zero_weight,
)
import pytest


weights = st.integers(1, 5).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: st.permutations("v" * m + "^" * n))).map("".join)


def test_enumeration_counts():
    assert len(enumerate_weights(2, 2)) == 6
    assert len(enumerate_weights(3, 2)) == 10
    assert enumerate_weights(1, 1) == ["v^", "^v"]


def test_zero_weight_is_maximal_and_length_zero():
    for m, n in [(1, 1), (2, 2), (3, 2), (4, 1)]:
        top = zero_weight(m, n)
        assert weight_length(top) == 0
        assert all(bruhat_leq(w, top) for w in enumerate_weights(m, n))


def test_weight_length():
    assert weight_length("v^") == 1
    assert weight_length("vv^^") == 4
    assert weight_length("v^v^") == 3


def test_bad_weights():
    with pytest.raises(ValueError):
        check_weight("v^x")
    with pytest.raises(ValueError):
        check_weight("v^", 2, 0)
    with pytest.raises(ValueError):
        enumerate_weights(0, 0)


@given(weights)
def test_own_cup_diagram_has_degree_zero(w):
    cup = cup_diagram_of(w)
    assert is_oriented(cup, w)
    assert arc_degree(cup, w) == 0
    assert is_oriented(cap_diagram_of(w), w)


@given(weights)
def test_nesting_numbers_nonnegative_and_bounded(w):
    nes = nesting_numbers(cup_diagram_of(w))
    assert len(nes) <= min(w.count("v"), w.count("^"))
    assert all(0 <= x < len(nes) for x in nes)


@given(st.data())
def test_bruhat_is_a_partial_order_compatible_with_length(data):
    m = data.draw(st.integers(1, 4))
    n = data.draw(st.integers(1, 3))
    ws = enumerate_weights(m, n)
    a, b = data.draw(st.sampled_from(ws)), data.draw(st.sampled_from(ws))
    assert bruhat_leq(a, a)
    if bruhat_leq(a, b) and bruhat_leq(b, a):
        assert a == b
    if bruhat_leq(a, b) and a != b:
        assert weight_length(a) > weight_length(b)
