from itertools import product

import pytest
from hypothesis import given, strategies as st

from quandlekit import torus as tq
from quandlekit.errors import DomainError, InputError
from quandlekit.torus import CONTRACTIBLE as I, Slope

SMALL = tq.slopes_in_box(4)


@pytest.mark.parametrize("raw,expected", [((2, 4), (1, 2)), ((-1, 1), (1, -1)), ((0, -3), (0, 1)), ((-6, -4), (3, 2))])
def test_normalize(raw, expected):
    assert tq.normalize_slope(*raw) == Slope(*expected)


def test_normalize_rejects_zero():
    with pytest.raises(InputError):
        tq.normalize_slope(0, 0)


def test_slope_invariant_enforced():
    with pytest.raises(InputError):
        Slope(-1, 2)
    with pytest.raises(InputError):
        Slope(2, 4)


def test_contractible_cases():
    q = Slope(2, 3)
    assert tq.op_right(q, I) == q and tq.op_left(q, I) == q
    assert tq.op_right(I, q) == I and tq.op_left(I, q) == I
    assert tq.op_right(I, I) == I


def test_op_right_examples():
    assert tq.op_right(Slope(1, 1), Slope(1, 1)) == Slope(1, 1)
    assert tq.op_right(Slope(1, 0), Slope(0, 1)) == Slope(1, -1)


def test_slope_to_matrix_examples():
    assert tq.slope_to_matrix(Slope(1, 0)) == ((1, -1), (0, 1))
    assert tq.slope_to_matrix(Slope(0, 1)) == ((1, 0), (1, 1))
    assert tq.slope_to_matrix(I) == ((1, 0), (0, 1))


def test_matrix_to_slope_examples():
    assert tq.matrix_to_slope(((1, -1), (0, 1))) == Slope(1, 0)
    assert tq.matrix_to_slope(((1, 0), (0, 1))) == I
    with pytest.raises(DomainError):
        tq.matrix_to_slope(((2, 1), (0, 1)))


@pytest.mark.parametrize("m", [((1, 1), (0, 1)), ((1, 0), (-1, 1)), ((1, -4), (0, 1)), ((-1, 0), (0, -1)), ((1, -2), (0, 1))])
def test_matrix_to_slope_rejects_non_twists(m):
    # negative twists, det/trace failures and squares of twists are all rejected
    with pytest.raises(DomainError):
        tq.matrix_to_slope(m)


def test_conjugation_oracle_examples():
    a, b = Slope(1, 0), Slope(0, 1)
    assert tq.conjugation_oracle(a, a) == a
    assert tq.conjugation_oracle(a, b) == Slope(1, -1)
    assert tq.conjugation_oracle(a, I) == a


def test_matrix_round_trip_and_invariants():
    box = tq.slopes_in_box(20)
    mats = set()
    for s in box:
        m = tq.slope_to_matrix(s)
        (a, b), (c, d) = m
        assert a * d - b * c == 1 and a + d == 2
        assert tq.matrix_to_slope(m) == s
        mats.add(m)
    assert len(mats) == len(box)


def test_quandle_axioms_exhaustive_small_box():
    box = tq.slopes_in_box(12)
    for a in box:
        assert tq.op_right(a, a) == a
    for a, b in product(box, repeat=2):
        assert tq.op_left(tq.op_right(a, b), b) == a
        assert tq.op_right(tq.op_left(a, b), b) == a
    for a, b, c in product(SMALL, repeat=3):
        assert tq.op_right(tq.op_right(a, b), c) == tq.op_right(tq.op_right(a, c), tq.op_right(b, c))


slopes = st.tuples(st.integers(-30, 30), st.integers(-30, 30)).filter(lambda p: p != (0, 0)).map(
    lambda p: tq.normalize_slope(*p)) | st.just(I)


@given(slopes, slopes, slopes)
def test_distributivity_random(a, b, c):
    assert tq.op_right(tq.op_right(a, b), c) == tq.op_right(tq.op_right(a, c), tq.op_right(b, c))


@given(slopes, slopes)
def test_action_matches_operation(a, b):
    mb = tq.slope_to_matrix(b)
    assert tq.act(a, mb) == tq.op_right(a, b)
    # conjugating a twist matrix moves its slope by the action
    lhs = tq.slope_to_matrix(tq.act(a, mb))
    assert lhs == tq.mat_mul(tq.mat_mul(tq.mat_inv(mb), tq.slope_to_matrix(a)), mb)


def test_json_forms():
    assert Slope(1, -1).to_json() == [1, -1]
    assert I.to_json() == "I"
    assert Slope.from_json([-2, 2]) == Slope(1, -1)
    assert Slope.from_json("I") == I
    with pytest.raises(InputError):
        Slope.from_json([1, 2, 3])


def test_big_integers_do_not_overflow():
    a = Slope(1, 0)
    b = Slope(1, 3)  # intersection number 3, so the twists generate exponential growth
    for _ in range(40):
        a = tq.op_right(a, b)
        b = tq.op_right(b, a)
    assert abs(b.x) > 2**64 or abs(b.y) > 2**64
    assert tq.conjugation_oracle(a, b) == tq.op_right(a, b)
