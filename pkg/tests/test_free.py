import random

import pytest
from hypothesis import given, strategies as st

from quandlekit import finite as fq
from quandlekit import free
from quandlekit.errors import InputError
from quandlekit.free import FreeQuandleElement

from oracles import conjugate_word, same_free_quandle_element


def test_normalize_strips_leading_base_powers():
    assert free.normalize(3, 0, [(0, 1), (0, 1), (1, -1)]) == FreeQuandleElement(3, 0, ((1, -1),))
    assert free.normalize(3, 0, [(1, 1), (1, -1)]) == free.generator(3, 0)


def test_operation_examples():
    s0, s1 = free.generator(2, 0), free.generator(2, 1)
    assert free.fq_right(s0, s1) == FreeQuandleElement(2, 0, ((1, 1),))
    assert free.fq_right(s0, s0) == s0
    assert free.fq_left(free.fq_right(s0, s1), s1) == s0
    # (s0 ▷ s1) ▷ s0 = s0^(s1 s0)
    assert str(free.fq_right(free.fq_right(s0, s1), s0)) == "s0 ^ [g1+, g0+]"


def test_parse_and_print():
    a = free.parse("s2 ^ [g0+, g1-]", 3)
    assert a == FreeQuandleElement(3, 2, ((0, 1), (1, -1)))
    assert free.parse(str(a), 3) == a
    assert free.parse("s1", 2) == free.generator(2, 1)
    assert free.parse("s0 ^ [g0+, g1+]", 2) == FreeQuandleElement(2, 0, ((1, 1),))


@pytest.mark.parametrize("text", ["t0", "s5", "s0 ^ [h1+]", "s0 ^ [g1]"])
def test_parse_errors(text):
    with pytest.raises(InputError):
        free.parse(text, 3)


def test_unnormalized_construction_rejected():
    with pytest.raises(InputError):
        FreeQuandleElement(2, 0, ((0, 1),))
    with pytest.raises(InputError):
        FreeQuandleElement(2, 1, ((0, 1), (0, -1)))


def test_equality_matches_conjugacy_oracle():
    rng = random.Random(2024)
    agree = 0
    for _ in range(2000):
        s, t = rng.randrange(3), rng.randrange(3)
        w = [(rng.randrange(3), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))]
        v = [(rng.randrange(3), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))]
        # bias half of the pairs toward equal elements
        if rng.random() < 0.5:
            t, v = s, [(s, rng.choice((1, -1)))] * rng.randint(0, 2) + w
        same = free.normalize(3, s, w) == free.normalize(3, t, v)
        assert same == same_free_quandle_element(s, w, t, v)
        agree += same
    assert agree > 500


@given(st.integers(0, 2), st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), max_size=8))
def test_group_word_is_conjugate(gen, word):
    a = free.normalize(3, gen, word)
    assert free.as_group_word(a) == conjugate_word(gen, word)


def test_axioms_on_random_elements():
    rng = random.Random(9)
    for _ in range(500):
        a, b, c = (free.random_element(rng, 3, 6) for _ in range(3))
        assert free.fq_right(a, a) == a
        assert free.fq_left(free.fq_right(a, b), b) == a
        assert free.fq_right(free.fq_right(a, b), c) == free.fq_right(free.fq_right(a, c), free.fq_right(b, c))


@pytest.mark.parametrize("target", [fq.dihedral_quandle(3), fq.genus2_seventeen()])
def test_evaluate_is_homomorphism(target):
    rng = random.Random(target.size)
    images = [rng.randrange(target.size) for _ in range(3)]
    for _ in range(300):
        a, b = free.random_element(rng, 3, 8), free.random_element(rng, 3, 8)
        ev = lambda x: free.evaluate(x, images, target.right, target.left)
        assert ev(free.fq_right(a, b)) == target.right(ev(a), ev(b))
        assert ev(free.fq_left(a, b)) == target.left(ev(a), ev(b))


def test_evaluate_rank_mismatch():
    with pytest.raises(InputError):
        free.evaluate(free.generator(2, 0), [0], max, min)
