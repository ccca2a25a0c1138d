import random

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import invariant_factors

from quandlekit import finite as fq
from quandlekit import qhomology as qh
from quandlekit.errors import InputError, ResourceError
from quandlekit.qhomology import HomologyGroup

from oracles import bareiss_rank, invariant_factors_by_minors

R3 = fq.dihedral_quandle(3)
POINT = fq.trivial_quandle(1)

small_matrices = st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=200, deadline=None)
@given(small_matrices)
def test_snf_matches_minors_oracle(rows):
    assert qh.smith_normal_form(rows).invariant_factors == invariant_factors_by_minors(rows)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 7).flatmap(lambda m: st.integers(2, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=m, max_size=m))))
def test_snf_matches_sympy(rows):
    ours = qh.smith_normal_form(rows).invariant_factors
    theirs = tuple(abs(int(d)) for d in invariant_factors(sympy.Matrix(rows), domain=sympy.ZZ) if d != 0)
    assert ours == theirs


def test_snf_examples():
    assert qh.smith_normal_form([[2, 4], [6, 8]]).invariant_factors == (2, 4)
    assert qh.smith_normal_form([[0, 0], [0, 0]]).invariant_factors == ()
    assert qh.smith_normal_form([[2, 0], [0, 3]]).invariant_factors == (1, 6)
    assert qh.smith_normal_form(np.zeros((0, 3), dtype=int)).rank == 0


def test_snf_rejects_fractions():
    with pytest.raises(InputError):
        qh.smith_normal_form([[0.5, 1]])


def test_boundary_one_is_zero():
    d1 = qh.quandle_boundary(R3, 1)
    assert d1.shape == (0, 3)


def test_chain_basis_drops_degenerate_tuples():
    assert len(qh.chain_basis(R3, 2)) == 6
    assert len(qh.chain_basis(R3, 2, quandle=False)) == 9
    assert len(qh.chain_basis(R3, 3)) == 12


def test_boundary_two_by_hand():
    # ∂(x, y) = (x) - (x ▷ y)
    d2 = qh.rack_boundary(R3, 2).toarray()
    basis = [tuple(t) for t in qh.chain_basis(R3, 2, quandle=False)]
    col = basis.index((0, 1))
    expected = np.zeros(3, dtype=int)
    expected[0] += 1
    expected[R3.right(0, 1)] -= 1
    assert (d2[:, col] == expected).all()


@pytest.mark.parametrize("name", ["dihedral:3", "dihedral:4", "alexander:5:2", "genus2-17", "trivial:2"])
@pytest.mark.parametrize("quandle", [True, False])
def test_boundary_squares_to_zero(name, quandle):
    from quandlekit.constructors import from_name

    q = from_name(name)
    top = 3 if q.size > 10 else 4
    for n in range(2, top + 1):
        assert qh.boundary_squares_to_zero(q, n, quandle)


def test_r3_quandle_homology():
    assert [qh.quandle_homology(R3, n) for n in (1, 2, 3, 4)] == [
        HomologyGroup(1), HomologyGroup(0), HomologyGroup(0, (3,)), HomologyGroup(0, (3,))]


def test_r3_values_against_oracles():
    # rank by Bareiss and torsion from sympy, independent of the SNF code
    d3 = qh.quandle_boundary(R3, 3).toarray().tolist()
    d4 = qh.quandle_boundary(R3, 4).toarray().tolist()
    factors4 = tuple(abs(int(d)) for d in invariant_factors(sympy.Matrix(d4), domain=sympy.ZZ) if d != 0)
    assert qh.smith_normal_form(d4).invariant_factors == factors4
    assert bareiss_rank(d4) == len(factors4)
    rank3 = bareiss_rank(d3)
    h3_rank = len(d3[0]) - rank3 - len(factors4)
    assert h3_rank == 0
    assert tuple(d for d in factors4 if d > 1) == (3,)


def test_r3_rack_homology():
    assert qh.rack_homology(R3, 2) == HomologyGroup(1)
    assert qh.rack_homology(R3, 3) == HomologyGroup(1, (3,))


def test_point_homology():
    assert qh.quandle_homology(POINT, 1) == HomologyGroup(1)
    for n in (2, 3, 4):
        assert qh.quandle_homology(POINT, n).is_zero


def test_other_known_groups():
    assert qh.quandle_homology(fq.dihedral_quandle(4), 2) == HomologyGroup(2, (2, 2))
    assert qh.quandle_homology(fq.dihedral_quandle(5), 3) == HomologyGroup(0, (5,))


@pytest.mark.parametrize("n", range(1, 10))
def test_first_homology_rank_counts_orbits(n):
    q = fq.dihedral_quandle(n)
    assert qh.quandle_homology(q, 1).rank == len(fq.orbits(q))


def test_first_homology_has_no_torsion_random_conj():
    rng = random.Random(3)
    for _ in range(5):
        q = fq.alexander_quandle(7, rng.choice([2, 3, 4, 5, 6]))
        assert qh.quandle_homology(q, 1) == HomologyGroup(1)


def test_seventeen_low_degrees():
    q = fq.genus2_seventeen()
    assert qh.quandle_homology(q, 1) == HomologyGroup(3)
    assert qh.quandle_homology(q, 2) == HomologyGroup(6, (2,))


def test_cohomology_by_universal_coefficients():
    assert qh.cohomology(R3, 1) == HomologyGroup(1)
    assert qh.cohomology(R3, 3, 0) == HomologyGroup(0, ())
    assert qh.cohomology(R3, 4, 0) == HomologyGroup(0, (3,))
    assert qh.cohomology(R3, 3, 3) == HomologyGroup(0, (3,))
    assert qh.cohomology(R3, 3, 2).is_zero
    with pytest.raises(InputError):
        qh.cohomology(R3, 2, 1)


def test_degree_limits():
    with pytest.raises(ResourceError):
        qh.quandle_homology(R3, 5)
    with pytest.raises(InputError):
        qh.quandle_homology(R3, 0)
    with pytest.raises(ResourceError):
        qh.quandle_homology(fq.genus2_seventeen(), 4)


def test_group_text():
    assert str(HomologyGroup(2, (2, 6))) == "Z^2 ⊕ Z/2 ⊕ Z/6"
    assert str(HomologyGroup(0)) == "0"
