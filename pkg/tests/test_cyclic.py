"""Cohomology of Z/2, Z/4, Z/6 with polynomial coefficients."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcoh.cyclic import (
    PeriodicComplex,
    cyclic_cohomology,
    orbit_decomposition_z4,
    restriction_chain_map,
    z2_prediction,
    z4_table_prediction,
)
from braidcoh.exactalg import AbelianGroup, IntMatrix, tensor_fp_dimension
from braidcoh.symmod import action_matrix

degrees = st.integers(0, 30).map(lambda k: 2 * k)


def G(free=0, *orders):
    return AbelianGroup.from_orders(free, orders)


def test_examples():
    assert cyclic_cohomology(2, 2, 4) == G(0, 2, 2, 2)
    assert cyclic_cohomology(4, 2, 4) == G(0, 2)
    assert cyclic_cohomology(4, 2, 8) == G(0, 2, 4, 2)
    assert cyclic_cohomology(4, 0, 0) == G(1)


def test_orbit_decomposition():
    assert orbit_decomposition_z4(4) == [("I1", (0, 2)), ("I3", (1,))]
    assert orbit_decomposition_z4(0) == [("I2", (0,))]
    assert [label for label, _ in orbit_decomposition_z4(6)] == ["I5", "I5"]
    # the blocks partition the monomial basis
    for n in range(0, 41, 2):
        idx = sorted(k for _, ks in orbit_decomposition_z4(n) for k in ks)
        assert idx == list(range(n // 2 + 1))


def test_restriction_factors():
    t4, t6 = action_matrix("w4", 8), action_matrix("w6", 8)
    eye = IntMatrix.identity(5)
    assert restriction_chain_map(4, 1, 8) == t4 + eye
    assert restriction_chain_map(6, 1, 8) == t6 @ t6 + t6 + eye
    assert restriction_chain_map(4, 0, 8) == eye


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([4, 6]), degrees, st.integers(0, 5))
def test_restriction_commutes_with_differentials(m, n, j):
    big = PeriodicComplex.build(m, n)
    # the Z/2 complex on the restricted generator w_m^(m/2)
    small = PeriodicComplex(2, big.generator_matrix ** (m // 2))
    lhs = small.differential(j) @ restriction_chain_map(m, j, n)
    rhs = restriction_chain_map(m, j + 1, n) @ big.differential(j)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 4, 6]), degrees, st.integers(1, 4))
def test_two_periodic(m, n, i):
    assert cyclic_cohomology(m, i, n) == cyclic_cohomology(m, i + 2, n)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 4, 6]), degrees, st.integers(0, 4), st.sampled_from([2, 3, 5]))
def test_mod_p_dimension_by_universal_coefficients(m, n, i, p):
    # dim H^i(G; M (x) F_p) = dim H^i (x) F_p + dim Tor(H^{i+1}, F_p)
    here, nxt = cyclic_cohomology(m, i, n), cyclic_cohomology(m, i + 1, n)
    want = tensor_fp_dimension(here, p) + len(nxt.tor_cyclic(p).invariant_factors)
    assert cyclic_cohomology(m, i, n, p) == want


@pytest.mark.parametrize("n", range(0, 61, 2))
def test_positive_degree_cohomology_is_torsion_killed_by_order(n):
    for m in (2, 4, 6):
        for i in (1, 2, 3):
            g = cyclic_cohomology(m, i, n)
            assert g.free_rank == 0
            assert all(m % q == 0 for q in g.prime_powers())


def test_odd_primes_only_see_z3():
    for n in range(0, 61, 2):
        for i in (1, 2):
            assert cyclic_cohomology(4, i, n).p_part(3) == []
            assert all(q in (2, 3) for q in cyclic_cohomology(6, i, n).prime_powers())


def test_tables_small_range():
    for n in range(0, 25, 2):
        for i in range(5):
            assert cyclic_cohomology(4, i, n) == z4_table_prediction(i, n)
            assert cyclic_cohomology(2, i, n) == z2_prediction(i, n)


def test_bad_arguments():
    with pytest.raises(ValueError):
        PeriodicComplex.build(3, 4)
    with pytest.raises(ValueError):
        cyclic_cohomology(4, -1, 4)
    with pytest.raises(ValueError):
        restriction_chain_map(2, 1, 4)
