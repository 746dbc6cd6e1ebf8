from itertools import product

import pytest

from _instances import all_instances, ids
from weylquiver.cartan import build_cartan, pairing
from weylquiver.chars import dominant_weights_below
from weylquiver.exactpoly import ONE, ZERO, LaurentPoly
from weylquiver.fermionic import (
    BudgetExceeded,
    charge,
    enumerate_S,
    fermionic_M,
    partitions,
    root_coords_between,
    summand,
    vacancy,
)
from weylquiver.weylmod import lambda_min

A1, A2 = build_cartan("A", 1), build_cartan("A", 2)


def brute_force_S(d, lam, mu):
    """Every table (m_k^(i)) with k <= n_i and sum_k k m_k^(i) = n_i, by exhaustive search."""
    n = root_coords_between(d, lam, mu)
    if n is None:
        return []
    slots = [(i, k) for i in range(d.rank) for k in range(1, n[i] + 1)]
    ranges = [range(n[i] // k + 1) for i, k in slots]
    out = []
    for counts in product(*ranges):
        tot = [0] * d.rank
        for (i, k), c in zip(slots, counts):
            tot[i] += k * c
        if tuple(tot) == n:
            out.append({s: c for s, c in zip(slots, counts) if c})
    return out


def canon(ms):
    return sorted(tuple(sorted(m.items())) for m in ms)


def test_partitions():
    assert partitions(0) == [()]
    assert partitions(4) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    assert [len(partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_enumerate_S_examples():
    assert enumerate_S(A2, (1, 1), (1, 1)) == [{}]
    # 2 w1 = alpha_1 in A1, so n_1 = 1
    assert enumerate_S(A1, (2,), (0,)) == [{(0, 1): 1}]
    # 4 w1 = 2 alpha_1: both partitions of 2
    assert canon(enumerate_S(A1, (4,), (0,))) == canon([{(0, 1): 2}, {(0, 2): 1}])
    # 2w1 - 2w2 has root coordinates (2/3, -2/3)
    assert enumerate_S(A2, (2, 0), (0, 2)) == []
    assert enumerate_S(A2, (0, 0), (1, 1)) == []


@pytest.mark.parametrize("d,lam", all_instances(), ids=ids(all_instances()))
def test_enumerate_S_matches_brute_force(d, lam):
    for mu in dominant_weights_below(d, lam):
        assert canon(enumerate_S(d, lam, mu)) == canon(brute_force_S(d, lam, mu))


@pytest.mark.parametrize("d,lam", all_instances(), ids=ids(all_instances()))
def test_pruning_keeps_the_sum(d, lam):
    for mu in dominant_weights_below(d, lam):
        full = sum((summand(d, m, lam) for m in enumerate_S(d, lam, mu)), ZERO)
        assert full == fermionic_M(d, lam, mu)
        kept = canon(enumerate_S(d, lam, mu, prune=True))
        dropped = [m for m in enumerate_S(d, lam, mu) if tuple(sorted(m.items())) not in kept]
        assert all(summand(d, m, lam).is_zero() for m in dropped)


def test_vacancy_examples():
    assert vacancy(A2, {}, (3, 1), 0, 4) == 3
    assert vacancy(A2, {}, (3, 1), 1, 1) == 1
    assert vacancy(A1, {(0, 1): 1}, (2,), 0, 1) == 0
    assert vacancy(A2, {(0, 1): 1, (1, 1): 1}, (1, 1), 0, 1) == 0
    # A1, lambda = 2 w1, m = {m_2 = 1}: p_2 = 2 - 2 * 2 = -2
    assert vacancy(A1, {(0, 2): 1}, (2,), 0, 2) == -2


def test_charge_examples():
    assert charge(A2, {}, (1, 1)) == 0
    assert charge(A1, {(0, 1): 1}, (2,)) == -1
    assert charge(A2, {(0, 1): 1, (1, 1): 1}, (1, 1)) == -1


def test_fermionic_examples():
    t = LaurentPoly.monomial
    for d, lam in [(A1, (3,)), (A2, (1, 1)), (build_cartan("E", 6), (0, 1, 0, 0, 0, 0))]:
        assert fermionic_M(d, lam, lam) == ONE
    assert fermionic_M(A1, (2,), (0,)) == t(-1)
    assert fermionic_M(A1, (3,), (1,)) == t(-1) + t(-2)
    assert fermionic_M(A2, (1, 1), (0, 0)) == t(-1)
    assert fermionic_M(A2, (2, 0), (0, 2)) == ZERO
    assert fermionic_M(A2, (0, 0), (1, 1)) == ZERO


def test_fermionic_rejects_non_dominant():
    with pytest.raises(ValueError):
        fermionic_M(A2, (1, 1), (2, -1))


def test_budget():
    e6 = build_cartan("E", 6)
    lam, mu = (0, 0, 0, 1, 0, 0), (0,) * 6
    with pytest.raises(BudgetExceeded):
        enumerate_S(e6, lam, mu, prune=True, max_terms=2)
    assert enumerate_S(e6, (1, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), max_terms=1) == [{}]


@pytest.mark.parametrize("d,lam", all_instances(), ids=ids(all_instances()))
def test_sign_and_socle_law(d, lam):
    lo = lambda_min(d, lam)
    dmax = (pairing(d, lam, lam) - pairing(d, lo, lo)) / 2
    assert dmax.denominator == 1
    for mu in dominant_weights_below(d, lam):
        m = fermionic_M(d, lam, mu)
        assert all(e <= 0 and c > 0 for e, c in m.items())
        assert m.coeff(-int(dmax)) == int(mu == lo)
        assert m.is_zero() or m.min_exp() >= -dmax
