import pytest
from hypothesis import given, strategies as st

from soclebranch.gt import gt_mult
from soclebranch.partitions import INF, ExtendedNat, enumerate_partitions, interlaces

from brute import gt_chains


@st.composite
def partitions(draw, max_size=5):
    n = draw(st.integers(0, max_size))
    parts = enumerate_partitions(n)
    return parts[draw(st.integers(0, len(parts) - 1))]


def test_gt_examples():
    assert gt_mult((2,), (1,), 2) == ExtendedNat(2)
    assert gt_mult((2, 1), (2, 1), 0) == ExtendedNat(1)
    assert gt_mult((2, 1), (2, 1), INF) == ExtendedNat(1)
    assert gt_mult((2,), (1,), INF) == INF
    assert gt_mult((1,), (), 1) == ExtendedNat(1)


def test_single_box_drop_grows_without_bound():
    # the box can leave at any of the k steps, so m^k = k
    assert [gt_mult((1,), (), k).value for k in range(5)] == [0, 1, 2, 3, 4]
    assert gt_mult((1,), (), INF) == INF
    assert gt_mult((2,), (3,), INF) == ExtendedNat(0)


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("k", range(4))
def test_gt_matches_chain_enumeration(n, k):
    for lam in enumerate_partitions(n):
        for j in range(n + 1):
            for sigma in enumerate_partitions(j):
                assert gt_mult(lam, sigma, k) == ExtendedNat(gt_chains(lam, sigma, k))


@given(partitions(6), partitions(6))
def test_one_step_is_interlacing(lam, sigma):
    assert gt_mult(lam, sigma, 1) == ExtendedNat(int(interlaces(sigma, lam)))


@given(partitions(), partitions(), st.integers(0, 4))
def test_gt_monotone_in_k(lam, sigma, k):
    # repeating the top partition embeds k-chains into (k+1)-chains
    assert gt_mult(lam, sigma, k) <= gt_mult(lam, sigma, k + 1)


@given(partitions(), partitions(), st.integers(0, 3), st.integers(0, 3))
def test_composition(lam, sigma, j, k):
    total = sum(
        gt_mult(lam, mid, j).value * gt_mult(mid, sigma, k).value
        for n in range(sum(sigma), sum(lam) + 1)
        for mid in enumerate_partitions(n)
    )
    assert gt_mult(lam, sigma, j + k) == ExtendedNat(total)


@given(partitions(5), partitions(5))
def test_infinite_value_is_unbounded_or_eventually_constant(lam, sigma):
    """m^∞ is ∞ exactly when the finite probes keep growing past |lam/sigma|."""
    d = sum(lam) - sum(sigma)
    if d < 0:
        assert gt_mult(lam, sigma, INF) == ExtendedNat(0)
        return
    probe = gt_mult(lam, sigma, max(d, 1))
    nxt = gt_mult(lam, sigma, max(d, 1) + 1)
    inf = gt_mult(lam, sigma, INF)
    if probe.value > 1 or nxt.value > 1:
        assert inf == INF
    else:
        assert inf == nxt
