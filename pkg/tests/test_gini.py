from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from partition_gini.errors import DomainError, SizeMismatchError, TooManyPartsError
from partition_gini.gini import b_stat, e2, e2_pairwise, gini, gini_nk, lorenz_points, normalized_gini
from partition_gini.partitions import Partition, conjugate, dominates, enumerate_partitions, enumerate_partitions_bounded


@pytest.mark.parametrize("lam, value", [((4, 3, 1, 1), 27), ((7,), 0), ((1,) * 6, 15)])
def test_e2_examples(lam, value):
    assert e2(lam) == value == e2_pairwise(lam)


@pytest.mark.parametrize(
    "lam, pad, value", [((4, 4, 4, 4), 4, 24), ((7, 6, 3), 4, 12), ((5,), 1, 0)]
)
def test_b_stat_examples(lam, pad, value):
    assert b_stat(lam, pad) == value


def test_b_stat_pad_too_small():
    with pytest.raises(TooManyPartsError):
        b_stat((1, 1, 1), 2)


def test_gini_six_table():
    expected = {
        (1, 1, 1, 1, 1, 1): 0, (2, 1, 1, 1, 1): 5, (2, 2, 1, 1): 8, (2, 2, 2): 9, (3, 1, 1, 1): 9,
        (3, 2, 1): 11, (3, 3): 12, (4, 1, 1): 12, (4, 2): 13, (5, 1): 14, (6,): 15,
    }
    for lam in enumerate_partitions(6):
        assert gini(lam) == expected[lam.parts]


def test_incomparable_pair_values():
    assert gini((6, 2, 2)) == 39 and gini((5, 5)) == 40
    assert e2((5, 5)) == 25 and e2((6, 2, 2)) == 28


@pytest.mark.parametrize(
    "lam, n, k, value", [((4, 2), 3, 2, 4), ((5, 4, 3), 4, 3, 8), ((7, 7, 4, 4, 3), 5, 5, 11), ((5, 5, 2, 2, 1), 5, 3, 11)]
)
def test_gini_nk_examples(lam, n, k, value):
    assert gini_nk(lam, n, k) == value


def test_gini_nk_errors():
    with pytest.raises(SizeMismatchError):
        gini_nk((4, 2), 3, 3)
    with pytest.raises(TooManyPartsError):
        gini_nk((1, 1, 1, 1), 2, 2)
    with pytest.raises(DomainError):
        gini_nk((), 0, 1)


def test_normalized():
    assert normalized_gini((6,)) == 1
    assert normalized_gini((1,) * 6) == 0
    assert normalized_gini((3, 2, 1)) == Fraction(11, 15)
    with pytest.raises(DomainError):
        normalized_gini((1,))


def test_lorenz_example():
    sample = lorenz_points((4, 2), 3, 2)
    assert [y for _, y in sample.points] == [0, 0, 2, 6]
    assert [y for _, y in sample.equality] == [0, 2, 4, 6]
    assert sample.rows()[2] == (2, 4, 2)
    assert sample.gap_area() == gini_nk((4, 2), 3, 2)


def test_lorenz_equality_case():
    sample = lorenz_points((3, 3, 3), 3, 3)
    assert sample.points == sample.equality
    assert sample.gap_area() == 0


def test_lorenz_gap_area_example():
    assert lorenz_points((5, 5, 2, 2, 1), 5, 3).gap_area() == 11


def test_conjugate_identity():
    for n in range(15):
        for lam in enumerate_partitions(n):
            assert gini(lam) == e2(conjugate(lam))


def test_range():
    for n in range(1, 13):
        top = comb(n, 2)
        for lam in enumerate_partitions(n):
            g = gini(lam)
            assert 0 <= g <= top
            assert (g == 0) == (lam == Partition([1] * n))
            assert (g == top) == (lam == Partition([n]))


def test_strict_schur_convexity():
    for n in range(11):
        parts = enumerate_partitions(n)
        for lam, mu in product(parts, repeat=2):
            if lam != mu and dominates(lam, mu):
                assert gini(mu) < gini(lam)
                assert e2(lam) < e2(mu)


def test_incomparability_witness():
    for n in range(11):
        parts = enumerate_partitions(n)
        stats = {p: (gini(p), e2(p)) for p in parts}
        for lam, mu in product(parts, repeat=2):
            if lam == mu:
                continue
            (gl, el), (gm, em) = stats[lam], stats[mu]
            if gm == gl or em == el or (gm < gl) == (em < el):
                assert not dominates(lam, mu) and not dominates(mu, lam)


def test_shift_invariance():
    for n in range(1, 6):
        for k in range(1, 4):
            for lam in enumerate_partitions_bounded(n * k, n):
                base = gini_nk(lam, n, k)
                padded = lam.padded(n)
                for j in range(k, 6):
                    mu = Partition(p - k + j for p in padded)
                    assert gini_nk(mu, n, j) == base


@given(st.integers(1, 25).flatmap(lambda n: st.sampled_from(enumerate_partitions(n))))
def test_gini_is_full_population_gini_nk(lam):
    assert gini(lam) == gini_nk(lam, lam.n, 1)
    assert lorenz_points(lam, lam.n).gap_area() == gini(lam)
