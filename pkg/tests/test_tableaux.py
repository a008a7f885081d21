import math
from functools import reduce

import pytest
from hypothesis import given

from extspringer import tableaux as tb
from extspringer.inversions import springer_inversions
from extspringer.partitions import ParseError, Partition, multinomial_count
from extspringer.verify import brute_force_divisible

from conftest import partitions, tableaux

SIGMA = "3,4,5,6/1,2,9,10/7,8/11,12"


def test_rows_must_strictly_increase():
    with pytest.raises(ValueError):
        tb.RowStrictTableau([[2, 1], [3]])
    with pytest.raises(ValueError):
        tb.RowStrictTableau([[1], [2, 3]])
    with pytest.raises(ValueError):
        tb.RowStrictTableau([[1, 2], [4]])


def test_parse_error_names_token():
    with pytest.raises(ParseError) as exc:
        tb.RowStrictTableau.parse("1,2/a")
    assert exc.value.token == "a"


def test_ijk_of_worked_tableau():
    dec = tb.ijk_decomposition(tb.as_tableau(SIGMA))
    assert dec.I == {8}
    assert dec.J == {1, 3, 4, 5, 7, 9, 11}
    assert dec.K == {2, 6, 10}


def test_blocks_divisor_and_quotient_of_worked_tableau():
    sigma = tb.as_tableau(SIGMA)
    assert tb.blocks(sigma) == [(1, 2), (3, 4, 5, 6), (7, 8), (9, 10), (11, 12)]
    assert tb.max_divisor(sigma) == 2
    assert tb.divisor_set(sigma) == [1, 2]
    assert tb.quotient_tableau(sigma, 2).rows == ((2, 3), (1, 5), (4,), (6,))
    with pytest.raises(ValueError):
        tb.quotient_tableau(sigma, 4)


def test_second_worked_tableau():
    sigma = tb.RowStrictTableau([[1, 2, 3, 4, 11, 12], [5, 6, 7, 8], [9, 10]])
    dec = tb.ijk_decomposition(sigma)
    assert dec.I == {10} and dec.K == {4, 8}
    assert tb.max_divisor(sigma) == 2
    assert tb.quotient_tableau(sigma, 2).rows == ((1, 2, 6), (3, 4), (5,))


def test_base_filling_and_x_lambda():
    lam = Partition([4, 3, 1])
    assert tb.base_filling(lam).to_text() == "3,5,7,8/2,4,6/1"
    assert tb.x_lambda_positions(lam) == {(3, 5), (5, 7), (7, 8), (2, 4), (4, 6)}


def test_w_sigma_follows_base_box_order():
    # (10, 6) is a Springer inversion, so 10 must precede 6 in the one-line word
    sigma = tb.as_tableau(SIGMA)
    assert tb.w_sigma(sigma) == [11, 7, 1, 3, 12, 8, 2, 4, 9, 5, 10, 6]
    assert tb.w_sigma(tb.base_filling(sigma.shape)) == list(range(1, 13))


def test_enumeration_is_lexicographic_and_complete():
    lst = list(tb.enumerate_rst(Partition([2, 1])))
    assert [t.to_text() for t in lst] == ["1,2/3", "1,3/2", "2,3/1"]
    for lam in [Partition([3, 2, 1]), Partition([2, 2, 2]), Partition([4, 1])]:
        words = [sum(t.rows, ()) for t in tb.enumerate_rst(lam)]
        assert words == sorted(words) and len(set(words)) == multinomial_count(lam)


def test_standardize_direction():
    assert tb.standardize(tb.as_tableau("2,3/1")).rows == ((1, 3), (2,))
    assert [t.to_text() for t in tb.enumerate_rst(Partition([2, 1])) if tb.is_standard(t)] == ["1,2/3", "1,3/2"]


@given(tableaux())
def test_ijk_is_a_partition_of_labels(sigma):
    dec = tb.ijk_decomposition(sigma)
    assert dec.I | dec.J | dec.K == set(range(1, sigma.n))
    assert not (dec.I & dec.J or dec.I & dec.K or dec.J & dec.K)


@given(tableaux())
def test_max_divisor_three_routes(sigma):
    dec = tb.ijk_decomposition(sigma)
    d = tb.max_divisor(sigma)
    assert d == reduce(math.gcd, dec.I | dec.K, sigma.n)
    assert d == reduce(math.gcd, map(len, tb.blocks(sigma)))
    assert d == max(e for e in range(1, sigma.n + 1) if brute_force_divisible(sigma, e))


@given(tableaux())
def test_quotients_compose(sigma):
    for d in tb.divisor_set(sigma):
        q = tb.quotient_tableau(sigma, d)
        assert q.n * d == sigma.n
        assert tb.max_divisor(q) == tb.max_divisor(sigma) // d
    assert tb.quotient_tableau(sigma, 1) == sigma


@given(tableaux())
def test_standardize_gives_standard_tableau_of_same_shape(sigma):
    std = tb.standardize(sigma)
    assert tb.is_standard(std) and std.shape == sigma.shape
    assert tb.standardize(std) == std


@given(tableaux())
def test_springer_inversions_are_inversions_of_w_sigma(sigma):
    w = tb.w_sigma(sigma)
    where = {x: k for k, x in enumerate(w)}
    for i, j in springer_inversions(sigma):
        assert where[i] < where[j]


@given(tableaux())
def test_text_and_json_round_trip(sigma):
    assert tb.RowStrictTableau.parse(sigma.to_text()) == sigma
    assert tb.RowStrictTableau.from_json(sigma.to_json()) == sigma
    assert tb.cell_frame(sigma).n == sigma.n


@given(partitions(1, 7))
def test_base_filling_has_no_inversions(lam):
    assert len(springer_inversions(tb.base_filling(lam))) == 0
