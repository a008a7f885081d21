from hypothesis import given

from extspringer import tableaux as tb
from extspringer.inversions import (
    PairSet,
    i_tilde,
    inversion_count,
    pair_count,
    springer_inversions,
    springer_pairs,
)
from extspringer.partitions import Partition, quotient_partition, springer_dim

from conftest import tableaux

SIGMA = tb.as_tableau("3,4,5,6/1,2,9,10/7,8/11,12")


def definition_oracle(sigma, strict=True):
    """Literal reading of the definition, one pair at a time."""
    out = set()
    for row_j, row in enumerate(sigma.rows):
        for col_j, j in enumerate(row):
            r = row[col_j + 1] if col_j + 1 < len(row) else None
            for row_i, other in enumerate(sigma.rows):
                for col_i, i in enumerate(other):
                    if i <= j or (r is not None and i >= r):
                        continue
                    if col_i < col_j or (col_i == col_j and (row_i > row_j or not strict)):
                        out.add((i, j))
    return out


def test_worked_inversion_set():
    expected = {(12, 8), (12, 10), (12, 6), (11, 8), (11, 10), (11, 6),
                (10, 6), (9, 6), (8, 2), (8, 6), (7, 2), (7, 6), (3, 2)}
    assert set(springer_inversions(SIGMA).pairs) == expected
    assert inversion_count(SIGMA) == 13
    assert pair_count(SIGMA) == 14 == springer_dim(SIGMA.shape)


def test_worked_quotient_inversions_and_shift():
    q = tb.quotient_tableau(SIGMA, 2)
    assert set(springer_inversions(q).pairs) == {(6, 4), (6, 5), (6, 3), (5, 3), (4, 1), (4, 3)}
    doubled = {(2 * i, 2 * j) for i, j in springer_inversions(q)}
    assert doubled <= springer_inversions(SIGMA).pairs
    assert inversion_count(SIGMA) - inversion_count(q) == 7
    assert springer_dim(SIGMA.shape) - springer_dim(quotient_partition(SIGMA.shape, 2)) == 7


def test_i_tilde_examples():
    assert i_tilde(SIGMA).pairs == {(8, 2)}
    other = tb.RowStrictTableau([[1, 2, 3, 4, 11, 12], [5, 6, 7, 8], [9, 10]])
    assert i_tilde(other).pairs == {(10, 4)}


def test_pair_set_json_is_sorted_descending():
    obj = springer_inversions(SIGMA).to_json()
    assert obj["kind"] == "inv"
    assert obj["pairs"][:3] == [[12, 10], [12, 8], [12, 6]]
    assert PairSet.from_json(obj) == springer_inversions(SIGMA)


@given(tableaux())
def test_matches_definition_oracle(sigma):
    assert springer_inversions(sigma).pairs == definition_oracle(sigma, strict=True)
    assert springer_pairs(sigma).pairs == definition_oracle(sigma, strict=False)


@given(tableaux())
def test_inversions_inside_pairs_and_pairs_count_dimension(sigma):
    assert springer_inversions(sigma) <= springer_pairs(sigma)
    assert pair_count(sigma) == springer_dim(sigma.shape)
    assert inversion_count(sigma) <= springer_dim(sigma.shape)


@given(tableaux())
def test_standard_tableaux_reach_the_dimension(sigma):
    assert inversion_count(tb.standardize(sigma)) == springer_dim(sigma.shape)


@given(tableaux())
def test_i_membership_characterised_by_left_neighbour(sigma):
    dec = tb.ijk_decomposition(sigma)
    left = {b: a for a, b in sigma.right_neighbour.items() if b is not None}
    invs = springer_inversions(sigma)
    for i in range(1, sigma.n):
        if i + 1 in left and left[i + 1] != i:
            assert (i in dec.I) == ((i, left[i + 1]) in invs)
    assert i_tilde(sigma) <= invs
    assert len(i_tilde(sigma)) == len(dec.I)


@given(tableaux())
def test_pairs_minus_inversions_invariant_under_quotient(sigma):
    gap = pair_count(sigma) - inversion_count(sigma)
    for d in tb.divisor_set(sigma):
        q = tb.quotient_tableau(sigma, d)
        assert pair_count(q) - inversion_count(q) == gap


def test_single_row_and_column():
    row = tb.RowStrictTableau([[1, 2, 3, 4]])
    assert len(springer_pairs(row)) == 0
    col = tb.RowStrictTableau([[3], [1], [4], [2]])
    assert pair_count(col) == 6 == springer_dim(Partition([1, 1, 1, 1]))
