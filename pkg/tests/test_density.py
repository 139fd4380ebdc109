from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from padicsmith.classify import analyze
from padicsmith.density import (
    Convention,
    DensityRow,
    IntPolynomial,
    PartitionCell,
    classify_residue_matrix,
    enumerate_density,
    gl_count,
    gl_order,
    orbit_stabilizer_check,
    proot_count_check,
    round_half_up_2dec,
)
from padicsmith.exact import BudgetExceededError, IntMatrix, det, val_p


def test_rounding_renders_two_decimals():
    assert round_half_up_2dec(Fraction(5625, 100)) == "56.25"
    assert round_half_up_2dec(Fraction(200, 3)) == "66.67"
    assert round_half_up_2dec(Fraction(20, 3)) == "6.67"
    assert round_half_up_2dec(Fraction(100, 3)) == "33.33"
    assert round_half_up_2dec(Fraction(0)) == "0.00"
    assert round_half_up_2dec(Fraction(100)) == "100.00"
    # ties go up
    assert round_half_up_2dec(Fraction(1, 8)) == "0.13"
    with pytest.raises(ValueError):
        round_half_up_2dec(Fraction(-1, 2))


def test_smallest_cell_counts():
    row = enumerate_density(2, 1, 2)
    assert (row.total, row.char_count, row.corr_count) == (16, 9, 13)
    assert row.rendered() == ("56.25", "81.25", "33.33")

    cells = {key: (c.size, c.char_count) for key, c in row.partitions.items()}
    assert cells == {(0, 0): (1, 1), (1, 0): (9, 6), (1, 1): (6, 2)}


def test_three_adic_cell():
    row = enumerate_density(3, 1, 2)
    assert (row.char_count, row.corr_count) == (55, 73)
    assert row.rendered() == ("67.90", "90.12", "62.50")


def test_det_filtered_convention():
    row = enumerate_density(2, 1, 2, convention=Convention.DET_FILTERED)
    assert (row.total, row.char_count, row.corr_count) == (6, 2, 6)
    filtered3 = enumerate_density(3, 1, 2, convention=Convention.DET_FILTERED)
    assert (filtered3.total, filtered3.char_count, filtered3.corr_count) == (48, 30, 48)


def test_min_column_skips_classes_without_witnesses():
    row = enumerate_density(2, 2, 2)
    empty = [c for c in row.partitions.values() if c.char_count == 0]
    assert empty, "expected a class with no characterized member"
    assert min(c.pct_char for c in row.partitions.values()) == 0
    assert row.min_pct_char == Fraction(100, 3)


def test_row_renders_stable_csv():
    row = enumerate_density(2, 2, 2)
    assert row.csv_row() == "2,2,2,53.52,80.08,33.33,256,137,205"


def test_json_round_trip():
    obj = enumerate_density(2, 1, 2).to_json_obj()
    assert obj["pct_char_2dec"] == "56.25"
    assert obj["partitions"]["1,1"] == {"size": 6, "char_count": 2}


def test_thread_counts_agree():
    serial = enumerate_density(2, 2, 2, threads=1)
    parallel = enumerate_density(2, 2, 2, threads=2)
    assert serial == parallel


def test_budget_guard():
    with pytest.raises(BudgetExceededError):
        enumerate_density(2, 9, 3, budget=2**20)


def test_fast_classifier_matches_analyze_exhaustively():
    for p, m, n in [(2, 1, 2), (3, 1, 2)]:
        q = p**m
        for flat in product(range(q), repeat=n * n):
            rows = [list(flat[i * n : (i + 1) * n]) for i in range(n)]
            A = IntMatrix.from_rows(rows)
            rep = analyze(A, p)
            want = (
                rep.p_characterized,
                rep.p_correspondent,
                (rep.rank,) + rep.profile,
                rep.rank == n and val_p(det(A), p) < m,
            )
            assert classify_residue_matrix(rows, p, m) == want


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from([(2, 2, 3), (3, 1, 3), (2, 1, 4), (5, 1, 3)]),
    st.integers(min_value=0, max_value=10**9),
)
def test_fast_classifier_matches_analyze_sampled(cell, pick):
    p, m, n = cell
    q = p**m
    rows = []
    x = pick
    for i in range(n):
        row = []
        for j in range(n):
            x, r = divmod(x * 1103515245 + 12345 + i * n + j, q)
            row.append(r)
        rows.append(row)
    A = IntMatrix.from_rows(rows)
    rep = analyze(A, p)
    want = (
        rep.p_characterized,
        rep.p_correspondent,
        (rep.rank,) + rep.profile,
        rep.rank == n and val_p(det(A), p) < m,
    )
    assert classify_residue_matrix(rows, p, m) == want


def test_gl_order_closed_form():
    assert gl_order(2, 1, 2) == 6
    assert gl_order(2, 2, 2) == 96
    assert gl_order(3, 1, 3) == 11232
    assert gl_order(5, 1, 1) == 4


def test_gl_count_cross_checks_exhaustively():
    rep = gl_count(2, 2, 2)
    assert rep.order == 96
    assert rep.exhaustive_checked
    assert rep.ratio == Fraction(256, 96)
    big = gl_count(11, 3, 4)
    assert not big.exhaustive_checked
    assert big.ratio < 4


def test_orbit_stabilizer_small_cells():
    rep = orbit_stabilizer_check(2, 1, (0, 0))
    assert rep.ok
    assert rep.class_size == 6
    assert rep.pair_count_per_member == 6

    shifted = orbit_stabilizer_check(2, 2, (0, 1))
    assert shifted.ok
    assert shifted.class_size == 72


def test_orbit_stabilizer_rejects_bad_profiles():
    with pytest.raises(ValueError):
        orbit_stabilizer_check(2, 1, (1, 0))
    with pytest.raises(ValueError):
        orbit_stabilizer_check(2, 1, (0, 1))


def test_root_count_bound_tight_for_linear():
    g = IntPolynomial.from_terms(1, {(1,): 1})
    rep = proot_count_check(g, 5, 2)
    assert rep.root_count == 2
    assert rep.bound == 2
    assert rep.ok


def test_root_count_two_variables():
    # x*y has 2*l*p - l^2 zeros in the box; bound is l^2 * 2 * p
    g = IntPolynomial.from_terms(2, {(1, 1): 1})
    rep = proot_count_check(g, 3, 1)
    assert rep.root_count == 5
    assert rep.bound == 6
    assert rep.ok


def test_root_count_rejects_vanishing_polynomial():
    g = IntPolynomial.from_terms(1, {(1,): 10})
    with pytest.raises(ValueError):
        proot_count_check(g, 5, 1)


def test_min_over_single_cell():
    row = DensityRow(
        p=2,
        m=1,
        n=1,
        convention=Convention.ALL,
        total=2,
        char_count=2,
        corr_count=2,
        partitions={(1,): PartitionCell(2, 2)},
    )
    assert row.min_pct_char == 100
