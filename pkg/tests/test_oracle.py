import pytest

from meshpatterns.embed import figure1_pattern
from meshpatterns.oracle import (
    DistributionTable, avoidance_counts, block_counts, distribution_table, verify_against_series,
    verify_avoidance, _perm_block,
)
from meshpatterns.patterns import catalog_pattern, count_occurrences, parse_mesh_pattern
from meshpatterns.qseries import QPolynomial, Series, factorial_series
from meshpatterns.families import base_length1


def rows(t):
    return [list(t.rows[n].coeffs) for n in sorted(t.rows)]


def test_small_tables():
    z = distribution_table(catalog_pattern("Z"), 3)
    assert z.rows[2] == QPolynomial((1, 0, 1))
    assert z.avoidance() == [1, 0, 1, 3]
    s = distribution_table("1;0,0", 3)
    assert s.rows[3] == QPolynomial((0, 2, 3, 1))
    assert distribution_table("1;", 2).rows[2] == QPolynomial((0, 0, 2))
    assert distribution_table("321;", 2).avoidance() == [1, 1, 2]


def test_frozen_rows():
    # computed with the per-permutation reference method
    assert rows(distribution_table(catalog_pattern("28"), 5)) == \
        [[1], [1], [1, 1], [3, 3], [16, 7, 1], [94, 21, 5]]
    assert rows(distribution_table(catalog_pattern("30"), 5)) == \
        [[1], [1], [1, 1], [5, 0, 1], [21, 2, 0, 1], [109, 8, 2, 0, 1]]
    assert rows(distribution_table(catalog_pattern("20"), 5)) == \
        [[1], [1], [1, 1], [4, 2], [19, 5], [104, 16]]
    assert avoidance_counts(catalog_pattern("12"), 6) == [1, 1, 1, 4, 18, 96, 600]


@pytest.mark.parametrize("text", ["231;1,2 2,1", "1;0,0 1,1", "12;0,0 0,1 1,1 1,2 2,0 2,2",
                                  "21;0,0 0,1 0,2 1,0 1,1 1,2 2,0 2,1 2,2", "132;", "1;"])
def test_numpy_matches_direct(text):
    a = distribution_table(text, 6)
    b = distribution_table(text, 6, method="direct")
    assert a.rows == b.rows


def test_block_counts_rowwise():
    p = parse_mesh_pattern("231;1,2 2,1")
    block = _perm_block(5, 2)
    got = block_counts(p, block)
    assert [int(c) for c in got] == [count_occurrences(p, tuple(int(v) for v in r)) for r in block]


def test_workers_do_not_change_result():
    p = figure1_pattern()
    assert distribution_table(p, 7, workers=2).rows == distribution_table(p, 7).rows


def test_mass_is_factorial():
    t = distribution_table(catalog_pattern("22"), 7)
    assert [t.rows[n](1) for n in range(8)] == factorial_series(7).coefficients(1)


def test_long_pattern_all_avoid():
    assert avoidance_counts("4321;", 3) == [1, 1, 2, 6]


def test_bad_arguments():
    with pytest.raises(ValueError):
        distribution_table("1;", -1)
    with pytest.raises(ValueError):
        distribution_table("1;", 2, method="magic")


def test_table_serialization():
    t = distribution_table(catalog_pattern("Z"), 4)
    assert DistributionTable.from_tsv(t.to_tsv(), t.pattern).rows == t.rows
    back = DistributionTable.from_json(t.to_json())
    assert back.rows == t.rows and back.pattern == t.pattern
    assert t.to_tsv().splitlines()[2] == "2\t1 0 1"


def test_verify_reports():
    t = distribution_table(catalog_pattern("Z"), 6)
    good = verify_against_series(t, base_length1(8).distribution, "base1")
    assert good.ok and good.first_mismatch is None and good.n_max == 6
    bad = verify_against_series(t, factorial_series(8), "F")
    assert not bad.ok
    n, expected, actual = bad.first_mismatch
    # row 1 is already q (the single point is an occurrence)
    assert n == 1 and expected == QPolynomial.const(1) and actual == QPolynomial((0, 1))
    assert "result\tFAIL" in str(bad)
    empty = DistributionTable(None, {})
    assert verify_against_series(empty, factorial_series(3)).ok
    assert verify_avoidance(t, base_length1(8).avoidance).ok
