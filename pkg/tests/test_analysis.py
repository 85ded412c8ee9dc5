import io

import pytest

from conftest import QUEEN_BEE_15, QUEEN_DEE_15, T_B, TWO_ONE_15, TWO_QUEEN_DEE_15
from queengames import KQueenDee, PTable, QueenBee, RestrictedStroll, Standard, p_positions, word_table
from queengames.analysis import (
    check_complementary,
    check_eq1,
    check_equivalence,
    check_good_triples,
    check_lemma3,
    check_relation,
    closed_form_table,
    eq1_report,
    is_good_triple,
    queen_bee_residuals,
    scan_queen_bee_residuals,
    spaced_power_sum,
    tribonacci_tables,
    write_residual_csv,
)
from queengames.formulas import holladay_pairs, is_vile, restricted_pairs, two_queen_dee_pairs


def _swap_b(table, i, j):
    pairs = list(table.pairs)
    (ai, bi), (aj, bj) = pairs[i - 1], pairs[j - 1]
    pairs[i - 1], pairs[j - 1] = (ai, bj), (aj, bi)
    return PTable(tuple(pairs))


def test_check_equivalence():
    assert check_equivalence(p_positions(QueenBee(), 15), closed_form_table("queen-bee", 15), 15) is None
    assert check_equivalence(p_positions(KQueenDee(2), 15), word_table(T_B, "a", "c", 3), 3) is None
    assert check_equivalence(QUEEN_BEE_15, TWO_QUEEN_DEE_15, 15) == 1
    assert check_equivalence(QUEEN_DEE_15, _swap_b(QUEEN_DEE_15, 7, 8), 15) == 7
    with pytest.raises(ValueError):
        check_equivalence(QUEEN_BEE_15, QUEEN_BEE_15, 16)


def test_residuals_queen_dee():
    report = check_eq1(QUEEN_DEE_15, QUEEN_DEE_15, 2)
    assert [r.r for r in report.residuals] == [0, -1]
    assert report.holds


def test_residual_lookup_out_of_range():
    with pytest.raises(IndexError):
        check_eq1(QUEEN_DEE_15, QUEEN_DEE_15, 15)


def test_residual_callable_lookup():
    t = closed_form_table("queen-dee", 3000)
    assert check_eq1(t, t.a, 1000).holds


def test_residuals_queen_bee_fail():
    report = eq1_report("queen-bee", 100)
    assert not report.holds
    assert report.violations[0].n == 20
    assert report.violations[0].r == -2


def test_residuals_standard():
    assert eq1_report("standard", 2000).holds


def test_scan_small():
    assert queen_bee_residuals(1).tolist() == [0]
    assert len(queen_bee_residuals(10)) == 10
    res = scan_queen_bee_residuals(10)
    assert res.first_by_value[0] == 1
    # residuals go negative early
    assert res.first_by_value[-1] == 5
    with pytest.raises(ValueError):
        scan_queen_bee_residuals(0)


def test_scan_against_brute_vile():
    vile = [x for x in range(1, 20000) if is_vile(x)]
    expected = [vile[2 * vile[n] - 1] - 3 * vile[n] for n in range(2000)]
    assert queen_bee_residuals(2000).tolist() == expected


def test_residual_csv():
    buf = io.StringIO()
    write_residual_csv(buf, [0, 1, -1])
    assert buf.getvalue() == "n,r\n1,0\n2,1\n3,-1\n"


def test_four_identities():
    assert QUEEN_DEE_15[1] == (1, 2) and TWO_QUEEN_DEE_15[1] == (1, 3)
    assert QUEEN_DEE_15[10] == (15, 28) and TWO_QUEEN_DEE_15[10] == (13, 43)
    assert check_lemma3(15, QUEEN_DEE_15, TWO_QUEEN_DEE_15)
    assert check_lemma3(15)
    assert not check_lemma3(15, QUEEN_DEE_15, _swap_b(TWO_QUEEN_DEE_15, 2, 3))


def test_good_triples():
    assert check_good_triples(15)
    assert check_good_triples(15, TWO_QUEEN_DEE_15)
    assert not check_good_triples(15, _swap_b(TWO_QUEEN_DEE_15, 2, 3))
    assert not check_good_triples(15, QUEEN_DEE_15)


def test_good_triples_match_brute_force():
    # least good pair found by direct enumeration in (x, y) order
    t = two_queen_dee_pairs(30)
    for n in range(1, 31):
        best = next(
            (x, y)
            for x in range(1, 200)
            for y in range(x + 1, 400)
            if is_good_triple(t, n, x, y)
        )
        assert best == t[n]


def test_relations():
    assert check_relation(QUEEN_BEE_15, "b=2a", 15)
    assert check_relation(TWO_ONE_15, "b=2a+n", 15)
    assert check_relation(holladay_pairs(1, 15), "b=a+kn", 15, k=1)
    assert check_relation(restricted_pairs(3, 1, 50), "b = a + k*n - j", 50, k=3, j=1)
    assert not check_relation(QUEEN_DEE_15, "b=2a", 15)
    with pytest.raises(ValueError):
        check_relation(QUEEN_BEE_15, "b=3a", 15)


def test_complementary():
    assert check_complementary(QUEEN_BEE_15, 15)
    assert check_complementary(TWO_QUEEN_DEE_15, 15)
    dup = PTable(((1, 2), (3, 3)))
    assert not check_complementary(dup, 2)
    gap = PTable(((1, 2), (4, 5)))
    assert not check_complementary(gap, 2)


def test_closed_form_names():
    assert closed_form_table("wythoff", 10) == p_positions(Standard(), 10)
    assert closed_form_table("widened:2,1", 15) == TWO_ONE_15
    assert closed_form_table("holladay:2", 10) == closed_form_table("k-queen:2", 10)
    assert closed_form_table("fraenkel:2,2", 15) == TWO_ONE_15
    with pytest.raises(ValueError):
        closed_form_table("queen-dee-3", 5)


def test_tribonacci_tables():
    tables = tribonacci_tables(15)
    assert tables["erase-b"] == TWO_QUEEN_DEE_15
    assert tables["erase-c"] == QUEEN_DEE_15


def test_spaced_power_sum():
    assert spaced_power_sum(1) == 4
    assert spaced_power_sum(3, gap=10) == 4 + 4**11 + 4**21
    assert spaced_power_sum(2, gap=2, first=3) == 4**3 + 4**5


@pytest.mark.parametrize("k,band", [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (4, 1)])
def test_restricted_game_table(k, band):
    # with band j entered only along rows and columns, the game follows the
    # morphism a -> a^(j+1) b a^(k-1-j), b -> a
    assert p_positions(RestrictedStroll(k, band), 200) == restricted_pairs(k, k - 1 - band, 200)
