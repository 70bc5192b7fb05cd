from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import covering_lp_by_enumeration
from fracdim.catalog import all_graphs
from fracdim.errors import InfeasibleError, InputError
from fracdim.graph_core import complete_graph, cycle_graph
from fracdim.ratlp import (
    CoveringLP,
    LPSolution,
    WeightFunction,
    certificate_violation,
    format_rational,
    solve_covering_lp,
    verify_certificates,
)
from fracdim.theorems import r_system, s_system


@st.composite
def covering_lps(draw, max_cols=6, max_rows=8):
    n = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1), min_size=1, max_size=max_rows))
    return CoveringLP.from_rows(n, rows)


def test_single_row():
    lp = CoveringLP.from_rows(2, [{0, 1}])
    sol = solve_covering_lp(lp)
    assert sol.value == 1
    assert verify_certificates(lp, sol)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_complete_graph_r_system(n):
    lp = r_system(complete_graph(n))
    sol = solve_covering_lp(lp)
    assert sol.value == Fraction(n, 2)
    assert verify_certificates(lp, sol)
    if n <= 5:
        assert covering_lp_by_enumeration(list(lp.rows), n) == Fraction(n, 2)


def test_c5_s_system():
    lp = s_system(cycle_graph(5))
    sol = solve_covering_lp(lp)
    assert sol.value == Fraction(5, 4)
    assert covering_lp_by_enumeration(list(lp.rows), 5) == Fraction(5, 4)


def test_rows_deduplicated_with_merged_tags():
    lp = CoveringLP.build(3, [("a", {0, 1}), ("b", [1, 0]), ("c", {2})])
    assert lp.rows == (frozenset({0, 1}), frozenset({2}))
    assert lp.row_tags == (("a", "b"), ("c",))


def test_row_column_out_of_range():
    with pytest.raises(InputError):
        CoveringLP.from_rows(2, [{0, 2}])


def test_empty_row_infeasible():
    with pytest.raises(InfeasibleError):
        solve_covering_lp(CoveringLP.from_rows(2, [{0}, set()]))


def test_certificate_rejects_duality_gap():
    lp = r_system(complete_graph(3))
    bad = LPSolution(Fraction(3), WeightFunction.of([1, 1, 1]), (Fraction(0),) * len(lp.rows))
    assert not verify_certificates(lp, bad)
    assert "duality gap" in certificate_violation(lp, bad)


def test_certificate_rejects_bound_violation():
    lp = CoveringLP.from_rows(2, [{0, 1}])
    bad = LPSolution(Fraction(3, 2), WeightFunction.unchecked([Fraction(3, 2), 0]), (Fraction(3, 2),))
    assert not verify_certificates(lp, bad)
    assert "outside [0, 1]" in certificate_violation(lp, bad)


def test_certificate_rejects_uncovered_row_and_overloaded_dual():
    lp = CoveringLP.from_rows(2, [{0}, {1}])
    assert "covered only" in certificate_violation(lp, LPSolution(Fraction(1), WeightFunction.of([1, 0]), (1, 0)))
    lp = CoveringLP.from_rows(2, [{0}, {0, 1}])
    over = LPSolution(Fraction(2), WeightFunction.of([1, 1]), (Fraction(1), Fraction(1)))
    assert "load on column 0" in certificate_violation(lp, over)


def test_weight_function_range():
    with pytest.raises(InputError):
        WeightFunction.of([Fraction(3, 2)])
    f = WeightFunction.of([Fraction(1, 2), Fraction(1, 4)])
    assert f.weight == Fraction(3, 4) and f.mass([1]) == Fraction(1, 4)


def test_format_rational():
    assert format_rational(Fraction(5, 4), approx=True) == "5/4 (≈ 1.2500)"
    assert format_rational(Fraction(3)) == "3"


@given(covering_lps())
def test_matches_vertex_enumeration(lp):
    sol = solve_covering_lp(lp)
    assert verify_certificates(lp, sol)
    assert sol.value == covering_lp_by_enumeration(list(lp.rows), lp.n_cols)
    assert all(x <= 1 for x in sol.primal.values)


@given(covering_lps(max_cols=8, max_rows=14), st.randoms(use_true_random=False))
def test_value_invariant_under_row_permutation(lp, rnd):
    rows = list(lp.rows)
    rnd.shuffle(rows)
    shuffled = CoveringLP.from_rows(lp.n_cols, rows)
    assert solve_covering_lp(lp).value == solve_covering_lp(shuffled).value


@given(covering_lps(max_cols=8, max_rows=14))
def test_presolve_does_not_change_value(lp):
    a = solve_covering_lp(lp)
    b = solve_covering_lp(lp, presolve=False)
    assert a.value == b.value
    assert verify_certificates(lp, b)


@pytest.mark.parametrize("G", all_graphs(4), ids=lambda g: str(sorted(g.edges)))
def test_graph_systems_match_enumeration(G):
    for lp in (r_system(G), s_system(G)):
        sol = solve_covering_lp(lp)
        assert verify_certificates(lp, sol)
        assert sol.value == covering_lp_by_enumeration(list(lp.rows), lp.n_cols)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_r_system_value_range(n):
    for G in all_graphs(n):
        v = solve_covering_lp(r_system(G)).value
        assert 1 <= v <= Fraction(n, 2)
