from fractions import Fraction

import pytest

from oracles import dimf_by_brute_enumeration, lf_by_brute_enumeration
from fracdim.catalog import g_catalog, h_catalog, vertex_transitive_family
from fracdim.errors import InputError, PreconditionError
from fracdim.graph_core import (
    complement,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    hypercube,
    is_connected,
    null_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from fracdim.products import corona, lexicographic
from fracdim.ratlp import WeightFunction
from fracdim.resolving import twin_decomposition
from fracdim.theorems import (
    EQUAL,
    ERROR,
    Case,
    assemble_lex_resolving,
    constant_lex_function,
    corona_theorem_rhs,
    dim_f,
    g_corona_k1_bounds,
    halve_over_k2,
    is_locating_function,
    is_resolving_function,
    k1_corona_bounds,
    l_f,
    lex_theorem_rhs,
    lift_locating_to_corona,
    min_symmetric_set_size,
    restrict_to_copy,
    verify,
    verify_batch,
    vt_closed_form,
    vt_lex_closed_form,
)

K2 = complete_graph(2)


@pytest.mark.parametrize(
    "G,value",
    [(complete_graph(4), 2), (cycle_graph(4), 2), (path_graph(2), 1), (cycle_graph(5), Fraction(5, 4))],
)
def test_dim_f_examples(G, value):
    v, f = dim_f(G)
    assert v == value == dimf_by_brute_enumeration(G)
    assert is_resolving_function(G, f) and f.weight == v


@pytest.mark.parametrize(
    "G,value",
    [(K2, 1), (path_graph(3), 1), (cycle_graph(5), Fraction(5, 4)), (path_graph(4), Fraction(4, 3))],
)
def test_l_f_examples(G, value):
    v, f = l_f(G)
    assert v == value == lf_by_brute_enumeration(G)
    assert is_locating_function(G, f)


def test_small_graphs_need_two_vertices():
    with pytest.raises(InputError):
        dim_f(null_graph(1))
    with pytest.raises(InputError):
        l_f(null_graph(1))


def test_dim_f_at_most_l_f_on_catalog():
    for G in g_catalog() + h_catalog():
        assert dim_f(G)[0] <= l_f(G)[0]
        if is_connected(G) and diameter(G) <= 2:
            assert dim_f(G)[0] == l_f(G)[0]


@pytest.mark.parametrize(
    "H,value",
    [(cycle_graph(4), 2), (petersen_graph(), Fraction(5, 3)), (complete_graph(3), Fraction(3, 2)),
     (complete_graph(4), 2), (complete_graph(5), Fraction(5, 2)), (hypercube(3), 2), (null_graph(3), Fraction(3, 2))],
)
def test_vt_closed_form_examples(H, value):
    assert vt_closed_form(H) == value == l_f(H)[0]


def test_vt_closed_form_rejects():
    with pytest.raises(PreconditionError):
        vt_closed_form(star_graph(3))
    regular_not_vt = disjoint_union(cycle_graph(3), cycle_graph(4))
    with pytest.raises(PreconditionError, match="not vertex-transitive"):
        vt_closed_form(regular_not_vt)
    assert vt_closed_form(regular_not_vt, check_transitivity=False) == Fraction(7, min_symmetric_set_size(regular_not_vt))


@pytest.mark.parametrize("H,s", [(cycle_graph(5), 4), (hypercube(3), 4), (star_graph(3), 2)])
def test_min_symmetric_set_size(H, s):
    assert min_symmetric_set_size(H) == s


def test_min_symmetric_set_size_matches_denominator_on_vt_family():
    from fracdim.theorems import vt_denominator

    for _, H in vertex_transitive_family():
        assert min_symmetric_set_size(H) == vt_denominator(H)


def test_corona_rhs_examples():
    assert corona_theorem_rhs(path_graph(3), K2) == 3
    assert corona_theorem_rhs(cycle_graph(4), cycle_graph(5)) == 5
    assert corona_theorem_rhs(path_graph(2), null_graph(2)) == 2
    with pytest.raises(PreconditionError):
        corona_theorem_rhs(null_graph(2), K2)
    with pytest.raises(PreconditionError):
        corona_theorem_rhs(path_graph(3), null_graph(1))


def test_lex_rhs_examples():
    assert lex_theorem_rhs(path_graph(3), K2) == 3
    assert lex_theorem_rhs(path_graph(4), K2) == 4
    assert lex_theorem_rhs(complete_graph(3), null_graph(2)) == 3
    assert dim_f(lexicographic(K2, null_graph(2)).graph)[0] == dim_f(cycle_graph(4))[0] == 2


def test_vt_lex_examples():
    assert vt_lex_closed_form(path_graph(3), cycle_graph(5)) == Fraction(15, 4)
    assert vt_lex_closed_form(complete_graph(3), K2) == 3 == lex_theorem_rhs(complete_graph(3), K2)
    assert vt_lex_closed_form(path_graph(2), cycle_graph(4)) == 4
    assert dim_f(lexicographic(path_graph(2), cycle_graph(4)).graph)[0] == 4
    assert dim_f(lexicographic(path_graph(3), cycle_graph(5)).graph)[0] == Fraction(15, 4)
    with pytest.raises(PreconditionError):
        vt_lex_closed_form(path_graph(3), star_graph(3))


def test_k1_corona_bounds_examples():
    assert k1_corona_bounds(star_graph(2)) == (1, 2, 2)
    b = k1_corona_bounds(disjoint_union(K2, K2))
    assert b.value == b.lower
    b = k1_corona_bounds(path_graph(7))
    assert b.value == b.lower


def test_g_corona_k1_bounds_examples():
    assert g_corona_k1_bounds(complete_graph(4)) == (2, 2, 2)
    assert g_corona_k1_bounds(path_graph(2)) == (1, 1, 1)
    assert g_corona_k1_bounds(cycle_graph(4)) == (2, 2, 2)


def test_lift_examples():
    f = lift_locating_to_corona(path_graph(2), K2, WeightFunction.of([Fraction(1, 2)] * 2))
    assert f.values == (0, 0) + (Fraction(1, 2),) * 4 and f.weight == 2
    f = lift_locating_to_corona(path_graph(3), cycle_graph(5), WeightFunction.of([Fraction(1, 4)] * 5))
    assert f.weight == Fraction(15, 4)
    with pytest.raises(InputError):
        lift_locating_to_corona(path_graph(3), K2, WeightFunction.of([0, 0]))


@pytest.mark.parametrize(
    "G,H,weight",
    [(path_graph(3), K2, 3), (path_graph(4), K2, 4), (complete_graph(3), null_graph(2), 3)],
)
def test_assemble_examples(G, H, weight):
    f = assemble_lex_resolving(G, H)
    assert f.weight == weight
    assert is_resolving_function(lexicographic(G, H).graph, f)


def test_assemble_twin_free_uses_f1_everywhere():
    G, H = path_graph(4), K2
    f1 = l_f(H)[1]
    f = assemble_lex_resolving(G, H)
    assert f.values == f1.values * 4


def test_assemble_on_catalog_sample():
    for G in [g for g in g_catalog() if g.n <= 4]:
        for H in h_catalog():
            f = assemble_lex_resolving(G, H)
            assert f.weight == lex_theorem_rhs(G, H)


def test_halved_k2_functions_are_locating():
    for H in h_catalog():
        for Hi in (H, complement(H)):
            fbar = dim_f(lexicographic(K2, Hi).graph)[1]
            fi = halve_over_k2(fbar, H.n)
            assert is_locating_function(H, fi)
            assert fi.weight == dim_f(lexicographic(K2, Hi).graph)[0] / 2


def test_per_copy_restrictions_are_locating():
    for G in [g for g in g_catalog() if g.n <= 4]:
        for H in h_catalog():
            P = lexicographic(G, H)
            f = dim_f(P.graph)[1]
            for u in G.vertices:
                assert is_locating_function(H, restrict_to_copy(P, f, u))


def test_constant_function_resolves():
    for H in (cycle_graph(5), hypercube(3), K2):
        G = path_graph(3)
        f = constant_lex_function(G, H)
        assert is_resolving_function(lexicographic(G, H).graph, f)
        assert f.weight == vt_lex_closed_form(G, H)


def test_twin_free_catalog_graph_exists():
    assert any(twin_decomposition(G).m1 == G.n for G in g_catalog())


def test_verify_examples():
    r = verify("corona_thm", cycle_graph(3), path_graph(3))
    assert r.verdict == EQUAL and r.lhs == r.rhs == 3
    r = verify("lex_thm", path_graph(3), K2)
    assert r.verdict == EQUAL and r.lhs == 3
    r = verify("prop21", cycle_graph(4))
    assert r.verdict == EQUAL and (r.lhs, r.rhs) == (4, 4)


def test_verify_bound_claims_report_bounds():
    r = verify("cork1_eq4", star_graph(3))
    assert r.verdict == EQUAL and r.details["tight"] == ["upper"]
    r = verify("prop34", path_graph(7))
    assert r.verdict == EQUAL


def test_verify_errors():
    with pytest.raises(InputError):
        verify("nope", path_graph(3))
    with pytest.raises(InputError):
        verify("corona_thm", path_graph(3))
    with pytest.raises(PreconditionError):
        verify("prop34", path_graph(3))
    r = verify("prop34", path_graph(3), strict=False)
    assert r.verdict == ERROR and "PreconditionError" in r.notes


def test_verify_batch_sorted_and_parallel_agrees():
    cases = [Case("corona_thm", g, h, f"g{i}", f"h{j}") for i, g in enumerate(g_catalog()[:4])
             for j, h in enumerate(h_catalog()[:3])]
    seq = verify_batch(list(reversed(cases)))
    assert [r.case_id for r in seq] == sorted(r.case_id for r in seq)
    par = verify_batch(cases, jobs=2)
    assert [(r.case_id, r.lhs, r.verdict) for r in seq] == [(r.case_id, r.lhs, r.verdict) for r in par]
