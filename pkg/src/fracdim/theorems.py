"""Fractional metric dimension, the locating parameter, and their product identities.

``dim_f`` and ``l_f`` are exact LP optima over the resolving-set and
symmetric-set constraint systems.  The closed forms below express the values
on corona and lexicographic products through factor-graph data; :func:`verify`
pits each of them against a direct LP on the product.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, NamedTuple, Optional

from .errors import FracdimError, InputError, PreconditionError, TheoremViolation
from .graph_core import (
    UNREACHABLE,
    Graph,
    all_pairs_distances,
    complement,
    complete_graph,
    diameter,
    is_complete,
    is_connected,
    is_regular,
    is_vertex_transitive,
    null_graph,
    regular_params,
)
from .products import ProductGraph, corona, lexicographic, pair
from .ratlp import CoveringLP, LPSolution, WeightFunction, format_rational, solve_covering_lp
from .resolving import (
    TYPE1,
    TYPE2,
    TYPE3,
    CopyCover,
    predicted_corona_R,
    predicted_lex_R,
    resolving_set,
    symmetric_set,
    twin_decomposition,
)

K1 = null_graph(1)
K2 = complete_graph(2)


# ---------------------------------------------------------------------------
# LP systems and cached solves
# ---------------------------------------------------------------------------


def r_system(G: Graph) -> CoveringLP:
    D = all_pairs_distances(G)
    return CoveringLP.build(G.n, (((u, v), resolving_set(D, u, v)) for u, v in combinations(G.vertices, 2)))


def s_system(H: Graph) -> CoveringLP:
    return CoveringLP.build(H.n, (((u, v), symmetric_set(H, u, v)) for u, v in combinations(H.vertices, 2)))


_SOLVED: dict[tuple[str, Graph], tuple[CoveringLP, LPSolution]] = {}


def _solve(kind: str, G: Graph) -> tuple[CoveringLP, LPSolution]:
    if G.n < 2:
        raise InputError(f"{'dim_f' if kind == 'R' else 'l_f'} needs at least two vertices, got {G.n}")
    key = (kind, G)
    hit = _SOLVED.get(key)
    if hit is None:
        lp = r_system(G) if kind == "R" else s_system(G)
        hit = (lp, solve_covering_lp(lp))
        n_half = Fraction(G.n, 2)
        if not (1 <= hit[1].value <= n_half):
            raise TheoremViolation(f"{kind}-system optimum {hit[1].value} outside [1, {n_half}]")
        _SOLVED[key] = hit
    return hit


def solved_systems() -> list[tuple[str, Graph, CoveringLP, LPSolution]]:
    """Every (kind, graph, LP, solution) solved so far in this process."""
    return [(k, g, lp, sol) for (k, g), (lp, sol) in _SOLVED.items()]


def clear_cache() -> None:
    _SOLVED.clear()


def dim_f(G: Graph) -> tuple[Fraction, WeightFunction]:
    """Fractional metric dimension and an optimal resolving function."""
    _, sol = _solve("R", G)
    return sol.value, sol.primal


def l_f(H: Graph) -> tuple[Fraction, WeightFunction]:
    """Minimum weight of a locating function and an optimal one."""
    _, sol = _solve("S", H)
    return sol.value, sol.primal


def is_resolving_function(G: Graph, f: WeightFunction) -> bool:
    D = all_pairs_distances(G)
    return all(f.mass(resolving_set(D, u, v)) >= 1 for u, v in combinations(G.vertices, 2))


def is_locating_function(H: Graph, f: WeightFunction) -> bool:
    return all(f.mass(symmetric_set(H, u, v)) >= 1 for u, v in combinations(H.vertices, 2))


def min_resolving_coverage(G: Graph, f: WeightFunction) -> Fraction:
    D = all_pairs_distances(G)
    return min(f.mass(resolving_set(D, u, v)) for u, v in combinations(G.vertices, 2))


# ---------------------------------------------------------------------------
# Closed forms and bounds
# ---------------------------------------------------------------------------


def _connected_base(G: Graph, what: str) -> None:
    if G.n < 2:
        raise PreconditionError(f"{what} requires |V(G)| >= 2")
    if not is_connected(G):
        raise PreconditionError(f"{what} requires connected G")


def _second_factor(H: Graph, what: str) -> None:
    if H.n < 2:
        raise PreconditionError(f"{what} requires |V(H)| >= 2")


def min_symmetric_set_size(H: Graph) -> int:
    if H.n < 2:
        raise PreconditionError("min_symmetric_set_size requires |V(H)| >= 2")
    return min(len(symmetric_set(H, a, b)) for a, b in combinations(H.vertices, 2))


def vt_denominator(H: Graph) -> int:
    """``2k - max(2*lambda, 2*mu - 2)`` for a regular graph."""
    p = regular_params(H)
    return 2 * p.k - max(2 * p.lam, 2 * p.mu - 2)


def vt_closed_form(H: Graph, check_transitivity: bool = True) -> Fraction:
    """``|V(H)| / (2k - max(2*lambda, 2*mu - 2))`` for vertex-transitive ``H``."""
    if H.n < 2:
        raise PreconditionError("vt_closed_form requires |V(H)| >= 2")
    if not is_regular(H):
        raise PreconditionError("vt_closed_form requires a regular graph")
    if check_transitivity and not is_vertex_transitive(H):
        raise PreconditionError("formula inapplicable: graph is not vertex-transitive")
    s = vt_denominator(H)
    if s <= 0:
        p = regular_params(H)
        raise PreconditionError(f"formula inapplicable: denominator {s} <= 0 (k={p.k}, lambda={p.lam}, mu={p.mu})")
    return Fraction(H.n, s)


def prop21_sides(H: Graph) -> tuple[int, int]:
    """``(|V(H)|, 2k - min(lambda, mu - 2))`` for regular non-complete ``H``."""
    if not is_regular(H) or is_complete(H):
        raise PreconditionError("the order bound applies to regular non-complete graphs only")
    p = regular_params(H)
    return H.n, 2 * p.k - min(p.lam, p.mu - 2)


def corona_theorem_rhs(G: Graph, H: Graph) -> Fraction:
    _connected_base(G, "corona_theorem_rhs")
    _second_factor(H, "corona_theorem_rhs")
    return G.n * l_f(H)[0]


def lex_theorem_rhs(G: Graph, H: Graph) -> Fraction:
    """``m1*l_f(H) + m2/2*dim_f(K2[H]) + m3/2*dim_f(K2[co-H])``."""
    _connected_base(G, "lex_theorem_rhs")
    _second_factor(H, "lex_theorem_rhs")
    td = twin_decomposition(G)
    total = Fraction(0)
    if td.m1:
        total += td.m1 * l_f(H)[0]
    if td.m2:
        total += Fraction(td.m2, 2) * dim_f(lexicographic(K2, H).graph)[0]
    if td.m3:
        total += Fraction(td.m3, 2) * dim_f(lexicographic(K2, complement(H)).graph)[0]
    return total


def vt_lex_closed_form(G: Graph, H: Graph) -> Fraction:
    _connected_base(G, "vt_lex_closed_form")
    return G.n * vt_closed_form(H)


class Bounds(NamedTuple):
    lower: Fraction
    value: Fraction
    upper: Fraction

    @property
    def holds(self) -> bool:
        return self.lower <= self.value <= self.upper


def k1_corona_bounds(H: Graph) -> Bounds:
    """``l_f(H) <= dim_f(K1 ⊙ H) <= l_f(H) + 1``."""
    _second_factor(H, "k1_corona_bounds")
    lf = l_f(H)[0]
    b = Bounds(lf, dim_f(corona(K1, H).graph)[0], lf + 1)
    if not b.holds:
        raise TheoremViolation(f"K1-corona bounds fail: {b}")
    return b


def g_corona_k1_bounds(G: Graph) -> Bounds:
    """``dim_f(G) <= dim_f(G ⊙ K1) <= |V(G)|/2``."""
    _connected_base(G, "g_corona_k1_bounds")
    b = Bounds(dim_f(G)[0], dim_f(corona(G, K1).graph)[0], Fraction(G.n, 2))
    if not b.holds:
        raise TheoremViolation(f"corona-with-K1 bounds fail: {b}")
    return b


# ---------------------------------------------------------------------------
# Explicit constructions
# ---------------------------------------------------------------------------


def lift_locating_to_corona(G: Graph, H: Graph, g: WeightFunction) -> WeightFunction:
    """Zero on the base vertices, ``g`` on every copy of ``H``."""
    if not is_connected(G):
        raise PreconditionError("lift_locating_to_corona requires connected G")
    if len(g) != H.n:
        raise InputError(f"function has {len(g)} entries for {H.n} vertices")
    if not is_locating_function(H, g):
        raise InputError("g is not a locating function of H")
    P = corona(G, H)
    lifted = WeightFunction((Fraction(0),) * G.n + g.values * G.n)
    if lifted.weight != G.n * g.weight:
        raise TheoremViolation("lifted weight mismatch")
    if not is_resolving_function(P.graph, lifted):
        raise TheoremViolation("lifted locating function does not resolve the corona")
    return lifted


def restrict_to_copy(P: ProductGraph, f: WeightFunction, u: int) -> WeightFunction:
    return WeightFunction(tuple(f[i] for i in P.copy_indices(u)))


def halve_over_k2(f_k2: WeightFunction, n_h: int) -> WeightFunction:
    """``v -> (f((w1, v)) + f((w2, v))) / 2`` for a function on ``K2[H']``."""
    if len(f_k2) != 2 * n_h:
        raise InputError(f"function on K2[H] must have {2 * n_h} entries")
    return WeightFunction(tuple((f_k2[v] + f_k2[n_h + v]) / 2 for v in range(n_h)))


def assemble_lex_resolving(
    G: Graph,
    H: Graph,
    f1: Optional[WeightFunction] = None,
    f2: Optional[WeightFunction] = None,
    f3: Optional[WeightFunction] = None,
) -> WeightFunction:
    """Resolving function of ``G[H]`` built class-by-class from the twin decomposition.

    Copies over singleton classes carry ``f1`` (a locating function of H);
    clique and independent twin classes carry the half-averages of optimal
    resolving functions of ``K2[H]`` and ``K2[co-H]``.  Missing functions are
    computed; when all three are optimal the weight equals
    :func:`lex_theorem_rhs`.
    """
    _connected_base(G, "assemble_lex_resolving")
    _second_factor(H, "assemble_lex_resolving")
    td = twin_decomposition(G)
    optimal = True
    if f1 is None:
        f1 = l_f(H)[1]
    else:
        optimal = False
        if not is_locating_function(H, f1):
            raise InputError("f1 is not a locating function of H")
    if f2 is None and td.m2:
        f2 = halve_over_k2(dim_f(lexicographic(K2, H).graph)[1], H.n)
    elif f2 is not None:
        optimal = False
    if f3 is None and td.m3:
        f3 = halve_over_k2(dim_f(lexicographic(K2, complement(H)).graph)[1], H.n)
    elif f3 is not None:
        optimal = False
    per_type = {TYPE1: f1, TYPE2: f2, TYPE3: f3}
    values: list[Fraction] = []
    for u in G.vertices:
        values.extend(per_type[td.type_of(u)].values)
    fbar = WeightFunction(tuple(values))
    expected = td.m1 * f1.weight
    if td.m2:
        expected += td.m2 * f2.weight
    if td.m3:
        expected += td.m3 * f3.weight
    if fbar.weight != expected:
        raise TheoremViolation("assembled weight does not match the per-class sum")
    if optimal and fbar.weight != lex_theorem_rhs(G, H):
        raise TheoremViolation(f"assembled weight {fbar.weight} differs from the three-term formula")
    if not is_resolving_function(lexicographic(G, H).graph, fbar):
        raise TheoremViolation("assembled function does not resolve G[H]")
    return fbar


def constant_lex_function(G: Graph, H: Graph) -> WeightFunction:
    """The constant ``1/s`` function on ``G[H]``, ``s`` the minimum symmetric-set size of H."""
    s = min_symmetric_set_size(H)
    return WeightFunction((Fraction(1, s),) * (G.n * H.n))


# ---------------------------------------------------------------------------
# Structural checks against brute force
# ---------------------------------------------------------------------------


def check_corona_lemma(G: Graph, H: Graph) -> dict:
    """Compare structural R-set predictions on ``G ⊙ H`` with BFS-based R-sets."""
    P = corona(G, H)
    D = all_pairs_distances(P.graph)
    return _check_predictions(P, D, lambda x, y: predicted_corona_R(G, H, x, y))


def check_lex_lemma(G: Graph, H: Graph) -> dict:
    P = lexicographic(G, H)
    D = all_pairs_distances(P.graph)
    return _check_predictions(P, D, lambda x, y: predicted_lex_R(G, H, x, y))


def _check_predictions(P: ProductGraph, D, predict: Callable) -> dict:
    stats = {"pairs": 0, "exact": 0, "exact_ok": 0, "witness": 0, "witness_ok": 0}
    for i, j in combinations(range(P.graph.n), 2):
        x, y = P.vertices[i], P.vertices[j]
        actual = {P.vertices[w] for w in resolving_set(D, i, j)}
        pred = predict(x, y)
        stats["pairs"] += 1
        if isinstance(pred, CopyCover):
            stats["witness"] += 1
            if all(pair(pred.u, v) in actual for v in P.H.vertices):
                stats["witness_ok"] += 1
        else:
            stats["exact"] += 1
            if set(pred) == actual:
                stats["exact_ok"] += 1
    stats["ok"] = stats["exact_ok"] + stats["witness_ok"]
    return stats


def check_distance_formulas(kind: str, G: Graph, H: Graph) -> bool:
    """BFS distances on the product agree with the closed-form distance function."""
    from .products import corona_distance, lex_distance

    P = corona(G, H) if kind == "corona" else lexicographic(G, H)
    fn = corona_distance if kind == "corona" else lex_distance
    D = all_pairs_distances(P.graph)
    return all(
        D[i][j] == fn(G, H, P.vertices[i], P.vertices[j]) for i, j in combinations(range(P.graph.n), 2)
    )


# ---------------------------------------------------------------------------
# Verification harness
# ---------------------------------------------------------------------------

EQUAL, LESS, GREATER, ERROR = "EQUAL", "LHS<RHS", "LHS>RHS", "ERROR"


def _cmp(lhs: Fraction, rhs: Fraction) -> str:
    return EQUAL if lhs == rhs else (LESS if lhs < rhs else GREATER)


@dataclass
class VerificationReport:
    claim: str
    g_desc: str
    h_desc: str
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    verdict: str
    elapsed_ms: float = 0.0
    notes: str = ""
    lhs_source: str = ""
    rhs_source: str = ""
    details: dict = field(default_factory=dict)

    @property
    def case_id(self) -> str:
        return f"{self.claim}|{self.g_desc}|{self.h_desc}"

    @property
    def ok(self) -> bool:
        return self.verdict == EQUAL

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "g_desc": self.g_desc,
            "h_desc": self.h_desc,
            "lhs": None if self.lhs is None else format_rational(self.lhs),
            "rhs": None if self.rhs is None else format_rational(self.rhs),
            "verdict": self.verdict,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "notes": self.notes,
            "lhs_source": self.lhs_source,
            "rhs_source": self.rhs_source,
            "details": self.details,
        }


class _Outcome(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    verdict: str
    lhs_source: str
    rhs_source: str
    notes: str = ""
    details: dict = {}


def _at_least(lhs, rhs, ls, rs, notes="", details=None) -> _Outcome:
    return _Outcome(lhs, rhs, EQUAL if lhs >= rhs else LESS, ls, rs, notes, details or {})


def _within(b: Bounds, ls: str, lo: str, hi: str) -> _Outcome:
    details = {"lower": format_rational(b.lower), "value": format_rational(b.value), "upper": format_rational(b.upper)}
    tight = [name for name, bound in (("lower", b.lower), ("upper", b.upper)) if bound == b.value]
    notes = "within bounds" + (f"; tight at {' and '.join(tight)}" if tight else "")
    if b.value < b.lower:
        return _Outcome(b.value, b.lower, LESS, ls, lo, "below lower bound", details)
    if b.value > b.upper:
        return _Outcome(b.value, b.upper, GREATER, ls, hi, "above upper bound", details)
    details["tight"] = tight
    return _Outcome(b.value, b.upper, EQUAL, ls, hi, notes, details)


def _certs(*graphs_kinds: tuple[str, Graph]) -> list[dict]:
    out = []
    for kind, g in graphs_kinds:
        lp, sol = _solve(kind, g)
        out.append({"system": kind, "n": g.n, "rows": len(lp.rows), "value": format_rational(sol.value),
                    "pivots": sol.pivots, "verified": True})
    return out


def _claim_corona_thm(G, H):
    P = corona(G, H)
    lhs = dim_f(P.graph)[0]
    rhs = corona_theorem_rhs(G, H)
    return _Outcome(lhs, rhs, _cmp(lhs, rhs), "LP on G⊙H", "|V(G)|·l_f(H)",
                    details={"certificates": _certs(("R", P.graph), ("S", H))})


def _claim_lex_thm(G, H):
    P = lexicographic(G, H)
    lhs = dim_f(P.graph)[0]
    rhs = lex_theorem_rhs(G, H)
    td = twin_decomposition(G)
    details = {"m": [td.m1, td.m2, td.m3], "certificates": _certs(("R", P.graph), ("S", H))}
    notes = f"m=({td.m1},{td.m2},{td.m3})"
    if td.m1 == G.n:
        twin_free = G.n * l_f(H)[0]
        details["twin_free_value"] = format_rational(twin_free)
        notes += f"; twin-free, |V(G)|·l_f(H) = {format_rational(twin_free)}"
        if twin_free != lhs:
            return _Outcome(lhs, twin_free, _cmp(lhs, twin_free), "LP on G[H]", "|V(G)|·l_f(H)", notes, details)
    return _Outcome(lhs, rhs, _cmp(lhs, rhs), "LP on G[H]", "m1·l_f(H)+m2/2·dim_f(K2[H])+m3/2·dim_f(K2[co-H])",
                    notes, details)


def _claim_lemma42(G, H):
    _connected_base(G, "lemma42")
    P = lexicographic(G, H)
    f = dim_f(P.graph)[1]
    good = sum(is_locating_function(H, restrict_to_copy(P, f, u)) for u in G.vertices)
    return _Outcome(Fraction(good), Fraction(G.n), _cmp(Fraction(good), Fraction(G.n)),
                    "copies whose restriction is locating", "|V(G)|")


def _claim_lemma43(G, H):
    lhs = dim_f(lexicographic(G, H).graph)[0]
    return _at_least(lhs, lex_theorem_rhs(G, H), "LP on G[H]", "three-term lower bound")


def _claim_vt_formula(G, _H):
    lhs = l_f(G)[0]
    rhs = vt_closed_form(G)
    s = min_symmetric_set_size(G)
    notes = f"min|S| = {s}, denominator = {vt_denominator(G)}"
    if s != vt_denominator(G):
        return _Outcome(Fraction(s), Fraction(vt_denominator(G)), _cmp(Fraction(s), Fraction(vt_denominator(G))),
                        "min |S|", "2k-max(2λ,2μ-2)", notes)
    return _Outcome(lhs, rhs, _cmp(lhs, rhs), "LP l_f(H)", "|V|/(2k-max(2λ,2μ-2))", notes,
                    {"certificates": _certs(("S", G))})


def _claim_vt_lex(G, H):
    P = lexicographic(G, H)
    lhs = dim_f(P.graph)[0]
    rhs = vt_lex_closed_form(G, H)
    return _Outcome(lhs, rhs, _cmp(lhs, rhs), "LP on G[H]", "|V(G)||V(H)|/s",
                    details={"certificates": _certs(("R", P.graph))})


def _claim_vt_lex_const(G, H):
    _connected_base(G, "vt_lex_const")
    if not is_vertex_transitive(H):
        raise PreconditionError("vt_lex_const requires vertex-transitive H")
    f = constant_lex_function(G, H)
    s = min_symmetric_set_size(H)
    cov = min_resolving_coverage(lexicographic(G, H).graph, f)
    k = regular_params(H).k
    notes = f"s={s}; 2(|V(H)|-k)={2 * (H.n - k)} >= s: {2 * (H.n - k) >= s}"
    return _at_least(cov, Fraction(1), "min over pairs of (1/s)·|R|", "1", notes,
                     {"s": s, "case2_bound": 2 * (H.n - k) >= s, "weight": format_rational(f.weight)})


def _claim_cork1_eq4(G, _H):
    return _within(k1_corona_bounds(G), "LP on K1⊙H", "l_f(H)", "l_f(H)+1")


def _claim_cork1_eq5(G, _H):
    return _within(g_corona_k1_bounds(G), "LP on G⊙K1", "dim_f(G)", "|V(G)|/2")


def _claim_prop21(G, _H):
    n, bound = prop21_sides(G)
    return _at_least(Fraction(n), Fraction(bound), "|V(H)|", "2k-min(λ,μ-2)")


def _claim_prop34(G, _H):
    H = G
    comps_ok = not is_connected(H) and all(H.degree(v) > 0 for v in H.vertices)
    diam = diameter(H)
    long_ok = diam is not UNREACHABLE and diam >= 6
    if not (comps_ok or long_ok):
        raise PreconditionError("needs a disconnected graph without isolated vertices or diameter >= 6")
    lhs = dim_f(corona(K1, H).graph)[0]
    rhs = l_f(H)[0]
    return _Outcome(lhs, rhs, _cmp(lhs, rhs), "LP on K1⊙H", "l_f(H)",
                    "disconnected, no isolated vertices" if comps_ok else f"diameter {diam}")


def _claim_lemma(checker):
    def run(G, H):
        stats = checker(G, H)
        return _Outcome(Fraction(stats["ok"]), Fraction(stats["pairs"]), _cmp(Fraction(stats["ok"]), Fraction(stats["pairs"])),
                        "pairs matching prediction", "vertex pairs",
                        f"exact {stats['exact_ok']}/{stats['exact']}, witness {stats['witness_ok']}/{stats['witness']}",
                        stats)
    return run


def _claim_diam2_eq(G, _H):
    d = diameter(G)
    if d is UNREACHABLE or d > 2:
        raise PreconditionError("diam2_eq requires a connected graph of diameter at most 2")
    lhs, rhs = dim_f(G)[0], l_f(G)[0]
    return _Outcome(lhs, rhs, _cmp(lhs, rhs), "LP dim_f(H)", "LP l_f(H)")


# claim -> (handler, needs a second graph)
CLAIMS: dict[str, tuple[Callable, bool]] = {
    "corona_thm": (_claim_corona_thm, True),
    "lex_thm": (_claim_lex_thm, True),
    "vt_formula": (_claim_vt_formula, False),
    "vt_lex": (_claim_vt_lex, True),
    "vt_lex_const": (_claim_vt_lex_const, True),
    "cork1_eq4": (_claim_cork1_eq4, False),
    "cork1_eq5": (_claim_cork1_eq5, False),
    "prop21": (_claim_prop21, False),
    "prop34": (_claim_prop34, False),
    "lemma31": (_claim_lemma(check_corona_lemma), True),
    "lemma41": (_claim_lemma(check_lex_lemma), True),
    "lemma42": (_claim_lemma42, True),
    "lemma43": (_claim_lemma43, True),
    "diam2_eq": (_claim_diam2_eq, False),
}


def verify(
    claim: str,
    G: Graph,
    H: Optional[Graph] = None,
    g_desc: Optional[str] = None,
    h_desc: Optional[str] = None,
    strict: bool = True,
) -> VerificationReport:
    """Evaluate one claim exactly.

    Single-graph claims (``vt_formula``, ``cork1_eq4``, ``cork1_eq5``,
    ``prop21``, ``prop34``, ``diam2_eq``) read their graph from ``G``.  With
    ``strict`` precondition failures raise; otherwise they are recorded as an
    ``ERROR`` verdict.
    """
    from .catalog import describe

    try:
        handler, binary = CLAIMS[claim]
    except KeyError:
        raise InputError(f"unknown claim {claim!r}; known: {', '.join(CLAIMS)}") from None
    if binary and H is None:
        raise InputError(f"claim {claim!r} needs a second graph")
    g_desc = g_desc or describe(G)
    h_desc = (h_desc or describe(H)) if (binary and H is not None) else "-"
    start = time.perf_counter()
    try:
        out = handler(G, H)
    except FracdimError as exc:
        if strict and isinstance(exc, (PreconditionError, InputError)):
            raise
        elapsed = (time.perf_counter() - start) * 1000
        return VerificationReport(claim, g_desc, h_desc, None, None, ERROR, elapsed, f"{type(exc).__name__}: {exc}")
    elapsed = (time.perf_counter() - start) * 1000
    return VerificationReport(claim, g_desc, h_desc, out.lhs, out.rhs, out.verdict, elapsed, out.notes,
                              out.lhs_source, out.rhs_source, dict(out.details))


class Case(NamedTuple):
    claim: str
    G: Graph
    H: Optional[Graph]
    g_desc: str
    h_desc: str


def _run_case(case: Case) -> VerificationReport:
    return verify(case.claim, case.G, case.H, case.g_desc, case.h_desc, strict=False)


def verify_batch(cases: list[Case], jobs: int = 1, progress: Optional[Callable[[VerificationReport], None]] = None) -> list[VerificationReport]:
    """Run independent cases, optionally across ``jobs`` processes; output sorted by case id."""
    reports: list[VerificationReport] = []
    if jobs <= 1:
        for case in cases:
            r = _run_case(case)
            reports.append(r)
            if progress:
                progress(r)
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for r in pool.map(_run_case, cases, chunksize=8):
                reports.append(r)
                if progress:
                    progress(r)
    return sorted(reports, key=lambda r: r.case_id)


def default_cases(claims: Optional[list[str]] = None) -> list[Case]:
    """The built-in verification catalog."""
    from .catalog import describe, g_catalog, h_catalog, k1_lower_tight, k1_upper_tight, vertex_transitive_family
    from .graph_core import cycle_graph, hypercube, path_graph, petersen_graph

    gs = [(describe(g), g) for g in g_catalog()]
    hs = [(describe(h), h) for h in h_catalog()]
    vt = vertex_transitive_family()
    cases: list[Case] = []

    def add(claim, G, H, gd, hd="-"):
        if claims is None or claim in claims:
            cases.append(Case(claim, G, H, gd, hd))

    for claim in ("corona_thm", "lex_thm", "lemma31", "lemma41", "lemma42", "lemma43"):
        for gd, g in gs:
            for hd, h in hs:
                add(claim, g, h, gd, hd)
    for name, h in vt:
        add("vt_formula", h, None, name)
    vt_gs = [path_graph(n) for n in range(2, 6)] + [cycle_graph(n) for n in range(3, 6)]
    vt_gs += [complete_graph(n) for n in range(3, 6)]
    vt_hs = [cycle_graph(4), cycle_graph(5), K2, complete_graph(3), hypercube(3), petersen_graph()]
    vt_gs = [(describe(g), g) for g in vt_gs]
    vt_hs = [(describe(h), h) for h in vt_hs]
    for gd, g in vt_gs:
        for hd, h in vt_hs:
            if g.n * h.n <= 50:
                add("vt_lex", g, h, gd, hd)
                add("vt_lex_const", g, h, gd, hd)
    seen_h = set()
    for hd, h in hs + k1_upper_tight() + k1_lower_tight():
        if h not in seen_h:
            seen_h.add(h)
            add("cork1_eq4", h, None, hd)
    for hd, h in k1_lower_tight():
        add("prop34", h, None, hd)
    for gd, g in gs:
        add("cork1_eq5", g, None, gd)
    seen_r = set()
    for d, g in gs + hs + vt:
        if g not in seen_r and is_regular(g) and not is_complete(g):
            seen_r.add(g)
            add("prop21", g, None, d)
    seen_d = set()
    for d, g in gs + hs + vt:
        if g not in seen_d and is_connected(g) and g.n >= 2 and diameter(g) <= 2:
            seen_d.add(g)
            add("diam2_eq", g, None, d)
    return cases
