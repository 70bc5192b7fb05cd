"""Brute-force oracles, deliberately independent of the library's fast paths."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional


def solve_exact(A: list[list[Fraction]], b: list[Fraction]) -> Optional[list[Fraction]]:
    """Gauss-Jordan on a square system; ``None`` if singular."""
    n = len(A)
    M = [row[:] + [rhs] for row, rhs in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


def covering_lp_by_enumeration(rows: list[frozenset[int]], n: int) -> Fraction:
    """min sum(x) s.t. each row sums to >= 1, x >= 0, by enumerating basic feasible points."""
    constraints = []
    for r in rows:
        constraints.append(([Fraction(1 if j in r else 0) for j in range(n)], Fraction(1)))
    for j in range(n):
        constraints.append(([Fraction(1 if i == j else 0) for i in range(n)], Fraction(0)))
    best: Optional[Fraction] = None
    for subset in combinations(constraints, n):
        x = solve_exact([c[0] for c in subset], [c[1] for c in subset])
        if x is None or any(v < 0 for v in x):
            continue
        if any(sum(x[j] for j in r) < 1 for r in rows):
            continue
        val = sum(x, Fraction(0))
        if best is None or val < best:
            best = val
    assert best is not None
    return best


def floyd_warshall(n: int, edges) -> list[list[Optional[int]]]:
    """All-pairs hop counts; ``None`` for unreachable."""
    INF = float("inf")
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return [[None if x == INF else int(x) for x in row] for row in d]


def corona_edges_by_definition(G, H) -> set[frozenset]:
    """Edges over labelled vertices ``('b', u)`` and ``('p', u, v)``."""
    verts = [("b", u) for u in range(G.n)] + [("p", u, v) for u in range(G.n) for v in range(H.n)]
    out = set()
    for x, y in combinations(verts, 2):
        if x[0] == "b" and y[0] == "b":
            adj = (min(x[1], y[1]), max(x[1], y[1])) in G.edges
        elif x[0] == "b" or y[0] == "b":
            b, p = (x, y) if x[0] == "b" else (y, x)
            adj = p[1] == b[1]
        else:
            adj = x[1] == y[1] and (min(x[2], y[2]), max(x[2], y[2])) in H.edges
        if adj:
            out.add(frozenset((x, y)))
    return out


def lex_edges_by_definition(G, H) -> set[frozenset]:
    dG = floyd_warshall(G.n, G.edges)
    dH = floyd_warshall(H.n, H.edges)
    verts = [(u, v) for u in range(G.n) for v in range(H.n)]
    return {
        frozenset((x, y))
        for x, y in combinations(verts, 2)
        if dG[x[0]][y[0]] == 1 or (x[0] == y[0] and dH[x[1]][y[1]] == 1)
    }


def is_vertex_transitive_by_permutations(n: int, edges) -> bool:
    """Orbit of vertex 0 under all n! permutations that preserve the edge set."""
    es = {frozenset(e) for e in edges}
    orbit = set()
    for perm in permutations(range(n)):
        if {frozenset((perm[u], perm[v])) for u, v in edges} == es:
            orbit.add(perm[0])
    return len(orbit) == n


def lf_by_brute_enumeration(H) -> Fraction:
    rows = []
    for a, b in combinations(range(H.n), 2):
        na, nb = H.adj[a], H.adj[b]
        rows.append(frozenset({a, b}) | (na ^ nb))
    return covering_lp_by_enumeration(sorted(set(rows), key=sorted), H.n)


def dimf_by_brute_enumeration(G) -> Fraction:
    d = floyd_warshall(G.n, G.edges)
    rows = set()
    for a, b in combinations(range(G.n), 2):
        rows.add(frozenset(w for w in range(G.n) if d[a][w] != d[b][w]))
    return covering_lp_by_enumeration(sorted(rows, key=sorted), G.n)
