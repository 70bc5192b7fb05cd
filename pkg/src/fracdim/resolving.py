"""Resolving sets, symmetric sets, twin classes and structural set predictions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .errors import InconsistencyError, InputError, PreconditionError
from .graph_core import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    complement,
    is_connected,
    neighbors,
)
from .products import BASE, ProductVertex, pair

TYPE1, TYPE2, TYPE3 = "type1", "type2", "type3"


def resolving_set(D: DistanceMatrix, u: int, v: int) -> frozenset[int]:
    """Vertices ``w`` with ``d(u, w) != d(v, w)``; UNREACHABLE equals only itself."""
    if u == v:
        raise InputError("resolving_set needs two distinct vertices")
    du, dv = D[u], D[v]
    return frozenset(w for w in range(len(D)) if du[w] != dv[w])


def symmetric_set(H: Graph, v1: int, v2: int) -> frozenset[int]:
    if v1 == v2:
        raise InputError("symmetric_set needs two distinct vertices")
    return frozenset({v1, v2}) | (neighbors(H, v1) ^ neighbors(H, v2))


def are_twins(G: Graph, u: int, v: int) -> bool:
    return u != v and (G.adj[u] == G.adj[v] or G.adj[u] | {u} == G.adj[v] | {v})


@dataclass(frozen=True)
class TwinDecomposition:
    classes: tuple[tuple[int, ...], ...]
    class_type: tuple[str, ...]

    def _count(self, t: str) -> int:
        return sum(len(c) for c, ct in zip(self.classes, self.class_type) if ct == t)

    @property
    def m1(self) -> int:
        return self._count(TYPE1)

    @property
    def m2(self) -> int:
        return self._count(TYPE2)

    @property
    def m3(self) -> int:
        return self._count(TYPE3)

    def type_of(self, u: int) -> str:
        for c, t in zip(self.classes, self.class_type):
            if u in c:
                return t
        raise InputError(f"vertex {u} not covered by decomposition")

    def class_of(self, u: int) -> tuple[int, ...]:
        for c in self.classes:
            if u in c:
                return c
        raise InputError(f"vertex {u} not covered by decomposition")


def twin_decomposition(G: Graph) -> TwinDecomposition:
    """Twin classes via union-find over pairwise twin tests, then typed.

    Transitivity of the twin relation is not assumed: a merged class that is
    neither a singleton, a closed-twin clique nor an open-twin independent set
    raises :class:`InconsistencyError`.
    """
    parent = list(range(G.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in combinations(G.vertices, 2):
        if are_twins(G, u, v):
            parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in G.vertices:
        groups.setdefault(find(v), []).append(v)
    classes = sorted((tuple(sorted(c)) for c in groups.values()), key=lambda c: c[0])
    types = []
    for c in classes:
        if len(c) == 1:
            types.append(TYPE1)
            continue
        closed = {G.adj[x] | {x} for x in c}
        opened = {G.adj[x] for x in c}
        clique = all(G.has_edge(a, b) for a, b in combinations(c, 2))
        indep = not any(G.has_edge(a, b) for a, b in combinations(c, 2))
        if clique and len(closed) == 1:
            types.append(TYPE2)
        elif indep and len(opened) == 1:
            types.append(TYPE3)
        else:
            raise InconsistencyError(f"twin class {c} is neither a closed-twin clique nor an open-twin independent set")
    return TwinDecomposition(tuple(classes), tuple(types))


@dataclass(frozen=True)
class CopyCover:
    """Witness that the whole copy ``^uH`` lies inside a resolving set."""

    u: int


Prediction = Union[frozenset, CopyCover]


def predicted_corona_R(G: Graph, H: Graph, x: ProductVertex, y: ProductVertex) -> Prediction:
    """Structural prediction of ``R_{G⊙H}{x, y}``.

    Same-copy pairs get the exact set ``{(u, v) : v in S_H{v1, v2}}``; every
    other pair gets a :class:`CopyCover` witness.
    """
    if not is_connected(G):
        raise PreconditionError("predicted_corona_R requires connected G")
    if G.n < 2:
        raise PreconditionError("predicted_corona_R requires |V(G)| >= 2")
    if x == y:
        raise InputError("predicted_corona_R needs two distinct vertices")
    if x.kind != BASE and y.kind != BASE and x.u == y.u:
        return frozenset(pair(x.u, v) for v in symmetric_set(H, x.v, y.v))
    if x.kind == BASE and y.kind == BASE:
        return CopyCover(x.u)
    if x.kind == BASE or y.kind == BASE:
        b, p = (x, y) if x.kind == BASE else (y, x)
        if p.u != b.u:
            return CopyCover(b.u)
        return CopyCover(next(w for w in G.vertices if w != b.u))
    return CopyCover(x.u)


def predicted_lex_R(G: Graph, H: Graph, x: ProductVertex, y: ProductVertex) -> Prediction:
    """Structural prediction of ``R_{G[H]}{x, y}``.

    Equal or twin first coordinates give an exact set; otherwise a copy
    ``^wH`` with ``d_G(u1, w) != d_G(u2, w)`` is returned as witness.
    """
    if not is_connected(G):
        raise PreconditionError("predicted_lex_R requires connected G")
    if G.n < 2:
        raise PreconditionError("predicted_lex_R requires |V(G)| >= 2")
    if x == y:
        raise InputError("predicted_lex_R needs two distinct vertices")
    u1, v1, u2, v2 = x.u, x.v, y.u, y.v
    if u1 == u2:
        return frozenset(pair(u1, v) for v in symmetric_set(H, v1, v2))
    if G.adj[u1] | {u1} == G.adj[u2] | {u2}:
        Hc = complement(H)
        return frozenset(
            [pair(u1, v) for v in neighbors(Hc, v1, closed=True)]
            + [pair(u2, v) for v in neighbors(Hc, v2, closed=True)]
        )
    if G.adj[u1] == G.adj[u2]:
        return frozenset(
            [pair(u1, v) for v in neighbors(H, v1, closed=True)]
            + [pair(u2, v) for v in neighbors(H, v2, closed=True)]
        )
    D = all_pairs_distances(G)
    for w in G.vertices:
        if w not in (u1, u2) and D[u1][w] != D[u2][w]:
            return CopyCover(w)
    raise InconsistencyError(f"non-twins {u1}, {u2} are not separated by any third vertex")
