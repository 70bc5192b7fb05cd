"""Corona and lexicographic products with provenance-preserving vertex indices.

Numbering: in ``G ⊙ H`` the base vertices come first (index ``u``), followed by
the copy vertices ``(u, v)`` in u-major order, so copy ``u`` occupies the
contiguous block ``n_G + u*n_H .. n_G + (u+1)*n_H - 1``.  In ``G[H]`` vertex
``(u, v)`` has index ``u*n_H + v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple, Optional

from .errors import InputError, PreconditionError
from .graph_core import Graph, all_pairs_distances, is_connected

BASE = "base"
PAIR = "pair"


class ProductVertex(NamedTuple):
    kind: str
    u: int
    v: Optional[int] = None

    def __str__(self) -> str:
        return str(self.u) if self.kind == BASE else f"({self.u},{self.v})"


def base(u: int) -> ProductVertex:
    return ProductVertex(BASE, u)


def pair(u: int, v: int) -> ProductVertex:
    return ProductVertex(PAIR, u, v)


@dataclass(frozen=True)
class ProductGraph:
    kind: str  # "corona" or "lexicographic"
    graph: Graph
    vertices: tuple[ProductVertex, ...]
    G: Graph
    H: Graph
    index: dict = field(compare=False, repr=False, hash=False, default_factory=dict)

    def __post_init__(self) -> None:
        if not self.index:
            self.index.update({x: i for i, x in enumerate(self.vertices)})

    def index_of(self, x: ProductVertex) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise InputError(f"{x} is not a vertex of this {self.kind} product") from None

    def copy_indices(self, u: int) -> range:
        """Indices of the copy ``^uH``."""
        offset = self.G.n if self.kind == "corona" else 0
        start = offset + u * self.H.n
        return range(start, start + self.H.n)

    def base_indices(self) -> range:
        return range(self.G.n) if self.kind == "corona" else range(0)


def _require_nonempty(G: Graph, H: Graph) -> None:
    if G.n < 1 or H.n < 1:
        raise InputError("product factors must have at least one vertex")


def corona(G: Graph, H: Graph) -> ProductGraph:
    _require_nonempty(G, H)
    nG, nH = G.n, H.n
    verts = [base(u) for u in range(nG)] + [pair(u, v) for u in range(nG) for v in range(nH)]
    edges = set(G.edges)
    for u in range(nG):
        off = nG + u * nH
        edges.update((u, off + v) for v in range(nH))
        edges.update((off + a, off + b) for a, b in H.edges)
    g = Graph(len(verts), frozenset(edges), tuple(str(x) for x in verts))
    return ProductGraph("corona", g, tuple(verts), G, H)


def lexicographic(G: Graph, H: Graph) -> ProductGraph:
    _require_nonempty(G, H)
    nH = H.n
    verts = [pair(u, v) for u in range(G.n) for v in range(nH)]
    edges = set()
    for u1, u2 in G.edges:
        edges.update((u1 * nH + a, u2 * nH + b) for a in range(nH) for b in range(nH))
    for u in range(G.n):
        edges.update((u * nH + a, u * nH + b) for a, b in H.edges)
    g = Graph(len(verts), frozenset(edges), tuple(str(x) for x in verts))
    return ProductGraph("lexicographic", g, tuple(verts), G, H)


def _require_connected(G: Graph, what: str) -> None:
    if not is_connected(G):
        raise PreconditionError(f"{what} requires a connected first factor")


def corona_distance(G: Graph, H: Graph, x: ProductVertex, y: ProductVertex) -> int:
    """Distance in ``G ⊙ H`` from the factor distances alone (no BFS on the product)."""
    _require_connected(G, "corona_distance")
    if x == y:
        raise InputError("corona_distance needs two distinct vertices")
    dG = all_pairs_distances(G)
    if x.kind == BASE and y.kind == BASE:
        return dG[x.u][y.u]
    if x.kind == BASE or y.kind == BASE:
        b, p = (x, y) if x.kind == BASE else (y, x)
        return dG[b.u][p.u] + 1
    if x.u == y.u:
        if H.has_edge(x.v, y.v):
            return 1
        return 2
    return dG[x.u][y.u] + 2


def lex_distance(G: Graph, H: Graph, x: ProductVertex, y: ProductVertex) -> int:
    """Distance in ``G[H]`` from the factor data; needs connected ``G`` with ``n >= 2``."""
    _require_connected(G, "lex_distance")
    if G.n < 2:
        raise PreconditionError("lex_distance requires |V(G)| >= 2")
    if x == y:
        raise InputError("lex_distance needs two distinct vertices")
    if x.u == y.u:
        return 1 if H.has_edge(x.v, y.v) else 2
    return all_pairs_distances(G)[x.u][y.u]


def count_formulas(kind: str, G: Graph, H: Graph) -> tuple[int, int]:
    """Closed-form ``(|V|, |E|)`` of a product."""
    nG, mG, nH, mH = G.n, len(G.edges), H.n, len(H.edges)
    if kind == "corona":
        return nG + nG * nH, mG + nG * (nH + mH)
    return nG * nH, mG * nH * nH + nG * mH


def vertex_pairs(P: ProductGraph):
    return combinations(P.vertices, 2)
