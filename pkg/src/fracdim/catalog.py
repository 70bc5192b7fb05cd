"""Small-graph catalogs, reduced up to isomorphism by brute-force canonical forms."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .graph_core import (
    Graph,
    circulant_graph,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    hypercube,
    is_connected,
    null_graph,
    path_graph,
    petersen_graph,
    star_graph,
)


def canonical_form(G: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Lexicographically least relabelled edge list; exhaustive, so keep ``n`` small."""
    best = None
    for perm in permutations(range(G.n)):
        edges = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in G.edges))
        if best is None or edges < best:
            best = edges
    return G.n, best or ()


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    if sorted(G.degree(v) for v in G.vertices) != sorted(H.degree(v) for v in H.vertices):
        return False
    return canonical_form(G) == canonical_form(H)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        G = Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
        key = canonical_form(G)
        if key not in seen:
            seen[key] = Graph(n, frozenset(key[1]))
    return tuple(sorted(seen.values(), key=lambda g: (len(g.edges), g.sorted_edges())))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(G for G in all_graphs(n) if is_connected(G))


def g_catalog() -> tuple[Graph, ...]:
    """Connected graphs on 2 to 5 vertices (30 classes)."""
    return tuple(G for n in range(2, 6) for G in connected_graphs(n))


def h_catalog() -> tuple[Graph, ...]:
    """All graphs on 2 to 4 vertices (17 classes), disconnected and null ones included."""
    return tuple(G for n in range(2, 5) for G in all_graphs(n))


def vertex_transitive_family() -> list[tuple[str, Graph]]:
    out: list[tuple[str, Graph]] = []
    out += [(f"cycle:{n}", cycle_graph(n)) for n in range(3, 9)]
    out += [(f"complete:{n}", complete_graph(n)) for n in range(2, 7)]
    out += [(f"null:{n}", null_graph(n)) for n in range(2, 5)]
    out += [
        ("circulant:8:1,2", circulant_graph(8, [1, 2])),
        ("circulant:8:1,4", circulant_graph(8, [1, 4])),
        ("circulant:9:1,3", circulant_graph(9, [1, 3])),
        ("circulant:10:1,3", circulant_graph(10, [1, 3])),
        ("complement:cycle:6", complement(cycle_graph(6))),
        ("complement:cycle:7", complement(cycle_graph(7))),
        ("bipartite:3,3", complete_bipartite(3, 3)),
        ("hypercube:3", hypercube(3)),
        ("petersen", petersen_graph()),
    ]
    return out


def k1_upper_tight() -> list[tuple[str, Graph]]:
    return [(f"star:{n}", star_graph(n)) for n in range(2, 6)]


def k1_lower_tight() -> list[tuple[str, Graph]]:
    return [
        ("2K2", disjoint_union(complete_graph(2), complete_graph(2))),
        ("K2+K3", disjoint_union(complete_graph(2), complete_graph(3))),
        ("path:7", path_graph(7)),
        ("path:8", path_graph(8)),
    ]


_NAMED = None


def describe(G: Graph) -> str:
    """Short name for well-known graphs, otherwise ``n<N>[u-v,...]``."""
    global _NAMED
    if _NAMED is None:
        named = {}
        for n in range(1, 9):
            named.setdefault(path_graph(n), f"path:{n}")
            named.setdefault(complete_graph(n), f"complete:{n}")
            named.setdefault(null_graph(n), f"null:{n}")
            if n >= 3:
                named.setdefault(cycle_graph(n), f"cycle:{n}")
        for n in range(1, 8):
            named.setdefault(star_graph(n), f"star:{n}")
        for name, g in vertex_transitive_family() + k1_lower_tight():
            named.setdefault(g, name)
        _NAMED = named
    name = _NAMED.get(G)
    if name is not None:
        return name
    return f"n{G.n}[" + ",".join(f"{u}-{v}" for u, v in G.sorted_edges()) + "]"
