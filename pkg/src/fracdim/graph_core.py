"""Immutable simple graphs, named generators, BFS distances and regularity data.

Vertices are the integers ``0..n-1``.  Optional string labels ride along for
display (product constructions use them) but never take part in equality,
hashing or any computation.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import CapacityError, InputError, PreconditionError

# Exhaustive automorphism search is only attempted up to this order.
VT_LIMIT = 32


class _Unreachable:
    """Distance between vertices in different components.

    Compares equal only to itself, so ``d(u, w) != d(v, w)`` behaves exactly
    as resolving-set logic needs on disconnected graphs.
    """

    _instance: Optional["_Unreachable"] = None

    def __new__(cls) -> "_Unreachable":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise InputError(f"edge {e} is not a normalized pair in range 0..{self.n - 1}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError(f"{len(self.labels)} labels given for {self.n} vertices")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "Graph":
        """Build a graph, normalizing edge orientation and rejecting loops/duplicates."""
        norm: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise InputError(f"duplicate edge {e}")
            norm.add(e)
        return cls(n, frozenset(norm), tuple(labels) if labels is not None else None)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; entries are ints or :data:`UNREACHABLE`."""

    rows: tuple[tuple, ...]

    def __getitem__(self, u: int) -> tuple:
        return self.rows[u]

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class RegularParams:
    k: int
    lam: int
    mu: int
    conventions_applied: frozenset[str] = frozenset()


def _check_vertex(G: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < G.n):
        raise InputError(f"vertex {v!r} out of range 0..{G.n - 1}")


def neighbors(G: Graph, v: int, closed: bool = False) -> frozenset[int]:
    _check_vertex(G, v)
    return G.adj[v] | {v} if closed else G.adj[v]


def bfs(G: Graph, source: int) -> list:
    dist: list = [UNREACHABLE] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distances(G: Graph) -> DistanceMatrix:
    return _apd_cached(G)


# Graph hashes structurally, so identical graphs built separately share the entry.
_APD_CACHE: dict[Graph, DistanceMatrix] = {}


def _apd_cached(G: Graph) -> DistanceMatrix:
    D = _APD_CACHE.get(G)
    if D is None:
        D = DistanceMatrix(tuple(tuple(bfs(G, s)) for s in range(G.n)))
        if len(_APD_CACHE) > 4096:
            _APD_CACHE.clear()
        _APD_CACHE[G] = D
    return D


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    return UNREACHABLE not in bfs(G, 0)


def diameter(G: Graph):
    """Largest distance, or :data:`UNREACHABLE` when ``G`` is disconnected."""
    if not is_connected(G):
        return UNREACHABLE
    D = all_pairs_distances(G)
    return max((max(row) for row in D.rows), default=0)


def complement(G: Graph) -> Graph:
    edges = [(u, v) for u, v in combinations(range(G.n), 2) if (u, v) not in G.edges]
    return Graph(G.n, frozenset(edges), G.labels)


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges)
        offset += H.n
    return Graph(offset, frozenset(edges))


def is_regular(G: Graph) -> bool:
    return len({G.degree(v) for v in G.vertices}) <= 1


def is_complete(G: Graph) -> bool:
    return len(G.edges) == G.n * (G.n - 1) // 2


def regular_params(G: Graph) -> RegularParams:
    """Degree and the maximum common-neighbour counts of adjacent/nonadjacent pairs.

    Missing pair types fall back to the usual conventions: ``mu(K_n) = 0``
    and ``lambda(null graph) = -1``.
    """
    if G.n < 2:
        raise PreconditionError("regular_params needs at least two vertices")
    k = G.degree(0)
    for v in G.vertices:
        if G.degree(v) != k:
            raise PreconditionError(
                f"graph is not regular: deg(0)={k} but deg({v})={G.degree(v)}"
            )
    lam: Optional[int] = None
    mu: Optional[int] = None
    for u, v in combinations(G.vertices, 2):
        common = len(G.adj[u] & G.adj[v])
        if G.has_edge(u, v):
            lam = common if lam is None else max(lam, common)
        else:
            mu = common if mu is None else max(mu, common)
    conventions = set()
    if lam is None:
        lam = -1
        conventions.add("lambda")
    if mu is None:
        mu = 0
        conventions.add("mu")
    return RegularParams(k, lam, mu, frozenset(conventions))


def _automorphism_from(G: Graph, target: int, order: list[int], profile: list) -> bool:
    """Search for an automorphism sending ``order[0]`` to ``target``."""
    n = G.n
    image = [-1] * n
    used = [False] * n
    adj = G.adj

    def extend(i: int) -> bool:
        if i == n:
            return True
        x = order[i]
        candidates = [target] if i == 0 else range(n)
        for y in candidates:
            if used[y] or profile[y] != profile[x]:
                continue
            # adjacency to every already-mapped vertex must be preserved
            if any((z in adj[x]) != (image[z] in adj[y]) for z in order[:i]):
                continue
            image[x] = y
            used[y] = True
            if extend(i + 1):
                return True
            image[x] = -1
            used[y] = False
        return False

    return extend(0)


def is_vertex_transitive(G: Graph) -> bool:
    """Exhaustive check that some automorphism maps vertex 0 onto every vertex."""
    if G.n > VT_LIMIT:
        raise CapacityError(f"vertex-transitivity search limited to {VT_LIMIT} vertices, got {G.n}")
    if G.n <= 1:
        return True
    if not is_regular(G):
        return False
    D = all_pairs_distances(G)
    # distance multiset is an automorphism invariant; cheap pruning
    profile = [sorted(D[v], key=lambda d: (d is UNREACHABLE, 0 if d is UNREACHABLE else d)) for v in G.vertices]
    # BFS-like order keeps each new vertex adjacent to mapped ones when possible
    order: list[int] = []
    seen = [False] * G.n
    for s in G.vertices:
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(G.adj[u]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    assert order[0] == 0
    reached = {0}
    for v in G.vertices:
        if v not in reached and not _automorphism_from(G, v, order, profile):
            return False
        reached.add(v)
    return True


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InputError(msg)


def complete_graph(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, frozenset(combinations(range(n), 2)))


def null_graph(n: int) -> Graph:
    _need(n >= 1, "null graph needs n >= 1")
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n}: centre 0, leaves 1..n."""
    _need(n >= 1, "star needs n >= 1")
    return Graph(n + 1, frozenset((0, i) for i in range(1, n + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts ``0..a-1`` and ``a..a+b-1``."""
    _need(a >= 1 and b >= 1, "complete bipartite needs both parts nonempty")
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def hypercube(d: int) -> Graph:
    """Q_d on binary codes; vertex i is adjacent to i xor 2^j."""
    _need(d >= 1, "hypercube needs d >= 1")
    n = 1 << d
    return Graph(n, frozenset((i, i ^ (1 << j)) for i in range(n) for j in range(d) if i < i ^ (1 << j)))


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def circulant_graph(n: int, jumps: Sequence[int]) -> Graph:
    _need(n >= 1, "circulant needs n >= 1")
    _need(len(jumps) > 0, "circulant needs at least one jump")
    edges = set()
    for j in jumps:
        _need(0 < j % n, f"jump {j} is a multiple of n={n}")
        for i in range(n):
            u, v = i, (i + j) % n
            edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


def random_graph(n: int, percent: int, seed: int) -> Graph:
    """Erdos-Renyi G(n, percent/100) drawn from a seeded RNG."""
    _need(n >= 1 and 0 <= percent <= 100, "random needs n >= 1 and 0 <= percent <= 100")
    rng = random.Random(seed)
    return Graph(n, frozenset(e for e in combinations(range(n), 2) if rng.random() * 100 < percent))


FAMILIES = {
    "complete": (complete_graph, 1),
    "null": (null_graph, 1),
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "star": (star_graph, 1),
    "bipartite": (complete_bipartite, 2),
    "hypercube": (hypercube, 1),
    "petersen": (petersen_graph, 0),
    "circulant": (lambda n, *jumps: circulant_graph(n, jumps), -2),
    "random": (random_graph, 3),
}


def generate(family: str, *params: int) -> Graph:
    """Build a named graph.

    ``circulant`` takes ``n`` followed by one or more jumps; every other family
    takes a fixed number of integer parameters (see :data:`FAMILIES`).
    """
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise InputError(f"unknown graph family {family!r}; known: {', '.join(sorted(FAMILIES))}") from None
    if arity >= 0 and len(params) != arity:
        raise InputError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    if arity < 0 and len(params) < -arity:
        raise InputError(f"family {family!r} takes at least {-arity} parameters")
    return fn(*params)


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------


def parse_edge_list(text: str, source: str = "<string>") -> Graph:
    """Parse ``n`` then ``u v`` lines (``u < v``); ``#`` comments, blank lines ignored."""
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        tokens = line.split()
        where = f"{source}:{lineno}:{col}"
        try:
            nums = [int(t) for t in tokens]
        except ValueError:
            raise InputError(f"{where}: expected integers, got {line.strip()!r}") from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise InputError(f"{where}: first line must be a single vertex count")
            n = nums[0]
            continue
        if len(nums) != 2:
            raise InputError(f"{where}: expected 'u v', got {line.strip()!r}")
        u, v = nums
        if not (0 <= u < v < n):
            raise InputError(f"{where}: edge '{u} {v}' violates 0 <= u < v < {n}")
        if (u, v) in seen:
            raise InputError(f"{where}: duplicate edge '{u} {v}'")
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise InputError(f"{source}: no vertex count line")
    return Graph(n, frozenset(edges))


def format_edge_list(G: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(G.n))
    lines.extend(f"{u} {v}" for u, v in G.sorted_edges())
    return "\n".join(lines) + "\n"
