"""Finite simple graphs on integer labels, stored as per-vertex neighbor bit-sets.

Deleting vertices keeps the surviving labels, so anything computed on a
subgraph (certificates, witnesses) still refers to vertices of the input.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from ._bits import iter_bits, lowest, mask_of, members, popcount
from .errors import InputError

MAX_VERTICES = 24


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    ``vertex_mask`` holds the vertex labels; ``adj[v]`` is the neighbor mask of
    ``v`` (0 for labels that are not vertices).
    """

    vertex_mask: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        if n > MAX_VERTICES:
            raise InputError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls((1 << n) - 1, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n)

    def check(self) -> None:
        """Raise ``AssertionError`` unless symmetry/no-loop/closure invariants hold."""
        for v, nb in enumerate(self.adj):
            if not self.vertex_mask >> v & 1:
                assert nb == 0, f"non-vertex {v} has neighbors"
                continue
            assert not nb >> v & 1, f"loop at {v}"
            assert nb & ~self.vertex_mask == 0, f"{v} has a neighbor outside the vertex set"
            for u in iter_bits(nb):
                assert self.adj[u] >> v & 1, f"asymmetric adjacency {v}-{u}"

    @property
    def vertex_count(self) -> int:
        return popcount(self.vertex_mask)

    @property
    def labels(self) -> list[int]:
        return members(self.vertex_mask)

    @property
    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in iter_bits(self.vertex_mask):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < len(self.adj) and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._require(v)
        return popcount(self.adj[v])

    def _require(self, v: int) -> None:
        if not (isinstance(v, int) and v >= 0 and self.vertex_mask >> v & 1):
            raise InputError(f"{v!r} is not a vertex of the graph")

    def __repr__(self) -> str:
        return f"Graph(vertices={self.labels}, edges={self.edges})"


@dataclass(frozen=True)
class Bipartition:
    side_one: frozenset[int]
    side_two: frozenset[int]


def _vertex_set(G: Graph, S: Iterable[int] | int) -> int:
    if isinstance(S, int):
        m = S
    else:
        S = list(S)
        for v in S:
            G._require(v)
        m = mask_of(S)
    if m & ~G.vertex_mask:
        raise InputError(f"{members(m & ~G.vertex_mask)} are not vertices of the graph")
    return m


def neighbors(G: Graph, x: int) -> frozenset[int]:
    G._require(x)
    return frozenset(iter_bits(G.adj[x]))


def closed_neighborhood_mask(G: Graph, x: int) -> int:
    G._require(x)
    return G.adj[x] | (1 << x)


def delete_vertices(G: Graph, S: Iterable[int] | int) -> Graph:
    """Induced subgraph on V(G) minus S. ``S`` may be an iterable or a mask."""
    m = _vertex_set(G, S)
    keep = ~m
    adj = tuple(a & keep if not m >> v & 1 else 0 for v, a in enumerate(G.adj))
    return Graph(G.vertex_mask & keep, adj)


def induced_subgraph(G: Graph, W: Iterable[int] | int) -> Graph:
    m = _vertex_set(G, W)
    return delete_vertices(G, G.vertex_mask & ~m)


def closed_neighborhood_delete(G: Graph, x: int) -> Graph:
    return delete_vertices(G, closed_neighborhood_mask(G, x))


def degree_one_vertex(G: Graph) -> int | None:
    for v in iter_bits(G.vertex_mask):
        if popcount(G.adj[v]) == 1:
            return v
    return None


def complement(G: Graph) -> Graph:
    vm = G.vertex_mask
    adj = tuple((~a & vm & ~(1 << v)) if vm >> v & 1 else 0 for v, a in enumerate(G.adj))
    return Graph(vm, adj)


def component_masks(G: Graph) -> list[int]:
    out = []
    left = G.vertex_mask
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def connected_components(G: Graph) -> list[frozenset[int]]:
    return [frozenset(iter_bits(c)) for c in component_masks(G)]


def bipartition(G: Graph) -> Bipartition | None:
    """2-color each component by BFS, its lowest label on side one; None if an odd cycle exists."""
    color: dict[int, int] = {}
    for comp in component_masks(G):
        root = lowest(comp)
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(G.adj[v]):
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    one = frozenset(v for v, c in color.items() if c == 0)
    two = frozenset(v for v, c in color.items() if c == 1)
    return Bipartition(one, two)


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def relabel(G: Graph, order: list[int]) -> Graph:
    """The graph on 0..k-1 in which vertex ``i`` plays the role of ``order[i]``."""
    pos = {v: i for i, v in enumerate(order)}
    edges = [(pos[u], pos[v]) for u, v in G.edges]
    return Graph.from_edges(len(order), edges)


def compact_graph(G: Graph) -> tuple[Graph, list[int]]:
    labels = G.labels
    return relabel(G, labels), labels


# -- canonical form ---------------------------------------------------------


def _refine(adj: list[int], verts: list[int], color: dict[int, int]) -> dict[int, int]:
    ncolors = len(set(color.values()))
    while True:
        sig = {
            v: (color[v], tuple(sorted(color[u] for u in iter_bits(adj[v]))))
            for v in verts
        }
        order = sorted(set(sig.values()))
        rank = {s: i for i, s in enumerate(order)}
        color = {v: rank[sig[v]] for v in verts}
        if len(order) == ncolors:
            return color
        ncolors = len(order)


def _code(adj: list[int], order: list[int]) -> int:
    code = 0
    k = len(order)
    for i in range(k):
        a = adj[order[i]]
        for j in range(i + 1, k):
            code = (code << 1) | (a >> order[j] & 1)
    return code


def canonical_form(G: Graph) -> tuple[tuple[int, int], list[int]]:
    """Canonical key ``(k, code)`` and the vertex order realizing it.

    Individualization-refinement over color-refinement cells; the key is the
    minimal upper-triangle adjacency code over all explored leaves, so two
    graphs get equal keys iff they are isomorphic. Twins (vertices swapped by
    a transposition automorphism) are individualized only once per cell.
    """
    verts = G.labels
    adj = list(G.adj)
    k = len(verts)
    if k == 0:
        return (0, 0), []
    twin_of = {}
    for u in verts:
        for v in verts:
            if v < u and (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)):
                twin_of.setdefault(u, set()).add(v)
    best: list = [None, None]

    def search(color: dict[int, int]) -> None:
        color = _refine(adj, verts, color)
        cells: dict[int, list[int]] = {}
        for v in verts:
            cells.setdefault(color[v], []).append(v)
        if len(cells) == k:
            order = sorted(verts, key=color.__getitem__)
            c = _code(adj, order)
            if best[0] is None or c < best[0]:
                best[0], best[1] = c, order
            return
        target = min(c for c, vs in cells.items() if len(vs) > 1)
        tried: list[int] = []
        for v in cells[target]:
            if any(t in twin_of.get(v, ()) or v in twin_of.get(t, ()) for t in tried):
                continue
            tried.append(v)
            sub = {u: 2 * color[u] + (0 if u == v else 1) for u in verts}
            search(sub)

    search({v: popcount(adj[v]) for v in verts})
    return (k, best[0]), best[1]


def canonical_graph(G: Graph) -> Graph:
    _, order = canonical_form(G)
    return relabel(G, order)


# -- generators -------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n}: center 0 joined to leaves 1..n."""
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prufer_decode(seq: list[int] | tuple[int, ...], n: int) -> Graph:
    """Labeled tree on 0..n-1 with the given Prüfer sequence (length n-2)."""
    if n <= 1:
        return Graph.empty(n)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = degree.index(1)
        edges.append((leaf, v))
        degree[leaf] = 0
        degree[v] -= 1
    u, w = (i for i in range(n) if degree[i] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def prufer_tree_code(seq, n: int) -> tuple:
    """Isomorphism code of the tree with Prüfer sequence ``seq``, without building a Graph.

    Rooted AHU code at the center (or the sorted pair of codes at a bicenter).
    """
    if n <= 2:
        return ("small", n)
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for v in seq:
        leaf = degree.index(1)
        nbrs[leaf].append(v)
        nbrs[v].append(leaf)
        degree[leaf] = 0
        degree[v] -= 1
    u = degree.index(1)
    w = degree.index(1, u + 1)
    nbrs[u].append(w)
    nbrs[w].append(u)
    deg = [len(a) for a in nbrs]
    layer = [v for v in range(n) if deg[v] == 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for x in nbrs[v]:
                deg[x] -= 1
                if deg[x] == 1:
                    nxt.append(x)
        layer = nxt

    def code(v: int, parent: int) -> tuple:
        return tuple(sorted(code(c, v) for c in nbrs[v] if c != parent))

    if len(layer) == 1:
        return (code(layer[0], -1),)
    a, b = layer
    ca, cb = code(a, b), code(b, a)
    return (ca, cb) if ca <= cb else (cb, ca)


def trees_by_prufer(n: int) -> list[tuple[Graph, int]]:
    """Walk all n^(n-2) Prüfer sequences; return one tree per isomorphism class
    with the number of labeled trees in that class, in first-seen order."""
    if n <= 2:
        return [(prufer_decode((), n), 1)]
    first: dict[tuple, tuple[int, ...]] = {}
    count: dict[tuple, int] = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        c = prufer_tree_code(seq, n)
        if c in count:
            count[c] += 1
        else:
            count[c] = 1
            first[c] = seq
    return [(prufer_decode(first[c], n), count[c]) for c in first]


def _all_bipartite(a: int, b: int) -> Iterator[Graph]:
    pairs = [(i, a + j) for i in range(a) for j in range(b)]
    n = a + b
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        for t, (u, v) in enumerate(pairs):
            if bits >> t & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph((1 << n) - 1, tuple(adj))


def _all_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        for t, (u, v) in enumerate(pairs):
            if bits >> t & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph((1 << n) - 1, tuple(adj))


def _all_trees(n: int) -> Iterator[Graph]:
    if n <= 2:
        yield prufer_decode((), n)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on n vertices.

    Built by adding a vertex with every possible neighborhood to each class on
    n-1 vertices; every graph arises this way by deleting its last vertex.
    """
    if n < 0:
        raise InputError("n must be nonnegative")
    level = {canonical_form(Graph.empty(0))[0]: Graph.empty(0)}
    for m in range(1, n + 1):
        nxt: dict = {}
        for H in level.values():
            base = [(u, v) for u, v in H.edges]
            for nb in range(1 << (m - 1)):
                G = Graph.from_edges(m, base + [(u, m - 1) for u in iter_bits(nb)])
                key, order = canonical_form(G)
                if key not in nxt:
                    nxt[key] = relabel(G, order)
        level = nxt
    return sorted(level.values(), key=lambda g: canonical_form(g)[0])


def random_bipartite(a: int, b: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(
        a + b, [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p]
    )


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(max(n - 2, 0))], n)


FAMILIES = {
    "path": ("n",),
    "cycle": ("n",),
    "star": ("n",),
    "complete_bipartite": ("a", "b"),
    "all_bipartite": ("a", "b"),
    "all_graphs": ("n",),
    "all_trees": ("n",),
    "nonisomorphic": ("n",),
    "random_bipartite": ("a", "b", "p", "seed"),
    "random_graph": ("n", "p", "seed"),
    "random_tree": ("n", "seed"),
}


def generate(family: str, *params) -> Iterator[Graph]:
    """Deterministic stream of graphs for a family descriptor.

    >>> sum(1 for _ in generate("all_bipartite", 2, 2))
    16
    """
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    names = FAMILIES[family]
    if len(params) != len(names):
        raise InputError(f"{family} takes parameters {names}, got {params!r}")
    args = dict(zip(names, params))
    for name in ("n", "a", "b"):
        if name in args:
            v = args[name]
            if not isinstance(v, int) or v < 0:
                raise InputError(f"{name} must be a nonnegative integer, got {v!r}")
    if "p" in args and not 0.0 <= float(args["p"]) <= 1.0:
        raise InputError(f"p must lie in [0, 1], got {args['p']!r}")
    size = args.get("n", args.get("a", 0) + args.get("b", 0))
    if size > MAX_VERTICES:
        raise InputError(f"at most {MAX_VERTICES} vertices supported")
    return _generate(family, args)


def _generate(family: str, args: dict) -> Iterator[Graph]:
    if family == "path":
        yield path_graph(args["n"])
    elif family == "cycle":
        yield cycle_graph(args["n"])
    elif family == "star":
        yield star_graph(args["n"])
    elif family == "complete_bipartite":
        yield complete_bipartite_graph(args["a"], args["b"])
    elif family == "all_bipartite":
        yield from _all_bipartite(args["a"], args["b"])
    elif family == "all_graphs":
        yield from _all_graphs(args["n"])
    elif family == "all_trees":
        yield from _all_trees(args["n"])
    elif family == "nonisomorphic":
        yield from nonisomorphic_graphs(args["n"])
    elif family == "random_bipartite":
        yield random_bipartite(args["a"], args["b"], float(args["p"]), int(args["seed"]))
    elif family == "random_graph":
        yield random_graph(args["n"], float(args["p"]), int(args["seed"]))
    elif family == "random_tree":
        yield random_tree(args["n"], int(args["seed"]))
