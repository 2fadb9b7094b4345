"""3-disjoint edges, the induced matching number a(G), and the matching number."""

from __future__ import annotations

import functools

from ._bits import iter_bits, popcount
from .errors import InputError
from .graph import Graph, complement, induced_subgraph


def _edge(G: Graph, e) -> tuple[int, int]:
    u, v = e
    if not G.has_edge(u, v):
        raise InputError(f"{e!r} is not an edge of the graph")
    return (u, v) if u < v else (v, u)


def is_three_disjoint(G: Graph, e1, e2) -> bool:
    """True iff the four endpoints induce exactly the two edges ``e1`` and ``e2``.

    Cross-checked against the complement view (an induced four-cycle there).
    """
    a, b = _edge(G, e1)
    c, d = _edge(G, e2)
    verts = {a, b, c, d}
    if len(verts) < 4:
        return False
    H = induced_subgraph(G, verts)
    direct = sorted(H.edges) == sorted([(a, b), (c, d)])
    Hc = complement(H)
    via_complement = Hc.edge_count == 4 and all(popcount(Hc.adj[v]) == 2 for v in verts)
    if direct != via_complement:
        raise RuntimeError(f"3-disjointness characterizations disagree on {e1}, {e2}")
    return direct


def _blocked(G: Graph, u: int, v: int) -> int:
    return G.adj[u] | G.adj[v] | (1 << u) | (1 << v)


def induced_matching(G: Graph) -> list[tuple[int, int]]:
    """A maximum set of pairwise 3-disjoint edges (a maximum induced matching).

    Branch and bound over edges in lexicographic order: take an edge (and
    discard every edge touching its closed neighborhood) or skip it. The bound
    is half the number of vertices still covered by live edges.
    """
    edges = G.edges
    blocks = [_blocked(G, u, v) for u, v in edges]
    ends = [(1 << u) | (1 << v) for u, v in edges]
    best: list = [[]]

    def bound(live: list[int]) -> int:
        cover = 0
        for i in live:
            cover |= ends[i]
        return popcount(cover) // 2

    def go(live: list[int], chosen: list[int]) -> None:
        if len(chosen) > len(best[0]):
            best[0] = list(chosen)
        if not live or len(chosen) + bound(live) <= len(best[0]):
            return
        i, rest = live[0], live[1:]
        chosen.append(i)
        go([k for k in rest if not ends[k] & blocks[i]], chosen)
        chosen.pop()
        go(rest, chosen)

    go(list(range(len(edges))), [])
    return [edges[i] for i in best[0]]


def a_invariant(G: Graph) -> int:
    return len(induced_matching(G))


def maximum_matching(G: Graph) -> list[tuple[int, int]]:
    """An exact maximum matching by memoized recursion on the lowest unmatched vertex."""
    adj = G.adj

    @functools.lru_cache(maxsize=None)
    def best(mask: int) -> tuple[int, tuple]:
        # drop vertices with no neighbor left
        while mask:
            v = (mask & -mask).bit_length() - 1
            if adj[v] & mask:
                break
            mask &= ~(1 << v)
        if not mask:
            return 0, ()
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        size, m = best(rest)
        out = (size, m)
        for u in iter_bits(adj[v] & rest):
            s2, m2 = best(rest & ~(1 << u))
            if s2 + 1 > out[0]:
                out = (s2 + 1, ((v, u),) + m2)
        return out

    return sorted(best(G.vertex_mask)[1])


def matching_number(G: Graph) -> int:
    return len(maximum_matching(G))
