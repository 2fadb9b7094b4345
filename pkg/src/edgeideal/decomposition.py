"""Vertex decomposability and shellability deciders that return replayable certificates."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Union

from ._bits import compact, expand, iter_bits, lex_key, mask_of, maximal, members, popcount
from .errors import InputError
from .graph import (
    Graph,
    closed_neighborhood_mask,
    compact_graph,
    component_masks,
    delete_vertices,
    induced_subgraph,
)
from .simplicial import SimplicialComplex, independence_complex


@dataclass(frozen=True)
class SimplexLeaf:
    """The complex has a single facet (IRRELEVANT counts: it is the empty simplex)."""


@dataclass(frozen=True)
class VoidLeaf:
    """The complex has no faces."""


@dataclass(frozen=True)
class Shed:
    vertex: int
    deletion: "DecompositionTree"
    link: "DecompositionTree"


DecompositionTree = Union[SimplexLeaf, VoidLeaf, Shed]


@dataclass(frozen=True)
class ShellingOrder:
    facets: tuple[frozenset[int], ...]


def relabel_tree(tree: DecompositionTree, mapping) -> DecompositionTree:
    if isinstance(tree, Shed):
        return Shed(mapping[tree.vertex], relabel_tree(tree.deletion, mapping), relabel_tree(tree.link, mapping))
    return tree


def relabel_shelling(order: ShellingOrder, mapping) -> ShellingOrder:
    return ShellingOrder(tuple(frozenset(mapping[v] for v in f) for f in order.facets))


def tree_size(tree: DecompositionTree) -> int:
    if isinstance(tree, Shed):
        return 1 + tree_size(tree.deletion) + tree_size(tree.link)
    return 1


# -- vertex decomposability ----------------------------------------------------


def _shed_parts(facets: tuple[int, ...], x: int) -> tuple[list[int], list[int]] | None:
    """Deletion and link facets at ``x`` if ``x`` is a shedding vertex, else None."""
    bx = 1 << x
    without = [f for f in facets if not f & bx]
    with_x = [f & ~bx for f in facets if f & bx]
    # every facet of the deletion must already be a facet
    for f in with_x:
        if not any(f & g == f for g in without):
            return None
    return without, maximal(with_x)


def _vd_search(facets: tuple[int, ...], recurse) -> DecompositionTree | None:
    if not facets:
        return VoidLeaf()
    if len(facets) == 1:
        return SimplexLeaf()
    support = 0
    for f in facets:
        support |= f
    for x in iter_bits(support):
        parts = _shed_parts(facets, x)
        if parts is None:
            continue
        dele, lk = parts
        t1 = recurse(dele)
        if t1 is None:
            continue
        t2 = recurse(lk)
        if t2 is None:
            continue
        return Shed(x, t1, t2)
    return None


@functools.lru_cache(maxsize=1 << 16)
def _vd_compact(key: tuple[int, ...]) -> DecompositionTree | None:
    return _vd_search(key, _vd_memo)


def _vd_memo(facets) -> DecompositionTree | None:
    support = 0
    for f in facets:
        support |= f
    positions = members(support)
    tree = _vd_compact(tuple(sorted(compact(facets, support))))
    if tree is None:
        return None
    return relabel_tree(tree, positions)


def _vd_plain(facets) -> DecompositionTree | None:
    return _vd_search(tuple(sorted(facets)), _vd_plain)


def is_vertex_decomposable(delta: SimplicialComplex, *, memo: bool = True) -> DecompositionTree | None:
    """A shedding tree if ``delta`` is vertex decomposable, else None.

    Shedding vertices are tried in ascending order; the first success wins.
    """
    if memo:
        return _vd_memo(delta.facets)
    return _vd_plain(delta.facets)


def join_trees(t1: DecompositionTree, t2: DecompositionTree) -> DecompositionTree:
    """Shedding tree for the join of two complexes on disjoint vertex sets.

    Shedding in the first factor commutes with the join; each simplex leaf of
    the first tree becomes a cone over the second factor, decomposed by ``t2``.
    """
    if isinstance(t1, Shed):
        return Shed(t1.vertex, join_trees(t1.deletion, t2), join_trees(t1.link, t2))
    if isinstance(t1, VoidLeaf):
        return t1
    return t2


def dominated_pair(G: Graph) -> tuple[int, int] | None:
    """First (x, y), y ascending, with x != y and N[x] ⊆ N[y]."""
    for y in iter_bits(G.vertex_mask):
        ny = closed_neighborhood_mask(G, y)
        for x in iter_bits(G.adj[y]):
            if closed_neighborhood_mask(G, x) & ~ny == 0:
                return x, y
    return None


def _vd_graph(G: Graph, memo: bool) -> DecompositionTree | None:
    comps = component_masks(G)
    if not comps:
        return SimplexLeaf()
    if len(comps) > 1:
        tree: DecompositionTree = SimplexLeaf()
        for c in reversed(comps):
            sub = _vd_graph(induced_subgraph(G, c), memo)
            if sub is None:
                return None
            tree = join_trees(sub, tree)
        return tree
    if G.vertex_count == 1:
        return SimplexLeaf()
    pair = dominated_pair(G)
    if pair is not None:
        _, y = pair
        t1 = _vd_graph(delete_vertices(G, 1 << y), memo)
        if t1 is not None:
            t2 = _vd_graph(delete_vertices(G, closed_neighborhood_mask(G, y)), memo)
            if t2 is not None:
                return Shed(y, t1, t2)
    return is_vertex_decomposable(independence_complex(G), memo=memo)


@functools.lru_cache(maxsize=1 << 16)
def _vd_graph_compact(G: Graph) -> DecompositionTree | None:
    return _vd_graph(G, True)


def is_vd_graph(G: Graph, *, memo: bool = True, reductions: bool = True) -> DecompositionTree | None:
    """VD decision for the independence complex of G.

    With ``reductions``: split into connected components (the complex is the
    join of the components' complexes) and try a vertex ``y`` that dominates a
    neighbor's closed neighborhood as a shedding vertex first. A failed fast
    path falls back to the full search on the complex, so the answer is exact.
    """
    if not reductions:
        return is_vertex_decomposable(independence_complex(G), memo=memo)
    if not memo:
        return _vd_graph(G, False)
    H, labels = compact_graph(G)
    tree = _vd_graph_compact(H)
    return None if tree is None else relabel_tree(tree, labels)


# -- shellability --------------------------------------------------------------


def is_shellable(delta: SimplicialComplex) -> ShellingOrder | None:
    """A shelling order of the facets, or None.

    Whether a facet may follow a prefix depends only on the set of facets in
    the prefix, so dead prefix sets are remembered and never re-explored.
    Larger facets are tried first.
    """
    fs = sorted(delta.facets, key=lambda f: (-popcount(f), lex_key(f)))
    s = len(fs)
    if s <= 1:
        return ShellingOrder(tuple(frozenset(iter_bits(f)) for f in fs))
    diff = [[fs[j] & ~fs[i] for i in range(s)] for j in range(s)]
    unit = [[d if d and d & (d - 1) == 0 else 0 for d in row] for row in diff]
    full = (1 << s) - 1
    dead: set[int] = set()
    order: list[int] = []

    def can_add(j: int, placed: int) -> bool:
        attach = 0
        for l in iter_bits(placed):
            attach |= unit[j][l]
        if not attach:
            return False
        return all(diff[j][i] & attach for i in iter_bits(placed))

    def dfs(placed: int) -> bool:
        if placed == full:
            return True
        if placed in dead:
            return False
        for j in range(s):
            if placed >> j & 1:
                continue
            if placed and not can_add(j, placed):
                continue
            order.append(j)
            if dfs(placed | (1 << j)):
                return True
            order.pop()
        dead.add(placed)
        return False

    if not dfs(0):
        return None
    return ShellingOrder(tuple(frozenset(iter_bits(fs[j])) for j in order))


# -- certificate replay ----------------------------------------------------------


def _replay_tree(facets: list[int], tree) -> bool:
    if isinstance(tree, VoidLeaf):
        return not facets
    if isinstance(tree, SimplexLeaf):
        return len(facets) == 1
    if not isinstance(tree, Shed) or not isinstance(tree.vertex, int) or isinstance(tree.vertex, bool):
        raise InputError(f"malformed decomposition tree node {tree!r}")
    x = tree.vertex
    if x < 0 or not any(f >> x & 1 for f in facets):
        return False
    bx = 1 << x
    dele = maximal(f & ~bx for f in facets)
    facet_set = set(facets)
    if any(f not in facet_set for f in dele):
        return False
    lk = maximal(f & ~bx for f in facets if f & bx)
    return _replay_tree(dele, tree.deletion) and _replay_tree(lk, tree.link)


def _replay_shelling(facets: list[int], order: ShellingOrder) -> bool:
    try:
        F = [mask_of(f) for f in order.facets]
    except (TypeError, ValueError) as exc:
        raise InputError(f"malformed shelling order: {exc}") from None
    if len(F) != len(facets) or set(F) != set(facets):
        return False
    for j in range(len(F)):
        for i in range(j):
            ok = False
            for x in iter_bits(F[j] & ~F[i]):
                if any(F[j] & ~F[l] == 1 << x for l in range(j)):
                    ok = True
                    break
            if not ok:
                return False
    return True


def verify_certificate(delta: SimplicialComplex, cert) -> bool:
    """Replay a DecompositionTree or ShellingOrder against ``delta`` using only the definitions."""
    if isinstance(cert, ShellingOrder):
        return _replay_shelling(list(delta.facets), cert)
    if isinstance(cert, (SimplexLeaf, VoidLeaf, Shed)):
        return _replay_tree(list(delta.facets), cert)
    raise InputError(f"not a certificate: {cert!r}")
