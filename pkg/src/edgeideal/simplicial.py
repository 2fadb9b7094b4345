"""Simplicial complexes stored by their facets.

The ground set and the faces are decoupled: a ground vertex need not be a
face (links and skeletons drop vertices). Two degenerate complexes are kept
apart on purpose:

* VOID: no faces at all (empty facet tuple);
* IRRELEVANT: the single face ``{}`` (facet tuple ``(0,)``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from ._bits import compact, iter_bits, lex_key, mask_of, maximal, members, popcount
from .errors import InputError
from .graph import Graph


@dataclass(frozen=True)
class SimplicialComplex:
    ground: int
    facets: tuple[int, ...]

    @classmethod
    def from_facets(cls, ground: Iterable[int], facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        g = mask_of(ground)
        fs = [mask_of(f) for f in facets]
        for f in fs:
            if f & ~g:
                raise InputError(f"facet {members(f)} is not inside the ground set {members(g)}")
        return make_complex(g, fs)

    @classmethod
    def void(cls, ground: Iterable[int] = ()) -> "SimplicialComplex":
        return cls(mask_of(ground), ())

    @classmethod
    def irrelevant(cls, ground: Iterable[int] = ()) -> "SimplicialComplex":
        return cls(mask_of(ground), (0,))

    @classmethod
    def simplex(cls, vertices: Iterable[int]) -> "SimplicialComplex":
        m = mask_of(vertices)
        return cls(m, (m,))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @property
    def support(self) -> int:
        s = 0
        for f in self.facets:
            s |= f
        return s

    def facet_sets(self) -> list[frozenset[int]]:
        return [frozenset(iter_bits(f)) for f in self.facets]

    def ground_set(self) -> frozenset[int]:
        return frozenset(iter_bits(self.ground))

    def contains(self, face: Iterable[int] | int) -> bool:
        m = face if isinstance(face, int) else mask_of(face)
        return any(m & f == m for f in self.facets)

    def check(self) -> None:
        for f in self.facets:
            assert f & ~self.ground == 0, "facet outside ground set"
        for a, b in itertools.permutations(self.facets, 2):
            assert a & b != a, "facets do not form an antichain"
        assert list(self.facets) == sorted(self.facets, key=lex_key), "facets not in canonical order"

    def __repr__(self) -> str:
        return f"SimplicialComplex(ground={members(self.ground)}, facets={[members(f) for f in self.facets]})"


def make_complex(ground: int, masks: Iterable[int]) -> SimplicialComplex:
    """Complex generated by ``masks`` (non-maximal ones are dropped)."""
    return SimplicialComplex(ground, tuple(sorted(maximal(masks), key=lex_key)))


def _as_mask(F: Iterable[int] | int) -> int:
    return F if isinstance(F, int) else mask_of(F)


def maximal_independent_sets(G: Graph) -> list[int]:
    """Maximal independent sets of G as masks (Bron-Kerbosch with pivoting on the complement)."""
    vm = G.vertex_mask
    compat = {v: vm & ~G.adj[v] & ~(1 << v) for v in iter_bits(vm)}
    out: list[int] = []

    def bk(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        pivot = max(iter_bits(P | X), key=lambda u: popcount(P & compat[u]))
        for v in iter_bits(P & ~compat[pivot]):
            bit = 1 << v
            bk(R | bit, P & compat[v], X & compat[v])
            P &= ~bit
            X |= bit

    bk(0, vm, 0)
    return out


def independence_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex(G.vertex_mask, tuple(sorted(maximal_independent_sets(G), key=lex_key)))


def link(delta: SimplicialComplex, F: Iterable[int] | int) -> SimplicialComplex:
    m = _as_mask(F)
    if not delta.contains(m):
        raise InputError(f"{members(m)} is not a face of the complex")
    return make_complex(delta.ground & ~m, [f & ~m for f in delta.facets if f & m == m])


def deletion(delta: SimplicialComplex, F: Iterable[int] | int) -> SimplicialComplex:
    m = _as_mask(F)
    return make_complex(delta.ground & ~m, [f & ~m for f in delta.facets])


def restriction(delta: SimplicialComplex, W: Iterable[int] | int) -> SimplicialComplex:
    m = _as_mask(W)
    if m & ~delta.ground:
        raise InputError(f"{members(m & ~delta.ground)} lie outside the ground set")
    return make_complex(m, [f & m for f in delta.facets])


def dimension(delta: SimplicialComplex) -> int | float:
    """Largest facet size minus one; ``-inf`` for VOID."""
    if delta.is_void:
        return -math.inf
    return max(popcount(f) for f in delta.facets) - 1


def is_pure(delta: SimplicialComplex) -> bool:
    return len({popcount(f) for f in delta.facets}) <= 1


def pure_skeleton(delta: SimplicialComplex, d: int) -> SimplicialComplex:
    """Complex generated by all d-dimensional faces."""
    if delta.is_void or not -1 <= d <= dimension(delta):
        raise InputError(f"skeleton dimension {d} outside [-1, {dimension(delta)}]")
    size = d + 1
    faces = set()
    for f in delta.facets:
        if popcount(f) >= size:
            for combo in itertools.combinations(members(f), size):
                faces.add(mask_of(combo))
    return SimplicialComplex(delta.ground, tuple(sorted(faces, key=lex_key)))


def iter_faces(delta: SimplicialComplex) -> Iterator[int]:
    """Every face exactly once (as a mask), including the empty face."""
    seen: set[int] = set()
    for f in delta.facets:
        sub = f
        while True:
            if sub not in seen:
                seen.add(sub)
                yield sub
            if sub == 0:
                break
            sub = (sub - 1) & f


def faces_by_dimension(delta: SimplicialComplex) -> list[list[int]]:
    """Faces grouped by size (index 0 = empty face), each group lexicographically sorted."""
    if delta.is_void:
        return []
    top = max(popcount(f) for f in delta.facets)
    groups: list[list[int]] = [[] for _ in range(top + 1)]
    for face in iter_faces(delta):
        groups[popcount(face)].append(face)
    for g in groups:
        g.sort(key=lex_key)
    return groups


def f_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    """Face counts for dimensions -1, 0, 1, ...; ``()`` for VOID."""
    return tuple(len(g) for g in faces_by_dimension(delta))


def compact_key(delta: SimplicialComplex) -> tuple[tuple[int, ...], list[int]]:
    """Facets relabeled onto 0..k-1 over the support, with the relabeling positions.

    Complexes that differ only by an order-preserving renaming of their
    vertices (or by unused ground vertices) share a key.
    """
    support = delta.support
    facets = compact(delta.facets, support)
    return tuple(sorted(facets)), members(support)
