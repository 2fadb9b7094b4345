"""Square-free monomial ideals: edge ideals, cover ideals, Alexander duality.

A square-free monomial is identified with its support (a vertex mask). Every
ideal carries its ambient ground set, so ideals of subgraphs can be compared
inside the ring of the whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._bits import iter_bits, lex_key, mask_of, members, minimal, popcount
from .errors import InputError
from .graph import Graph, closed_neighborhood_delete, delete_vertices, neighbors
from .simplicial import SimplicialComplex, maximal_independent_sets


@dataclass(frozen=True)
class SquareFreeMonomialIdeal:
    ground: int
    generators: tuple[int, ...]
    unit: bool = False

    @classmethod
    def from_generators(cls, ground: Iterable[int] | int, gens: Iterable[Iterable[int] | int]) -> "SquareFreeMonomialIdeal":
        g = ground if isinstance(ground, int) else mask_of(ground)
        masks = [m if isinstance(m, int) else mask_of(m) for m in gens]
        for m in masks:
            if m & ~g:
                raise InputError(f"generator {members(m)} uses variables outside the ground set")
        return make_ideal(g, masks)

    @classmethod
    def unit_ideal(cls, ground: Iterable[int] | int = 0) -> "SquareFreeMonomialIdeal":
        g = ground if isinstance(ground, int) else mask_of(ground)
        return cls(g, (), True)

    @property
    def is_zero(self) -> bool:
        return not self.unit and not self.generators

    def generator_sets(self) -> list[frozenset[int]]:
        return [frozenset(iter_bits(m)) for m in self.generators]

    def contains(self, monomial: Iterable[int] | int) -> bool:
        m = monomial if isinstance(monomial, int) else mask_of(monomial)
        return self.unit or any(g & m == g for g in self.generators)

    def __repr__(self) -> str:
        if self.unit:
            return f"SquareFreeMonomialIdeal(unit, ground={members(self.ground)})"
        return f"SquareFreeMonomialIdeal(ground={members(self.ground)}, generators={[members(g) for g in self.generators]})"


def make_ideal(ground: int, masks: Iterable[int]) -> SquareFreeMonomialIdeal:
    """Ideal generated by the given monomials, reduced to minimal generators."""
    gens = minimal(masks)
    if 0 in gens:
        return SquareFreeMonomialIdeal(ground, (), True)
    return SquareFreeMonomialIdeal(ground, tuple(sorted(gens, key=lex_key)))


def minimal_transversals(sets: Iterable[int]) -> list[int]:
    """Minimal hitting sets of a family (Berge's incremental algorithm).

    The empty family has the single transversal ``0``; a family containing the
    empty set has none.
    """
    trans = [0]
    for s in minimal(sets):
        nxt = []
        for t in trans:
            if t & s:
                nxt.append(t)
            else:
                nxt.extend(t | (1 << v) for v in iter_bits(s))
        trans = minimal(nxt)
    return trans


def edge_ideal(G: Graph) -> SquareFreeMonomialIdeal:
    return SquareFreeMonomialIdeal(G.vertex_mask, tuple(sorted(((1 << u) | (1 << v) for u, v in G.edges), key=lex_key)))


def minimal_vertex_cover_masks(G: Graph) -> list[int]:
    vm = G.vertex_mask
    return sorted((vm & ~f for f in maximal_independent_sets(G)), key=lex_key)


def minimal_vertex_covers(G: Graph) -> frozenset[frozenset[int]]:
    """All inclusion-minimal vertex covers: complements of the maximal independent sets."""
    return frozenset(frozenset(iter_bits(c)) for c in minimal_vertex_cover_masks(G))


def cover_ideal(G: Graph) -> SquareFreeMonomialIdeal:
    return make_ideal(G.vertex_mask, minimal_vertex_cover_masks(G))


def alexander_dual(I: SquareFreeMonomialIdeal) -> SquareFreeMonomialIdeal:
    if I.unit or I.is_zero:
        raise InputError("Alexander duality needs a proper nonzero ideal")
    return make_ideal(I.ground, minimal_transversals(I.generators))


def stanley_reisner_facet_masks(ground: int, generators: Iterable[int]) -> list[int]:
    """Facets of the complex whose faces inside ``ground`` contain no generator."""
    return [ground & ~t for t in minimal_transversals(generators)]


def stanley_reisner_complex(I: SquareFreeMonomialIdeal) -> SimplicialComplex:
    if I.unit:
        raise InputError("the unit ideal has no Stanley-Reisner complex")
    return SimplicialComplex(I.ground, tuple(sorted(stanley_reisner_facet_masks(I.ground, I.generators), key=lex_key)))


def is_unmixed(G: Graph) -> bool:
    return len({popcount(c) for c in minimal_vertex_cover_masks(G)}) <= 1


# -- operations used by the cover-ideal splitting -------------------------


def scale(m: int, I: SquareFreeMonomialIdeal) -> SquareFreeMonomialIdeal:
    """``m * I``; ``m`` must be support-disjoint from every generator."""
    if I.unit:
        return make_ideal(I.ground, [m])
    for g in I.generators:
        if g & m:
            raise InputError("monomial shares variables with a generator")
    return make_ideal(I.ground, [g | m for g in I.generators])


def ideal_sum(I: SquareFreeMonomialIdeal, J: SquareFreeMonomialIdeal) -> SquareFreeMonomialIdeal:
    ground = I.ground | J.ground
    if I.unit or J.unit:
        return SquareFreeMonomialIdeal(ground, (), True)
    return make_ideal(ground, I.generators + J.generators)


def ideal_intersection(I: SquareFreeMonomialIdeal, J: SquareFreeMonomialIdeal) -> SquareFreeMonomialIdeal:
    """Intersection of square-free monomial ideals: generated by pairwise lcms (unions)."""
    ground = I.ground | J.ground
    if I.unit:
        return make_ideal(ground, J.generators) if not J.unit else J
    if J.unit:
        return make_ideal(ground, I.generators)
    return make_ideal(ground, [a | b for a in I.generators for b in J.generators])


def embed(I: SquareFreeMonomialIdeal, ground: int) -> SquareFreeMonomialIdeal:
    """The same generators viewed in a larger polynomial ring."""
    if I.ground & ~ground:
        raise InputError("target ground set must contain the ideal's ground set")
    return SquareFreeMonomialIdeal(ground, I.generators, I.unit)


@dataclass(frozen=True)
class CoverSplitting:
    x: int
    y: int
    G_prime: Graph
    G_dblprime: Graph
    claim1_holds: bool
    claim2_holds: bool
    lhs: SquareFreeMonomialIdeal
    rhs: SquareFreeMonomialIdeal


def cover_ideal_splitting(G: Graph, x: int) -> CoverSplitting:
    """Split the cover ideal of G along a degree-one vertex ``x`` with neighbor ``y``.

    With N(y) = {x, x_2, ..., x_t}, G' = G - N[y] and G'' = G - N[x]:

    * claim 1: J(G) = (x x_2 ... x_t) J(G') + y J(G'')
    * claim 2: (x x_2 ... x_t) J(G') ∩ y J(G'') = (y x x_2 ... x_t) J(G')

    where J denotes the cover ideal embedded in the ring of G.
    """
    nx_ = neighbors(G, x)
    if len(nx_) != 1:
        raise InputError(f"vertex {x} has degree {len(nx_)}, expected 1")
    (y,) = nx_
    ny = G.adj[y]
    g_prime = closed_neighborhood_delete(G, y)
    g_dbl = delete_vertices(G, (1 << x) | (1 << y))
    ambient = G.vertex_mask
    jp = embed(cover_ideal(g_prime), ambient)
    jpp = embed(cover_ideal(g_dbl), ambient)
    left = scale(ny, jp)
    right = scale(1 << y, jpp)
    lhs = cover_ideal(G)
    rhs = ideal_sum(left, right)
    claim1 = lhs == rhs
    inter = ideal_intersection(left, right)
    claim2 = inter == scale(ny | (1 << y), jp)
    return CoverSplitting(x, y, g_prime, g_dbl, claim1, claim2, lhs, rhs)
