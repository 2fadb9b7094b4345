"""Reduced simplicial homology over exact fields, Hochster Betti tables, and the
Reisner / Duval Cohen-Macaulay tests.

All arithmetic is exact: rational ranks use integer fraction-free elimination,
prime fields use modular elimination (bit-rows for GF(2)).
"""

from __future__ import annotations

import functools
from collections import defaultdict
from dataclasses import dataclass, field

from ._bits import compact, iter_bits, lex_key, members, popcount, submasks
from .errors import InputError
from .ideals import SquareFreeMonomialIdeal, stanley_reisner_facet_masks
from .simplicial import (
    SimplicialComplex,
    faces_by_dimension,
    independence_complex,
    is_pure,
    make_complex,
    pure_skeleton,
)
from .graph import Graph


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``FieldSpec("q")`` for the rationals, ``FieldSpec("p", 2)`` for GF(2)."""

    kind: str = "q"
    p: int = 0

    def __post_init__(self):
        if self.kind == "q":
            if self.p:
                raise InputError("the rational field takes no modulus")
        elif self.kind == "p":
            if not _is_prime(self.p):
                raise InputError(f"{self.p} is not prime")
        else:
            raise InputError(f"unknown field kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """``q`` or ``p:<prime>``."""
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls("q")
        if text.startswith("p:"):
            try:
                return cls("p", int(text[2:]))
            except ValueError:
                raise InputError(f"bad prime in field spec {text!r}") from None
        raise InputError(f"field must be 'q' or 'p:<prime>', got {text!r}")

    def __str__(self) -> str:
        return "q" if self.kind == "q" else f"p:{self.p}"


RATIONALS = FieldSpec("q")
GF2 = FieldSpec("p", 2)


# -- ranks ---------------------------------------------------------------


def _rank_rational(rows: list[dict[int, int]]) -> int:
    # Integer row operations r <- a*r - b*pivot keep the row space over Q;
    # content is divided out so entries stay small.
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        best = min(range(len(rows)), key=lambda i: min(abs(v) for v in rows[i].values()))
        pivot = rows.pop(best)
        col, a = min(pivot.items(), key=lambda kv: (abs(kv[1]), kv[0]))
        rank += 1
        nxt = []
        for r in rows:
            b = r.get(col)
            if b:
                if a in (1, -1):
                    f = b * a
                    new = dict(r)
                    for c, v in pivot.items():
                        w = new.get(c, 0) - f * v
                        if w:
                            new[c] = w
                        else:
                            new.pop(c, None)
                else:
                    new = {c: a * v for c, v in r.items()}
                    for c, v in pivot.items():
                        w = new.get(c, 0) - b * v
                        if w:
                            new[c] = w
                        else:
                            new.pop(c, None)
                    if new:
                        g = 0
                        for v in new.values():
                            g = _gcd(g, v)
                        if g > 1:
                            new = {c: v // g for c, v in new.items()}
                if new:
                    nxt.append(new)
            else:
                nxt.append(r)
        rows = nxt
    return rank


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _rank_mod(rows: list[dict[int, int]], p: int) -> int:
    rows = [{c: v % p for c, v in r.items() if v % p} for r in rows]
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        pivot = rows.pop()
        col = min(pivot)
        inv = pow(pivot[col], -1, p)
        pivot = {c: v * inv % p for c, v in pivot.items()}
        rank += 1
        nxt = []
        for r in rows:
            b = r.get(col)
            if b:
                new = dict(r)
                for c, v in pivot.items():
                    w = (new.get(c, 0) - b * v) % p
                    if w:
                        new[c] = w
                    else:
                        new.pop(c, None)
                if new:
                    nxt.append(new)
            else:
                nxt.append(r)
        rows = nxt
    return rank


def _rank_gf2(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                break
    return len(basis)


def matrix_rank(rows: list[list[int]], k: FieldSpec = RATIONALS) -> int:
    """Exact rank of an integer matrix over ``k``."""
    sparse = [{c: v for c, v in enumerate(r) if v} for r in rows]
    if k.kind == "q":
        return _rank_rational(sparse)
    return _rank_mod(sparse, k.p)


# -- reduced homology ------------------------------------------------------


@dataclass(frozen=True)
class HomologyProfile:
    """Dimensions of reduced homology; ``dims[0]`` is degree -1."""

    dims: tuple[int, ...]

    def dim(self, d: int) -> int:
        i = d + 1
        return self.dims[i] if 0 <= i < len(self.dims) else 0

    @property
    def is_acyclic(self) -> bool:
        return not any(self.dims)


def boundary_ranks(groups: list[list[int]], k: FieldSpec) -> list[int]:
    """``ranks[s]`` = rank of the boundary from faces of size s to size s-1 (``ranks[0] = 0``)."""
    ranks = [0]
    for s in range(1, len(groups)):
        index = {f: i for i, f in enumerate(groups[s - 1])}
        if k.kind == "p" and k.p == 2:
            rows2 = []
            for face in groups[s]:
                r = 0
                for v in iter_bits(face):
                    r |= 1 << index[face & ~(1 << v)]
                rows2.append(r)
            ranks.append(_rank_gf2(rows2))
            continue
        rows = []
        for face in groups[s]:
            row = {}
            for pos, v in enumerate(iter_bits(face)):
                row[index[face & ~(1 << v)]] = -1 if pos & 1 else 1
            rows.append(row)
        ranks.append(_rank_rational(rows) if k.kind == "q" else _rank_mod(rows, k.p))
    return ranks


def _homology_from_facets(facets: tuple[int, ...], k: FieldSpec) -> tuple[int, ...]:
    if not facets:
        return ()
    groups = faces_by_dimension(SimplicialComplex(0, facets))
    ranks = boundary_ranks(groups, k) + [0]
    return tuple(len(groups[s]) - ranks[s] - ranks[s + 1] for s in range(len(groups)))


@functools.lru_cache(maxsize=1 << 18)
def _homology_cached(key: tuple[int, ...], k: FieldSpec) -> tuple[int, ...]:
    return _homology_from_facets(key, k)


def reduced_homology(delta: SimplicialComplex, k: FieldSpec = RATIONALS, *, memo: bool = True) -> HomologyProfile:
    """dim H~_d(delta; k) for d = -1 .. dim delta, with the empty face in the chain complex."""
    if delta.is_void:
        return HomologyProfile(())
    if not memo:
        return HomologyProfile(_homology_from_facets(delta.facets, k))
    key = tuple(sorted(compact(delta.facets, delta.support)))
    return HomologyProfile(_homology_cached(key, k))


def reduced_euler_characteristic(delta: SimplicialComplex) -> int:
    """Sum over d >= -1 of (-1)^d f_d."""
    return sum((-1) ** (s - 1) * len(g) for s, g in enumerate(faces_by_dimension(delta)))


# -- Betti tables ------------------------------------------------------------


@dataclass
class BettiTable:
    """Graded Betti numbers of R/I: ``entries[(i, j)]`` = beta_{i,j}, nonzero entries only."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    subject: str = "R/I"

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)


def _compact_graph_key(adj: tuple[int, ...], W: int) -> tuple[int, ...]:
    positions = members(W)
    return tuple(compact([adj[v] & W for v in positions], W))


@functools.lru_cache(maxsize=1 << 18)
def _independence_homology(key: tuple[int, ...], k: FieldSpec) -> tuple[int, ...]:
    n = len(key)
    G = Graph((1 << n) - 1, key)
    return reduced_homology(independence_complex(G), k).dims


def _add_contribution(table: dict, j: int, dims: tuple[int, ...]) -> None:
    for idx, h in enumerate(dims):
        if h:
            # H~_{d} with d = idx - 1 contributes to beta_{j-d-1, j}
            table[(j - idx, j)] += h


def hochster_betti(I: SquareFreeMonomialIdeal, k: FieldSpec = RATIONALS, subject: str | None = None) -> BettiTable:
    """Graded Betti numbers of R/I from Hochster's formula.

    beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(Delta_W), Delta the
    Stanley-Reisner complex of I. Restrictions that are cones are skipped
    (they are acyclic). Quadratic ideals take a faster path through induced
    subgraphs.
    """
    if I.unit:
        raise InputError("the unit ideal has no Stanley-Reisner complex")
    table: dict[tuple[int, int], int] = defaultdict(int)
    ground = I.ground
    if all(popcount(g) == 2 for g in I.generators):
        adj = [0] * max(ground.bit_length(), 1)
        for g in I.generators:
            u, v = iter_bits(g)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        adj_t = tuple(adj)
        for W in submasks(ground):
            if any(adj_t[v] & W == 0 for v in iter_bits(W)):
                continue
            dims = _independence_homology(_compact_graph_key(adj_t, W), k)
            _add_contribution(table, popcount(W), dims)
    else:
        gens = I.generators
        for W in submasks(ground):
            inside = [g for g in gens if g & W == g]
            facets = stanley_reisner_facet_masks(W, inside)
            common = W
            for f in facets:
                common &= f
            if common:
                continue
            support = 0
            for f in facets:
                support |= f
            key = tuple(sorted(compact(facets, support)))
            _add_contribution(table, popcount(W), _homology_cached(key, k))
    return BettiTable(dict(sorted(table.items())), subject or "R/I")


def regularity(B: BettiTable) -> int:
    if not B.entries:
        raise InputError("empty Betti table")
    return max(j - i for (i, j) in B.entries)


def projective_dimension(B: BettiTable) -> int:
    if not B.entries:
        raise InputError("empty Betti table")
    return max(i for (i, _) in B.entries)


def ideal_projective_dimension(I: SquareFreeMonomialIdeal, k: FieldSpec = RATIONALS) -> int:
    """pd of the ideal as a module: pd(R/I) - 1, and 0 for the unit ideal (free)."""
    if I.unit:
        return 0
    if I.is_zero:
        raise InputError("the zero ideal has no projective dimension")
    return projective_dimension(hochster_betti(I, k)) - 1


# -- Cohen-Macaulay tests ----------------------------------------------------


def _link_facets(facets: tuple[int, ...], F: int) -> tuple[int, ...]:
    lk = make_complex(0, [f & ~F for f in facets if f & F == F]).facets
    return lk


@functools.lru_cache(maxsize=1 << 16)
def _reisner(key: tuple[int, ...], k: FieldSpec) -> bool:
    if len({popcount(f) for f in key}) > 1:
        return False
    delta = SimplicialComplex(0, key)
    for group in faces_by_dimension(delta):
        for F in group:
            lk = _link_facets(key, F)
            top = max(popcount(f) for f in lk) - 1
            dims = _homology_cached(tuple(sorted(compact(lk, _or(lk)))), k)
            # H~_i must vanish for i < top, i.e. dims[0 .. top]
            if any(dims[: top + 1]):
                return False
    return True


def _or(masks) -> int:
    s = 0
    for m in masks:
        s |= m
    return s


def is_cohen_macaulay(delta: SimplicialComplex, k: FieldSpec = RATIONALS) -> bool:
    """Reisner's criterion: every link has vanishing reduced homology below its dimension."""
    if delta.is_void:
        raise InputError("the void complex is not a Stanley-Reisner complex")
    if not is_pure(delta):
        return False
    return _reisner(tuple(sorted(compact(delta.facets, delta.support))), k)


def is_sequentially_cm(delta: SimplicialComplex, k: FieldSpec = RATIONALS) -> bool:
    """Duval's criterion: every pure d-skeleton, d = -1 .. dim, is Cohen-Macaulay."""
    if delta.is_void:
        raise InputError("the void complex is not a Stanley-Reisner complex")
    top = max(popcount(f) for f in delta.facets) - 1
    return all(is_cohen_macaulay(pure_skeleton(delta, d), k) for d in range(-1, top + 1))
