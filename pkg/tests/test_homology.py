import itertools
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.matrices import DomainMatrix

from edgeideal import InputError
from edgeideal.graph import Graph, cycle_graph, generate, path_graph, trees_by_prufer
from edgeideal.homology import (
    GF2,
    RATIONALS,
    BettiTable,
    FieldSpec,
    boundary_ranks,
    hochster_betti,
    ideal_projective_dimension,
    is_cohen_macaulay,
    is_sequentially_cm,
    matrix_rank,
    projective_dimension,
    reduced_euler_characteristic,
    reduced_homology,
    regularity,
)
from edgeideal.ideals import SquareFreeMonomialIdeal, cover_ideal, edge_ideal, stanley_reisner_complex
from edgeideal.simplicial import SimplicialComplex, faces_by_dimension, f_vector, independence_complex, make_complex

from conftest import labeled_graph, seeded_graphs

# six-vertex real projective plane: torsion in H_1 over the integers
RP2 = make_complex(63, [sum(1 << v for v in f) for f in [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
]])

GF3 = FieldSpec("p", 3)


# -- oracle: faces by brute force, ranks by sympy --------------------------------


def _oracle_faces(delta):
    faces = set()
    for f in delta.facet_sets():
        for r in range(len(f) + 1):
            faces.update(frozenset(c) for c in itertools.combinations(sorted(f), r))
    return faces


def _sympy_rank(rows, ncols, k):
    if not rows or not ncols:
        return 0
    M = DomainMatrix([[sympy.ZZ(v) for v in r] for r in rows], (len(rows), ncols), sympy.ZZ)
    if k.kind == "q":
        return M.convert_to(sympy.QQ).rank()
    return M.convert_to(sympy.GF(k.p)).rank()


def oracle_homology(delta, k=RATIONALS):
    if delta.is_void:
        return ()
    faces = _oracle_faces(delta)
    top = max(len(f) for f in faces)
    by_size = [sorted((sorted(f) for f in faces if len(f) == s)) for s in range(top + 1)]
    ranks = [0]
    for s in range(1, top + 1):
        index = {tuple(f): i for i, f in enumerate(by_size[s - 1])}
        rows = []
        for f in by_size[s]:
            row = [0] * len(by_size[s - 1])
            for pos in range(len(f)):
                row[index[tuple(f[:pos] + f[pos + 1:])]] = (-1) ** pos
            rows.append(row)
        ranks.append(_sympy_rank(rows, len(by_size[s - 1]), k))
    ranks.append(0)
    return tuple(len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1))


def oracle_betti(I, k=RATIONALS):
    """Hochster's sum over every W, homology from the sympy oracle."""
    n = I.ground.bit_length()
    delta = stanley_reisner_complex(I)
    faces = _oracle_faces(delta)
    table = {}
    for j in range(n + 1):
        for W in itertools.combinations(range(n), j):
            sub = [f for f in faces if f <= set(W)]
            res = make_complex(sum(1 << w for w in W), [sum(1 << v for v in f) for f in sub])
            for idx, h in enumerate(oracle_homology(res, k)):
                if h:
                    table[(j - idx, j)] = table.get((j - idx, j), 0) + h
    return table


@st.composite
def complexes(draw, max_n=7, max_facets=7):
    n = draw(st.integers(0, max_n))
    masks = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_facets))
    return make_complex((1 << n) - 1, masks)


# -- reduced homology -----------------------------------------------------------


def test_homology_examples():
    hollow = SimplicialComplex.from_facets({0, 1, 2}, [{0, 1}, {1, 2}, {0, 2}])
    assert reduced_homology(hollow).dims == (0, 0, 1)
    points = SimplicialComplex.from_facets({0, 1}, [{0}, {1}])
    assert reduced_homology(points).dims == (0, 1)
    assert reduced_homology(SimplicialComplex.simplex({0, 1, 2})).is_acyclic


def test_degenerate_complexes():
    assert reduced_homology(SimplicialComplex.irrelevant()).dims == (1,)
    assert reduced_homology(SimplicialComplex.void()).dims == ()
    assert reduced_homology(SimplicialComplex.void()).dim(0) == 0


def test_projective_plane_depends_on_characteristic():
    assert reduced_homology(RP2).is_acyclic
    assert reduced_homology(RP2, GF3).is_acyclic
    assert reduced_homology(RP2, GF2).dims == (0, 0, 1, 1)
    assert oracle_homology(RP2, GF2) == (0, 0, 1, 1)
    assert is_cohen_macaulay(RP2, RATIONALS)
    assert not is_cohen_macaulay(RP2, GF2)


@given(complexes(), st.sampled_from([RATIONALS, GF2, GF3]))
@settings(max_examples=150, deadline=None)
def test_homology_matches_sympy_oracle(delta, k):
    assert reduced_homology(delta, k).dims == oracle_homology(delta, k)
    assert reduced_homology(delta, k, memo=False).dims == oracle_homology(delta, k)


@given(complexes(max_n=8, max_facets=10))
@settings(max_examples=300, deadline=None)
def test_euler_characteristic_and_rank_nullity(delta):
    h = reduced_homology(delta)
    assert sum((-1) ** (d - 1) * x for d, x in enumerate(h.dims)) == reduced_euler_characteristic(delta)
    groups = faces_by_dimension(delta)
    ranks = boundary_ranks(groups, RATIONALS) + [0]
    for s, g in enumerate(groups):
        assert ranks[s] + ranks[s + 1] <= len(g)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), max_size=6),
       st.sampled_from([RATIONALS, GF2, GF3, FieldSpec("p", 5)]))
@settings(max_examples=200, deadline=None)
def test_matrix_rank_matches_sympy(rows, k):
    assert matrix_rank(rows, k) == _sympy_rank(rows, 5, k)


def test_field_spec_parsing():
    assert FieldSpec.parse("q") == RATIONALS
    assert FieldSpec.parse("p:2") == GF2
    for bad in ("p:4", "p:x", "r", "p:1"):
        with pytest.raises(InputError):
            FieldSpec.parse(bad)


# -- Betti tables -----------------------------------------------------------------


def test_betti_examples(K2, P3, C8):
    B = hochster_betti(edge_ideal(K2))
    assert B.entries == {(0, 0): 1, (1, 2): 1}
    assert regularity(B) == 1 and projective_dimension(B) == 1
    B = hochster_betti(edge_ideal(P3))
    assert B.entries == {(0, 0): 1, (1, 2): 2, (2, 3): 1}
    assert regularity(B) == 1 and projective_dimension(B) == 2
    assert regularity(hochster_betti(edge_ideal(C8))) == 3


def test_p3_betti_by_hand():
    # Delta(P3) has facets {0,2}, {1}. Nonzero reduced homology of restrictions:
    #   W = {}        -> H~_-1 = 1          beta_{0,0}
    #   W = {0,1}     -> two points, H~_0   beta_{1,2}
    #   W = {1,2}     -> two points, H~_0   beta_{1,2}
    #   W = {0,1,2}   -> point + edge, H~_0 beta_{2,3}
    # {0,2} is an edge of the complex, every singleton is a point: acyclic.
    P3 = path_graph(3)
    assert oracle_betti(edge_ideal(P3)) == {(0, 0): 1, (1, 2): 2, (2, 3): 1}


def test_c8_betti_table(C8):
    B = hochster_betti(edge_ideal(C8))
    assert B.entries == {(0, 0): 1, (1, 2): 8, (2, 3): 8, (2, 4): 12, (3, 5): 24, (4, 6): 12, (5, 8): 1}


def test_cover_ideal_of_k2(K2):
    B = hochster_betti(cover_ideal(K2))
    assert projective_dimension(B) == 2
    assert ideal_projective_dimension(cover_ideal(K2)) == 1


def test_betti_rejects_unit_ideal_and_empty_tables():
    with pytest.raises(InputError):
        hochster_betti(SquareFreeMonomialIdeal.unit_ideal({0, 1}))
    with pytest.raises(InputError):
        regularity(BettiTable({}))
    with pytest.raises(InputError):
        projective_dimension(BettiTable({}))
    assert ideal_projective_dimension(SquareFreeMonomialIdeal.unit_ideal({0})) == 0


def test_betti_matches_hochster_oracle_on_small_graphs():
    for G in seeded_graphs(40, 6, seed=11):
        assert hochster_betti(edge_ideal(G)).entries == oracle_betti(edge_ideal(G))


def test_betti_matches_oracle_on_non_quadratic_ideals():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 6)
        gens = [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 5))]
        I = SquareFreeMonomialIdeal.from_generators((1 << n) - 1, gens)
        assert hochster_betti(I).entries == oracle_betti(I)
        assert hochster_betti(I, GF2).entries == oracle_betti(I, GF2)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _k_polynomial_from_faces(delta, n):
    # Hilbert series numerator: sum over faces F of t^|F| (1-t)^(n-|F|)
    total = [0] * (n + 1)
    for size, count in enumerate(f_vector(delta)):
        term = [0] * size + [1]
        for _ in range(n - size):
            term = _poly_mul(term, [1, -1])
        for d, c in enumerate(term):
            total[d] += count * c
    return total


def test_betti_tables_satisfy_the_k_polynomial_identity():
    # sum (-1)^i beta_{i,j} t^j equals the face-count numerator; needs no homology
    for n in range(7):
        for bits in range(0, 1 << (n * (n - 1) // 2), 3):
            G = labeled_graph(n, bits)
            B = hochster_betti(edge_ideal(G))
            lhs = [0] * (n + 1)
            for (i, j), m in B.entries.items():
                lhs[j] += (-1) ** i * m
            assert lhs == _k_polynomial_from_faces(independence_complex(G), n)


def test_betti_tables_are_well_formed():
    for G in seeded_graphs(200, 8, seed=3):
        B = hochster_betti(edge_ideal(G))
        assert B[(0, 0)] == 1
        assert all(m >= 1 and i <= j for (i, j), m in B.entries.items())
        assert all(i + 1 <= j <= 2 * i for (i, j), m in B.entries.items() if i)


def test_field_choice_on_bipartite_graphs():
    # characteristic-dependence is an experiment; see the acceptance report
    for G in generate("all_bipartite", 2, 3):
        assert hochster_betti(edge_ideal(G), GF2).entries == hochster_betti(edge_ideal(G)).entries


# -- Cohen-Macaulay ---------------------------------------------------------------


def test_cohen_macaulay_examples(K2, C4):
    assert is_cohen_macaulay(independence_complex(K2))
    assert not is_cohen_macaulay(independence_complex(C4))
    assert is_cohen_macaulay(SimplicialComplex.simplex({0, 1, 2}))
    assert is_cohen_macaulay(SimplicialComplex.irrelevant())
    with pytest.raises(InputError):
        is_cohen_macaulay(SimplicialComplex.void())


def test_sequentially_cm_examples(C4, C8):
    for T, _ in trees_by_prufer(7):
        assert is_sequentially_cm(independence_complex(T))
    assert not is_sequentially_cm(independence_complex(C4))
    assert not is_sequentially_cm(independence_complex(C8))
    with pytest.raises(InputError):
        is_sequentially_cm(SimplicialComplex.void())


def _oracle_cm(delta, k=RATIONALS):
    # Reisner verbatim: every face, every link, homology below the link dimension
    for F in _oracle_faces(delta):
        lk = make_complex(delta.ground, [sum(1 << v for v in f - F) for f in delta.facet_sets() if F <= f])
        h = oracle_homology(lk, k)
        if any(h[:-1]):
            return False
    return True


@given(complexes(max_n=6, max_facets=6))
@settings(max_examples=150, deadline=None)
def test_cohen_macaulay_matches_reisner_oracle(delta):
    if delta.is_void:
        return
    assert is_cohen_macaulay(delta) == _oracle_cm(delta)


def test_cycles():
    # C3 and C5 are CM, C4 and longer even cycles are not
    assert is_cohen_macaulay(independence_complex(cycle_graph(3)))
    assert is_cohen_macaulay(independence_complex(cycle_graph(5)))
    assert not is_sequentially_cm(independence_complex(cycle_graph(6)))
    assert is_sequentially_cm(independence_complex(Graph.from_edges(3, [(0, 1)])))
