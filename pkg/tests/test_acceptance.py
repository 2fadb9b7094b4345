"""End-to-end acceptance checks, one test per criterion.

Each test appends a PASS/FAIL line that is printed in the terminal summary.
Run alone with ``pytest tests/test_acceptance.py -v``; the parts <= 4 stretch
run needs ``-m stretch``.
"""

import random
import time

import pytest

from edgeideal.decomposition import Shed, ShellingOrder, SimplexLeaf, VoidLeaf, verify_certificate
from edgeideal.graph import Graph, cycle_graph, degree_one_vertex, generate, nonisomorphic_graphs
from edgeideal.harness import Analyzer, bipartite_family, verify_structure, verify_thm1, verify_thm2, verify_trees
from edgeideal.homology import GF2, reduced_euler_characteristic, reduced_homology
from edgeideal.simplicial import SimplicialComplex, independence_complex, make_complex

from conftest import ACCEPTANCE

STRUCTURE_SEED = 20240611


def record(number, ok, detail):
    ACCEPTANCE.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def analyzer():
    return Analyzer()


@pytest.fixture(scope="module")
def thm1(analyzer):
    t0 = time.perf_counter()
    rep = verify_thm1(3, recheck=True, analyzer=analyzer)
    return rep, time.perf_counter() - t0


@pytest.fixture(scope="module")
def structure(analyzer):
    return verify_structure(8, 1000, STRUCTURE_SEED, analyzer=analyzer)


def failures(rep, name):
    return [r.graph_id for r in rep.records if not r.checks.get(name, True)]


def test_criterion_01_scm_shellable_vd_agree(thm1):
    rep, elapsed = thm1
    bad = failures(rep, "scm_shellable_vd_agree")
    ok = not bad and rep.counts["graphs"] == 610 and elapsed < 120
    record(1, ok, f"{rep.counts['graphs']} bipartite graphs (parts <= 3), "
                  f"{rep.counts['scm']} SCM, {len(bad)} disagreements, {elapsed:.1f}s")


def test_criterion_02_reg_equals_a_on_scm_bipartite(analyzer, thm1):
    rep = verify_thm2(3, analyzer=analyzer)
    bad = failures(rep, "reg_equals_a")
    ok = not bad and rep.counts["scm"] == thm1[0].counts["scm"]
    record(2, ok, f"{rep.counts['scm']} SCM bipartite graphs, {len(bad)} with reg != a; "
                  f"{len(rep.exhibits)} non-SCM graphs with reg > a")


def test_criterion_03_trees(analyzer):
    rep = verify_trees(9, analyzer=analyzer)
    ok = rep.all_agree and rep.counts["labeled_trees"] == sum(n ** (n - 2) for n in range(2, 10)) + 1
    record(3, ok, f"{rep.counts['labeled_trees']} labeled trees in {rep.counts['classes']} classes, "
                  f"{len(rep.divergences)} failures")


def test_criterion_04_c8(analyzer):
    C8 = cycle_graph(8)
    values = {
        "reg": analyzer.reg(C8),
        "a": analyzer.a(C8),
        "matching": analyzer.matching(C8),
        "unmixed": analyzer.unmixed(C8),
        "scm": analyzer.scm(C8),
        "degree_one_vertex": degree_one_vertex(C8),
    }
    want = {"reg": 3, "a": 2, "matching": 4, "unmixed": False, "scm": False, "degree_one_vertex": None}
    record(4, values == want, " ".join(f"{k}={v}" for k, v in values.items()))


def test_criterion_05_katzman(structure):
    bad = failures(structure, "katzman")
    record(5, not bad and structure.counts["graphs"] > 1000,
           f"{structure.counts['graphs']} graphs (all n <= 6 + 1000 random n in 7..8), {len(bad)} with reg < a")


def test_criterion_06_terai(structure):
    bad = failures(structure, "terai")
    record(6, not bad, f"{structure.counts['graphs']} graphs, {len(bad)} with pd(cover) != reg")


def test_criterion_07_splitting_claims(analyzer):
    checked = 0
    bad = []
    for n in range(8):
        for idx, G in enumerate(nonisomorphic_graphs(n)):
            if degree_one_vertex(G) is None:
                continue
            checked += 1
            s = analyzer.structure(G)
            if not (s["claim1"] and s["claim2"] and s["pd_bound"]):
                bad.append(f"n{n}#{idx}")
    record(7, checked > 0 and not bad,
           f"{checked} isomorphism classes on <= 7 vertices with a degree-1 vertex, {len(bad)} failures")


def test_criterion_08_degree_one_and_closed_neighborhood(analyzer):
    bad = []
    count = 0
    for gid, G in bipartite_family(3):
        s = analyzer.structure(G)
        count += 1
        if not (s["deg1_exists"] and s["closed_nbhd_preserves_scm"]):
            bad.append(gid)
    record(8, not bad, f"{count} bipartite graphs (parts <= 3), {len(bad)} failures")


def test_criterion_09_vd_shellable_scm_chain(analyzer):
    bad = []
    count = 0
    for n in range(7):
        for idx, G in enumerate(generate("all_graphs", n)):
            s = analyzer.structure(G)
            count += 1
            if not (s["vd_implies_shellable"] and s["shellable_implies_scm"]):
                bad.append(f"all{n}#{idx}")
    record(9, not bad and count == 2 ** 15 + 1024 + 64 + 8 + 2 + 1 + 1,
           f"{count} labeled graphs on <= 6 vertices, {len(bad)} failures")


def test_criterion_10_cm_pure_shellable_pure_vd(thm1):
    rep, _ = thm1
    bad = failures(rep, "cm_pure_shellable_pure_vd_agree")
    record(10, not bad, f"{rep.counts['graphs']} bipartite graphs, {rep.counts['cm']} CM, {len(bad)} disagreements")


# -- criterion 11: replay and mutation fuzzing ------------------------------------


def _tree_nodes(tree, path=()):
    yield path, tree
    if isinstance(tree, Shed):
        yield from _tree_nodes(tree.deletion, path + ("deletion",))
        yield from _tree_nodes(tree.link, path + ("link",))


def _replace(tree, path, new):
    if not path:
        return new
    head, rest = path[0], path[1:]
    if head == "deletion":
        return Shed(tree.vertex, _replace(tree.deletion, rest, new), tree.link)
    return Shed(tree.vertex, tree.deletion, _replace(tree.link, rest, new))


def _mutate_tree(tree, rng):
    """One node corrupted so the result can never replay."""
    path, node = rng.choice(list(_tree_nodes(tree)))
    if isinstance(node, Shed):
        choice = rng.randrange(3)
        if choice == 0:
            # a shed node only occurs on a complex with at least two facets
            return _replace(tree, path, SimplexLeaf())
        if choice == 1:
            return _replace(tree, path, VoidLeaf())
        # shedding vertex outside every ground set in play
        return _replace(tree, path, Shed(64, node.deletion, node.link))
    if isinstance(node, SimplexLeaf):
        return _replace(tree, path, VoidLeaf())
    return _replace(tree, path, SimplexLeaf())


def _mutate_shelling(order, rng):
    fs = list(order.facets)
    choice = rng.randrange(3)
    if choice == 0:
        del fs[rng.randrange(len(fs))]
    elif choice == 1:
        fs.insert(rng.randrange(len(fs) + 1), rng.choice(fs))
    else:
        i = rng.randrange(len(fs))
        fs[i] = fs[i] | {64}
    return ShellingOrder(tuple(fs))


def test_criterion_11_certificate_soundness(analyzer):
    rng = random.Random(11)
    emitted = replayed = mutated = rejected = 0
    for gid, G in bipartite_family(3):
        delta = independence_complex(G)
        for cert in (analyzer.vd(G), analyzer.shelling(G)):
            if cert is None:
                continue
            emitted += 1
            replayed += verify_certificate(delta, cert)
            for _ in range(2):
                bad = _mutate_shelling(cert, rng) if isinstance(cert, ShellingOrder) else _mutate_tree(cert, rng)
                mutated += 1
                rejected += not verify_certificate(delta, bad)
    ok = emitted == replayed and mutated >= 200 and mutated == rejected
    record(11, ok, f"{replayed}/{emitted} certificates replay, {rejected}/{mutated} mutations rejected")


# -- criterion 12: homology unit suite ----------------------------------------------


def test_criterion_12_homology_suite():
    unit = [
        (SimplicialComplex.from_facets(range(3), [{0, 1}, {1, 2}, {0, 2}]), (0, 0, 1)),
        (SimplicialComplex.from_facets(range(2), [{0}, {1}]), (0, 1)),
        (SimplicialComplex.simplex(range(3)), (0, 0, 0, 0)),
        (SimplicialComplex.irrelevant(), (1,)),
        (SimplicialComplex.void(), ()),
        # octahedron boundary: a 2-sphere
        (SimplicialComplex.from_facets(range(6), [{a, b, c} for a in (0, 1) for b in (2, 3) for c in (4, 5)]),
         (0, 0, 0, 1)),
        # cone over the hollow triangle
        (SimplicialComplex.from_facets(range(4), [{0, 1, 3}, {1, 2, 3}, {0, 2, 3}]), (0, 0, 0, 0)),
    ]
    unit_ok = all(reduced_homology(d).dims == want for d, want in unit)
    rng = random.Random(12)
    euler_ok = 0
    for _ in range(500):
        n = rng.randint(0, 8)
        delta = make_complex((1 << n) - 1, [rng.randrange(1 << n) for _ in range(rng.randint(0, 8))])
        h = reduced_homology(delta).dims
        euler_ok += sum((-1) ** (d - 1) * x for d, x in enumerate(h)) == reduced_euler_characteristic(delta)
    record(12, unit_ok and euler_ok == 500,
           f"{len(unit)} unit profiles {'exact' if unit_ok else 'WRONG'}, Euler identity {euler_ok}/500")


# -- reported, not asserted -------------------------------------------------------------


def test_rationals_versus_gf2_on_bipartite_family(analyzer):
    two = Analyzer(GF2)
    diverging = []
    count = 0
    for gid, G in bipartite_family(3):
        count += 1
        if (analyzer.scm(G), analyzer.reg(G), analyzer.cm(G)) != (two.scm(G), two.reg(G), two.cm(G)):
            diverging.append(gid)
    ACCEPTANCE.append(f"report      : Q vs GF(2) on {count} bipartite graphs (parts <= 3): "
                      f"{len(diverging)} divergences in SCM/CM/reg")


@pytest.mark.stretch
def test_stretch_parts_four():
    t0 = time.perf_counter()
    rep = verify_thm1(4, recheck=True)
    elapsed = time.perf_counter() - t0
    ACCEPTANCE.append(f"stretch     : {'PASS' if rep.all_agree and elapsed < 1800 else 'FAIL'}  "
                      f"{rep.counts['graphs']} bipartite graphs (parts <= 4), {len(rep.divergences)} "
                      f"disagreements, {elapsed:.1f}s")
    assert rep.all_agree and elapsed < 1800
