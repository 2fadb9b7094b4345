"""Theorem-verification campaigns over graph families, and their reports.

Every quantity checked here is invariant under relabeling, so values are
computed once per isomorphism class (on the canonical representative) and
looked up for each labeled graph. Certificates are mapped back onto the
labeled graph before they are reported or replayed.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .decomposition import (
    is_shellable,
    is_vd_graph,
    relabel_shelling,
    relabel_tree,
    verify_certificate,
)
from .errors import InputError
from .formats import certificate_digest, format_certificate
from .graph import (
    Graph,
    bipartition,
    canonical_form,
    closed_neighborhood_delete,
    degree_one_vertex,
    generate,
    relabel,
    trees_by_prufer,
)
from .homology import (
    RATIONALS,
    FieldSpec,
    hochster_betti,
    ideal_projective_dimension,
    is_cohen_macaulay,
    is_sequentially_cm,
    projective_dimension,
    regularity,
)
from .ideals import cover_ideal, cover_ideal_splitting, edge_ideal, is_unmixed, minimal_vertex_covers
from .invariants import induced_matching, is_three_disjoint, maximum_matching
from .simplicial import independence_complex, is_pure

MAX_PART = 4
MAX_N = 8
MAX_TREE_N = 10


class Analyzer:
    """Lazily computed, isomorphism-class-cached invariants of graphs."""

    def __init__(self, k: FieldSpec = RATIONALS):
        self.k = k
        self._canon: dict[Graph, tuple] = {}
        self._values: dict[tuple, object] = {}

    def canon(self, G: Graph) -> tuple[tuple[int, int], list[int], Graph]:
        hit = self._canon.get(G)
        if hit is None:
            key, order = canonical_form(G)
            hit = (key, order, relabel(G, order))
            if len(self._canon) > 200_000:
                self._canon.clear()
            self._canon[G] = hit
        return hit

    def _get(self, name: str, G: Graph, compute):
        key, _, H = self.canon(G)
        slot = (name, key)
        if slot not in self._values:
            self._values[slot] = compute(H)
        return self._values[slot]

    def complex(self, G: Graph):
        return self._get("complex", G, independence_complex)

    def bipartite(self, G: Graph) -> bool:
        return self._get("bipartite", G, lambda H: bipartition(H) is not None)

    def scm(self, G: Graph) -> bool:
        return self._get("scm", G, lambda H: is_sequentially_cm(self.complex(H), self.k))

    def cm(self, G: Graph) -> bool:
        return self._get("cm", G, lambda H: is_cohen_macaulay(self.complex(H), self.k))

    def pure(self, G: Graph) -> bool:
        return self._get("pure", G, lambda H: is_pure(self.complex(H)))

    def betti(self, G: Graph):
        return self._get("betti", G, lambda H: hochster_betti(edge_ideal(H), self.k, "R/I(G)"))

    def reg(self, G: Graph) -> int:
        return regularity(self.betti(G))

    def pd_cover(self, G: Graph) -> int:
        """pd of the cover ideal I(G)^vee as a module."""
        return self._get("pd_cover", G, lambda H: ideal_projective_dimension(cover_ideal(H), self.k))

    def a(self, G: Graph) -> int:
        return len(self.induced_matching(G))

    def induced_matching(self, G: Graph) -> list[tuple[int, int]]:
        _, order, _ = self.canon(G)
        m = self._get("induced_matching", G, induced_matching)
        return sorted(tuple(sorted((order[u], order[v]))) for u, v in m)

    def matching(self, G: Graph) -> int:
        return self._get("matching", G, lambda H: len(maximum_matching(H)))

    def unmixed(self, G: Graph) -> bool:
        return self._get("unmixed", G, is_unmixed)

    def vd(self, G: Graph):
        _, order, _ = self.canon(G)
        tree = self._get("vd", G, is_vd_graph)
        return None if tree is None else relabel_tree(tree, order)

    def shelling(self, G: Graph):
        _, order, _ = self.canon(G)
        sh = self._get("shelling", G, lambda H: is_shellable(self.complex(H)))
        return None if sh is None else relabel_shelling(sh, order)

    def structure(self, G: Graph) -> dict[str, bool]:
        return self._get("structure", G, self._structure_checks)

    def _structure_checks(self, H: Graph) -> dict[str, bool]:
        scm = self.scm(H)
        bip = self.bipartite(H)
        checks = {}
        # (a) SCM bipartite with an edge has a degree-one vertex
        checks["deg1_exists"] = not (bip and scm and H.edge_count) or degree_one_vertex(H) is not None
        # (b) deleting a closed neighborhood preserves SCM
        checks["closed_nbhd_preserves_scm"] = not scm or all(
            self.scm(closed_neighborhood_delete(H, x)) for x in H.labels
        )
        # (c) splitting claims and the pd inequality at every degree-one vertex
        claim1 = claim2 = pd_bound = witness = True
        for x in H.labels:
            if H.degree(x) != 1:
                continue
            sp = cover_ideal_splitting(H, x)
            claim1 &= sp.claim1_holds
            claim2 &= sp.claim2_holds
            pd_bound &= self.pd_cover(H) <= max(self.pd_cover(sp.G_prime) + 1, self.pd_cover(sp.G_dblprime))
            witness &= self.a(sp.G_prime) + 1 <= self.a(H)
        checks["claim1"] = claim1
        checks["claim2"] = claim2
        checks["pd_bound"] = pd_bound
        checks["a_witness_step"] = witness
        # (d) Terai, (e) Katzman, matching bound
        checks["terai"] = self.pd_cover(H) == self.reg(H)
        checks["katzman"] = self.reg(H) >= self.a(H)
        checks["matching_bound"] = self.a(H) <= self.reg(H) <= self.matching(H)
        # (f) VD => shellable => SCM
        vd = self.vd(H) is not None
        sh = self.shelling(H) is not None
        checks["vd_implies_shellable"] = not vd or sh
        checks["shellable_implies_scm"] = not sh or scm
        return checks


# -- reports ------------------------------------------------------------------


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if v is None:
        return "-"
    return str(v)


def edges_token(G: Graph) -> str:
    return " ".join(f"{u}-{v}" for u, v in G.edges) or "-"


@dataclass
class GraphRecord:
    graph_id: str
    graph: Graph
    values: dict[str, object] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    certificates: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


@dataclass
class VerificationReport:
    campaign: str
    family: str
    field: str
    seed: int | None = None
    records: list[GraphRecord] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    divergences: list[str] = field(default_factory=list)
    exhibits: list[str] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def all_agree(self) -> bool:
        return not self.divergences

    def add(self, rec: GraphRecord) -> None:
        self.records.append(rec)
        for name, ok in rec.checks.items():
            if not ok:
                self.divergences.append(f"{rec.graph_id} {name}")

    def to_text(self) -> str:
        """Machine-readable report; deterministic (runtime is left out)."""
        out = [
            f"campaign {self.campaign}",
            f"family {self.family}",
            f"field {self.field}",
            f"seed {_fmt(self.seed)}",
            "",
        ]
        for rec in self.records:
            out.append(f"graph {rec.graph_id}")
            out.append(f"vertices {rec.graph.vertex_count}")
            out.append(f"edges {edges_token(rec.graph)}")
            for k, v in rec.values.items():
                out.append(f"{k} {_fmt(v)}")
            for k, v in rec.checks.items():
                out.append(f"check {k} {'pass' if v else 'FAIL'}")
            for k, v in rec.certificates.items():
                out.append(f"cert {k} {v}")
            out.append("end")
            out.append("")
        out.append("summary")
        for k, v in self.counts.items():
            out.append(f"count {k} {v}")
        out.append(f"divergences {len(self.divergences)}")
        for d in self.divergences:
            out.append(f"divergence {d}")
        out.append(f"exhibits {len(self.exhibits)}")
        for e in self.exhibits:
            out.append(f"exhibit {e}")
        out.append(f"all-agree {_fmt(self.all_agree)}")
        return "\n".join(out) + "\n"

    def summary_lines(self) -> list[str]:
        lines = [f"campaign {self.campaign} [{self.family}] field={self.field} seed={_fmt(self.seed)}"]
        for k, v in self.counts.items():
            lines.append(f"  {k}: {v}")
        lines.append(f"  divergences: {len(self.divergences)}")
        for d in self.divergences[:20]:
            lines.append(f"    {d}")
        if self.exhibits:
            lines.append(f"  exhibits: {len(self.exhibits)}")
            for e in self.exhibits[:10]:
                lines.append(f"    {e}")
        lines.append(f"  all-agree: {'yes' if self.all_agree else 'NO'}")
        lines.append(f"  runtime: {self.runtime:.2f}s")
        return lines


def _bump(counts: dict, key: str, by: int = 1) -> None:
    counts[key] = counts.get(key, 0) + by


def _attach_certificates(rec: GraphRecord, an: Analyzer, G: Graph, recheck: bool) -> None:
    tree = an.vd(G)
    sh = an.shelling(G)
    if tree is not None:
        rec.certificates["vd"] = certificate_digest(tree)
    if sh is not None:
        rec.certificates["shelling"] = certificate_digest(sh)
    if recheck:
        delta = independence_complex(G)
        rec.checks["recheck_vd"] = tree is None or verify_certificate(delta, tree)
        rec.checks["recheck_shelling"] = sh is None or verify_certificate(delta, sh)


def bipartite_family(max_part: int):
    """All labeled bipartite graphs on fixed parts (a, b) with 0 <= a <= b <= max_part."""
    for a in range(max_part + 1):
        for b in range(a, max_part + 1):
            for idx, G in enumerate(generate("all_bipartite", a, b)):
                yield f"bip{a}x{b}#{idx}", G


def _check_part(max_part: int) -> None:
    if not isinstance(max_part, int) or not 0 <= max_part <= MAX_PART:
        raise InputError(f"max_part must lie in 0..{MAX_PART}")


def verify_thm1(max_part: int, k: FieldSpec = RATIONALS, recheck: bool = False, analyzer: Analyzer | None = None) -> VerificationReport:
    """SCM = shellable = VD on bipartite graphs, and CM = pure shellable = pure VD."""
    _check_part(max_part)
    an = analyzer or Analyzer(k)
    t0 = time.perf_counter()
    rep = VerificationReport("thm1", f"all_bipartite parts<={max_part}", str(k))
    for gid, G in bipartite_family(max_part):
        scm = an.scm(G)
        shell = an.shelling(G) is not None
        vd = an.vd(G) is not None
        pure = an.pure(G)
        cm = an.cm(G)
        rec = GraphRecord(gid, G, {"scm": scm, "shellable": shell, "vd": vd, "pure": pure, "cm": cm})
        rec.checks["scm_shellable_vd_agree"] = scm == shell == vd
        rec.checks["cm_pure_shellable_pure_vd_agree"] = cm == (pure and shell) == (pure and vd)
        _attach_certificates(rec, an, G, recheck)
        rep.add(rec)
        _bump(rep.counts, "graphs")
        _bump(rep.counts, "scm", scm)
        _bump(rep.counts, "cm", cm)
    rep.runtime = time.perf_counter() - t0
    return rep


def verify_thm2(max_part: int, k: FieldSpec = RATIONALS, analyzer: Analyzer | None = None) -> VerificationReport:
    """reg(R/I(G)) = a(G) on SCM bipartite graphs; reg - a >= 0 logged otherwise."""
    _check_part(max_part)
    an = analyzer or Analyzer(k)
    t0 = time.perf_counter()
    rep = VerificationReport("thm2", f"all_bipartite parts<={max_part}", str(k))
    for gid, G in bipartite_family(max_part):
        scm = an.scm(G)
        reg = an.reg(G)
        a = an.a(G)
        rec = GraphRecord(gid, G, {"scm": scm, "reg": reg, "a": a, "reg_minus_a": reg - a})
        rec.checks["katzman"] = reg >= a
        if scm:
            rec.checks["reg_equals_a"] = reg == a
            _bump(rep.counts, "scm")
        elif reg > a:
            rep.exhibits.append(f"{gid} reg={reg} a={a} unmixed={_fmt(an.unmixed(G))} edges={edges_token(G).replace(' ', ',')}")
        rep.add(rec)
        _bump(rep.counts, "graphs")
    rep.counts["non_scm_exhibits"] = len(rep.exhibits)
    rep.runtime = time.perf_counter() - t0
    return rep


def verify_trees(max_n: int, k: FieldSpec = RATIONALS, analyzer: Analyzer | None = None) -> VerificationReport:
    """Every tree on <= max_n vertices, walked through all Prüfer sequences, is SCM with reg = a."""
    if not isinstance(max_n, int) or not 1 <= max_n <= MAX_TREE_N:
        raise InputError(f"max_n must lie in 1..{MAX_TREE_N}")
    an = analyzer or Analyzer(k)
    t0 = time.perf_counter()
    rep = VerificationReport("trees", f"prufer n<={max_n}", str(k))
    for n in range(1, max_n + 1):
        labeled = 0
        for idx, (T, count) in enumerate(trees_by_prufer(n)):
            labeled += count
            scm = an.scm(T)
            reg, a = an.reg(T), an.a(T)
            rec = GraphRecord(f"tree{n}#{idx}", T, {"labeled_copies": count, "scm": scm, "reg": reg, "a": a})
            rec.checks["scm"] = scm
            rec.checks["reg_equals_a"] = reg == a
            rep.add(rec)
            _bump(rep.counts, "classes")
        _bump(rep.counts, "labeled_trees", labeled)
        expected = n ** (n - 2) if n >= 2 else 1
        if labeled != expected:
            rep.divergences.append(f"prufer count n={n}: {labeled} != {expected}")
    rep.runtime = time.perf_counter() - t0
    return rep


def structure_family(max_n: int, sample: int, seed: int):
    """All labeled graphs on <= min(6, max_n) vertices, then seeded random graphs on 7..max_n."""
    for n in range(min(6, max_n) + 1):
        for idx, G in enumerate(generate("all_graphs", n)):
            yield f"all{n}#{idx}", G
    if max_n >= 7:
        rng = random.Random(seed)
        for t in range(sample):
            n = rng.randint(7, max_n)
            p = rng.uniform(0.15, 0.85)
            s = rng.randrange(2**31)
            yield f"rand{t}:n={n}:p={p:.4f}:s={s}", next(generate("random_graph", n, p, s))


def verify_structure(max_n: int, sample: int, seed: int, k: FieldSpec = RATIONALS, recheck: bool = False,
                     analyzer: Analyzer | None = None) -> VerificationReport:
    if not isinstance(max_n, int) or not 0 <= max_n <= MAX_N:
        raise InputError(f"max_n must lie in 0..{MAX_N}")
    if sample < 0:
        raise InputError("sample must be nonnegative")
    an = analyzer or Analyzer(k)
    t0 = time.perf_counter()
    rep = VerificationReport("structure", f"all n<={min(6, max_n)} + {sample} random n<={max_n}", str(k), seed)
    for gid, G in structure_family(max_n, sample, seed):
        checks = an.structure(G)
        rec = GraphRecord(gid, G, {
            "bipartite": an.bipartite(G),
            "scm": an.scm(G),
            "reg": an.reg(G),
            "a": an.a(G),
            "pd_cover": an.pd_cover(G),
            "matching": an.matching(G),
        }, dict(checks))
        if recheck:
            _attach_certificates(rec, an, G, True)
        rep.add(rec)
        _bump(rep.counts, "graphs")
        _bump(rep.counts, "with_degree_one_vertex", degree_one_vertex(G) is not None)
    rep.runtime = time.perf_counter() - t0
    return rep


# -- single-graph analysis ---------------------------------------------------------


def analyze(G: Graph, k: FieldSpec = RATIONALS, recheck: bool = False) -> dict[str, object]:
    """All invariants of one graph as an ordered mapping of printable values."""
    an = Analyzer(k)
    delta = independence_complex(G)
    bip = bipartition(G)
    tree = is_vd_graph(G)
    sh = is_shellable(delta)
    betti = an.betti(G)
    out: dict[str, object] = {
        "vertices": G.vertex_count,
        "edges": edges_token(G),
        "bipartite": bip is not None,
        "bipartition": "-" if bip is None else f"{sorted(bip.side_one)} {sorted(bip.side_two)}",
        "degree_one_vertex": degree_one_vertex(G),
        "unmixed": is_unmixed(G),
        "minimal_vertex_covers": " ".join(
            "{" + ",".join(map(str, sorted(c))) + "}" for c in sorted(minimal_vertex_covers(G), key=lambda c: (len(c), sorted(c)))
        ),
        "a": an.a(G),
        "a_witness": " ".join(f"{u}-{v}" for u, v in an.induced_matching(G)) or "-",
        "matching_number": an.matching(G),
        "vd": tree is not None,
        "vd_certificate": "-" if tree is None else format_certificate(tree),
        "shellable": sh is not None,
        "shelling_certificate": "-" if sh is None else format_certificate(sh),
        "scm": is_sequentially_cm(delta, k),
        "cm": is_cohen_macaulay(delta, k),
        "pure": is_pure(delta),
        "reg": regularity(betti),
        "pd": projective_dimension(betti),
        "pd_cover_ideal": an.pd_cover(G),
        "betti": " ".join(f"b{i},{j}={m}" for (i, j), m in sorted(betti.entries.items())),
    }
    witness = an.induced_matching(G)
    out["a_witness_pairwise_3disjoint"] = all(is_three_disjoint(G, e, f) for e, f in itertools.combinations(witness, 2))
    if recheck:
        out["recheck_vd"] = tree is None or verify_certificate(delta, tree)
        out["recheck_shelling"] = sh is None or verify_certificate(delta, sh)
    return out
