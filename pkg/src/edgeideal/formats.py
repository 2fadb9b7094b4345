"""Line-oriented text formats for graphs, complexes, ideals, Betti tables and certificates.

All writers emit ASCII with LF newlines and single spaces; readers ignore blank
lines and lines starting with ``#`` and report errors with 1-based line numbers.
"""

from __future__ import annotations

import hashlib
import re

from ._bits import iter_bits, mask_of
from .decomposition import Shed, ShellingOrder, SimplexLeaf, VoidLeaf
from .errors import InputError
from .graph import MAX_VERTICES, Graph
from .homology import BettiTable
from .ideals import SquareFreeMonomialIdeal, make_ideal
from .simplicial import SimplicialComplex, make_complex


def _lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line.split()


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


# -- edge lists ---------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, tok in _lines(text):
        if n is None:
            if tok[0] != "n" or len(tok) != 2:
                raise InputError(f"line {lineno}: expected 'n <vertex_count>'")
            (n,) = _ints(tok[1:], lineno)
            if not 0 <= n <= MAX_VERTICES:
                raise InputError(f"line {lineno}: vertex count must lie in 0..{MAX_VERTICES}")
            continue
        if tok[0] != "e" or len(tok) != 3:
            raise InputError(f"line {lineno}: expected 'e <u> <v>'")
        u, v = _ints(tok[1:], lineno)
        if not 0 <= u < v < n:
            raise InputError(f"line {lineno}: edge must satisfy 0 <= u < v < {n}")
        if (u, v) in seen:
            raise InputError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise InputError("missing 'n <vertex_count>' header")
    return Graph.from_edges(n, edges)


def format_edge_list(G: Graph) -> str:
    n = len(G.adj)
    if G.vertex_mask != (1 << n) - 1:
        raise InputError("edge-list format needs dense labels 0..n-1; relabel the graph first")
    return "".join([f"n {n}\n"] + [f"e {u} {v}\n" for u, v in G.edges])


# -- facet lists ------------------------------------------------------------


def parse_facet_list(text: str) -> SimplicialComplex:
    size = None
    facets = []
    for lineno, tok in _lines(text):
        if size is None:
            if tok[0] != "g" or len(tok) != 2:
                raise InputError(f"line {lineno}: expected 'g <ground_size>'")
            (size,) = _ints(tok[1:], lineno)
            continue
        if tok[0] != "f":
            raise InputError(f"line {lineno}: expected 'f <v1> <v2> ...'")
        vs = _ints(tok[1:], lineno)
        if any(not 0 <= v < size for v in vs):
            raise InputError(f"line {lineno}: vertex outside 0..{size - 1}")
        facets.append(mask_of(vs))
    if size is None:
        raise InputError("missing 'g <ground_size>' header")
    return make_complex((1 << size) - 1, facets)


def format_facet_list(delta: SimplicialComplex) -> str:
    size = delta.ground.bit_length()
    out = [f"g {size}\n"]
    for f in delta.facets:
        out.append(" ".join(["f"] + [str(v) for v in iter_bits(f)]) + "\n")
    return "".join(out)


# -- ideals -------------------------------------------------------------------


def parse_ideal(text: str) -> SquareFreeMonomialIdeal:
    size = None
    gens = []
    unit = False
    for lineno, tok in _lines(text):
        if size is None:
            if tok[0] != "n" or len(tok) != 2:
                raise InputError(f"line {lineno}: expected 'n <ground_size>'")
            (size,) = _ints(tok[1:], lineno)
            continue
        if tok == ["unit"]:
            unit = True
            continue
        if tok[0] != "m":
            raise InputError(f"line {lineno}: expected 'm <v1> ...' or 'unit'")
        vs = _ints(tok[1:], lineno)
        if any(not 0 <= v < size for v in vs):
            raise InputError(f"line {lineno}: variable outside 0..{size - 1}")
        gens.append(mask_of(vs))
    if size is None:
        raise InputError("missing 'n <ground_size>' header")
    ground = (1 << size) - 1
    if unit:
        return SquareFreeMonomialIdeal(ground, (), True)
    return make_ideal(ground, gens)


def format_ideal(I: SquareFreeMonomialIdeal) -> str:
    out = [f"n {I.ground.bit_length()}\n"]
    if I.unit:
        out.append("unit\n")
    for g in I.generators:
        out.append(" ".join(["m"] + [str(v) for v in iter_bits(g)]) + "\n")
    return "".join(out)


# -- Betti tables ---------------------------------------------------------------


def format_betti(B: BettiTable) -> str:
    out = [f"subject {B.subject}\n"]
    for (i, j), m in sorted(B.entries.items()):
        out.append(f"b {i} {j} {m}\n")
    return "".join(out)


def parse_betti(text: str) -> BettiTable:
    subject = None
    entries = {}
    for lineno, tok in _lines(text):
        if subject is None:
            if tok[0] != "subject" or len(tok) < 2:
                raise InputError(f"line {lineno}: expected 'subject <name>'")
            subject = " ".join(tok[1:])
            continue
        if tok[0] != "b" or len(tok) != 4:
            raise InputError(f"line {lineno}: expected 'b <i> <j> <multiplicity>'")
        i, j, m = _ints(tok[1:], lineno)
        if m < 1:
            raise InputError(f"line {lineno}: multiplicity must be positive")
        if (i, j) in entries:
            raise InputError(f"line {lineno}: duplicate entry ({i}, {j})")
        entries[(i, j)] = m
    if subject is None:
        raise InputError("missing 'subject' header")
    return BettiTable(dict(sorted(entries.items())), subject)


# -- certificates -----------------------------------------------------------------


def format_certificate(cert) -> str:
    """S-expression: ``(shed 3 (simplex) (void))`` or ``(shelling (1 3) (2 4))``."""
    if isinstance(cert, ShellingOrder):
        parts = ["(" + " ".join(str(v) for v in sorted(f)) + ")" for f in cert.facets]
        return "(shelling" + "".join(" " + p for p in parts) + ")"
    if isinstance(cert, SimplexLeaf):
        return "(simplex)"
    if isinstance(cert, VoidLeaf):
        return "(void)"
    if isinstance(cert, Shed):
        return f"(shed {cert.vertex} {format_certificate(cert.deletion)} {format_certificate(cert.link)})"
    raise InputError(f"not a certificate: {cert!r}")


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def _sexpr(text: str):
    tokens = _TOKEN.findall(text)
    pos = 0

    def read():
        nonlocal pos
        if pos >= len(tokens):
            raise InputError("unexpected end of certificate")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            items = []
            while True:
                if pos >= len(tokens):
                    raise InputError("unbalanced parentheses in certificate")
                if tokens[pos] == ")":
                    pos += 1
                    return items
                items.append(read())
        if tok == ")":
            raise InputError("unexpected ')' in certificate")
        return tok

    expr = read()
    if pos != len(tokens):
        raise InputError("trailing tokens after certificate")
    return expr


def _to_int(tok) -> int:
    if not isinstance(tok, str):
        raise InputError(f"expected a vertex label, got {tok!r}")
    try:
        return int(tok)
    except ValueError:
        raise InputError(f"expected a vertex label, got {tok!r}") from None


def _build(expr):
    if not isinstance(expr, list) or not expr:
        raise InputError(f"malformed certificate node {expr!r}")
    head = expr[0]
    if head == "simplex" and len(expr) == 1:
        return SimplexLeaf()
    if head == "void" and len(expr) == 1:
        return VoidLeaf()
    if head == "shed" and len(expr) == 4:
        return Shed(_to_int(expr[1]), _build(expr[2]), _build(expr[3]))
    if head == "shelling":
        facets = []
        for f in expr[1:]:
            if not isinstance(f, list):
                raise InputError(f"shelling facet must be a list, got {f!r}")
            facets.append(frozenset(_to_int(v) for v in f))
        return ShellingOrder(tuple(facets))
    raise InputError(f"malformed certificate node {expr!r}")


def parse_certificate(text: str):
    return _build(_sexpr(text))


def certificate_digest(cert) -> str:
    return hashlib.sha256(format_certificate(cert).encode("ascii")).hexdigest()[:16]
