"""Embedded GKM graphs: validation, reflexive and Gorenstein checks, directed
h-vectors, and the edge-length-sum identity for graphs."""

from dataclasses import dataclass
from fractions import Fraction

from . import bounds, exact, reflexive
from .errors import (
    DirectionDependent,
    InvalidGraph,
    NonGenericDirection,
    NonPositiveIndex,
    InconsistentIndex,
    NotGorenstein,
)
from .report import VerificationReport

_GENERIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class GkmGraph:
    """An n-regular graph embedded in Q^d with derived primitive edge weights.

    Vertices are identified by hashable ids; coordinates are tuples of
    Fractions (or ints).  Weights and lengths are always derived from the
    embedding, never stored independently.
    """

    def __init__(self, ambient_dim, degree, vertices, edges):
        self.ambient_dim = ambient_dim
        self.degree = degree
        self.coords = {}
        self.ids = []
        for vid, pt in vertices:
            if vid in self.coords:
                raise InvalidGraph(f"duplicate vertex id {vid!r}")
            if len(pt) != ambient_dim:
                raise InvalidGraph(f"vertex {vid!r} has wrong dimension")
            self.coords[vid] = tuple(Fraction(c) for c in pt)
            self.ids.append(vid)
        seen = set()
        self.edge_list = []
        for u, v in edges:
            if u not in self.coords or v not in self.coords:
                raise InvalidGraph(f"edge ({u!r}, {v!r}) has an unknown endpoint")
            if u == v:
                raise InvalidGraph(f"loop at {u!r}")
            key = frozenset((u, v))
            if key in seen:
                raise InvalidGraph(f"repeated edge ({u!r}, {v!r})")
            seen.add(key)
            self.edge_list.append((u, v))

    def point(self, vid):
        return self.coords[vid]

    def edges(self):
        return list(self.edge_list)

    def incident(self, vid):
        return [e for e in self.edge_list if vid in e]

    def weight(self, edge, tail=None):
        """Primitive direction of the edge, oriented away from ``tail``."""
        u, v = edge
        if tail is not None and tail == v:
            u, v = v, u
        w, _ = exact.rational_direction(exact.vec_sub(self.coords[v], self.coords[u]))
        return w

    def length(self, edge):
        u, v = edge
        _, t = exact.rational_direction(exact.vec_sub(self.coords[v], self.coords[u]))
        return int(t) if t.denominator == 1 else t

    def sum_lengths(self):
        return sum(self.length(e) for e in self.edge_list)


def validate(G):
    """Regularity, the GKM pairwise-independence condition, simple edges."""
    rep = VerificationReport("gkm-valid", True)
    for vid in G.ids:
        inc = G.incident(vid)
        rep.add_item(
            f"degree {vid}", len(inc) == G.degree,
            {"degree": len(inc), "expected": G.degree},
        )
        ws = [G.weight(e, tail=vid) for e in inc]
        indep = True
        for i in range(len(ws)):
            for j in range(i + 1, len(ws)):
                if exact.rank([ws[i], ws[j]]) < 2:
                    indep = False
        rep.add_item(f"gkm-condition {vid}", indep, {"weights": [list(w) for w in ws]})
    return rep


def is_reflexive_graph(G):
    """Weight sum -v at every vertex, lattice vertices, vertex sum zero."""
    if not validate(G):
        raise InvalidGraph("graph fails GKM validation")
    rep = VerificationReport("gkm-reflexive", True)
    total = (Fraction(0),) * G.ambient_dim
    for vid in G.ids:
        v = G.coords[vid]
        total = exact.vec_add(total, v)
        rep.add_item(f"lattice {vid}", exact.is_integral(v), {"coords": list(v)})
        s = (0,) * G.ambient_dim
        for e in G.incident(vid):
            s = exact.vec_add(s, G.weight(e, tail=vid))
        ok = all(Fraction(a) == -b for a, b in zip(s, v))
        rep.add_item(f"weight-sum {vid}", ok, {"sum": list(s), "vertex": list(v)})
    rep.add_item("vertex-sum-zero", all(c == 0 for c in total), {"sum": list(total)})
    return rep


@dataclass(frozen=True)
class GorensteinCertificate:
    r: Fraction
    residuals: dict

    @property
    def valid(self):
        return all(all(c == 0 for c in res) for res in self.residuals.values())


def gorenstein_index(G):
    """The unique r > 0 with weight sum = -r*v at every vertex."""
    if not validate(G):
        raise InvalidGraph("graph fails GKM validation")
    r = None
    sums = {}
    for vid in G.ids:
        v = G.coords[vid]
        s = (0,) * G.ambient_dim
        for e in G.incident(vid):
            s = exact.vec_add(s, G.weight(e, tail=vid))
        sums[vid] = s
        if all(c == 0 for c in v):
            raise InvalidGraph("vertex at the origin has no well-defined index")
        try:
            t = exact.solve_scalar(v, s)
        except exact.NotParallel:
            raise InconsistentIndex(f"weight sum at {vid!r} is not parallel to the vertex")
        cand = -t
        if r is None:
            r = cand
        elif r != cand:
            raise InconsistentIndex(f"index {cand} at {vid!r} disagrees with {r}")
    if r is None or r <= 0:
        raise NonPositiveIndex(f"computed index {r}")
    residuals = {
        vid: exact.vec_sub(sums[vid], exact.vec_scale(-r, G.coords[vid]))
        for vid in G.ids
    }
    return GorensteinCertificate(r, residuals)


def _generic_direction(G, avoid=()):
    dirs = [G.weight(e) for e in G.edge_list]
    for b in _GENERIC_BASES:
        xi = tuple(b**i for i in range(G.ambient_dim))
        if xi in avoid:
            continue
        if all(exact.dot(w, xi) != 0 for w in dirs):
            return xi
    raise NonGenericDirection("no generic direction among the built-in candidates")


def _h_for_xi(G, xi):
    h = [0] * (G.degree + 1)
    for vid in G.ids:
        indeg = 0
        for e in G.incident(vid):
            w = G.weight(e, tail=vid)
            pair = exact.dot(w, xi)
            if pair == 0:
                raise NonGenericDirection(f"direction {xi} vanishes on an edge weight")
            if pair < 0:
                indeg += 1
        h[indeg] += 1
    return tuple(h)


def h_vector_graph(G, xi=None):
    """In-degree census under a generic direction.

    When no direction is supplied, three distinct generic directions are
    tried and must agree; a disagreement means the graph is not of the
    manifold type where the census is direction-independent.
    """
    if xi is not None:
        return _h_for_xi(G, tuple(xi))
    used = []
    results = []
    while len(used) < 3:
        d = _generic_direction(G, avoid=tuple(used))
        used.append(d)
        results.append(_h_for_xi(G, d))
    if len(set(results)) != 1:
        raise DirectionDependent(f"h-vector depends on the direction: {results}")
    return results[0]


def verify_graph_corollary(G):
    """Sum of edge lengths against C(n, h) / r."""
    cert = gorenstein_index(G)
    if not cert.valid:
        raise NotGorenstein("no consistent Gorenstein index")
    h = h_vector_graph(G)
    total = G.sum_lengths()
    rhs = Fraction(bounds.c_from_h(G.degree, h)) / cert.r
    if rhs.denominator == 1:
        rhs = int(rhs)
    rep = VerificationReport("graph-length-sum", total == rhs, total, (rhs,))
    rep.add_item("index", True, {"r": cert.r})
    rep.add_item("h-vector", True, {"h": list(h)})
    return rep


def from_polytope(P):
    """The 1-skeleton of a Delzant reflexive polytope as a GKM graph."""
    if not reflexive.is_delzant(P).overall:
        raise reflexive.NotDelzant("polytope is not Delzant")
    if not reflexive.is_reflexive(P):
        raise reflexive.NotReflexive("polytope is not reflexive")
    vertices = [(i, P.vertices[i]) for i in range(len(P.vertices))]
    return GkmGraph(P.dim, P.dim, vertices, P.edges())
