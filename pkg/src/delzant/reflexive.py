"""Delzant and reflexivity checks, edge lengths, normal contributions, the
index, and machine verification of the edge-length-sum identities."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import bounds, exact
from .errors import (
    InconsistentCones,
    MatchingFailed,
    NotDelzant,
    NotGorensteinOfIndex,
    NotReflexive,
    UnsupportedDimension,
)
from .polytope import Polytope
from .report import VerificationReport


@dataclass(frozen=True)
class DelzantReport:
    simple: bool
    rational: bool
    smooth_per_vertex: dict
    overall: bool


def is_delzant(P):
    """Check simplicity, rationality and per-vertex smoothness."""
    n = P.dim
    simple = P.is_simple()
    rational = True
    smooth = {}
    for vid in range(len(P.vertices)):
        try:
            weights = P.vertex_weights(vid)
        except exact.ZeroVector:  # pragma: no cover - degenerate input
            rational = False
            smooth[vid] = False
            continue
        if len(weights) != n:
            smooth[vid] = False
        else:
            smooth[vid] = abs(exact.det(weights)) == 1
    overall = simple and rational and all(smooth.values())
    return DelzantReport(simple, rational, smooth, overall)


def is_reflexive(P):
    """Integral vertices, origin interior, every facet of the form <x,l> <= 1."""
    if not all(exact.is_integral(v) for v in P.vertices):
        return False
    return all(h.offset == 1 for h in P.facets)


def _require_delzant(P):
    if not is_delzant(P).overall:
        raise NotDelzant("polytope is not Delzant")


def _require_reflexive(P):
    if not is_reflexive(P):
        raise NotReflexive("polytope is not reflexive")


def vertex_fano_check(P):
    """Per-vertex check that the weights sum to minus the vertex."""
    _require_delzant(P)
    rep = VerificationReport("vertex-fano", True)
    for vid, v in enumerate(P.vertices):
        total = (0,) * P.dim
        for w in P.vertex_weights(vid):
            total = exact.vec_add(total, w)
        ok = all(Fraction(t) == -c for t, c in zip(total, v))
        rep.add_item(f"vertex {vid}", ok, {"weight_sum": list(total), "vertex": list(v)})
    return rep


def edge_weight(P, edge):
    """Primitive direction of the edge, oriented from its first endpoint."""
    w, _ = exact.rational_direction(P.edge_direction(edge))
    return w


def _faces2_containing_edge(P, edge):
    want = frozenset(edge)
    return [f for f in P.faces_of_dim(2) if want <= f.vertex_ids]


def _weight_in_face(P, vid, face, exclude):
    """The weight at vid along the unique edge of the 2-face other than exclude."""
    hits = []
    for a, b in P.edges():
        if vid not in (a, b):
            continue
        if frozenset((a, b)) == frozenset(exclude):
            continue
        if frozenset((a, b)) <= face.vertex_ids:
            other = b if a == vid else a
            w, _ = exact.rational_direction(
                exact.vec_sub(P.vertices[other], P.vertices[vid])
            )
            hits.append(w)
    if len(hits) != 1:
        raise MatchingFailed(
            f"2-face does not contain exactly one other edge at vertex {vid}"
        )
    return hits[0]


def normal_contributions(P, edge):
    """Integer contribution of the edge in each 2-face containing it.

    For the edge u -> v with primitive direction w1, each 2-face F pairs
    the second weight w at u with the second weight w~ at v, and the
    contribution is the integer a with w - w~ = a * w1.
    """
    _require_delzant(P)
    u, v = edge
    w1 = edge_weight(P, (u, v))
    out = []
    for face in _faces2_containing_edge(P, (u, v)):
        wu = _weight_in_face(P, u, face, (u, v))
        wv = _weight_in_face(P, v, face, (u, v))
        t = exact.solve_scalar(w1, exact.vec_sub(wu, wv))
        if t.denominator != 1:
            raise MatchingFailed(f"non-integer contribution {t} on edge {edge}")
        out.append((face.vertex_ids, int(t)))
    return out


def verify_thm_combinatorics2(P):
    """Sum of all normal contributions against 12*f2 - 3*(n-1)*f1."""
    _require_delzant(P)
    f = P.f_vector()
    total = 0
    per_edge = []
    for e in P.edges():
        s = sum(a for _, a in normal_contributions(P, e))
        per_edge.append((e, s))
        total += s
    rhs = 12 * f[2] - 3 * (P.dim - 1) * f[1]
    rep = VerificationReport("normal-contribution-sum", total == rhs, total, (rhs,))
    for e, s in per_edge:
        rep.add_item(f"edge {e}", True, {"contribution_sum": s})
    return rep


def relative_length(P, edge):
    return P.relative_length(edge)


def sum_lengths(P):
    return sum(P.relative_length(e) for e in P.edges())


def verify_length_decomposition(P):
    """Per-edge check of l(e) = 2 + (sum of normal contributions)."""
    _require_delzant(P)
    _require_reflexive(P)
    rep = VerificationReport("length-decomposition", True)
    for e in P.edges():
        length = P.relative_length(e)
        s = 2 + sum(a for _, a in normal_contributions(P, e))
        rep.add_item(f"edge {e}", length == s, {"length": length, "2+sum_a": s})
    rep.lhs = sum_lengths(P)
    rep.rhs = (sum(2 + sum(a for _, a in normal_contributions(P, e)) for e in P.edges()),)
    return rep


def verify_main_theorem(P):
    """Edge-length sum against the f-vector and h-vector formulas."""
    _require_delzant(P)
    _require_reflexive(P)
    n = P.dim
    if n < 2:
        raise UnsupportedDimension("length-sum formula needs dimension >= 2")
    total = sum_lengths(P)
    f = P.f_vector()
    h = P.h_vector_comb()
    rhs = [bounds.c_from_f(n, f), bounds.c_from_h(n, h)]
    if n >= 3:
        rhs.append(bounds.c_from_f3(n, f))
    rep = VerificationReport(
        "length-sum", all(total == r for r in rhs), total, tuple(rhs)
    )
    rep.add_item("f-formula", total == rhs[0], {"value": rhs[0]})
    rep.add_item("h-formula", total == rhs[1], {"value": rhs[1]})
    if n >= 3:
        rep.add_item("f3-formula", total == rhs[2], {"value": rhs[2]})
    return rep


def _dual_edge_of(P, dual, edge):
    """The edge of the dual polytope paired with the given edge (n = 3)."""
    u, v = edge
    shared = sorted(P.active_facets(u) & P.active_facets(v))
    if len(shared) != 2:
        raise MatchingFailed(f"edge {edge} not on exactly two facets")
    i, j = shared
    pi = tuple(Fraction(-c) / P.facets[i].offset for c in P.facets[i].normal)
    pj = tuple(Fraction(-c) / P.facets[j].offset for c in P.facets[j].normal)
    a, b = dual.vertex_id(pi), dual.vertex_id(pj)
    pair = tuple(sorted((a, b)))
    if pair not in dual.edges():
        raise MatchingFailed(f"dual vertices of edge {edge} do not span a dual edge")
    return pair


def verify_12_24(P):
    """The dimension-2 "12" and dimension-3 "24" identities for reflexive
    polytopes (smoothness not required)."""
    _require_reflexive(P)
    dual = P.dual()
    if P.dim == 2:
        lhs = sum_lengths(P) + sum_lengths(dual)
        rep = VerificationReport("twelve", lhs == 12, lhs, (12,))
        rep.add_item("primal", True, {"sum": sum_lengths(P)})
        rep.add_item("dual", True, {"sum": sum_lengths(dual)})
        return rep
    if P.dim == 3:
        total = 0
        rep = VerificationReport("twenty-four", True)
        for e in P.edges():
            de = _dual_edge_of(P, dual, e)
            term = P.relative_length(e) * dual.relative_length(de)
            total += term
            rep.add_item(f"edge {e}", True, {"l*l_dual": term})
        rep.passed = total == 24
        rep.lhs = total
        rep.rhs = (24,)
        return rep
    raise UnsupportedDimension("the 12/24 identities hold in dimensions 2 and 3")


def index_k0(P):
    """gcd of all relative edge lengths of a reflexive Delzant polytope."""
    _require_delzant(P)
    _require_reflexive(P)
    g = 0
    for e in P.edges():
        g = gcd(g, P.relative_length(e))
    return g


def verify_index_corollary(P):
    """C(k0, n, f) = C(k0, n, h) >= 0, divisible by k0, zero iff every edge
    has length exactly k0."""
    k0 = index_k0(P)
    n = P.dim
    cf = bounds.c_indexed_from_f(k0, n, P.f_vector())
    ch = bounds.c_indexed_from_h(k0, n, P.h_vector_comb())
    lengths = [P.relative_length(e) for e in P.edges()]
    all_k0 = all(l == k0 for l in lengths)
    ok = cf == ch and cf >= 0 and cf % k0 == 0 and ((cf == 0) == all_k0)
    rep = VerificationReport("index-corollary", ok, cf, (ch,))
    rep.add_item("f-equals-h", cf == ch, {"C_f": cf, "C_h": ch})
    rep.add_item("non-negative", cf >= 0, {"C": cf})
    rep.add_item("divisible", cf % k0 == 0, {"C": cf, "k0": k0})
    rep.add_item("zero-iff-equal-lengths", (cf == 0) == all_k0, {"lengths": lengths})
    return rep


def verify_gorenstein(P, r):
    """Check the rescaled length-sum formula for a polytope whose r-th dilate
    has a reflexive lattice translate."""
    _require_delzant(P)
    rP = P.dilate(r)
    translate = None
    for t in rP.interior_lattice_points():
        cand = rP.translate(exact.vec_neg(t))
        if is_reflexive(cand):
            translate = exact.vec_neg(t)
            break
    if translate is None:
        raise NotGorensteinOfIndex(f"no reflexive translate of the {r}-fold dilate")
    total = sum_lengths(P)
    f = P.f_vector()
    rhs = Fraction(bounds.c_from_f(P.dim, f), r)
    rep = VerificationReport("gorenstein-length-sum", total == rhs, total, (rhs,))
    rep.add_item("translate", True, {"shift": list(translate)})
    return rep


def reconstruct_from_cones(cones):
    """Rebuild a Delzant reflexive polytope from its vertex cones.

    ``cones`` maps a vertex label to the list of n weights at that vertex;
    each vertex is placed at minus the weight sum, and the reconstruction
    must reproduce the input cones exactly.
    """
    placed = {}
    for label, weights in cones.items():
        if not exact.is_lattice_basis(list(weights)):
            raise InconsistentCones(f"cone at {label} is not unimodular")
        v = (0,) * len(weights[0])
        for w in weights:
            v = exact.vec_add(v, w)
        placed[label] = exact.vec_neg(v)
    P = Polytope.from_vertices(list(placed.values()))
    if len(P.vertices) != len(placed):
        raise InconsistentCones("placed points are not all extreme")
    for label, weights in cones.items():
        vid = P.vertex_id(placed[label])
        got = sorted(P.vertex_weights(vid))
        if got != sorted(tuple(w) for w in weights):
            raise InconsistentCones(f"cone at {label} not reproduced")
    if not is_delzant(P).overall or not is_reflexive(P):
        raise InconsistentCones("reconstruction is not Delzant reflexive")
    return P
