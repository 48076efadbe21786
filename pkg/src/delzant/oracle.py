"""Brute-force cross-checks, deliberately independent of the main code paths.

These exist so the identities can be verified against implementations that
share nothing with the primary ones beyond exact arithmetic.
"""

from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor, gcd

from .errors import UnsupportedDimension
from .report import VerificationReport


def _on_segment(p, u, v):
    # p on [u, v]: collinear with consistent parameter in [0, 1]
    t = None
    for a, b, c in zip(p, u, v):
        if b == c:
            if Fraction(a) != Fraction(b):
                return False
            continue
        s = (Fraction(a) - Fraction(b)) / (Fraction(c) - Fraction(b))
        if t is None:
            t = s
        elif t != s:
            return False
    if t is None:
        return True
    return 0 <= t <= 1


def lattice_points_on_segment(u, v):
    """Number of lattice points on the closed segment, by bounding-box scan."""
    lo = [ceil(min(Fraction(a), Fraction(b))) for a, b in zip(u, v)]
    hi = [floor(max(Fraction(a), Fraction(b))) for a, b in zip(u, v)]
    count = 0
    for p in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if _on_segment(p, u, v):
            count += 1
    return count


def _affine_dim(points):
    # rank of the difference set, by rational Gaussian elimination; kept
    # separate from the exact-core implementation on purpose
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if not pts:
        return -1
    rows = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    rank = 0
    ncols = len(pts[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def brute_f_vector(P):
    """f-vector by exhausting facet subsets, independent of the face lattice."""
    n = P.dim
    nf = len(P.facets)
    by_vertexset = {}
    for size in range(nf + 1):
        for subset in combinations(range(nf), size):
            verts = [
                v
                for v in P.vertices
                if all(P.facets[i].active(v) for i in subset)
            ]
            if not verts:
                continue
            key = frozenset(verts)
            d = _affine_dim(verts)
            if size == 0:
                d = n
            by_vertexset.setdefault(key, d)
    f = [0] * (n + 1)
    for d in by_vertexset.values():
        f[d] += 1
    return tuple(f)


def _content(v):
    g = 0
    for c in v:
        g = gcd(g, abs(c))
    return g


def dual_edge_lengths_check(P):
    """Dual-edge lengths of a Delzant reflexive polytope in dimension 2 or 3.

    n=2: every vertex of P gives a dual edge of length |det(weights)| = 1,
    and the dual edge lengths sum to f0(P).  n=3: every edge gives a dual
    edge of length 1.
    """
    n = P.dim
    rep = VerificationReport("dual-edge-lengths", True)
    if n == 2:
        total = 0
        for vid in range(len(P.vertices)):
            i, j = sorted(P.active_facets(vid))
            diff = tuple(a - b for a, b in zip(P.facets[i].normal, P.facets[j].normal))
            length = _content(diff)
            dets = abs(
                P.vertex_weights(vid)[0][0] * P.vertex_weights(vid)[1][1]
                - P.vertex_weights(vid)[0][1] * P.vertex_weights(vid)[1][0]
            )
            rep.add_item(
                f"vertex {vid}", length == 1 and dets == length,
                {"dual_length": length, "det": dets},
            )
            total += length
        rep.add_item("sum", total == len(P.vertices), {"sum": total, "f0": len(P.vertices)})
        return rep
    if n == 3:
        for e in P.edges():
            u, v = e
            shared = sorted(P.active_facets(u) & P.active_facets(v))
            i, j = shared
            diff = tuple(a - b for a, b in zip(P.facets[i].normal, P.facets[j].normal))
            length = _content(diff)
            rep.add_item(f"edge {e}", length == 1, {"dual_length": length})
        return rep
    raise UnsupportedDimension("dual-edge length check covers dimensions 2 and 3")
