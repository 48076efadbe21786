"""Classical root systems in simple-root coordinates, Weyl orbits, and the
coadjoint-orbit GKM graphs built from a parabolic choice.

All coordinates are taken in the basis of simple roots, so the ambient
lattice is the root lattice and every reflection is integral.  The bilinear
form is the symmetrized Cartan matrix with long roots of square length 2.
"""

from fractions import Fraction

from . import exact
from .errors import DegenerateBasePoint, NotARoot, UnsupportedType
from .gkm import GkmGraph

_MAX_RANK = 6


def _cartan_matrix(kind, d):
    a = [[2 if i == j else 0 for j in range(d)] for i in range(d)]
    for i in range(d - 1):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    if kind == "B" and d >= 2:
        # alpha_d short: <alpha_{d-1}, alpha_d^v> = -2
        a[d - 2][d - 1] = -2
    elif kind == "C" and d >= 2:
        # alpha_d long
        a[d - 1][d - 2] = -2
    elif kind == "D":
        a[d - 2][d - 1] = 0
        a[d - 1][d - 2] = 0
        a[d - 3][d - 1] = -1
        a[d - 1][d - 3] = -1
    elif kind == "G":
        a[0][1] = -1
        a[1][0] = -3
    return a


def _root_lengths(kind, d):
    # (alpha_i, alpha_i) / 2 for each simple root, long roots normalized to 2
    if kind == "B":
        return [Fraction(1)] * (d - 1) + [Fraction(1, 2)]
    if kind == "C":
        return [Fraction(1, 2)] * (d - 1) + [Fraction(1)]
    if kind == "G":
        return [Fraction(1, 3), Fraction(1)]
    return [Fraction(1)] * d


class RootSystem:
    def __init__(self, kind, rank):
        self.kind = kind
        self.rank = rank
        self.cartan = _cartan_matrix(kind, rank)
        half = _root_lengths(kind, rank)
        # form[i][j] = (alpha_i, alpha_j) = cartan[i][j] * (alpha_j, alpha_j)/2
        self.form = [
            [Fraction(self.cartan[i][j]) * half[j] for j in range(rank)]
            for i in range(rank)
        ]
        self.simple_roots = [
            tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)
        ]
        self.positive_roots = self._generate_positive()
        self._root_set = set(self.positive_roots) | {
            exact.vec_neg(r) for r in self.positive_roots
        }

    def pairing(self, x, y):
        """The invariant bilinear form (x, y) in simple-root coordinates."""
        return sum(
            Fraction(x[i]) * self.form[i][j] * Fraction(y[j])
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def _simple_reflect(self, j, x):
        # s_j subtracts <x, alpha_j^v> = sum_i x_i cartan[i][j] from coordinate j
        c = sum(x[i] * self.cartan[i][j] for i in range(self.rank))
        out = list(x)
        out[j] -= c
        return tuple(out)

    def _generate_positive(self):
        roots = set(self.simple_roots)
        frontier = set(self.simple_roots)
        while frontier:
            nxt = set()
            for r in frontier:
                for j in range(self.rank):
                    s = self._simple_reflect(j, r)
                    if s not in roots:
                        roots.add(s)
                        nxt.add(s)
            frontier = nxt
        return sorted(r for r in roots if all(c >= 0 for c in r))

    def is_root(self, beta):
        return tuple(beta) in self._root_set

    def reflect(self, beta, x):
        """Reflection of x in the hyperplane orthogonal to the root beta."""
        beta = tuple(beta)
        if not self.is_root(beta):
            raise NotARoot(f"{beta} is not a root")
        t = 2 * self.pairing(x, beta) / self.pairing(beta, beta)
        out = exact.vec_sub(tuple(Fraction(c) for c in x), exact.vec_scale(t, beta))
        if all(Fraction(c).denominator == 1 for c in out):
            return tuple(int(c) for c in out)
        return out


_WEYL_SIMPLE = {
    "A": lambda d: _factorial(d + 1),
    "B": lambda d: 2**d * _factorial(d),
    "C": lambda d: 2**d * _factorial(d),
    "D": lambda d: 2 ** (d - 1) * _factorial(d),
    "G": lambda d: 12,
}


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def build(kind, rank):
    """Construct a root system of type A/B/C/D (rank <= 6) or G2."""
    kind = kind.upper()
    if kind == "G2":
        kind = "G"
    if kind not in ("A", "B", "C", "D", "G"):
        raise UnsupportedType(f"unsupported type {kind!r}")
    if kind == "G":
        if rank != 2:
            raise UnsupportedType("G root systems exist only in rank 2")
    elif kind == "D":
        if not 3 <= rank <= _MAX_RANK:
            raise UnsupportedType(f"type D needs rank between 3 and {_MAX_RANK}")
    elif kind == "B" or kind == "C":
        if not 2 <= rank <= _MAX_RANK:
            raise UnsupportedType(f"type {kind} needs rank between 2 and {_MAX_RANK}")
    elif not 1 <= rank <= _MAX_RANK:
        raise UnsupportedType(f"type A needs rank between 1 and {_MAX_RANK}")
    return RootSystem(kind, rank)


def weyl_order(rs):
    return _WEYL_SIMPLE[rs.kind](rs.rank)


def parabolic_span(rs, I):
    """Positive roots supported on the simple-root subset I."""
    I = set(I)
    if not I <= set(range(rs.rank)):
        raise UnsupportedType(f"invalid simple-root indices {sorted(I)}")
    return [r for r in rs.positive_roots if all(c == 0 for i, c in enumerate(r) if i not in I)]


def parabolic_order(rs, I):
    """Order of the parabolic subgroup W_I, by orbit of an I-regular point."""
    span = parabolic_span(rs, I)
    q = tuple(-sum(r[i] for r in span) for i in range(rs.rank))
    seen = {q}
    frontier = [q]
    while frontier:
        nxt = []
        for p in frontier:
            for j in I:
                s = rs._simple_reflect(j, p)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return len(seen)


def base_point(rs, I):
    """The monotone base point p0 = -(sum of positive roots outside <I>)."""
    span = set(parabolic_span(rs, I))
    outside = [r for r in rs.positive_roots if r not in span]
    p0 = tuple(-sum(r[i] for r in outside) for i in range(rs.rank))
    for i in I:
        if rs.reflect(rs.simple_roots[i], p0) != p0:
            raise DegenerateBasePoint(f"p0 moved by the simple reflection {i}")
    for r in outside:
        if rs.pairing(p0, r) >= 0:
            raise DegenerateBasePoint(f"p0 not strictly negative against {r}")
    return p0


def weyl_orbit(rs, p0):
    """Orbit of a point under the Weyl group, by simple-reflection closure."""
    p0 = tuple(p0)
    seen = {p0}
    frontier = [p0]
    while frontier:
        nxt = []
        for p in frontier:
            for j in range(rs.rank):
                s = rs._simple_reflect(j, p)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(seen)


def coadjoint_graph(rs, I):
    """The coadjoint-orbit GKM graph of the parabolic choice I.

    Vertices are the Weyl orbit of the base point; two points are joined
    when a positive-root reflection swaps them.
    """
    p0 = base_point(rs, I)
    orbit = weyl_orbit(rs, p0)
    index = {p: i for i, p in enumerate(orbit)}
    degree = len(rs.positive_roots) - len(parabolic_span(rs, I))
    edges = set()
    for p in orbit:
        for beta in rs.positive_roots:
            q = rs.reflect(beta, p)
            if q != p:
                edges.add(tuple(sorted((index[p], index[q]))))
    vertices = [(i, p) for i, p in enumerate(orbit)]
    return GkmGraph(rs.rank, degree, vertices, sorted(edges))
