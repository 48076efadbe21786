import random

import pytest

from delzant import catalog, oracle
from delzant.errors import UnsupportedDimension

POLYTOPES = catalog.names("polytope")


def test_segment_counts():
    assert oracle.lattice_points_on_segment((-1, -1), (1, -1)) == 3
    assert oracle.lattice_points_on_segment((0, 0), (2, 4)) == 3
    assert oracle.lattice_points_on_segment((0, 0, 0), (1, 1, 1)) == 2


def test_lengths_match_oracle_on_catalog():
    for name in POLYTOPES:
        P = catalog.load(name)
        for e in P.edges():
            count = oracle.lattice_points_on_segment(P.vertices[e[0]], P.vertices[e[1]])
            assert count - 1 == P.relative_length(e), (name, e)


def test_brute_f_vector_examples():
    assert oracle.brute_f_vector(catalog.load("square")) == (4, 4, 1)
    assert oracle.brute_f_vector(catalog.load("octahedron")) == (6, 12, 8, 1)
    assert oracle.brute_f_vector(catalog.load("cube")) == (8, 12, 6, 1)


def test_brute_f_vector_matches_on_catalog():
    for name in POLYTOPES:
        P = catalog.load(name)
        assert oracle.brute_f_vector(P) == P.f_vector(), name


def test_dual_edge_lengths():
    for name in ["cp2-triangle", "square", "blowup1", "blowup2", "hexagon",
                 "cube", "cp3-simplex"]:
        assert oracle.dual_edge_lengths_check(catalog.load(name)).passed, name


def test_dual_edge_lengths_unsupported():
    with pytest.raises(UnsupportedDimension):
        oracle.dual_edge_lengths_check(catalog.load("hypercube4"))


def test_randomized_dilations_translations():
    rng = random.Random(20260824)
    small = [n for n in POLYTOPES if n != "hypercube4"]
    for _ in range(100):
        name = rng.choice(small)
        P = catalog.load(name)
        r = rng.randint(1, 3)
        shift = tuple(rng.randint(-3, 3) for _ in range(P.dim))
        Q = P.dilate(r).translate(shift)
        assert oracle.brute_f_vector(Q) == Q.f_vector() == P.f_vector(), name
        for e in Q.edges():
            count = oracle.lattice_points_on_segment(Q.vertices[e[0]], Q.vertices[e[1]])
            assert count - 1 == Q.relative_length(e), (name, e)
