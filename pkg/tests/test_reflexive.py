import pytest

from delzant import catalog, reflexive
from delzant.errors import (
    InconsistentCones,
    NotDelzant,
    NotGorensteinOfIndex,
    NotReflexive,
    UnsupportedDimension,
)
from delzant.polytope import Polytope, cube, simplex_cpn

SMOOTH_POLYGONS = ["cp2-triangle", "square", "blowup1", "blowup2", "hexagon"]
DELZANT_REFLEXIVE = SMOOTH_POLYGONS + ["cube", "cp3-simplex", "hypercube4"]


def test_is_delzant():
    for name in DELZANT_REFLEXIVE + ["rect", "unit-square", "std-simplex"]:
        assert reflexive.is_delzant(catalog.load(name)).overall, name
    rep = reflexive.is_delzant(catalog.load("octahedron"))
    assert not rep.overall and not rep.simple
    rep = reflexive.is_delzant(catalog.load("diamond"))
    assert rep.simple and not rep.overall  # vertex cones are not unimodular


def test_is_reflexive():
    for name in DELZANT_REFLEXIVE + ["octahedron", "diamond"]:
        assert reflexive.is_reflexive(catalog.load(name)), name
    assert not reflexive.is_reflexive(catalog.load("rect"))
    assert not reflexive.is_reflexive(catalog.load("unit-square"))


def test_vertex_fano():
    for name in DELZANT_REFLEXIVE:
        assert reflexive.vertex_fano_check(catalog.load(name)).passed, name


def test_vertex_fano_fails_off_reflexive():
    rep = reflexive.vertex_fano_check(catalog.load("rect"))
    assert not rep.passed


def test_normal_contributions_square():
    P = cube(2)
    for e in P.edges():
        contribs = reflexive.normal_contributions(P, e)
        # in dimension 2 every edge lies in the single 2-face
        assert len(contribs) == 1
        assert 2 + contribs[0][1] == P.relative_length(e)


def test_dim2_contribution_sum():
    # sum of contributions = 12 - 3*f0 in dimension 2
    for name in SMOOTH_POLYGONS:
        P = catalog.load(name)
        total = sum(
            a for e in P.edges() for _, a in reflexive.normal_contributions(P, e)
        )
        assert total == 12 - 3 * P.f_vector()[0], name


def test_thm_combinatorics2():
    for name in DELZANT_REFLEXIVE + ["rect", "unit-square", "std-simplex"]:
        assert reflexive.verify_thm_combinatorics2(catalog.load(name)).passed, name


def test_length_decomposition():
    for name in DELZANT_REFLEXIVE:
        assert reflexive.verify_length_decomposition(catalog.load(name)).passed, name


def test_main_theorem():
    for name in DELZANT_REFLEXIVE:
        assert reflexive.verify_main_theorem(catalog.load(name)).passed, name


def test_main_theorem_values():
    assert reflexive.sum_lengths(cube(3)) == 24
    assert reflexive.sum_lengths(simplex_cpn(3)) == 24
    assert reflexive.sum_lengths(cube(4)) == 64


def test_twelve_on_polygons():
    for name in SMOOTH_POLYGONS:
        P = catalog.load(name)
        assert reflexive.sum_lengths(P) + len(P.vertices) == 12, name
        assert reflexive.verify_12_24(P).passed, name


def test_twelve_on_diamond():
    P = catalog.load("diamond")
    rep = reflexive.verify_12_24(P)
    assert rep.passed
    assert reflexive.sum_lengths(P) == 4
    assert reflexive.sum_lengths(P.dual()) == 8


def test_twenty_four():
    for name in ["cube", "cp3-simplex", "octahedron"]:
        rep = reflexive.verify_12_24(catalog.load(name))
        assert rep.passed and rep.lhs == 24, name


def test_twelve_24_unsupported_dim():
    with pytest.raises(UnsupportedDimension):
        reflexive.verify_12_24(catalog.load("hypercube4"))


def test_twelve_24_requires_reflexive():
    with pytest.raises(NotReflexive):
        reflexive.verify_12_24(catalog.load("rect"))


def test_index_values():
    expected = {
        "square": 2, "cube": 2, "hypercube4": 2,
        "cp2-triangle": 3, "cp3-simplex": 4,
        "hexagon": 1, "blowup1": 1, "blowup2": 1,
    }
    for name, k0 in expected.items():
        assert reflexive.index_k0(catalog.load(name)) == k0, name


def test_index_corollary():
    for name in DELZANT_REFLEXIVE:
        P = catalog.load(name)
        rep = reflexive.verify_index_corollary(P)
        assert rep.passed, name
        assert 1 <= reflexive.index_k0(P) <= P.dim + 1


def test_gorenstein():
    assert reflexive.verify_gorenstein(catalog.load("unit-square"), 2).passed
    assert reflexive.verify_gorenstein(catalog.load("std-simplex"), 3).passed
    with pytest.raises(NotGorensteinOfIndex):
        reflexive.verify_gorenstein(catalog.load("unit-square"), 3)


def test_gorenstein_requires_delzant():
    with pytest.raises(NotDelzant):
        reflexive.verify_gorenstein(catalog.load("octahedron"), 1)


def test_reconstruct_from_cones():
    for name in DELZANT_REFLEXIVE:
        P = catalog.load(name)
        cones = {i: P.vertex_weights(i) for i in range(len(P.vertices))}
        assert reflexive.reconstruct_from_cones(cones) == P, name


def test_reconstruct_rejects_bad_cones():
    with pytest.raises(InconsistentCones):
        reflexive.reconstruct_from_cones({0: [(2, 0), (0, 1)], 1: [(1, 0), (0, 1)]})
