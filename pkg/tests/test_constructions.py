from math import factorial

import pytest
from hypothesis import given, strategies as st

from plspheres.certify import certify_sphere, reduced_betti, shelling_search
from plspheres.complex import Complex, ComplexError, f_vector, fhg_vectors
from plspheres.constructions import (
    barycentric_subdivision,
    catalog,
    catalog_balls,
    cone,
    cone_over_boundary_union,
    cross_polytope_boundary,
    cyclic_polytope_boundary,
    join,
    polygon,
    simplex,
    simplex_boundary,
    sphere_named,
    suspension,
)

from conftest import subdivided_spheres


def _euler(c):
    return sum((-1) ** i * n for i, n in enumerate(f_vector(c)[1:]))


def test_simplex_boundary():
    assert simplex_boundary(1) == Complex.of([(0,), (1,)])
    assert len(simplex_boundary(3).facets) == 4
    with pytest.raises(ComplexError, match="no boundary sphere"):
        simplex_boundary(0)


def test_cross_polytope():
    assert cross_polytope_boundary(2) == polygon(4).relabel({0: 1, 1: 2, 2: 3, 3: 4})
    assert len(cross_polytope_boundary(3).facets) == 8
    assert cross_polytope_boundary(1) == Complex.of([(1,), (2,)])


def test_cyclic():
    assert cyclic_polytope_boundary(5, 4) == simplex_boundary(4).relabel({i: i + 1 for i in range(5)})
    assert len(cyclic_polytope_boundary(6, 4).facets) == 9
    with pytest.raises(ComplexError):
        cyclic_polytope_boundary(4, 4)


def test_join_cone_suspension():
    s0 = simplex_boundary(1)
    assert cone(s0) == Complex.of([(0, 2), (1, 2)])
    bip = suspension(simplex_boundary(2))
    assert len(bip.facets) == 6 and len(bip.vertices) == 5
    assert join(simplex(1), simplex(1)) == Complex.of([(0, 1, 2, 3)])


def test_cone_over_boundary_union():
    assert cone_over_boundary_union(simplex(2)) == simplex_boundary(3)
    assert cone_over_boundary_union(simplex(1)) == simplex_boundary(2)
    with pytest.raises(ComplexError):
        cone_over_boundary_union(simplex_boundary(2))


def test_barycentric_subdivision_examples():
    assert len(barycentric_subdivision(simplex(1)).facets) == 2
    sd = barycentric_subdivision(simplex_boundary(2))
    assert len(sd.facets) == 6 and len(sd.vertices) == 6
    assert len(barycentric_subdivision(simplex(2)).facets) == 6
    assert barycentric_subdivision(simplex(2)).aliases[6] == "0,1,2"


@pytest.mark.parametrize("name", ["sd_tetrahedron", "sd_octahedron", "sd_bipyramid"])
def test_subdivision_counts(name):
    base = {"sd_tetrahedron": simplex_boundary(3), "sd_octahedron": cross_polytope_boundary(3),
            "sd_bipyramid": suspension(simplex_boundary(2))}[name]
    sd = sphere_named(name)
    assert _euler(sd) == _euler(base)
    assert f_vector(sd)[-1] == factorial(base.d) * f_vector(base)[-1]
    assert len(sd.vertices) == sum(f_vector(base)[1:])


def test_catalog_names_unique_and_balls_large_enough():
    names = [n for n, _ in catalog()]
    assert len(names) == len(set(names))
    assert len(catalog_balls()) >= 20


@pytest.mark.parametrize("n,d", [(n, d) for d in (2, 3, 4, 5) for n in range(d + 1, d + 5)])
def test_cyclic_shellable_spheres(n, d):
    c = cyclic_polytope_boundary(n, d)
    assert certify_sphere(c).yes
    assert shelling_search(c).yes


@given(subdivided_spheres(dims=(1, 2), max_steps=2), subdivided_spheres(dims=(0, 1), max_steps=2))
def test_join_of_spheres_is_sphere(a, b):
    assert certify_sphere(join(a, b)).yes


@given(subdivided_spheres(dims=(1, 2), max_steps=3))
def test_suspension_is_sphere(c):
    s = suspension(c)
    assert certify_sphere(s).yes
    assert reduced_betti(s).betti[-1] == 1


@given(st.sampled_from([simplex(2), simplex(3), barycentric_subdivision(simplex(2))]))
def test_barycentric_subdivision_preserves_euler(c):
    sd = barycentric_subdivision(c)
    assert _euler(sd) == _euler(c)
    assert fhg_vectors(sd).f[-1] == factorial(c.d) * fhg_vectors(c).f[-1]
