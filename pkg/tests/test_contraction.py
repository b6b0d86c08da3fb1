import pytest
from hypothesis import given, strategies as st

from plspheres.complex import Complex, ComplexError, faces, from_facets
from plspheres.constructions import cross_polytope_boundary, cyclic_polytope_boundary, simplex_boundary
from plspheres.contraction import contract, link_condition_edges, satisfies_link_condition, theorem_2_1_report

from conftest import subdivided_spheres

OCT = cross_polytope_boundary(3)


def test_contract_octahedron():
    c = contract(OCT, 1, 2)
    assert c == Complex.of([(2, 3, 5), (2, 5, 6), (2, 3, 4), (2, 4, 6), (3, 4, 5), (4, 5, 6)])
    assert len(c.vertices) == 5


def test_contract_small_examples():
    assert contract(simplex_boundary(2), 0, 1) == Complex.of([(1, 2)])
    assert contract(from_facets([[0, 1], [1, 2]]), 0, 1) == Complex.of([(1, 2)])


def test_contract_needs_edge():
    with pytest.raises(ComplexError, match="not an edge"):
        contract(OCT, 1, 4)
    with pytest.raises(ComplexError, match="not an edge"):
        satisfies_link_condition(OCT, 1, 4)
    with pytest.raises(ComplexError, match="not an edge"):
        theorem_2_1_report(OCT, 1, 4)


def test_link_condition_examples():
    assert satisfies_link_condition(OCT, 1, 2)
    for e in faces(simplex_boundary(2), 1):
        assert not satisfies_link_condition(simplex_boundary(2), *e)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_simplex_boundary_edges_fail_link_condition(d):
    # lk(u) and lk(v) share the opposite (d-2)-face, which lk(uv) lacks
    assert link_condition_edges(simplex_boundary(d)) == []


def test_report_octahedron():
    r = theorem_2_1_report(OCT, 1, 2)
    assert r.link_condition and r.deletion_ball.yes and r.star_union_ball.yes and r.contracted_sphere.yes
    assert r.decided and r.consistent
    assert r.to_json()["edge"] == [1, 2]


def test_report_triangle():
    r = theorem_2_1_report(simplex_boundary(2), 0, 1)
    assert not r.link_condition
    assert r.deletion_ball.no
    assert r.contracted_sphere.no


def test_star_union_ball_without_link_condition():
    # st(1) and st(3) cover the sphere minus the triangle 456, a disk,
    # yet 1 and 3 share the neighbour 6 outside lk(13)
    c = cyclic_polytope_boundary(6, 3)
    r = theorem_2_1_report(c, 1, 3)
    assert not r.link_condition
    assert r.star_union_ball.yes
    assert r.deletion_ball.no and r.contracted_sphere.no
    assert r.decided and not r.consistent


@given(subdivided_spheres(), st.data())
def test_contraction_drops_one_vertex(c, data):
    u, v = data.draw(st.sampled_from(sorted(faces(c, 1))))
    out = contract(c, u, v)
    assert u not in out.vertices
    assert len(out.vertices) == len(c.vertices) - 1


@given(subdivided_spheres(dims=(1, 2, 3), max_steps=3), st.data())
def test_link_condition_matches_deletion_and_contraction(c, data):
    u, v = data.draw(st.sampled_from(sorted(faces(c, 1))))
    r = theorem_2_1_report(c, u, v)
    if r.deletion_ball.decided and r.contracted_sphere.decided:
        assert r.link_condition == r.deletion_ball.yes == r.contracted_sphere.yes
