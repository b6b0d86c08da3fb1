import json

import pytest
from hypothesis import given, strategies as st

from oracles import f_vector as oracle_f, faces_by_vertex_subsets, h_vector as oracle_h, link_faces
from plspheres.complex import (
    Complex,
    ComplexError,
    all_faces,
    antistar,
    boundary,
    complex_from_json,
    complex_to_json,
    dehn_sommerville_holds,
    delete_face,
    faces,
    fhg_vectors,
    from_facets,
    h_from_f,
    h_to_f,
    link,
    load_complex,
    one_skeleton,
    save_complex,
    star,
)
from plspheres.constructions import (
    catalog,
    cross_polytope_boundary,
    simplex,
    simplex_boundary,
    suspension,
)

from conftest import subdivided_spheres

OCT = cross_polytope_boundary(3)  # antipodal pairs (1,4), (2,5), (3,6)


def test_from_facets_examples():
    tri = from_facets([[0, 1], [1, 2], [0, 2]])
    assert tri.facets == ((0, 1), (0, 2), (1, 2)) and tri.dim == 1
    assert from_facets([[0, 1, 2], [0, 1]]).facets == ((0, 1, 2),)
    s0 = from_facets([[0], [1]])
    assert s0.facets == ((0,), (1,)) and s0.dim == 0


@pytest.mark.parametrize("bad", [[], [[0, 0, 1]], [[-1, 2]], [[0, "a"]]])
def test_from_facets_rejects(bad):
    with pytest.raises(ComplexError):
        from_facets(bad)


def test_empty_complex_message():
    with pytest.raises(ComplexError, match="empty complex"):
        from_facets([])


def test_canonical_form_is_label_sensitive():
    a = from_facets([[2, 1], [3, 2], [1, 3]])
    assert a == from_facets([[1, 2], [2, 3], [1, 3]])
    assert a != a.relabel({1: 1, 2: 2, 3: 4})


def test_faces_examples():
    assert len(faces(simplex_boundary(3), 1)) == 6
    assert len(faces(OCT, 2)) == 8
    assert faces(OCT, -1) == {()}
    assert faces(OCT, 7) == set()


def test_vectors_examples():
    v = fhg_vectors(simplex_boundary(3))
    assert (v.f, v.h, v.g) == ((1, 4, 6, 4), (1, 1, 1, 1), (1, 0))
    v = fhg_vectors(OCT)
    assert (v.f, v.h, v.g) == ((1, 6, 12, 8), (1, 3, 3, 1), (1, 2))
    v = fhg_vectors(suspension(simplex_boundary(2)))
    assert (v.f, v.h) == ((1, 5, 9, 6), (1, 2, 2, 1))


def test_h_to_f_examples():
    assert h_to_f((1, 1, 1, 1), 3) == (1, 4, 6, 4)
    assert h_to_f((1, 3, 3, 1), 3) == (1, 6, 12, 8)
    assert h_to_f((1,), 0) == (1,)
    with pytest.raises(ComplexError):
        h_to_f((1, 2), 3)


def test_dehn_sommerville_examples():
    assert dehn_sommerville_holds((1, 3, 3, 1))
    assert not dehn_sommerville_holds((1, 2, 1, 1))
    assert dehn_sommerville_holds((1,))


def test_h_vector_needs_pure():
    with pytest.raises(ComplexError, match="h-vector requires pure complex"):
        fhg_vectors(from_facets([[0, 1, 2], [2, 3]]))


def test_big_integers_do_not_overflow():
    f = (1, 10**30, 3 * 10**30, 2 * 10**30)
    assert h_to_f(h_from_f(f, 3), 3) == f


def test_link_star_examples():
    assert link(simplex_boundary(3), [0]) == Complex.of([(1, 2), (1, 3), (2, 3)])
    assert link(OCT, [1, 2]) == Complex.of([(3,), (6,)])
    fan = antistar(OCT, [1])
    assert fan == star(OCT, [4]) and len(fan.facets) == 4
    with pytest.raises(ComplexError, match="not a face"):
        link(OCT, [1, 4])
    with pytest.raises(ComplexError, match="not a face"):
        star(OCT, [1, 4])


def test_one_skeleton_examples():
    g = one_skeleton(OCT)
    assert len(g.vertices) == 6 and len(g.edges) == 12
    g = one_skeleton(simplex_boundary(4))
    assert len(g.edges) == 10
    g = one_skeleton(from_facets([[0], [1]]))
    assert len(g.vertices) == 2 and not g.edges


def test_boundary_examples():
    assert boundary(simplex(2)) == Complex.of([(0, 1), (0, 2), (1, 2)])
    assert boundary(simplex_boundary(3)).is_void()
    square = boundary(from_facets([[0, 1, 2], [1, 2, 3]]))
    assert square == Complex.of([(0, 1), (0, 2), (1, 3), (2, 3)])
    with pytest.raises(ComplexError):
        boundary(from_facets([[0, 1, 2], [2, 3]]))


def test_json_round_trip(tmp_path):
    p = tmp_path / "oct.json"
    save_complex(OCT, p, "oct")
    name, c = load_complex(p)
    assert name == "oct" and c == OCT
    assert complex_from_json(json.dumps(complex_to_json(OCT)))[1] == OCT


@pytest.mark.parametrize("text", ["{", "[]", '{"facets": 3}', '{"facets": [[0, 0]]}'])
def test_load_malformed(tmp_path, text):
    p = tmp_path / "bad.json"
    p.write_text(text)
    with pytest.raises(ComplexError):
        load_complex(p)


# -- oracle agreement over the catalog ------------------------------------------------

@pytest.mark.parametrize("name,c", [(n, c) for n, c in catalog() if len(c.vertices) <= 12])
def test_faces_and_vectors_match_brute_force(name, c):
    assert all_faces(c) == faces_by_vertex_subsets(c.facets)
    v = fhg_vectors(c)
    assert v.f == oracle_f(c.facets)
    assert v.h == oracle_h(v.f)


@pytest.mark.parametrize("name,c", catalog())
def test_catalog_vectors(name, c):
    v = fhg_vectors(c)
    assert h_to_f(v.h, v.d) == v.f
    assert sum(v.h) == v.f[-1]
    assert dehn_sommerville_holds(v)
    assert v.g == tuple(v.h[j] - v.h[j - 1] if j else 1 for j in range(v.d // 2 + 1))
    assert boundary(c).is_void()


# -- properties ----------------------------------------------------------------------------

@given(subdivided_spheres())
def test_round_trip_and_facet_sum(c):
    v = fhg_vectors(c)
    assert h_to_f(v.h, v.d) == v.f
    assert sum(v.h) == v.f[-1]
    assert dehn_sommerville_holds(v)


@given(subdivided_spheres(), st.data())
def test_link_composition(c, data):
    sigma = data.draw(st.sampled_from(sorted(f for f in all_faces(c) if f)))
    v = data.draw(st.sampled_from(sigma))
    rest = [x for x in sigma if x != v]
    assert link(c, sigma) == link(link(c, [v]), rest)
    assert all_faces(link(c, sigma)) == link_faces(c.facets, sigma)


@given(subdivided_spheres(), st.data())
def test_delete_vertex_is_antistar(c, data):
    v = data.draw(st.sampled_from(c.vertices))
    assert delete_face(c, [v]) == antistar(c, [v])


@given(subdivided_spheres(), st.data())
def test_delete_face_definition(c, data):
    sigma = set(data.draw(st.sampled_from(sorted(f for f in all_faces(c) if f))))
    expected = {f for f in all_faces(c) if not sigma <= set(f)}
    assert all_faces(delete_face(c, sigma)) == expected
