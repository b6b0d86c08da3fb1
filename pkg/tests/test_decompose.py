import pytest
from hypothesis import given, strategies as st

from oracles import faces_by_vertex_subsets
from plspheres.certificates import (
    check_shrinking,
    check_strong,
    check_vertex_decomposable,
    star_union,
)
from plspheres.complex import ComplexError, from_facets, one_skeleton, star
from plspheres.constructions import catalog, cross_polytope_boundary, simplex, simplex_boundary, sphere_named
from plspheres.decompose import (
    find_shedding_order,
    find_shrinking_order,
    is_shedding_vertex,
    is_strongly_edge_decomposable,
    is_strongly_shrinkable,
    is_strongly_vertex_decomposable,
    iter_shedding_orders,
    nj_complex,
    validate_shrinking_order,
    validate_strong_shedding_order,
)

from conftest import stacked_spheres, subdivided_spheres

OCT = cross_polytope_boundary(3)
BOWTIE = from_facets([[0, 1, 2], [2, 3, 4]])


def test_shedding_vertex_examples():
    for v in range(4):
        assert is_shedding_vertex(simplex_boundary(3), v).yes
    for v in OCT.vertices:
        assert is_shedding_vertex(OCT, v).yes
    assert is_shedding_vertex(simplex(2), 0).yes
    with pytest.raises(ComplexError):
        is_shedding_vertex(OCT, 9)


def test_find_shedding_order_examples():
    res = find_shedding_order(OCT)
    assert res.yes and len(res.certificate.order) == 3
    for d in range(1, 6):
        res = find_shedding_order(simplex_boundary(d))
        assert res.yes and len(res.certificate.order) == 1
    with pytest.raises(ComplexError):
        find_shedding_order(from_facets([[0, 1, 2], [2, 3]]))


def test_not_vertex_decomposable():
    assert find_shedding_order(BOWTIE).no
    assert find_shedding_order(from_facets([[0, 1], [2, 3]])).no


def test_lexicographic_first_order():
    first = next(iter(iter_shedding_orders(OCT)))
    assert find_shedding_order(OCT).certificate.order == first.order


def test_budget_zero_is_unknown():
    assert find_shrinking_order(OCT, 0).unknown
    assert find_shedding_order(OCT, 0).unknown
    assert is_strongly_edge_decomposable(sphere_named("cyclic_7_4"), 0).unknown


def test_validate_shrinking_examples():
    res = validate_shrinking_order(OCT, (1, 2, 3), (4, 5, 6))
    assert res.yes and check_shrinking(OCT, res.certificate)
    with pytest.raises(ComplexError):
        validate_shrinking_order(simplex_boundary(3), (0, 1, 2), ())
    with pytest.raises(ComplexError):
        validate_shrinking_order(OCT, (1, 2, 3), (4, 5))


def test_disconnected_prefix_is_no():
    c = sphere_named("sd_tetrahedron")
    g = one_skeleton(c)
    sigma = c.facets[0]
    rest = [v for v in c.vertices if v not in sigma]
    a = rest[0]
    b = next(v for v in rest if v != a and v not in g.neighbours(a))
    order = [a, b] + [v for v in rest if v not in (a, b)]
    res = validate_shrinking_order(c, sigma, order)
    assert res.no and "G_2" in res.obstruction


def test_find_shrinking_examples():
    res = find_shrinking_order(OCT)
    assert res.yes and check_shrinking(OCT, res.certificate)
    assert find_shrinking_order(simplex_boundary(4)).yes


def test_nj_complex():
    assert nj_complex(OCT, (1, 2, 3), 1) == star(OCT, [1])
    n2 = nj_complex(OCT, (1, 2, 3), 2)
    # brute force: triangles of the octahedron meeting {1, 2}
    tri = [f for f in faces_by_vertex_subsets(OCT.facets) if len(f) == 3 and {1, 2} & set(f)]
    assert len(n2.facets) == len(tri) == 6
    with pytest.raises(ComplexError):
        nj_complex(OCT, (1, 2, 3), 0)
    with pytest.raises(ComplexError):
        nj_complex(OCT, (1, 2, 3), 4)


def test_strong_classes_examples():
    for c in (OCT, simplex_boundary(5), sphere_named("cyclic_7_4")):
        for fn in (is_strongly_vertex_decomposable, is_strongly_shrinkable, is_strongly_edge_decomposable):
            res = fn(c)
            assert res.yes and check_strong(c, res.certificate)
    assert is_strongly_edge_decomposable(simplex_boundary(4)).certificate.base == "simplex_boundary"


def test_strong_shedding_order_validation():
    c = sphere_named("cyclic_7_4")
    for cert in iter_shedding_orders(c, limit=5):
        res = validate_strong_shedding_order(c, cert.order)
        assert res.yes and check_strong(c, res.certificate)


def test_strong_ed_certificate_checker_rejects_tampering():
    from dataclasses import replace

    cert = is_strongly_edge_decomposable(OCT).certificate
    assert check_strong(OCT, cert)
    bad = replace(cert, root=(1, 4))
    assert not check_strong(OCT, bad)


def test_deciders_are_deterministic():
    c = sphere_named("sd_bipyramid")
    a = is_strongly_shrinkable(c)
    b = is_strongly_shrinkable(c)
    assert a.certificate.to_json() == b.certificate.to_json()
    assert a.budget_spent == b.budget_spent


@pytest.mark.parametrize("name,c", [(n, c) for n, c in catalog() if len(c.vertices) <= 14])
def test_catalog_certificates_revalidate(name, c):
    vd = find_shedding_order(c)
    assert vd.yes and check_vertex_decomposable(c, vd.certificate)
    sh = find_shrinking_order(c)
    assert sh.yes and check_shrinking(c, sh.certificate)
    for fn in (is_strongly_vertex_decomposable, is_strongly_shrinkable, is_strongly_edge_decomposable):
        res = fn(c)
        assert res.yes and check_strong(c, res.certificate)


@given(stacked_spheres(dims=(2, 3), max_steps=4))
def test_stacked_spheres_are_in_every_class(c):
    vd = find_shedding_order(c)
    assert vd.yes and check_vertex_decomposable(c, vd.certificate)
    ed = is_strongly_edge_decomposable(c)
    assert ed.yes and check_strong(c, ed.certificate)


@given(subdivided_spheres(dims=(2,), max_steps=4))
def test_two_spheres_are_strongly_edge_decomposable(c):
    res = is_strongly_edge_decomposable(c)
    assert res.yes and check_strong(c, res.certificate)


@given(subdivided_spheres(dims=(2, 3), max_steps=3), st.integers(0, 5))
def test_shrinking_certificate_prefixes(c, j):
    res = find_shrinking_order(c)
    if not res.yes or res.certificate is None:
        return
    order = res.certificate.order
    j = 1 + j % len(order)
    assert nj_complex(c, order, j) == star_union(c, order[:j])


def test_shrinking_order_need_not_survive_contraction():
    # st(4) u st(5) is a ball, but edge 45 fails the link condition
    from plspheres.constructions import suspension
    from plspheres.contraction import contract, satisfies_link_condition

    for c, sigma, order in [
        (sphere_named("subdivided_octahedron_9"), (1, 2, 3), (4, 5, 6, 7, 8, 9)),
        (suspension(sphere_named("subdivided_octahedron_9")), (1, 2, 3, 10), (4, 5, 6, 7, 8, 9, 11)),
    ]:
        assert validate_shrinking_order(c, sigma, order).yes
        assert not satisfies_link_condition(c, 4, 5)
        assert validate_shrinking_order(contract(c, 4, 5), sigma, order[1:]).no
        assert is_strongly_edge_decomposable(c).yes
