"""Generators for test complexes and the default catalog."""

from __future__ import annotations

import random
from itertools import combinations, permutations

from .complex import Complex, ComplexError, all_faces, boundary, star


def simplex(d: int, start: int = 0) -> Complex:
    """The full simplex on ``d + 1`` vertices."""
    return Complex((tuple(range(start, start + d + 1)),))


def simplex_boundary(d: int) -> Complex:
    if d < 1:
        raise ComplexError("no boundary sphere for d < 1")
    return Complex.of(combinations(range(d + 1), d))


def cross_polytope_boundary(d: int) -> Complex:
    """Boundary of the d-dimensional cross-polytope; antipodal pairs are (i, i + d)."""
    if d < 1:
        raise ComplexError("cross-polytope needs d >= 1")
    pairs = [(i, i + d) for i in range(1, d + 1)]
    facets = [[]]
    for a, b in pairs:
        facets = [f + [a] for f in facets] + [f + [b] for f in facets]
    return Complex.of(facets)


def polygon(n: int) -> Complex:
    if n < 3:
        raise ComplexError("a polygon needs at least 3 vertices")
    return Complex.of((i, (i + 1) % n) for i in range(n))


def _gale_even(subset, n: int) -> bool:
    s = set(subset)
    outside = [i for i in range(1, n + 1) if i not in s]
    for a, b in zip(outside, outside[1:]):
        if sum(1 for x in s if a < x < b) % 2:
            return False
    return True


def cyclic_polytope_boundary(n: int, d: int) -> Complex:
    """Boundary of the cyclic d-polytope on vertices 1..n (Gale's evenness condition)."""
    if d < 2 or n < d + 1:
        raise ComplexError(f"cyclic polytope needs d >= 2 and n >= d + 1 (got n={n}, d={d})")
    return Complex.of(s for s in combinations(range(1, n + 1), d) if _gale_even(s, n))


def _offset(c: Complex) -> int:
    return max(c.vertices, default=-1) + 1


def join(a: Complex, b: Complex) -> Complex:
    """Join over disjoint vertex sets; ``b`` is shifted past the largest label of ``a``."""
    k = _offset(a)
    return Complex.of(tuple(fa) + tuple(v + k for v in fb) for fa in a.facets for fb in b.facets)


def cone(c: Complex, apex: int | None = None) -> Complex:
    apex = _offset(c) if apex is None else apex
    if apex in c.vertices:
        raise ComplexError(f"apex {apex} is already a vertex")
    return Complex.of(tuple(f) + (apex,) for f in c.facets)


def suspension(c: Complex) -> Complex:
    a = _offset(c)
    return Complex.of(tuple(f) + (x,) for f in c.facets for x in (a, a + 1))


def cone_over_boundary_union(ball: Complex, v0: int | None = None) -> Complex:
    """``(v0 * boundary(ball)) union ball``: closes a ball into a sphere."""
    bd = boundary(ball)
    if bd.is_void():
        raise ComplexError("ball has empty boundary")
    v0 = _offset(ball) if v0 is None else v0
    if v0 in ball.vertices:
        raise ComplexError(f"v0={v0} is not a fresh label")
    return Complex.of(list(ball.facets) + [tuple(f) + (v0,) for f in bd.facets])


def barycentric_subdivision(c: Complex) -> Complex:
    """Vertices are the non-empty faces of ``c``, indexed in (size, lex) order.

    The index table is attached as ``aliases`` (label -> "a,b,c").
    """
    table = sorted((f for f in all_faces(c) if f), key=lambda f: (len(f), f))
    index = {f: i for i, f in enumerate(table)}
    chains = []
    for facet in c.facets:
        for perm in permutations(facet):
            chains.append([index[tuple(sorted(perm[: i + 1]))] for i in range(len(perm))])
    aliases = {i: ",".join(map(str, f)) for i, f in enumerate(table)}
    return Complex.of(chains, aliases)


def stellar_subdivision(c: Complex, face, new: int | None = None) -> Complex:
    """Replace the star of ``face`` by the cone over its boundary."""
    face = tuple(sorted(face))
    new = _offset(c) if new is None else new
    st = set(star(c, face).facets)
    out = [f for f in c.facets if f not in st]
    for f in st:
        for x in face:
            out.append(tuple(v for v in f if v != x) + (new,))
    return Complex.of(out)


def random_subdivided_sphere(base: Complex, steps: int, seed: int, edges: bool = True) -> Complex:
    """Apply ``steps`` random stellar subdivisions of facets (and edges) to ``base``."""
    rng = random.Random(seed)
    c = base
    for _ in range(steps):
        es = sorted({e for f in c.facets for e in combinations(f, 2)}) if edges else []
        if es and rng.random() < 0.5:
            c = stellar_subdivision(c, rng.choice(es))
        else:
            c = stellar_subdivision(c, rng.choice(c.facets))
    return c


def catalog() -> list[tuple[str, Complex]]:
    """The default catalog of spheres (desk scale)."""
    out: list[tuple[str, Complex]] = []
    for d in range(1, 7):
        out.append((f"simplex_boundary_{d}", simplex_boundary(d)))
    for d in range(2, 6):
        out.append((f"cross_polytope_{d}", cross_polytope_boundary(d)))
    for n in (5, 6):
        out.append((f"polygon_{n}", polygon(n)))
    for n in range(5, 9):
        out.append((f"cyclic_{n}_3", cyclic_polytope_boundary(n, 3)))
    for n in range(6, 9):
        out.append((f"cyclic_{n}_4", cyclic_polytope_boundary(n, 4)))
    for n in (7, 8):
        out.append((f"cyclic_{n}_5", cyclic_polytope_boundary(n, 5)))
    bipyramid = suspension(simplex_boundary(2))
    out.append(("suspension_triangle", bipyramid))
    out.append(("suspension_pentagon", suspension(polygon(5))))
    out.append(("suspension_bipyramid", suspension(bipyramid)))
    out.append(("suspension_cyclic_6_3", suspension(cyclic_polytope_boundary(6, 3))))
    out.append(("suspension_cyclic_6_4", suspension(cyclic_polytope_boundary(6, 4))))
    out.append(("sd_tetrahedron", barycentric_subdivision(simplex_boundary(3))))
    out.append(("sd_octahedron", barycentric_subdivision(cross_polytope_boundary(3))))
    out.append(("sd_bipyramid", barycentric_subdivision(bipyramid)))
    out.append(("stacked_2sphere_8", random_subdivided_sphere(simplex_boundary(3), 4, seed=1, edges=False)))
    out.append(("stacked_3sphere_8", random_subdivided_sphere(simplex_boundary(4), 3, seed=2, edges=False)))
    out.append(("subdivided_octahedron_9", random_subdivided_sphere(cross_polytope_boundary(3), 3, seed=3)))
    out.append(("subdivided_cross4_10", random_subdivided_sphere(cross_polytope_boundary(4), 2, seed=4)))
    return out


def sphere_named(name: str) -> Complex:
    for n, c in catalog():
        if n == name:
            return c
    raise KeyError(name)


def catalog_balls() -> list[tuple[str, Complex]]:
    """Balls used by the ball-centred properties: simplices, vertex deletions
    and vertex stars of catalog spheres with at most 10 vertices."""
    from .complex import delete_vertices

    out: list[tuple[str, Complex]] = []
    for d in range(1, 5):
        out.append((f"simplex_{d}", simplex(d)))
    out.append(("sd_triangle", barycentric_subdivision(simplex(2))))
    out.append(("sd_tetrahedron_solid", barycentric_subdivision(simplex(3))))
    for name, s in catalog():
        if s.dim < 1 or len(s.vertices) > 10 or s.dim > 4:
            continue
        v = s.vertices[0]
        out.append((f"{name}_minus_{v}", delete_vertices(s, [v])))
        w = s.vertices[-1]
        out.append((f"{name}_star_{w}", star(s, [w])))
    return out
