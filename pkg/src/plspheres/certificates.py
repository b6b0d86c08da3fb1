"""Certificate records and checkers that re-derive every condition from scratch.

The checkers only use the face operators in :mod:`plspheres.complex`; they
never call the search procedures that produced the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .complex import (
    Complex,
    boundary,
    delete_vertices,
    is_simplex_boundary,
    link,
    one_skeleton,
    ridge_counts,
    star,
    union,
)


@dataclass(frozen=True)
class ShellingCertificate:
    facet_order: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"kind": "shelling", "order": [list(f) for f in self.facet_order]}


@dataclass(frozen=True)
class SheddingCertificate:
    """Shedding order plus, for each step, a certificate that the link is
    vertex-decomposable (``None`` when that link is a simplex)."""

    order: tuple[int, ...]
    remaining: tuple[int, ...]
    link_certs: tuple[Optional["SheddingCertificate"], ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": "shedding",
            "order": list(self.order),
            "remaining": list(self.remaining),
            "links": [c.to_json() if c else None for c in self.link_certs],
        }


@dataclass(frozen=True)
class ShrinkingCertificate:
    base_facet: tuple[int, ...]
    order: tuple[int, ...]
    ball_certs: tuple[ShellingCertificate, ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": "shrinking",
            "base_facet": list(self.base_facet),
            "order": list(self.order),
            "balls": [c.to_json() for c in self.ball_certs],
        }


@dataclass(frozen=True)
class StrongCertificate:
    """Recursive certificate for the strong classes.

    kind is ``strong_vd``, ``strong_shrink`` or ``strong_ed``.  For the first
    two, ``root`` is the shedding/shrinking certificate and ``children[j-1]``
    certifies ``lk(v_{j+1}, boundary(N_j))``.  For ``strong_ed``, ``root`` is
    the contracted edge ``(u, v)`` (u removed) and the children certify the
    edge link and the contraction.  ``base`` names the base case, if any.
    """

    kind: str
    root: object = None
    children: tuple["StrongCertificate", ...] = ()
    base: str | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.base:
            out["base"] = self.base
        if isinstance(self.root, tuple):
            out["edge"] = list(self.root)
        elif self.root is not None:
            out["root"] = self.root.to_json()
        if self.children:
            out["children"] = [ch.to_json() for ch in self.children]
        return out


# -- checkers -----------------------------------------------------------------

def check_shelling(c: Complex, cert: ShellingCertificate) -> bool:
    order = [tuple(sorted(f)) for f in cert.facet_order]
    if sorted(order) != list(c.facets) or len(set(order)) != len(order):
        return False
    if not c.is_pure():
        return False
    d = c.d
    for j in range(1, len(order)):
        f = set(order[j])
        meets = [f & set(g) for g in order[:j]]
        # intersection with the earlier union must be generated by ridges of f
        ridges = [m for m in meets if len(m) == d - 1]
        if not ridges:
            return False
        for m in meets:
            if not any(m <= r for r in ridges):
                return False
    return True


def check_pseudomanifold_ball(c: Complex) -> bool:
    counts = ridge_counts(c)
    return all(n <= 2 for n in counts.values()) and any(n == 1 for n in counts.values())


def check_pseudomanifold_sphere(c: Complex) -> bool:
    return all(n == 2 for n in ridge_counts(c).values())


def check_ball(c: Complex, cert: ShellingCertificate) -> bool:
    return c.is_pure() and check_pseudomanifold_ball(c) and check_shelling(c, cert)


def check_sphere(c: Complex, cert: ShellingCertificate) -> bool:
    return c.is_pure() and check_pseudomanifold_sphere(c) and check_shelling(c, cert)


def check_vertex_decomposable(c: Complex, cert: SheddingCertificate | None) -> bool:
    if not c.is_pure() or c.is_void():
        return False
    if c.is_simplex():
        return cert is None or (not cert.order and tuple(cert.remaining) == c.facets[0])
    if cert is None or len(cert.link_certs) != len(cert.order):
        return False
    d = c.d
    if len(cert.order) != len(c.vertices) - d:
        return False
    cur = c
    for v, lcert in zip(cert.order, cert.link_certs):
        if v not in cur.vertices:
            return False
        rest = delete_vertices(cur, [v])
        if not rest.is_pure() or rest.d != d:
            return False
        if not check_vertex_decomposable(link(cur, [v]), lcert):
            return False
        cur = rest
    return cur.is_simplex() and cur.facets[0] == tuple(cert.remaining)


def star_union(c: Complex, vs) -> Complex:
    return union(*(star(c, [v]) for v in vs))


def check_shrinking(c: Complex, cert: ShrinkingCertificate | None) -> bool:
    """Shrinking-order conditions; the sphere property of ``c`` is checked separately."""
    if is_simplex_boundary(c) and cert is None:
        return True
    if cert is None:
        return False
    sigma = tuple(cert.base_facet)
    if sigma not in c.facets:
        return False
    rest = sorted(set(c.vertices) - set(sigma))
    if sorted(cert.order) != rest or len(cert.ball_certs) != len(cert.order):
        return False
    graph = one_skeleton(c)
    d = c.d
    for j in range(1, len(cert.order) + 1):
        prefix = cert.order[:j]
        if not graph.is_connected(prefix):
            return False
        nj = star_union(c, prefix)
        if nj.d != d or not check_ball(nj, cert.ball_certs[j - 1]):
            return False
    return True


def link_condition(c: Complex, u: int, v: int) -> bool:
    from .complex import all_faces

    lu = all_faces(link(c, [u]))
    lv = all_faces(link(c, [v]))
    return lu & lv == all_faces(link(c, [u, v]))


def check_strong(c: Complex, cert: StrongCertificate) -> bool:
    if cert.kind == "strong_ed":
        return _check_strong_ed(c, cert)
    if cert.kind not in ("strong_vd", "strong_shrink"):
        return False
    if cert.base == "simplex_boundary":
        return is_simplex_boundary(c)
    if cert.kind == "strong_vd":
        if not check_vertex_decomposable(c, cert.root):
            return False
        order = cert.root.order if cert.root is not None else ()
    else:
        if not check_shrinking(c, cert.root):
            return False
        order = cert.root.order if cert.root is not None else ()
    if cert.base == "low_dimension":
        return c.d <= 3
    if len(cert.children) != max(len(order) - 1, 0):
        return False
    for j in range(1, len(order)):
        bd = boundary(star_union(c, order[:j]))
        if (order[j],) not in {(v,) for v in bd.vertices}:
            return False
        lk = link(bd, [order[j]])
        if not check_sphere_shape(lk) or not check_strong(lk, cert.children[j - 1]):
            return False
    return True


def check_sphere_shape(c: Complex) -> bool:
    # {emptyset} is the (-1)-sphere
    if c.facets == ((),):
        return True
    return c.is_pure() and not c.is_void() and check_pseudomanifold_sphere(c)


def _check_strong_ed(c: Complex, cert: StrongCertificate) -> bool:
    if cert.base == "simplex_boundary":
        return is_simplex_boundary(c) or c.facets == ((),)
    if not isinstance(cert.root, tuple) or len(cert.children) != 2:
        return False
    u, v = cert.root
    if u == v or [u, v] not in c:
        return False
    if not link_condition(c, u, v):
        return False
    contracted = Complex.of({v if x == u else x for x in f} for f in c.facets)
    return _check_strong_ed(link(c, [u, v]), cert.children[0]) and _check_strong_ed(
        contracted, cert.children[1]
    )
