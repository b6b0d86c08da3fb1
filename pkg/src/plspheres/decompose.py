"""Deciders for vertex-decomposable, shrinkable and the three strong classes.

Every search is deterministic: vertices are tried in ascending label order,
facets and edges in lexicographic order.  A search that hits its budget
reports Unknown; a search that finishes without success reports No only if no
sub-check along the way was left undecided.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .certificates import (
    ShellingCertificate,
    SheddingCertificate,
    ShrinkingCertificate,
    StrongCertificate,
    star_union,
)
from .certify import _betti_all, certify_ball
from .complex import (
    Complex,
    ComplexError,
    boundary,
    delete_vertices,
    is_simplex_boundary,
    link,
    one_skeleton,
)
from .contraction import contract, satisfies_link_condition
from .verdict import DEFAULT_BUDGET, Budget, BudgetExhausted, TriState, no, unknown, yes

EMPTY_SPHERE = Complex(((),))


def nj_complex(c: Complex, order, j: int) -> Complex:
    """Union of the closed stars of the first ``j`` vertices of ``order``."""
    if not 1 <= j <= len(order):
        raise ComplexError(f"j={j} out of range 1..{len(order)}")
    return star_union(c, order[:j])


def _is_base_sphere(c: Complex) -> bool:
    return c == EMPTY_SPHERE or is_simplex_boundary(c)


class _Search:
    def __init__(self, budget: Budget):
        self.budget = budget
        self.incomplete = False
        self.vd_memo: dict = {}
        self.ball_memo: dict = {}
        self.strong_memo: dict = {}

    # -- helpers --------------------------------------------------------------

    def ball(self, c: Complex, dim: int) -> ShellingCertificate | None:
        key = (c.facets, dim)
        if key in self.ball_memo:
            return self.ball_memo[key]
        res = certify_ball(c, self.budget, dim=dim)
        if res.unknown:
            if self.budget.spent >= self.budget.limit:
                raise BudgetExhausted
            self.incomplete = True
        cert = res.certificate if res.yes else None
        self.ball_memo[key] = cert
        return cert

    def verdict(self, found, build) -> TriState:
        if found is not None:
            return yes(build(found), self.budget)
        if self.incomplete:
            return unknown(self.budget, "a sub-check was undecided")
        return no("exhaustive search found none", self.budget)

    # -- vertex decomposability ---------------------------------------------------

    def vd(self, c: Complex) -> tuple[bool, SheddingCertificate | None]:
        if c.is_simplex():
            return True, None
        if c.is_void() or not c.is_pure():
            return False, None
        key = c.facets
        if key in self.vd_memo:
            return self.vd_memo[key]
        self.budget.tick()
        out = (False, None)
        if not strongly_connected(c) or _lower_homology(c):
            # vertex-decomposable implies shellable, hence strongly connected
            # with homology only in the top degree
            self.vd_memo[key] = out
            return out
        for v in c.vertices:
            found = self._shed(c, v)
            if found is not None:
                out = (True, found)
                break
        self.vd_memo[key] = out
        return out

    def _shed(self, c: Complex, v: int) -> SheddingCertificate | None:
        """Certificate for ``c`` starting with ``v``, if ``v`` is a shedding vertex."""
        rest = delete_vertices(c, [v])
        if not rest.is_pure() or rest.d != c.d:
            return None
        ok_l, lcert = self.vd(link(c, [v]))
        if not ok_l:
            return None
        ok_r, rcert = self.vd(rest)
        if not ok_r:
            return None
        if rcert is None:
            return SheddingCertificate((v,), rest.facets[0], (lcert,))
        return SheddingCertificate((v,) + rcert.order, rcert.remaining, (lcert,) + rcert.link_certs)

    def shedding_orders(self, c: Complex) -> Iterator[SheddingCertificate]:
        if c.is_simplex():
            yield SheddingCertificate((), c.facets[0], ())
            return
        for v in c.vertices:
            rest = delete_vertices(c, [v])
            if not rest.is_pure() or rest.d != c.d:
                continue
            ok_l, lcert = self.vd(link(c, [v]))
            if not ok_l or not self.vd(rest)[0]:
                continue
            for tail in self.shedding_orders(rest):
                yield SheddingCertificate((v,) + tail.order, tail.remaining, (lcert,) + tail.link_certs)

    # -- shrinkability ------------------------------------------------------------

    def shrink(self, c: Complex, strong: bool = False):
        """First shrinking order (with child certificates when ``strong``)."""
        graph = one_skeleton(c)
        d = c.d
        for sigma in c.facets:
            rest = [v for v in c.vertices if v not in sigma]
            failed: set = set()
            found = self._extend_shrink(c, graph, d, rest, [], [], [], failed, strong)
            if found is not None:
                order, balls, children = found
                return ShrinkingCertificate(sigma, tuple(order), tuple(balls)), children
        return None

    def _extend_shrink(self, c, graph, d, rest, order, balls, children, failed, strong):
        if len(order) == len(rest):
            return order, balls, children
        key = frozenset(order)
        if key in failed:
            return None
        self.budget.tick()
        if order:
            near = set()
            for u in order:
                near |= graph.neighbours(u)
            cands = [v for v in rest if v in near and v not in key]
        else:
            cands = list(rest)
        for v in cands:
            ball = self.ball(star_union(c, order + [v]), d - 1)
            if ball is None:
                continue
            child = None
            if strong and order:
                child = self._strong_link(c, order, v, "strong_shrink")
                if child is None:
                    continue
            out = self._extend_shrink(
                c, graph, d, rest, order + [v], balls + [ball],
                children + ([child] if child is not None else []), failed, strong,
            )
            if out is not None:
                return out
        failed.add(key)
        return None

    # -- strong classes -----------------------------------------------------------

    def _strong_link(self, c: Complex, order, v: int, kind: str) -> StrongCertificate | None:
        bd = boundary(star_union(c, order))
        if v not in bd.vertices:
            return None
        lk = link(bd, [v])
        if kind == "strong_vd":
            return self.strong_vd(lk)
        return self.strong_shrink(lk)

    def strong_vd(self, c: Complex) -> StrongCertificate | None:
        key = ("vd", c.facets)
        if key in self.strong_memo:
            return self.strong_memo[key]
        self.budget.tick()
        out = None
        if _is_base_sphere(c):
            out = StrongCertificate("strong_vd", None, (), "simplex_boundary")
        else:
            ok, cert = self.vd(c)
            if ok and c.d <= 3:
                out = StrongCertificate("strong_vd", cert, (), "low_dimension")
            elif ok:
                found = self._extend_strong_shed(c, c, [], [], set())
                if found is not None:
                    order, children = found
                    out = StrongCertificate("strong_vd", self._shed_cert(c, order), tuple(children))
        self.strong_memo[key] = out
        return out

    def _shed_cert(self, c: Complex, order) -> SheddingCertificate:
        cur = c
        links = []
        for v in order:
            links.append(self.vd(link(cur, [v]))[1])
            cur = delete_vertices(cur, [v])
        return SheddingCertificate(tuple(order), cur.facets[0], tuple(links))

    def _extend_strong_shed(self, sigma, cur, order, children, failed):
        if cur.is_simplex():
            return order, children
        key = frozenset(order)
        if key in failed:
            return None
        self.budget.tick()
        for v in cur.vertices:
            rest = delete_vertices(cur, [v])
            if not rest.is_pure() or rest.d != cur.d:
                continue
            if not self.vd(link(cur, [v]))[0] or not self.vd(rest)[0]:
                continue
            child = None
            if order:
                child = self._strong_link(sigma, order, v, "strong_vd")
                if child is None:
                    continue
            out = self._extend_strong_shed(
                sigma, rest, order + [v], children + ([child] if child else []), failed
            )
            if out is not None:
                return out
        failed.add(key)
        return None

    def strong_shrink(self, c: Complex) -> StrongCertificate | None:
        key = ("shrink", c.facets)
        if key in self.strong_memo:
            return self.strong_memo[key]
        self.budget.tick()
        out = None
        if _is_base_sphere(c):
            out = StrongCertificate("strong_shrink", None, (), "simplex_boundary")
        elif c.d <= 3:
            found = self.shrink(c)
            if found is not None:
                out = StrongCertificate("strong_shrink", found[0], (), "low_dimension")
        else:
            found = self.shrink(c, strong=True)
            if found is not None:
                cert, children = found
                out = StrongCertificate("strong_shrink", cert, tuple(children))
        self.strong_memo[key] = out
        return out

    def strong_ed(self, c: Complex) -> StrongCertificate | None:
        key = ("ed", c.facets)
        if key in self.strong_memo:
            return self.strong_memo[key]
        self.budget.tick()
        out = None
        if _is_base_sphere(c):
            out = StrongCertificate("strong_ed", None, (), "simplex_boundary")
        else:
            for u, v in sorted({e for f in c.facets for e in _pairs(f)}):
                if not satisfies_link_condition(c, u, v):
                    continue
                lk = self.strong_ed(link(c, [u, v]))
                if lk is None:
                    continue
                rest = self.strong_ed(contract(c, u, v))
                if rest is None:
                    continue
                out = StrongCertificate("strong_ed", (u, v), (lk, rest))
                break
        self.strong_memo[key] = out
        return out


def strongly_connected(c: Complex) -> bool:
    """Facets connected through shared ridges."""
    by_ridge: dict = {}
    for i, f in enumerate(c.facets):
        for r in combinations(f, len(f) - 1):
            by_ridge.setdefault(r, []).append(i)
    parent = list(range(len(c.facets)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ids in by_ridge.values():
        for j in ids[1:]:
            parent[find(j)] = find(ids[0])
    return len({find(i) for i in range(len(parent))}) == 1


def _lower_homology(c: Complex) -> bool:
    if c.dim < 1:
        return False
    b = _betti_all(c, 2)
    return any(b[k] for k in range(-1, c.dim))


def _pairs(f):
    return [(f[i], f[j]) for i in range(len(f)) for j in range(i + 1, len(f))]


def _run(budget, body) -> TriState:
    b = Budget.coerce(budget)
    s = _Search(b)
    try:
        return body(s)
    except BudgetExhausted:
        return unknown(b, "budget exhausted")


# -- public API ---------------------------------------------------------------------

def is_vertex_decomposable(c: Complex, budget: int | Budget = DEFAULT_BUDGET) -> TriState:
    return find_shedding_order(c, budget)


def is_shedding_vertex(c: Complex, v: int, budget: int | Budget = DEFAULT_BUDGET) -> TriState:
    if v not in c.vertices:
        raise ComplexError(f"{v} is not a vertex")
    if not c.is_pure():
        raise ComplexError("shedding vertices are defined for pure complexes")

    def body(s: _Search) -> TriState:
        if c.is_simplex():
            return yes(None, s.budget)
        return s.verdict(s._shed(c, v), lambda cert: cert)

    return _run(budget, body)


def find_shedding_order(c: Complex, budget: int | Budget = DEFAULT_BUDGET) -> TriState:
    if c.is_void() or not c.is_pure():
        raise ComplexError("shedding orders are defined for pure complexes")

    def body(s: _Search) -> TriState:
        ok, cert = s.vd(c)
        if ok and cert is None:
            cert = SheddingCertificate((), c.facets[0], ())
        return s.verdict(cert if ok else None, lambda x: x)

    return _run(budget, body)


def iter_shedding_orders(c: Complex, budget: int | Budget = DEFAULT_BUDGET, limit: int = 50):
    """Yield up to ``limit`` shedding orders in lexicographic order.

    Stops silently when the budget runs out.
    """
    s = _Search(Budget.coerce(budget))
    gen = s.shedding_orders(c)
    try:
        for i, cert in enumerate(gen):
            if i >= limit:
                break
            yield cert
    except BudgetExhausted:
        return


def validate_shrinking_order(c: Complex, sigma, order, budget: int | Budget = DEFAULT_BUDGET) -> TriState:
    sigma = tuple(sorted(sigma))
    order = tuple(order)
    if sigma not in c.facets:
        raise ComplexError(f"{list(sigma)} is not a facet")
    if sorted(order) != [v for v in c.vertices if v not in sigma] or len(set(order)) != len(order):
        raise ComplexError("order must enumerate the vertices outside the base facet exactly once")

    def body(s: _Search) -> TriState:
        graph = one_skeleton(c)
        balls = []
        for j in range(1, len(order) + 1):
            if not graph.is_connected(order[:j]):
                return no(f"G_{j} is disconnected", s.budget)
            res = certify_ball(star_union(c, order[:j]), s.budget, dim=c.dim)
            if res.no:
                return no(f"N_{j} is not a ball: {res.obstruction}", s.budget)
            if res.unknown:
                return unknown(s.budget, f"N_{j} undecided")
            balls.append(res.certificate)
        return yes(ShrinkingCertificate(sigma, order, tuple(balls)), s.budget)

    return _run(budget, body)


def find_shrinking_order(c: Complex, budget: int | Budget = DEFAULT_BUDGET) -> TriState:
    def body(s: _Search) -> TriState:
        if is_simplex_boundary(c):
            return yes(None, s.budget)
        s.budget.tick()
        found = s.shrink(c)
        return s.verdict(found[0] if found else None, lambda x: x)

    return _run(budget, body)


def validate_strong_shedding_order(c: Complex, order, budget: int | Budget = DEFAULT_BUDGET) -> TriState:
    """Is ``order`` (already a shedding order) strong, i.e. every
    ``lk(v_{j+1}, boundary(N_j))`` strongly vertex-decomposable?"""
    order = list(order)

    def body(s: _Search) -> TriState:
        children = []
        for j in range(1, len(order)):
            child = s._strong_link(c, order[:j], order[j], "strong_vd")
            if child is None:
                if s.incomplete:
                    return unknown(s.budget)
                return no(f"link of v_{j + 1} in boundary(N_{j}) is not strongly vertex-decomposable", s.budget)
            children.append(child)
        return yes(StrongCertificate("strong_vd", s._shed_cert(c, order), tuple(children)), s.budget)

    return _run(budget, body)


def is_strongly_vertex_decomposable(c: Complex, budget: int | Budget = DEFAULT_BUDGET) -> TriState:
    return _run(budget, lambda s: s.verdict(s.strong_vd(c), lambda x: x))


def is_strongly_shrinkable(c: Complex, budget: int | Budget = DEFAULT_BUDGET) -> TriState:
    return _run(budget, lambda s: s.verdict(s.strong_shrink(c), lambda x: x))


def is_strongly_edge_decomposable(c: Complex, budget: int | Budget = DEFAULT_BUDGET) -> TriState:
    return _run(budget, lambda s: s.verdict(s.strong_ed(c), lambda x: x))
