"""Semi-decision procedures for PL-spheres and PL-balls.

Positive answers come only from shellings (a shellable pseudomanifold is a
ball or a sphere); negative answers come from combinatorial and homological
obstructions that every PL-ball or PL-sphere must avoid.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .certificates import ShellingCertificate
from .complex import Complex, ComplexError, all_faces, boundary, link, ridge_counts
from .linalg import MERSENNE31, rank_mod_p
from .verdict import Budget, BudgetExhausted, TriState, no, unknown, yes

PRIMES = (2, MERSENNE31)


@dataclass(frozen=True)
class BettiVector:
    prime: int
    betti: tuple[int, ...]


def is_pseudomanifold(c: Complex) -> tuple[bool, list[tuple[int, ...]]]:
    """Every ridge in at most two facets and the ridge-adjacency graph connected.

    Also returns the ridges lying in exactly one facet.
    """
    if not c.is_pure():
        raise ComplexError("pseudomanifold check requires pure complex")
    counts = ridge_counts(c)
    bdry = sorted(r for r, n in counts.items() if n == 1)
    if any(n > 2 for n in counts.values()):
        return False, bdry
    by_ridge: dict = {}
    for i, f in enumerate(c.facets):
        for r in combinations(f, len(f) - 1):
            by_ridge.setdefault(r, []).append(i)
    adj = [[] for _ in c.facets]
    for ids in by_ridge.values():
        if len(ids) == 2:
            a, b = ids
            adj[a].append(b)
            adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(c.facets), bdry


def _betti_all(c: Complex, p: int) -> dict[int, int]:
    """Reduced Betti numbers in degrees -1..dim over GF(p)."""
    if c.is_void():
        return {}
    by_dim: dict[int, list] = {}
    for f in all_faces(c):
        by_dim.setdefault(len(f) - 1, []).append(f)
    for k in by_dim:
        by_dim[k].sort()
    index = {k: {f: i for i, f in enumerate(fs)} for k, fs in by_dim.items()}
    top = c.dim
    ranks = {}
    for k in range(0, top + 1):
        rows = []
        lower = index[k - 1]
        for f in by_dim[k]:
            row = [0] * len(lower)
            for i in range(len(f)):
                row[lower[f[:i] + f[i + 1:]]] = 1 if i % 2 == 0 else p - 1
            rows.append(row)
        ranks[k] = rank_mod_p(rows, p)
    out = {}
    for k in range(-1, top + 1):
        n = len(by_dim[k])
        out[k] = n - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return out


def reduced_betti(c: Complex, p: int = 2) -> BettiVector:
    b = _betti_all(c, p)
    return BettiVector(p, tuple(b[k] for k in range(0, c.dim + 1)))


def _sphere_betti(c: Complex, dim: int) -> bool:
    for p in PRIMES:
        b = _betti_all(c, p)
        if any(b.get(k, 0) != (1 if k == dim else 0) for k in range(-1, max(dim, c.dim) + 1)):
            return False
    return True


def _acyclic(c: Complex) -> bool:
    for p in PRIMES:
        if any(_betti_all(c, p).values()):
            return False
    return True


def _manifold_obstruction(c: Complex, with_boundary: bool) -> str | None:
    """Links of faces of codimension >= 2 must look like spheres or balls."""
    d = c.d
    seen = set()
    for f in c.facets:
        for k in range(1, d - 1):
            for tau in combinations(f, k):
                if tau in seen:
                    continue
                seen.add(tau)
                lk = link(c, tau)
                if _sphere_betti(lk, d - 1 - k):
                    continue
                if with_boundary and _acyclic(lk):
                    continue
                return f"link of {list(tau)} has the homology of neither a sphere nor a ball"
    return None


class _Shelling:
    def __init__(self, c: Complex, budget: Budget):
        self.facets = c.facets
        self.masks = [sum(1 << v for v in f) for f in c.facets]
        self.d = c.d
        self.budget = budget
        self.failed: set[int] = set()
        n = len(self.facets)
        self.nbrs = [[] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if bin(self.masks[i] & self.masks[j]).count("1") == self.d - 1:
                    self.nbrs[i].append(j)
                    self.nbrs[j].append(i)

    def fits(self, i: int, placed: list[int]) -> bool:
        f = self.masks[i]
        diffs = [f & ~self.masks[j] for j in placed]
        x = 0
        for diff in diffs:
            if diff & (diff - 1) == 0:
                x |= diff
        if not x:
            return False
        return all(diff & x for diff in diffs)

    def run(self) -> list[int] | None:
        n = len(self.facets)
        for start in range(n):
            order = self._extend([start], 1 << start)
            if order is not None:
                return order
        return None

    def _extend(self, placed: list[int], state: int) -> list[int] | None:
        n = len(self.facets)
        if len(placed) == n:
            return placed
        if state in self.failed:
            return None
        self.budget.tick()
        cands = sorted({j for i in placed for j in self.nbrs[i] if not state >> j & 1})
        for j in cands:
            if self.fits(j, placed):
                out = self._extend(placed + [j], state | 1 << j)
                if out is not None:
                    return out
        self.failed.add(state)
        return None


def shelling_search(c: Complex, budget: int | Budget = 10**6) -> TriState:
    b = Budget.coerce(budget)
    if c.is_void() or not c.is_pure():
        return no("not pure", b)
    if len(c.facets) == 1:
        return yes(ShellingCertificate(c.facets), b)
    try:
        order = _Shelling(c, b).run()
    except BudgetExhausted:
        return unknown(b, "budget exhausted")
    if order is None:
        return no("exhaustive search found no shelling", b)
    return yes(ShellingCertificate(tuple(c.facets[i] for i in order)), b)


def _common_obstruction(c: Complex, dim: int | None) -> str | None:
    if c.is_void():
        return "void complex"
    if not c.is_pure():
        return "not pure"
    if dim is not None and c.dim != dim:
        return f"dimension {c.dim}, expected {dim}"
    ok, _ = is_pseudomanifold(c)
    if not ok:
        return "not a pseudomanifold"
    return None


def certify_sphere(c: Complex, budget: int | Budget = 10**6, dim: int | None = None) -> TriState:
    b = Budget.coerce(budget)
    if c.facets == ((),) and dim in (None, -1):
        return yes(ShellingCertificate(c.facets), b)
    reason = _common_obstruction(c, dim)
    if reason:
        return no(reason, b)
    if any(n != 2 for n in ridge_counts(c).values()):
        return no("non-empty boundary", b)
    if not _sphere_betti(c, c.dim):
        return no("wrong Betti numbers", b)
    reason = _manifold_obstruction(c, with_boundary=False)
    if reason:
        return no(reason, b)
    res = shelling_search(c, b)
    if res.yes:
        return res
    return unknown(b, "no shelling found; no obstruction found")


def certify_ball(c: Complex, budget: int | Budget = 10**6, dim: int | None = None) -> TriState:
    b = Budget.coerce(budget)
    if c.facets == ((),):
        return no("the empty face is not a ball", b)
    reason = _common_obstruction(c, dim)
    if reason:
        return no(reason, b)
    bd = boundary(c)
    if bd.is_void():
        return no("empty boundary", b)
    if not _acyclic(c):
        return no("wrong Betti numbers", b)
    if not _sphere_betti(bd, c.dim - 1):
        return no("boundary does not have the homology of a sphere", b)
    reason = _manifold_obstruction(c, with_boundary=True)
    if reason:
        return no(reason, b)
    res = shelling_search(c, b)
    if res.yes:
        return res
    return unknown(b, "no shelling found; no obstruction found")
