"""Artinian reductions of Stanley-Reisner rings and strong Lefschetz witnesses.

Two exact routes compute the graded pieces of ``A/Theta`` with
``A = F[x_v] / I_Sigma``:

* ``ambient``: work in the face-monomial basis of ``A_m`` and quotient by the
  span of ``theta_i * A_{m-1}``;
* ``substitute``: row-reduce the thetas, solve for their pivot variables, and
  work in the polynomial ring on the remaining variables modulo the images of
  the minimal non-faces.

Both give the same dimensions; ``auto`` picks whichever has the smaller
monomial bases.  Arithmetic is over GF(p) (own elimination) or over Q (FLINT).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb

from .complex import Complex, ComplexError, all_faces, dehn_sommerville_holds, fhg_vectors
from .linalg import MERSENNE31, is_prime, rank_mod_p, rank_rational, rref_mod_p, rref_rational

Mono = tuple[int, ...]  # sorted multiset of vertex labels
RATIONAL = "rational"


@dataclass(frozen=True)
class LinearForm:
    coefficients: dict

    def at(self, v: int):
        return self.coefficients.get(v, 0)


@dataclass(frozen=True)
class MonomialBasis:
    degree: int
    vertices: tuple[int, ...]
    monomials: tuple[tuple[int, ...], ...]  # exponent vectors aligned with ``vertices``


@dataclass
class ArtinianReduction:
    dims: tuple[int, ...]
    bases: list[list[Mono]]  # complement bases, as monomials (sorted label multisets)
    method: str


@dataclass(frozen=True)
class LefschetzWitness:
    field: str  # "gf" or "rational"
    p: int | None
    vertices: tuple[int, ...]
    thetas: tuple[tuple[int, ...], ...]
    omega: tuple[int, ...]
    quotient_dims: tuple[int, ...]
    map_ranks: tuple[int, ...]
    seed: int
    trial: int = 0

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "p": self.p,
            "thetas": [list(t) for t in self.thetas],
            "omega": list(self.omega),
            "dims": list(self.quotient_dims),
            "ranks": list(self.map_ranks),
            "seed": self.seed,
        }


# -- fields -------------------------------------------------------------------------

class _GF:
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"field modulus {p} is not prime")
        self.p = p

    def coerce(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, self.p - 2, self.p) % self.p
        return int(x) % self.p

    def rref(self, rows, ncols):
        red, piv = rref_mod_p(rows, self.p, ncols) if rows else (None, [])
        if red is None:
            return [], []
        return [[int(x) for x in r] for r in red], piv

    def rank(self, rows, ncols) -> int:
        return rank_mod_p(rows, self.p) if rows and ncols else 0

    def inv(self, x):
        return pow(x, self.p - 2, self.p)


class _Q:
    p = None

    def coerce(self, x):
        return Fraction(x)

    def rref(self, rows, ncols):
        return rref_rational(rows, ncols)

    def rank(self, rows, ncols) -> int:
        return rank_rational(rows, ncols)

    def inv(self, x):
        return 1 / Fraction(x)


def _field(f):
    if f == RATIONAL:
        return _Q()
    return _GF(int(f))


# -- polynomials as {sorted-label-multiset: coeff} ------------------------------------

def _mul(a: dict, b: dict, fld, keep=None) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(sorted(ma + mb))
            if keep is not None and not keep(m):
                continue
            out[m] = fld.coerce(out.get(m, 0) + ca * cb)
    return {m: c for m, c in out.items() if c}


def _power(lin: dict, k: int, fld, keep=None) -> dict:
    out = {(): fld.coerce(1)}
    for _ in range(k):
        out = _mul(out, lin, fld, keep)
    return out


def _as_form(t, vertices) -> dict:
    if isinstance(t, LinearForm):
        return {v: t.at(v) for v in vertices}
    if isinstance(t, dict):
        return {v: t.get(v, 0) for v in vertices}
    t = list(t)
    if len(t) != len(vertices):
        raise ComplexError("linear form has the wrong number of coefficients")
    return dict(zip(vertices, t))


# -- monomial bases ---------------------------------------------------------------------

def _face_monomials(c: Complex, j: int) -> list[Mono]:
    fs = {frozenset(f) for f in all_faces(c)}
    return [m for m in combinations_with_replacement(c.vertices, j) if frozenset(m) in fs]


def monomial_basis(c: Complex, j: int) -> MonomialBasis:
    if j < 0:
        raise ComplexError("degree must be non-negative")
    verts = c.vertices
    pos = {v: i for i, v in enumerate(verts)}
    exps = []
    for m in _face_monomials(c, j):
        e = [0] * len(verts)
        for v in m:
            e[pos[v]] += 1
        exps.append(tuple(e))
    return MonomialBasis(j, verts, tuple(exps))


def hilbert_function(c: Complex, j: int) -> int:
    """``dim A_j = sum_i f_{i-1} C(j-1, i-1)`` for ``j >= 1``."""
    if j == 0:
        return 1
    f = fhg_vectors(c).f
    return sum(f[i] * comb(j - 1, i - 1) for i in range(1, len(f)))


def multiplication_map(c: Complex, theta, j: int) -> list[list]:
    """Matrix of multiplication by ``theta`` from ``A_j`` to ``A_{j+1}``.

    Column ``k`` is the image of the ``k``-th basis monomial of degree ``j``;
    rows follow the degree ``j+1`` basis.  Entries are the coefficients of
    ``theta`` as given (no reduction).
    """
    src = _face_monomials(c, j)
    dst = _face_monomials(c, j + 1)
    row = {m: i for i, m in enumerate(dst)}
    form = _as_form(theta, c.vertices)
    mat = [[0] * len(src) for _ in dst]
    for k, m in enumerate(src):
        for v, a in form.items():
            if not a:
                continue
            t = tuple(sorted(m + (v,)))
            if t in row:
                mat[row[t]][k] += a
    return mat


def minimal_non_faces(c: Complex) -> list[tuple[int, ...]]:
    fs = {frozenset(f) for f in all_faces(c)}
    out = set()
    for f in fs:
        for x in c.vertices:
            if x in f:
                continue
            g = f | {x}
            if g in fs:
                continue
            if all(g - {y} in fs for y in g):
                out.add(tuple(sorted(g)))
    return sorted(out)


# -- graded quotient engine ------------------------------------------------------------

class _Graded:
    """Graded pieces of (polynomial space)/(relations) up to degree ``top``."""

    def __init__(self, fld, top: int):
        self.fld = fld
        self.top = top
        self.cols: list[list[Mono]] = []
        self.index: list[dict] = []
        self.red: list[list] = []
        self.piv: list[list[int]] = []

    def _add_degree(self, cols: list[Mono], relations: list[dict]):
        index = {m: i for i, m in enumerate(cols)}
        rows = []
        for poly in relations:
            r = [0] * len(cols)
            for m, a in poly.items():
                r[index[m]] = a
            if any(r):
                rows.append(r)
        red, piv = self.fld.rref(rows, len(cols)) if rows and cols else ([], [])
        self.cols.append(cols)
        self.index.append(index)
        self.red.append(red)
        self.piv.append(piv)

    def dim(self, m: int) -> int:
        return len(self.cols[m]) - len(self.piv[m])

    def basis(self, m: int) -> list[Mono]:
        pv = set(self.piv[m])
        return [mono for i, mono in enumerate(self.cols[m]) if i not in pv]

    def reduce(self, m: int, poly: dict) -> list:
        """Coordinates of ``poly`` (degree m) on the complement basis."""
        vec = [0] * len(self.cols[m])
        for mono, a in poly.items():
            vec[self.index[m][mono]] = a
        for row, p in zip(self.red[m], self.piv[m]):
            a = vec[p]
            if a:
                vec = [self.fld.coerce(x - a * y) for x, y in zip(vec, row)]
        pv = set(self.piv[m])
        return [x for i, x in enumerate(vec) if i not in pv]


def _monomials(vars_, m):
    return list(combinations_with_replacement(vars_, m))


def _ambient(c: Complex, thetas: list[dict], fld, top: int):
    faces = {frozenset(f) for f in all_faces(c)}

    def keep(m):
        return frozenset(m) in faces

    g = _Graded(fld, top)
    prev: list[Mono] = []
    for m in range(top + 1):
        cols = _face_monomials(c, m)
        rels = []
        for th in thetas:
            lin = {(v,): fld.coerce(a) for v, a in th.items() if fld.coerce(a)}
            for mono in prev:
                rels.append(_mul({mono: fld.coerce(1)}, lin, fld, keep))
        g._add_degree(cols, rels)
        prev = cols

    def image(form: dict) -> dict:
        return {(v,): fld.coerce(a) for v, a in form.items() if fld.coerce(a)}

    return g, image, keep


def _substitute(c: Complex, thetas: list[dict], fld, top: int):
    verts = list(c.vertices)
    mat = [[fld.coerce(th[v]) for v in verts] for th in thetas]
    red, piv = fld.rref(mat, len(verts)) if mat and any(any(r) for r in mat) else ([], [])
    pivot_vars = {verts[p]: red[i] for i, p in enumerate(piv)}
    free = [v for v in verts if v not in pivot_vars]

    def phi(v) -> dict:
        if v not in pivot_vars:
            return {(v,): fld.coerce(1)}
        row = pivot_vars[v]
        return {(w,): fld.coerce(-row[k]) for k, w in enumerate(verts) if w in free and row[k]}

    gens = []
    for nf in minimal_non_faces(c):
        if len(nf) > top:
            continue
        poly = {(): fld.coerce(1)}
        for v in nf:
            poly = _mul(poly, phi(v), fld)
        gens.append((len(nf), poly))
    g = _Graded(fld, top)
    for m in range(top + 1):
        cols = _monomials(free, m)
        rels = []
        for e, poly in gens:
            if e > m:
                continue
            for mono in _monomials(free, m - e):
                rels.append(_mul(poly, {mono: fld.coerce(1)}, fld))
        g._add_degree(cols, rels)

    def image(form: dict) -> dict:
        out: dict = {}
        for v, a in form.items():
            a = fld.coerce(a)
            if not a:
                continue
            for mono, b in phi(v).items():
                out[mono] = fld.coerce(out.get(mono, 0) + a * b)
        return {m: x for m, x in out.items() if x}

    return g, image, None


def _choose_method(c: Complex, thetas, method: str, top: int) -> str:
    if method != "auto":
        return method
    n = len(c.vertices)
    free = n - len(thetas)
    ambient = max(hilbert_function(c, m) for m in range(top + 1)) if c.is_pure() else 0
    subst = comb(max(free, 0) + top - 1, top) if free > 0 else 1
    return "substitute" if subst < ambient else "ambient"


def _build(c: Complex, thetas, field_, method: str):
    fld = _field(field_)
    top = c.d
    forms = [_as_form(t, c.vertices) for t in thetas]
    method = _choose_method(c, forms, method, top)
    if method == "ambient":
        g, image, keep = _ambient(c, forms, fld, top)
    elif method == "substitute":
        g, image, keep = _substitute(c, forms, fld, top)
    else:
        raise ValueError(f"unknown method {method!r}")
    return fld, g, image, keep, method


def artinian_reduction(c: Complex, thetas, field=MERSENNE31, method: str = "auto") -> ArtinianReduction:
    if not c.is_pure():
        raise ComplexError("artinian reduction requires pure complex")
    if len(thetas) != c.d:
        raise ComplexError(f"expected {c.d} linear forms, got {len(thetas)}")
    _, g, _, _, used = _build(c, thetas, field, method)
    dims = tuple(g.dim(m) for m in range(c.d + 1))
    return ArtinianReduction(dims, [g.basis(m) for m in range(c.d + 1)], used)


def check_lsop(c: Complex, thetas, field=MERSENNE31, method: str = "auto") -> bool:
    return artinian_reduction(c, thetas, field, method).dims == fhg_vectors(c).h


def lefschetz_data(c: Complex, thetas, omega, field=MERSENNE31, method: str = "auto"):
    """Quotient dims in degrees 0..d and ranks of ``omega^(d-2j)`` on degree j."""
    fld, g, image, keep, _ = _build(c, thetas, field, method)
    d = c.d
    dims = tuple(g.dim(m) for m in range(d + 1))
    w = image(_as_form(omega, c.vertices))
    ranks = []
    for j in range(d // 2 + 1):
        k = d - 2 * j
        wk = _power(w, k, fld, keep)
        rows = []
        for b in g.basis(j):
            prod = _mul(wk, {b: fld.coerce(1)}, fld, keep)
            rows.append(g.reduce(d - j, prod))
        ranks.append(fld.rank(rows, g.dim(d - j)) if rows else 0)
    return dims, tuple(ranks)


def strong_lefschetz_witness(
    c: Complex,
    field=MERSENNE31,
    trials: int = 5,
    seed: int = 0,
    cap: int = 20000,
    method: str = "auto",
) -> LefschetzWitness | None:
    """Random search for an l.s.o.p. and a Lefschetz element.

    Coefficients are drawn uniformly from ``[1, p-1]`` (``p`` defaults to
    2**31 - 1 for the rational field too).  ``None`` after ``trials`` failures
    says nothing about the complex.
    """
    if not c.is_pure():
        raise ComplexError("h-vector requires pure complex")
    vec = fhg_vectors(c)
    if not dehn_sommerville_holds(vec):
        raise ComplexError("h-vector not symmetric")
    p = MERSENNE31 if field == RATIONAL else int(field)
    if not is_prime(p):
        raise ValueError(f"field modulus {p} is not prime")
    d = c.d
    if hilbert_function(c, (d + 1) // 2) > cap:
        raise ComplexError(f"dim A_{(d + 1) // 2} exceeds cap {cap}")
    rng = random.Random(seed)
    verts = c.vertices
    h = vec.h
    for t in range(trials):
        thetas = tuple(tuple(rng.randint(1, p - 1) for _ in verts) for _ in range(d))
        omega = tuple(rng.randint(1, p - 1) for _ in verts)
        dims, ranks = lefschetz_data(c, thetas, omega, field, method)
        if dims == h and all(ranks[j] == h[j] for j in range(d // 2 + 1)):
            return LefschetzWitness(
                "rational" if field == RATIONAL else "gf",
                None if field == RATIONAL else p,
                verts, thetas, omega, dims, ranks, seed, t,
            )
    return None


def reverify_rational(c: Complex, w: LefschetzWitness, method: str = "auto") -> tuple[bool, tuple, tuple]:
    """Recompute dims and ranks over Q from the integer lift of ``w``."""
    dims, ranks = lefschetz_data(c, w.thetas, w.omega, RATIONAL, method)
    return (dims == w.quotient_dims and ranks == w.map_ranks), dims, ranks
