"""Finite simplicial complexes stored by their facets, and the local face operators."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Mapping

Face = tuple[int, ...]


class ComplexError(ValueError):
    pass


def _maximal(faces: Iterable[Iterable[int]]) -> tuple[Face, ...]:
    # largest first so subsumption only has to look at already-kept faces
    uniq = {tuple(sorted(set(f))) for f in faces}
    kept: list[frozenset] = []
    out = []
    for f in sorted(uniq, key=lambda t: (-len(t), t)):
        s = frozenset(f)
        if any(s <= k for k in kept):
            continue
        kept.append(s)
        out.append(f)
    return tuple(sorted(out))


@dataclass(frozen=True)
class Complex:
    """A simplicial complex given by its inclusion-maximal faces.

    ``facets`` is canonical: each facet is an ascending tuple and the tuple of
    facets is sorted lexicographically, so ``==`` compares labeled complexes.
    ``Complex(())`` is the void complex (no faces at all) and
    ``Complex(((),))`` is the complex whose only face is the empty set.
    """

    facets: tuple[Face, ...]
    aliases: Mapping[int, str] | None = field(default=None, compare=False, hash=False)

    @classmethod
    def of(cls, faces: Iterable[Iterable[int]], aliases=None) -> "Complex":
        return cls(_maximal(faces), aliases)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def dim(self) -> int:
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    @property
    def d(self) -> int:
        return self.dim + 1

    def is_void(self) -> bool:
        return not self.facets

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def __contains__(self, face) -> bool:
        s = set(face)
        return any(s.issubset(f) for f in self.facets)

    def __len__(self) -> int:
        return len(self.facets)

    def __repr__(self) -> str:
        return f"Complex({[list(f) for f in self.facets]})"

    def relabel(self, mapping: Mapping[int, int]) -> "Complex":
        return Complex.of([mapping[v] for v in f] for f in self.facets)


@dataclass(frozen=True)
class Graph:
    vertices: frozenset
    edges: frozenset

    def neighbours(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def is_connected(self, subset: Iterable[int] | None = None) -> bool:
        nodes = set(self.vertices if subset is None else subset)
        if len(nodes) <= 1:
            return True
        adj = {v: set() for v in nodes}
        for a, b in self.edges:
            if a in nodes and b in nodes:
                adj[a].add(b)
                adj[b].add(a)
        start = min(nodes)
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(nodes)


@dataclass(frozen=True)
class FHGVectors:
    d: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    g: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"d": self.d, "f": list(self.f), "h": list(self.h), "g": list(self.g)}


def from_facets(facets, aliases: Mapping | None = None) -> Complex:
    facets = [list(f) for f in facets]
    if not facets:
        raise ComplexError("empty complex")
    for f in facets:
        if not f:
            raise ComplexError("facets must be non-empty")
        if any((not isinstance(v, int)) or isinstance(v, bool) or v < 0 for v in f):
            raise ComplexError(f"vertex labels must be non-negative integers: {f}")
        if len(set(f)) != len(f):
            raise ComplexError(f"duplicate label in facet {f}")
    if aliases is not None:
        aliases = {int(k): str(v) for k, v in aliases.items()}
    return Complex.of(facets, aliases)


def all_faces(c: Complex) -> set[Face]:
    out: set[Face] = set()
    for f in c.facets:
        for k in range(len(f) + 1):
            out.update(combinations(f, k))
    return out


def faces(c: Complex, k: int) -> set[Face]:
    """All faces with ``k + 1`` vertices; ``k = -1`` gives the empty face."""
    if c.is_void() or k < -1 or k > c.dim:
        return set()
    out: set[Face] = set()
    for f in c.facets:
        out.update(combinations(f, k + 1))
    return out


def f_vector(c: Complex) -> tuple[int, ...]:
    counts = [0] * (c.d + 1)
    for face in all_faces(c):
        counts[len(face)] += 1
    return tuple(counts)


def h_from_f(f: tuple[int, ...], d: int) -> tuple[int, ...]:
    return tuple(
        sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1)
    )


def h_to_f(h, d: int) -> tuple[int, ...]:
    """Inverse of the h-transform: ``f_{i-1} = sum_j C(d-j, i-j) h_j``."""
    h = list(h)
    if len(h) != d + 1:
        raise ComplexError(f"h-vector of length {len(h)} does not match d={d}")
    return tuple(sum(comb(d - j, i - j) * h[j] for j in range(i + 1)) for i in range(d + 1))


def fhg_vectors(c: Complex) -> FHGVectors:
    if c.is_void():
        raise ComplexError("void complex has no f-vector")
    if not c.is_pure():
        raise ComplexError("h-vector requires pure complex")
    d = c.d
    f = f_vector(c)
    h = h_from_f(f, d)
    g = (1,) + tuple(h[j] - h[j - 1] for j in range(1, d // 2 + 1))
    return FHGVectors(d, f, h, g)


def dehn_sommerville_holds(v: FHGVectors | tuple | list) -> bool:
    h = v.h if isinstance(v, FHGVectors) else tuple(v)
    return all(h[j] == h[len(h) - 1 - j] for j in range(len(h)))


def _require_face(c: Complex, sigma) -> frozenset:
    s = frozenset(sigma)
    if s not in c:
        raise ComplexError(f"not a face: {sorted(s)}")
    return s


def star(c: Complex, sigma) -> Complex:
    s = _require_face(c, sigma)
    return Complex.of(f for f in c.facets if s.issubset(f))


def link(c: Complex, sigma) -> Complex:
    s = _require_face(c, sigma)
    return Complex.of(set(f) - s for f in c.facets if s.issubset(f))


def antistar(c: Complex, sigma) -> Complex:
    s = set(sigma)
    return Complex.of(set(f) - s for f in c.facets)


def delete_face(c: Complex, sigma) -> Complex:
    """Subcomplex of faces that do not contain ``sigma``."""
    s = set(sigma)
    out = []
    for f in c.facets:
        if s.issubset(f):
            out.extend(set(f) - {x} for x in s)
        else:
            out.append(f)
    return Complex.of(out)


def delete_vertices(c: Complex, vs: Iterable[int]) -> Complex:
    return antistar(c, vs)


def induced(c: Complex, vs: Iterable[int]) -> Complex:
    keep = set(vs)
    return Complex.of(set(f) & keep for f in c.facets)


def union(*cs: Complex) -> Complex:
    return Complex.of(f for c in cs for f in c.facets)


def one_skeleton(c: Complex) -> Graph:
    edges = set()
    for f in c.facets:
        edges.update(combinations(f, 2))
    return Graph(frozenset(c.vertices), frozenset(edges))


def ridge_counts(c: Complex) -> dict[Face, int]:
    counts: dict[Face, int] = {}
    for f in c.facets:
        if not f:
            continue
        for r in combinations(f, len(f) - 1):
            counts[r] = counts.get(r, 0) + 1
    return counts


def boundary(c: Complex) -> Complex:
    """Complex generated by the codimension-one faces lying in exactly one facet."""
    if not c.is_pure():
        raise ComplexError("boundary requires pure complex")
    return Complex.of(r for r, n in ridge_counts(c).items() if n == 1)


def is_simplex_boundary(c: Complex) -> bool:
    n = len(c.vertices)
    return c.is_pure() and c.d == n - 1 and len(c.facets) == n


# -- JSON file format -------------------------------------------------------

def complex_to_json(c: Complex, name: str = "") -> dict:
    out: dict = {"name": name, "facets": [list(f) for f in c.facets]}
    if c.aliases:
        out["aliases"] = {str(k): v for k, v in sorted(c.aliases.items())}
    return out


def complex_from_json(obj) -> tuple[str, Complex]:
    if isinstance(obj, (str, bytes)):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ComplexError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict) or "facets" not in obj:
        raise ComplexError("complex JSON must be an object with a 'facets' list")
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise ComplexError("'name' must be a string")
    facets = obj["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ComplexError("'facets' must be a list of lists")
    return name, from_facets(facets, obj.get("aliases"))


def load_complex(path) -> tuple[str, Complex]:
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise ComplexError(f"{path}: complex JSON must be an object")
    name, c = complex_from_json(obj)
    return name or Path(path).stem, c


def save_complex(c: Complex, path, name: str = "") -> None:
    Path(path).write_text(json.dumps(complex_to_json(c, name)) + "\n", encoding="utf-8")
