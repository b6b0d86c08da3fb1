"""Edge contraction and the link condition."""

from __future__ import annotations

from dataclasses import dataclass

from .certify import certify_ball, certify_sphere
from .complex import Complex, ComplexError, all_faces, complex_to_json, delete_vertices, link, star, union
from .verdict import DEFAULT_BUDGET, TriState


def _require_edge(c: Complex, u: int, v: int) -> None:
    if u == v or [u, v] not in c:
        raise ComplexError(f"not an edge: ({u}, {v})")


def contract(c: Complex, u: int, v: int) -> Complex:
    """Identify ``u`` with ``v``; ``u`` disappears and ``v`` is kept."""
    _require_edge(c, u, v)
    return Complex.of({v if x == u else x for x in f} for f in c.facets)


def satisfies_link_condition(c: Complex, u: int, v: int) -> bool:
    _require_edge(c, u, v)
    common = all_faces(link(c, [u])) & all_faces(link(c, [v]))
    return common == all_faces(link(c, [u, v]))


def link_condition_edges(c: Complex) -> list[tuple[int, int]]:
    from .complex import faces

    return [e for e in sorted(faces(c, 1)) if satisfies_link_condition(c, *e)]


@dataclass(frozen=True)
class ContractionReport:
    edge: tuple[int, int]
    link_condition: bool
    contracted: Complex
    deletion_ball: TriState
    star_union_ball: TriState
    contracted_sphere: TriState

    @property
    def decided(self) -> bool:
        return all(t.decided for t in (self.deletion_ball, self.star_union_ball, self.contracted_sphere))

    @property
    def consistent(self) -> bool:
        """False only when every check decided and they disagree."""
        if not self.decided:
            return True
        flags = {self.link_condition, self.deletion_ball.yes, self.star_union_ball.yes,
                 self.contracted_sphere.yes}
        return len(flags) == 1

    def to_json(self) -> dict:
        return {
            "edge": list(self.edge),
            "link_condition": self.link_condition,
            "contracted": complex_to_json(self.contracted)["facets"],
            "deletion_ball": self.deletion_ball.to_json(),
            "star_union_ball": self.star_union_ball.to_json(),
            "contracted_sphere": self.contracted_sphere.to_json(),
            "decided": self.decided,
            "consistent": self.consistent,
        }


def theorem_2_1_report(c: Complex, u: int, v: int, budget: int = DEFAULT_BUDGET) -> ContractionReport:
    """Evaluate the four equivalent edge conditions for a sphere ``c``.

    The link condition is exact; the three PL conditions are semi-decided,
    each with its own budget.
    """
    _require_edge(c, u, v)
    dim = c.dim
    contracted = contract(c, u, v)
    return ContractionReport(
        edge=(u, v),
        link_condition=satisfies_link_condition(c, u, v),
        contracted=contracted,
        deletion_ball=certify_ball(delete_vertices(c, [u, v]), budget, dim=dim),
        star_union_ball=certify_ball(union(star(c, [u]), star(c, [v])), budget, dim=dim),
        contracted_sphere=certify_sphere(contracted, budget, dim=dim),
    )
