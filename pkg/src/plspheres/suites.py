"""Executable property suites tying the deciders together.

Each suite returns a ``SuiteReport`` made of named checks.  Suites only count
decided instances; an Unknown is reported, never treated as agreement.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .certify import certify_ball
from .complex import (
    boundary,
    dehn_sommerville_holds,
    delete_vertices,
    faces,
    fhg_vectors,
    h_to_f,
    link,
)
from .constructions import catalog, catalog_balls, cone_over_boundary_union
from .contraction import contract, satisfies_link_condition, theorem_2_1_report
from .decompose import (
    find_shedding_order,
    find_shrinking_order,
    is_strongly_edge_decomposable,
    is_strongly_shrinkable,
    iter_shedding_orders,
    nj_complex,
    validate_shrinking_order,
    validate_strong_shedding_order,
)
from .lefschetz import RATIONAL, reverify_rational, strong_lefschetz_witness
from .linalg import MERSENNE31
from .verdict import DEFAULT_BUDGET


@dataclass
class SuiteConfig:
    budget: int = DEFAULT_BUDGET
    max_vertices: int = 10
    orders_limit: int = 50
    field: int | str = MERSENNE31
    trials: int = 5
    seed: int = 0
    min_balls: int = 20
    min_decided: float = 0.95


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    name: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def _small(cfg: SuiteConfig):
    return [(n, s) for n, s in catalog() if len(s.vertices) <= cfg.max_vertices]


def vd_balls(cfg: SuiteConfig):
    """Catalog balls with their shedding certificates (decided Yes only)."""
    out = []
    for name, b in catalog_balls():
        res = find_shedding_order(b, cfg.budget)
        if res.yes:
            out.append((name, b, res.certificate))
    return out


# -- suites ------------------------------------------------------------------------

def suite_vectors(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("vectors")
    bad_rt, bad_ds = [], []
    for name, s in catalog():
        v = fhg_vectors(s)
        if h_to_f(v.h, v.d) != v.f:
            bad_rt.append(name)
        if not dehn_sommerville_holds(v):
            bad_ds.append(name)
    rep.add("f/h round trip", not bad_rt, ",".join(bad_rt))
    rep.add("Dehn-Sommerville", not bad_ds, ",".join(bad_ds))
    return rep


@dataclass
class EdgeScan:
    total: int = 0
    decided: int = 0
    full_disagree: list = field(default_factory=list)
    core_disagree: list = field(default_factory=list)


def edge_scan(cfg: SuiteConfig) -> EdgeScan:
    """All four edge conditions on every edge of the small catalog spheres."""
    scan = EdgeScan()
    for name, s in _small(cfg):
        for u, v in sorted(faces(s, 1)):
            r = theorem_2_1_report(s, u, v, cfg.budget)
            scan.total += 1
            if not r.decided:
                continue
            scan.decided += 1
            if not r.consistent:
                scan.full_disagree.append((name, (u, v)))
            core = {r.link_condition, r.deletion_ball.yes, r.contracted_sphere.yes}
            if len(core) > 1:
                scan.core_disagree.append((name, (u, v)))
    return scan


def suite_t21(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("T2.1")
    scan = edge_scan(cfg)
    frac = scan.decided / scan.total if scan.total else 1.0
    rep.add("decided fraction", frac >= cfg.min_decided, f"{scan.decided}/{scan.total}")
    rep.add(
        "link condition, deletion ball, star-union ball and contraction agree",
        not scan.full_disagree,
        f"{len(scan.full_disagree)} disagreements, first {scan.full_disagree[:3]}",
    )
    rep.add(
        "link condition, deletion ball and contraction agree",
        not scan.core_disagree,
        f"{len(scan.core_disagree)} disagreements",
    )
    return rep


def suite_l32(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("L3.2")
    off_boundary, not_ball, steps = [], [], 0
    for name, b, cert in vd_balls(cfg):
        cur = b
        for v in cert.order:
            steps += 1
            if v not in boundary(cur).vertices:
                off_boundary.append((name, v))
            rest = delete_vertices(cur, [v])
            if certify_ball(rest, cfg.budget, dim=cur.dim).no:
                not_ball.append((name, v))
            cur = rest
    rep.add("shedding vertex on boundary", not off_boundary, f"{steps} steps, violations {off_boundary[:3]}")
    rep.add("deletion never refuted as ball", not not_ball, f"violations {not_ball[:3]}")
    return rep


def suite_t33(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("T3.3")
    balls = vd_balls(cfg)
    failures, verdicts = [], {}
    for name, b, cert in balls:
        v0 = max(b.vertices) + 1
        gamma = cone_over_boundary_union(b, v0)
        res = validate_shrinking_order(gamma, cert.remaining, (v0,) + tuple(cert.order), cfg.budget)
        verdicts[res.verdict.value] = verdicts.get(res.verdict.value, 0) + 1
        if not res.yes:
            failures.append((name, res.verdict.value, res.obstruction))
    rep.add("enough vertex-decomposable balls", len(balls) >= cfg.min_balls, f"{len(balls)} balls")
    rep.add("cone construction is shrinkable", not failures, f"{verdicts}; failures {failures[:3]}")
    return rep


def suite_t38(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("T3.8")
    implication, c41, c42, tested = [], [], [], 0
    for name, s in catalog():
        ss = is_strongly_shrinkable(s, cfg.budget)
        if ss.yes:
            ed = is_strongly_edge_decomposable(s, cfg.budget)
            if not ed.yes:
                implication.append((name, ed.verdict.value))
        sh = find_shrinking_order(s, cfg.budget)
        if not sh.yes or sh.certificate is None or len(sh.certificate.order) < 2:
            continue
        tested += 1
        sigma, order = sh.certificate.base_facet, sh.certificate.order
        v1, v2 = order[0], order[1]
        res = validate_shrinking_order(contract(s, v1, v2), sigma, order[1:], cfg.budget)
        if not res.yes:
            c41.append((name, res.verdict.value, satisfies_link_condition(s, v1, v2)))
        if link(s, [v1, v2]) != link(link(s, [v1]), [v2]) or link(s, [v1]) != boundary(nj_complex(s, order, 1)):
            c42.append(name)
    rep.add("strongly shrinkable implies strongly edge-decomposable", not implication, f"{implication}")
    rep.add("shrinking order survives contraction of v1v2", not c41, f"{tested} tested, failures {c41[:3]}")
    guarded = [f for f in c41 if f[2]]
    rep.add(
        "same, when v1v2 satisfies the link condition",
        not guarded,
        f"{tested} tested, failures {guarded[:3]}",
    )
    rep.add("edge link and first star boundary identities", not c42, f"{tested} tested, failures {c42}")
    return rep


def suite_r41(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("R4.1")
    bad, total = [], 0
    for name, s in catalog():
        if s.dim not in (2, 3):
            continue
        for cert in iter_shedding_orders(s, cfg.budget, cfg.orders_limit):
            total += 1
            res = validate_strong_shedding_order(s, cert.order, cfg.budget)
            if not res.yes:
                bad.append((name, cert.order, res.verdict.value))
    rep.add("shedding orders of 2- and 3-spheres are strong", not bad and total > 0, f"{total} orders, violations {bad[:3]}")
    return rep


def suite_lefschetz(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("Lefschetz")
    missing, mismatch, found = [], [], 0
    for name, s in _small(cfg):
        if not is_strongly_edge_decomposable(s, cfg.budget).yes:
            continue
        w = strong_lefschetz_witness(s, cfg.field, cfg.trials, cfg.seed)
        if w is None:
            missing.append(name)
            continue
        found += 1
        if cfg.field != RATIONAL and not reverify_rational(s, w)[0]:
            mismatch.append(name)
    rep.add("witness found", not missing, f"{found} witnesses, missing {missing}")
    rep.add("rational re-verification", not mismatch, f"mismatches {mismatch}")
    return rep


SUITES = {
    "vectors": suite_vectors,
    "T2.1": suite_t21,
    "L3.2": suite_l32,
    "T3.3": suite_t33,
    "T3.8": suite_t38,
    "R4.1": suite_r41,
    "Lefschetz": suite_lefschetz,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    t = time.perf_counter()
    rep = SUITES[name](cfg or SuiteConfig())
    rep.seconds = time.perf_counter() - t
    return rep
