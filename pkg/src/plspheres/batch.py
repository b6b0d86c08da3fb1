"""Batch classification, the counterexample hunt, and the JSON-lines ledger."""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .certify import certify_sphere, shelling_search
from .complex import Complex, ComplexError, dehn_sommerville_holds, fhg_vectors
from .constructions import catalog, random_subdivided_sphere, suspension
from .decompose import (
    find_shedding_order,
    find_shrinking_order,
    is_strongly_edge_decomposable,
    is_strongly_shrinkable,
    is_strongly_vertex_decomposable,
)
from .lefschetz import strong_lefschetz_witness
from .linalg import MERSENNE31
from .verdict import DEFAULT_BUDGET, TriState, Verdict, no, yes

CLASSES = ("sphere", "shellable", "VD", "shrinkable", "strongVD", "strongShrink", "strongED", "lefschetz")
DECIDED = {"yes", "no", "skipped", "clear", "CANDIDATE"}

# (premise, conclusion): premise Yes and conclusion No is a violation
ARROWS = (
    ("strongVD", "VD"),
    ("strongVD", "strongShrink"),
    ("VD", "shrinkable"),
    ("VD", "shellable"),
    ("strongShrink", "strongED"),
    ("strongED", "sphere"),
)


@dataclass
class RunConfig:
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    field: int | str = MERSENNE31
    trials: int = 5
    cap: int = 20000


def record(name: str, cls: str, res: TriState | None, cfg: RunConfig, wall_ms: float, verdict: str | None = None) -> dict:
    out = {
        "name": name,
        "class": cls,
        "verdict": verdict or res.verdict.value,
        "budget": cfg.budget,
        "seed": cfg.seed,
        "wall_ms": round(wall_ms, 3),
    }
    if res is not None and res.certificate is not None:
        out["certificate"] = res.certificate.to_json()
    if res is not None and res.obstruction:
        out["obstruction"] = res.obstruction
    return out


def dumps(rec: dict) -> str:
    return json.dumps(rec, sort_keys=True)


def _lefschetz(c: Complex, cfg: RunConfig) -> TriState:
    v = fhg_vectors(c)
    if not dehn_sommerville_holds(v):
        return no("h-vector not symmetric")
    try:
        w = strong_lefschetz_witness(c, cfg.field, cfg.trials, cfg.seed, cfg.cap)
    except ComplexError as exc:
        return TriState(Verdict.UNKNOWN, obstruction=str(exc))
    if w is None:
        return TriState(Verdict.UNKNOWN, obstruction=f"no witness in {cfg.trials} trials")
    return yes(w)


DECIDERS = {
    "sphere": lambda c, cfg: certify_sphere(c, cfg.budget),
    "shellable": lambda c, cfg: shelling_search(c, cfg.budget),
    "VD": lambda c, cfg: find_shedding_order(c, cfg.budget),
    "shrinkable": lambda c, cfg: find_shrinking_order(c, cfg.budget),
    "strongVD": lambda c, cfg: is_strongly_vertex_decomposable(c, cfg.budget),
    "strongShrink": lambda c, cfg: is_strongly_shrinkable(c, cfg.budget),
    "strongED": lambda c, cfg: is_strongly_edge_decomposable(c, cfg.budget),
    "lefschetz": _lefschetz,
}


def _timed(cls: str, c: Complex, cfg: RunConfig) -> tuple[TriState, float]:
    t = time.perf_counter()
    res = DECIDERS[cls](c, cfg)
    return res, (time.perf_counter() - t) * 1000


def classify(name: str, c: Complex, cfg: RunConfig) -> list[dict]:
    """One record per class, then one per violated containment arrow."""
    recs: list[dict] = []
    res, ms = _timed("sphere", c, cfg)
    recs.append(record(name, "sphere", res, cfg, ms))
    if res.no:
        for cls in CLASSES[1:]:
            recs.append(record(name, cls, None, cfg, 0.0, verdict="skipped"))
        return recs
    for cls in CLASSES[1:]:
        r, ms = _timed(cls, c, cfg)
        recs.append(record(name, cls, r, cfg, ms))
    verdicts = {r["class"]: r["verdict"] for r in recs}
    for a, b in ARROWS:
        if verdicts[a] == "yes" and verdicts[b] == "no":
            recs.append(record(name, "containment", None, cfg, 0.0, verdict="violation") | {"arrow": f"{a}=>{b}"})
    return recs


def p42_check(name: str, c: Complex, cfg: RunConfig) -> list[dict]:
    """Looks for vertex-decomposable spheres that are not strongly edge-decomposable."""
    recs = []
    vd, ms = _timed("VD", c, cfg)
    recs.append(record(name, "VD", vd, cfg, ms))
    if not vd.yes:
        recs.append(record(name, "p42", None, cfg, 0.0, verdict="clear" if vd.no else "unknown"))
        return recs
    ed, ms = _timed("strongED", c, cfg)
    recs.append(record(name, "strongED", ed, cfg, ms))
    verdict = {"no": "CANDIDATE", "yes": "clear"}.get(ed.verdict.value, "unknown")
    recs.append(record(name, "p42", None, cfg, 0.0, verdict=verdict))
    return recs


def p42_instances(n_random: int, seed: int) -> list[tuple[str, Complex]]:
    """Default catalog plus seeded random subdivisions and suspensions."""
    base = [(n, s) for n, s in catalog() if 2 <= s.dim <= 3 and len(s.vertices) <= 10]
    out = list(catalog())
    rng = random.Random(seed)
    for i in range(n_random):
        bname, b = base[rng.randrange(len(base))]
        steps = rng.randint(1, 4)
        sub = random_subdivided_sphere(b, steps, seed=rng.randrange(2**31))
        if b.dim == 2 and rng.random() < 0.5:
            out.append((f"rand{i}_suspension_subdivided{steps}_{bname}", suspension(sub)))
        else:
            out.append((f"rand{i}_subdivided{steps}_{bname}", sub))
    return out


# -- ledger ------------------------------------------------------------------------

def read_ledger(path) -> list[dict]:
    p = Path(path)
    if not p.exists():
        return []
    out = []
    for line in p.read_text(encoding="utf-8").splitlines():
        if line.strip():
            out.append(json.loads(line))
    return out


def decided_keys(records: list[dict]) -> set[tuple]:
    return {(r["name"], r["class"], r["budget"], r["seed"]) for r in records if r["verdict"] in DECIDED}


def append_ledger(path, recs: list[dict]) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for r in recs:
            fh.write(dumps(r) + "\n")


def _work(job):
    kind, name, c, cfg = job
    return (classify if kind == "classify" else p42_check)(name, c, cfg)


def run_batch(kind: str, instances, cfg: RunConfig, jobs: int = 1, skip: set | None = None, classes=CLASSES):
    """Yield (name, records) in input order; instances whose classes are all in
    ``skip`` are yielded with ``None``."""
    todo = []
    for name, c in instances:
        if skip and all((name, cls, cfg.budget, cfg.seed) in skip for cls in classes):
            todo.append((name, None))
        else:
            todo.append((name, (kind, name, c, cfg)))
    live = [job for _, job in todo if job is not None]
    if jobs > 1 and len(live) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = iter(list(pool.map(_work, live)))
    else:
        results = (_work(j) for j in live)
    for name, job in todo:
        yield name, (None if job is None else next(results))


def strip_timing(line: str) -> str:
    rec = json.loads(line)
    rec.pop("wall_ms", None)
    return dumps(rec)


def unknown_only(recs: list[dict]) -> bool:
    vs = [r["verdict"] for r in recs if r["class"] not in ("containment", "p42")]
    return bool(vs) and all(v == "unknown" for v in vs)

