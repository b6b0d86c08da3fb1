from plspheres.suites import SUITES, SuiteConfig, run_suite


def test_suite_registry():
    assert set(SUITES) == {"vectors", "T2.1", "L3.2", "T3.3", "T3.8", "R4.1", "Lefschetz"}


def test_small_config_suites_pass():
    cfg = SuiteConfig(max_vertices=6, orders_limit=3)
    for name in ("vectors", "L3.2", "Lefschetz"):
        rep = run_suite(name, cfg)
        assert rep.passed, rep.to_json()


def test_t38_guarded_contraction_passes():
    checks = {c.name: c for c in run_suite("T3.8").checks}
    assert checks["same, when v1v2 satisfies the link condition"].passed
    assert checks["strongly shrinkable implies strongly edge-decomposable"].passed
    assert checks["edge link and first star boundary identities"].passed


def test_edge_conditions_without_star_union_agree_on_small_spheres():
    rep = run_suite("T2.1", SuiteConfig(max_vertices=7))
    checks = {c.name: c for c in rep.checks}
    assert checks["link condition, deletion ball and contraction agree"].passed
    assert checks["decided fraction"].passed
