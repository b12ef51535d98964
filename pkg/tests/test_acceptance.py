"""Acceptance criteria 1-10; each test records one PASS/FAIL line."""
import time

import pytest

from qsmzv.harness import run_suite

from conftest import record_criterion


def _run(name, **params):
    t0 = time.perf_counter()
    rep = run_suite(name, params)
    return rep, time.perf_counter() - t0


def _first_failures(cases, n=3):
    return [f"{c.id}: {c.lhs} vs {c.rhs} {c.detail}" for c in cases if c.status != "pass"][:n]


def _check(n, cases, elapsed=None, limit=None, extra=""):
    cases = list(cases)
    fails = [c for c in cases if c.status != "pass"]
    ok = bool(cases) and not fails and (limit is None or elapsed < limit)
    timing = "" if elapsed is None else f", {elapsed:.1f}s" + (f" (limit {limit}s)" if limit else "")
    record_criterion(n, ok, f"{len(cases) - len(fails)}/{len(cases)} cases{timing}{extra}")
    assert cases, "no cases generated"
    assert not fails, _first_failures(fails)
    if limit is not None:
        assert elapsed < limit


def test_criterion_01_truncated_q_double_shuffle():
    rep, dt = _run("q-truncated-ds", wt_max=5, M=6, q="1/2")
    _check(1, rep.cases, dt, 120)


@pytest.fixture(scope="module")
def products_report():
    return _run("products", wt_max=5, M=6, q="1/2", n_random=200, seed=0)


def test_criterion_02_truncated_product_relations(products_report):
    rep, dt = products_report
    cases = [c for c in rep.cases if c.id.startswith(("harm[", "shuffle-sum["))]
    _check(2, cases, dt)


def test_criterion_03_iota_homomorphism(products_report):
    rep, _ = products_report
    cases = [c for c in rep.cases if c.id.startswith("iota-")]
    assert len(cases) == 400  # 200 pairs, both products
    _check(3, cases, extra=f", seed {rep.seed}")


def test_criterion_04_evaluator_cross_oracles():
    rep, dt = _run("evaluators", wt_max=5, M=6, q="1/2")
    kinds = {c.id.split("[")[0] for c in rep.cases}
    assert {"kontsevich", "T-unit", "T", "Lq"} <= kinds
    _check(4, rep.cases, dt)


def test_criterion_05_series_identity_catalog():
    rep, dt = _run("identities", order=5)
    names = {c.id.split("[")[0].split("(")[0] for c in rep.cases}
    expected = {f"B{i}" for i in range(1, 17)} | {"SG1", "SG2", "SG3", "L58"}
    assert expected <= names
    _check(5, rep.cases, dt, 120)


def test_criterion_06_structural_theorems():
    rep, dt = _run("structure", wt_max=5)
    kinds = {c.id.split("[")[0] for c in rep.cases}
    assert {"wS-star-adm", "wS-sh-H0", "wS-sh-ones", "closure", "closure-adm", "hbar0-d"} <= kinds
    _check(6, rep.cases, dt)


def test_criterion_07_closed_forms():
    rep, dt = _run("closed-forms", q="1/2")
    _check(7, rep.cases, dt)


def test_criterion_08_numerics():
    rep, dt = _run("limits", grid="0.5,0.9,0.99,0.999", tail_tol=1e-12)
    probe = next(c for c in rep.cases if c.id == "Hg2-decreasing[full-grid]")
    _check(8, rep.cases, dt, 60, extra=f"; (e1-g1)g2 over the grid: {probe.detail}")


def test_criterion_09_appendix_bounds():
    rep, dt = _run("bounds", M=6)
    _check(9, rep.cases, dt)


def test_criterion_10_classical_side():
    rep, dt = _run("classical-ds", wt_max=5, M=6)
    kinds = {c.id.split("[")[0] for c in rep.cases}
    assert {"star", "sh", "h0", "ohno-machinery"} <= kinds
    _check(10, rep.cases, dt)
