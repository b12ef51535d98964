import csv
import io
import json
from fractions import Fraction

import pytest

from qsmzv.errors import NotOdd, UnknownSuite
from qsmzv.freealg import g
from qsmzv.harness import (SUITES, _ohno_sides, depth2_closed_form, depth2_relations,
                           depth2_solve, ohno_depth2_check, qsmzv_depth2, random_apoly,
                           reduce_depth2, run_suite, symbol_relations, _in_span, _rank)
from qsmzv.report import Report


def test_depth2_solve_examples():
    assert depth2_solve(3) == {1: 1, 2: -2}
    assert depth2_solve(5)[2] == Fraction(-11, 2)
    with pytest.raises(NotOdd):
        depth2_solve(4)
    with pytest.raises(NotOdd):
        depth2_solve(1)


@pytest.mark.parametrize("k", [3, 5, 7, 9])
def test_depth2_solve_matches_closed_form(k):
    sol = depth2_solve(k)
    assert sol == {m: depth2_closed_form(k, m) for m in range(1, k)}


def test_depth2_shuffle_rows_are_binomial():
    # the reduced shuffle relation has coefficients C(k-j-1, k-m-1) + C(k-j-1, m-1)
    from math import comb
    k = 5
    rows = depth2_relations(k)
    m = 1  # first pair with an even factor: (1, 4)
    shuffle_row = rows[1]
    for j in range(1, k):
        want = comb(k - j - 1, k - m - 1) + comb(k - j - 1, m - 1)
        assert shuffle_row.get(j - 1, 0) == want


def test_qsmzv_depth2_examples():
    assert qsmzv_depth2(1, 2) == 3
    assert qsmzv_depth2(2, 1) == -3
    assert qsmzv_depth2(2, 2) == 0
    assert qsmzv_depth2(2, 3) == -10


def test_even_weight_reduction():
    # weight 4: everything reduces (classically zeta(1,3) = zeta(4)/4)
    assert reduce_depth2(g(1, 3), 4) == 0
    # weight 6: g_3 g_3 carries a zeta(3)^2 part and must not be certified
    for w in (g(3, 3), g(2, 4), g(1, 5)):
        with pytest.raises(ValueError):
            reduce_depth2(w, 6)


def test_ohno_sides():
    lhs, rhs = _ohno_sides((2,), 1)
    assert lhs == {(3,): 1}
    assert rhs == {(2, 1): 1, (1, 2): 1}


@pytest.mark.parametrize("k,m", [((2,), 0), ((2,), 1), ((2,), 2), ((3,), 0), ((3,), 1), ((3,), 2),
                                 ((1, 2), 1), ((2, 2), 1)])
def test_ohno_instances(k, m):
    rep = ohno_depth2_check(k, m)
    assert rep.summary == {"pass": 1, "fail": 0, "skip": 0}


def test_ohno_without_span_reports_skip():
    rep = ohno_depth2_check((2,), 2, allow_span=False)
    assert rep.cases[0].status == "skip"
    assert "depth > 2" in rep.cases[0].detail


def test_symbol_span_discriminates_at_odd_weight():
    cols, rows = symbol_relations(5)
    assert _rank(rows, len(cols)) == len(cols) - 1
    assert not _in_span(rows, {cols[(1, 4)]: 1}, len(cols))


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_report_formats_and_determinism():
    a = run_suite("bounds", {"M": 4})
    b = run_suite("bounds", {"M": 4})
    assert a.to_json() == b.to_json()
    data = json.loads(a.to_json())
    assert set(data) == {"suite", "params", "seed", "cases", "summary"}
    assert set(data["cases"][0]) == {"id", "status", "lhs", "rhs", "detail"}
    assert sum(data["summary"].values()) == len(data["cases"])
    ids = [c["id"] for c in data["cases"]]
    assert ids == sorted(ids)
    rows = list(csv.reader(io.StringIO(a.to_csv())))
    assert rows[0] == ["suite", "id", "status", "lhs", "rhs", "detail"]
    assert len(rows) == len(ids) + 1


def test_exit_code_is_capped():
    rep = Report("x")
    for i in range(200):
        rep.add(i, False)
    assert rep.exit_code() == 125
    assert Report("y").exit_code() == 0


def test_random_generator_is_seeded():
    import random
    a = [str(random_apoly(random.Random(7), 5)) for _ in range(3)]
    b = [str(random_apoly(random.Random(7), 5)) for _ in range(3)]
    assert a == b


@pytest.mark.parametrize("name", ["classical-ds", "reversal", "e-closure", "qsmzv-shuffle",
                                  "closed-forms", "structure", "bounds"])
def test_suites_pass(name):
    rep = run_suite(name, {"wt_max": 4, "M": 4})
    assert rep.ok, [c for c in rep.cases if c.status == "fail"][:3]


def test_small_products_suite():
    rep = run_suite("products", {"wt_max": 3, "M": 4, "n_random": 20, "seed": 3})
    assert rep.ok and rep.seed == 3


def test_suite_catalog():
    assert set(SUITES) >= {"classical-ds", "q-truncated-ds", "products", "identities", "limits"}
