"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
happen; the conftest also repeats them in the terminal summary.  The file
also runs as a plain script.
"""

from __future__ import annotations

import contextlib
import io
import json
import sys
import time

import pytest

from xfam.bounds import bound, gamma
from xfam.cli import run
from xfam.constructions import extremal_FKWX, extremal_main_2, sharpness_case1, sharpness_case2
from xfam.oracle import shadow_minimizers
from xfam.setfamily import Family, common_intersection, is_cross_intersecting, pair_canonical_key

import suites

RESULTS: dict[int, tuple[bool, str]] = {}


def report(num: int, ok: bool, detail: str) -> None:
    RESULTS[num] = (ok, detail)
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)


def cli(*argv: str) -> tuple[int, dict]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = run(list(argv))
    return code, json.loads(buf.getvalue()) if buf.getvalue() else {}


def class_keys(result: dict) -> list:
    return [pair_canonical_key(Family.from_dict(c["A"]), Family.from_dict(c["B"])) for c in result["classes"]]


def test_criterion_1_main_theorem():
    notes, ok = [], True
    for n, k, ell in [(6, 2, 2), (7, 2, 3)]:
        t0 = time.perf_counter()
        code, env = cli("search", str(n), str(k), str(ell), "--nontrivial")
        res = env["result"]
        got = int(res["max_product"])
        want = gamma(n, k, ell)
        keys = class_keys(res)
        match = keys == [pair_canonical_key(*extremal_main_2(n, k, ell))]
        ok &= code == 0 and got == want and match
        notes.append(f"({n},{k},{ell}) max {got} gamma {want} classes {len(keys)} "
                     f"main_2 {'yes' if match else 'no'} {time.perf_counter() - t0:.1f}s")
    report(1, ok, "; ".join(notes))
    assert ok


def test_criterion_2_fkwx():
    code, env = cli("search", "5", "2", "2", "--nontrivial")
    res = env["result"]
    got, want = int(res["max_product"]), bound("FKWX", {"n": 5, "k": 2}).value
    keys = class_keys(res)
    match = keys == [pair_canonical_key(*extremal_FKWX(5, 2))]
    ok = code == 0 and got == want == 10 and match
    report(2, ok, f"max {got} bound {want} classes {len(keys)} matches construction {match}")
    assert ok


def test_criterion_3_mt():
    code, env = cli("verify", "MT")
    res = env["result"]
    grid = {(r["params"]["n"], r["params"]["k"], r["params"]["ell"]) for r in res["records"]}
    want_grid = {(n, k, ell) for n in range(2, 11) for ell in range(1, n // 2 + 1) for k in range(1, ell + 1)}
    ok = code == 0 and res["ok"] and grid == want_grid
    report(3, ok, f"{res['points']} grid points, {res['mismatch_count']} mismatches")
    assert ok


def test_criterion_4_sharpness():
    lines, ok = [], True
    for (A, B), n, k, ell in [(sharpness_case1(4), 7, 3, 4), (sharpness_case2(2), 4, 2, 2)]:
        prod, g = len(A) * len(B), gamma(n, k, ell)
        good = prod > g and is_cross_intersecting(A, B) and common_intersection([A, B]) == 0
        ok &= good
        lines.append(f"{prod} > gamma({n},{k},{ell}) = {g}")
    A, B = sharpness_case1(3)
    eq = len(A) * len(B) == gamma(5, 2, 3) == 25 and is_cross_intersecting(A, B) and common_intersection([A, B]) == 0
    code, env = cli("verify", "SHARPNESS")
    recorded = [r for r in env["result"]["records"] if r["params"] == {"n": 5, "k": 2, "ell": 3}]
    eq &= bool(recorded) and recorded[0].get("relation") == "="
    ok &= eq and code == 0
    lines.append(f"ell=3 equality 25 = gamma(5,2,3) recorded {eq}")
    report(4, ok, "; ".join(lines))
    assert ok


def test_criterion_5_kruskal_katona():
    t0 = time.perf_counter()
    rows = shadow_minimizers(5, 3, 2)
    bound_ok = all(r["min_shadow"] == r["cascade_bound"] for r in rows) and len(rows) == 10
    mors_ok = all(r["mors_unique"] == (r["classes"] == 1) for r in rows)
    ok = bound_ok and mors_ok
    multi = [r["m"] for r in rows if r["classes"] > 1]
    report(5, ok, f"m=1..10 shadow bound {bound_ok}, uniqueness condition {mors_ok}, "
                  f"several classes at m={multi} ({time.perf_counter() - t0:.1f}s)")
    assert ok


@pytest.mark.slow
def test_criterion_6_lemma_sweeps():
    t0 = time.perf_counter()
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = run(["check-lemmas", "--max-n", "100", "--limit", "3"])
    res = json.loads(buf.getvalue())["result"]
    bad = {s["lemma"]: s["counterexample_count"] for s in res["lemmas"] if not s["holds"]}
    ok = code == 0 and not bad
    report(6, ok, f"{len(res['lemmas'])} sweeps to n=100, counterexamples {bad or 'none'} "
                  f"({time.perf_counter() - t0:.0f}s)")
    assert ok, bad


def test_criterion_7_constructions():
    t0 = time.perf_counter()
    checked, fails = suites.construction_suite(max_n=10)
    ok = checked > 0 and not fails
    report(7, ok, f"{checked} parameter sets n<=10 with 1<=r<=k-1, failures {sorted(fails) or 'none'} "
                  f"({time.perf_counter() - t0:.1f}s)")
    assert ok


def test_criterion_8_property_suites():
    t0 = time.perf_counter()
    out = {
        "hilton": suites.hilton_suite(300, seed=0),
        "result2": suites.result2_suite(10, 15),
        "lovasz": suites.lovasz_suite(1000, seed=0, tol=1e-9),
        "duality": suites.duality_suite(300, seed=0),
    }
    ok = all(not f for _, f in out.values())
    detail = ", ".join(f"{k} {c} checked/{len(f)} failed" for k, (c, f) in out.items())
    report(8, ok, f"{detail} ({time.perf_counter() - t0:.1f}s)")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
