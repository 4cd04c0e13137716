"""One test per acceptance criterion; each records a single PASS/FAIL line."""

import time

from pclose import signalizer as sig
from pclose.constructions import build_lg_example, verify_lg_example
from pclose.corpus import c3cube_coordinatewise, generate_corpus
from pclose.group import PermGroup
from pclose.suites import run_suite, suite_ids
from pclose.textio import format_word

LINES: list[str] = []

# time limits in seconds
ENGINE_LIMIT = 5 * 60
LEMMA_LIMIT = 30 * 60
GL_LARGE_LIMIT = 60 * 60
LG_LIMIT = 60

LEMMA_SUITES = [
    s
    for s in suite_ids()
    if s.startswith(("pc:3", "pc:4", "ap:3", "ap:4"))
    or s in ("p:4", "p:5", "p:6", "nap:3", "nap:5", "nap:6", "lglob:6", "lglob:7", "md:2", "md:3", "md:5", "gor:6", "gor:7")
]
PLANTED = ("def:pc2", "axioms:abelian", "functor:broken")


def report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} {detail}"
    LINES.append(line)
    print(line)
    assert ok, line


def _functor(tier: str, fid: str):
    return next(inst.functor for inst in generate_corpus(tier) if inst.id == fid)


def test_criterion_01_engine_oracle():
    t = time.perf_counter()
    res = run_suite("engine:oracle", "small")
    dt = time.perf_counter() - t
    checked = res.passed
    bound_skips = res.skip_reasons.get("oracle bound", 0)
    ok = res.ok and res.skipped == bound_skips and checked > 0 and dt < ENGINE_LIMIT
    report(1, ok, f"engine vs enumeration: {checked} groups agree, {bound_skips} above the bound, {dt:.1f}s < {ENGINE_LIMIT}s")


def test_criterion_02_closure_oracle():
    res = run_suite("closure:oracle", "small")
    ok = res.ok and res.passed > 0 and res.skipped == res.skip_reasons.get("oracle bound", 0)
    report(2, ok, f"o_p/o_upper_p vs normal-subgroup oracle: {res.passed} groups x 6 properties, {len(res.findings)} mismatches")


def test_criterion_03_lemma_suites():
    t = time.perf_counter()
    results = [run_suite(s, "small") for s in LEMMA_SUITES]
    dt = time.perf_counter() - t
    bad = [r.suite_id for r in results if r.violations()]
    skipped = sum(r.skipped for r in results)
    ran = sum(r.passed for r in results)
    ok = not bad and dt < LEMMA_LIMIT
    report(3, ok, f"{len(results)} suites, {ran} instances checked, {skipped} skipped, violations in {bad or 'none'}, {dt:.0f}s < {LEMMA_LIMIT}s")


def test_criterion_04_invariant_closure():
    res = run_suite("p:2", "small")
    ok = res.ok and res.passed > 0 and res.skipped == 0
    report(4, ok, f"invariant P-closure over {res.passed} coprime actions x 6 properties, {len(res.findings)} violations")


def test_criterion_05_derived_functors():
    results = [run_suite(s, tier) for s in ("p:3", "nap:4-functor") for tier in ("small", "large")]
    passed = sum(r.passed for r in results)
    skipped = sum(r.skipped for r in results)
    ok = all(r.ok for r in results) and skipped == 0
    report(5, ok, f"theta_P and theta_nP re-verified on {passed} functor checks, {skipped} skipped, "
                  f"{sum(len(r.findings) for r in results)} violations")


def test_criterion_06_gl_harness():
    small = sig.gorenstein_lyons_check(_functor("small", "functor:C2^3 on C3^3:centralizer"))
    t = time.perf_counter()
    large = sig.gorenstein_lyons_check(_functor("large", "functor:C5^3 on L2(32)^3:centralizer"))
    dt = time.perf_counter() - t
    ok = small.hypothesis and small.complete and large.hypothesis and large.complete and dt < GL_LARGE_LIMIT
    order = large.completeness.closure.order()
    report(6, ok, f"C3^3 complete (closure 27); L2(32)^3 complete (closure {order}) in {dt:.0f}s < {GL_LARGE_LIMIT}s")
    assert small.completeness.closure.order() == 27 and order == 32736**3


def test_criterion_07_psi():
    f = sig.centralizer_functor(c3cube_coordinatewise())
    psi = sig.subfunctor_psi(f, (1, 0, 0))
    first = PermGroup(9, [[1, 2, 0, 3, 4, 5, 6, 7, 8]])
    expected = {"a2": first, "a3": first, "a2*a3": first}
    table_ok = all(psi.value(v) == expected.get(format_word(v), PermGroup(9)) for v in psi.vectors)
    results = [run_suite("gor:4", tier) for tier in ("small", "large")]
    ok = table_ok and all(r.ok and r.skipped == 0 for r in results)
    report(7, ok, f"psi table {'matches' if table_ok else 'differs'}; subfunctor checks on "
                  f"{sum(r.passed for r in results)} functors, {sum(len(r.findings) for r in results)} violations")


def test_criterion_08_lg_example():
    t = time.perf_counter()
    rep = verify_lg_example(build_lg_example(5))
    dt = time.perf_counter() - t
    statuses = [c["status"] for c in rep["claims"]]
    order = rep["claims"][0]["order"]
    ok = rep["passed"] and statuses == ["pass"] * 5 and order == 6 and dt < LG_LIMIT
    report(8, ok, f"r = 5: claims {statuses}, |C_J(a1)| = {order}, {dt:.1f}s < {LG_LIMIT}s")


def test_criterion_09_planted_controls():
    results = {s: run_suite(s, "small") for s in PLANTED}
    counts = {s: len(r.findings) for s, r in results.items()}
    ok = all(n == 1 for n in counts.values()) and all(
        f.kind == "planted" for r in results.values() for f in r.findings
    )
    report(9, ok, f"planted findings {counts}")


def test_criterion_10_determinism():
    ids = ("pc:3(c)", "p:4", "gor:6", "axioms:abelian")
    first = [run_suite(s, "small", seed=7).dumps() for s in ids]
    second = [run_suite(s, "small", seed=7).dumps() for s in ids]
    parallel = [run_suite(s, "small", seed=7, workers=2).dumps() for s in ids]
    ok = first == second == parallel
    report(10, ok, f"{len(ids)} suites byte-identical across repeated serial and 2-worker runs")
