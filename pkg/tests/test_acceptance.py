"""End-to-end acceptance checks. Each test prints one PASS/FAIL line and
enforces its wall-clock budget."""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from scramblenum.canon import enumerate_connected_multigraphs
from scramblenum.families import FORBIDDEN_SN3, c_nk, complete_minus_cycle, ctilde_nk, wheel
from scramblenum.multigraph import independence_number, lambda2
from scramblenum.properties import LEMMAS, distinct_graphs, property_universe, sampled_graphs
from scramblenum.reproduce import single_edge_deletions
from scramblenum.scramble import order, uniform_scramble_2
from scramblenum.screewidth import TreeCutDecomposition, screewidth_exact, width
from scramblenum.sn_solver import classify_sn_le_2, dsn_exact, is_k_scramble_minimal, sn_exact, sn_value, \
    verify_corollary_3ec

C_CASES = [(4, 2), (5, 2), (6, 2), (6, 3)]
CTILDE_CASES = [(6, 2), (7, 2), (8, 2)]


def record(number: int, title: str, ok: bool, seconds: float, budget: float, detail: str = "") -> None:
    verdict = "PASS" if ok and seconds < budget else "FAIL"
    line = f"[{verdict}] criterion {number}: {title} ({seconds:.1f}s of {budget:.0f}s){' ' + detail if detail else ''}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line
    assert seconds < budget, line


def test_criterion_1_four_graphs_have_sn_and_scw_three():
    start = time.perf_counter()
    ok = True
    for build in FORBIDDEN_SN3.values():
        g = build()
        cert = sn_exact(g)
        scw, d = screewidth_exact(g)
        ok &= cert.value == 3 and scw == 3 and width(d) == 3
        ok &= order(cert.lower_witness).order == 3
        ok &= isinstance(cert.upper_witness, TreeCutDecomposition) and width(cert.upper_witness) == 3
    record(1, "sn = scw = 3 on K4, P33, C3221, LL6 with certificates", ok, time.perf_counter() - start, 10)


def test_criterion_2_single_edge_deletions_drop_to_two():
    start = time.perf_counter()
    variants = bad = 0
    for build in FORBIDDEN_SN3.values():
        for h in single_edge_deletions(build()):
            variants += 1
            parts = [h.induced(c)[0] for c in h.components()]
            sn = max(sn_value(p) for p in parts)
            scw = max(screewidth_exact(p)[0] for p in parts)
            bad += not sn <= scw <= 2
    record(2, "every single-edge deletion has sn <= scw <= 2", bad == 0, time.perf_counter() - start, 30,
           f"{variants} variants")


def test_criterion_3_classifier_matches_solver():
    start = time.perf_counter()
    graphs = mismatches = 0
    for g in enumerate_connected_multigraphs(5, 3):
        graphs += 1
        sn = sn_exact(g, use_classifier=False, certify=False).value
        expected = "sn=1" if sn == 1 else "sn=2" if sn == 2 else "sn>=3"
        mismatches += classify_sn_le_2(g).verdict != expected
    record(3, "classifier agrees with exact solver (<=5 vertices, mult <=3)", mismatches == 0,
           time.perf_counter() - start, 30 * 60, f"{graphs} graphs, {mismatches} mismatches")


@pytest.mark.slow
def test_criterion_4_three_edge_connected_sweep():
    start = time.perf_counter()
    report = verify_corollary_3ec(5, 4)
    record(4, "3-edge-connected graphs (3..5 vertices, mult <=4) contain a pattern",
           report["passed"] and not report["counterexamples"], time.perf_counter() - start, 10 * 60,
           f"{report['tested']} graphs, {len(report['counterexamples'])} counterexamples")


def test_criterion_5_minimal_families():
    start = time.perf_counter()
    ok = all(bool(is_k_scramble_minimal(c_nk(n, k), 2 * k)) for n, k in C_CASES)
    ok &= all(bool(is_k_scramble_minimal(ctilde_nk(n, k), 2 * k + 1)) for n, k in CTILDE_CASES)
    record(5, "C_{n;k} is 2k-minimal and Ctilde_{n;k} is (2k+1)-minimal", ok, time.perf_counter() - start, 20 * 60)


def test_criterion_6_wheel_and_complement_cycle_values():
    start = time.perf_counter()
    w = wheel(5)
    got = (sn_value(w), dsn_exact(w), lambda2(w), independence_number(w), order(uniform_scramble_2(w)).order)
    k = complete_minus_cycle(7)
    got += (sn_value(k), dsn_exact(k))
    record(6, "W5 and K7-C7 invariants", got == (4, 3, 4, 2, 4, 5, 4), time.perf_counter() - start, 5 * 60,
           f"got {got}")


@pytest.mark.slow
def test_criterion_7_property_suites():
    start = time.perf_counter()
    graphs = property_universe(4, 2) + sampled_graphs()
    failures = {name: len(check(graphs)) for name, check in LEMMAS.items()}
    failures = {name: n for name, n in failures.items() if n}
    record(7, "property suites over the small universe plus 200 sampled graphs", not failures,
           time.perf_counter() - start, 30 * 60, f"{len(graphs)} graphs, violations {failures or 0}")


def test_criterion_8_three_distinct_minimal_graphs():
    start = time.perf_counter()
    m = 3
    graphs = [c_nk(n, 2) for n in (4, 5, 6)]
    ok = distinct_graphs(graphs) and all(bool(is_k_scramble_minimal(g, m + 1)) for g in graphs)
    record(8, "three non-isomorphic 4-scramble-minimal graphs", ok, time.perf_counter() - start, 20 * 60)
