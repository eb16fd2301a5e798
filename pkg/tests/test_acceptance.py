"""Acceptance criteria 1-9. Each test prints one PASS/FAIL line and then asserts."""
import random
import time
from fractions import Fraction

import pytest

from schreier_tutte.bipoly import BiPoly, LaurentPoly, UniPoly, parse, serialize
from schreier_tutte.invariants import closed_form
from schreier_tutte.invariants.evaluations import (
    chromatic_polynomial,
    reliability_polynomial,
    special_evaluations,
)
from schreier_tutte.invariants.ising import closed_z, ising_from_tutte
from schreier_tutte.invariants.oracles import ising_oracle, oracle_counts
from schreier_tutte.multigraph import (
    block_decompose,
    canonical_text,
    contract_edge,
    delete_edge,
    one_point_join,
    parse_edge_list,
    strip_loops,
    to_edge_list,
)
from schreier_tutte.pipeline import level_graph, level_tutte
from schreier_tutte.schreier import GROUPS, schreier_graph, verify_structure
from schreier_tutte.tutte import tutte, tutte_cactus, tutte_deletion_contraction, tutte_spanning_sum

from conftest import complete_graph, random_cactus, random_multigraph

GROUP_NAMES = ("grigorchuk", "basilica")
L = UniPoly.var()
P = UniPoly.var()


@pytest.fixture
def verdict(capsys):
    def emit(number: int, title: str, failures: list[str], elapsed: float):
        status = "PASS" if not failures else "FAIL"
        line = f"criterion {number} [{title}]: {status} ({elapsed:.1f} s)"
        if failures:
            line += " -- " + "; ".join(failures[:5])
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line

    return emit


def test_criterion_1_closed_form_equality(verdict):
    start = time.perf_counter()
    failures = []
    for group in GROUP_NAMES:
        for n in range(1, 11):
            g = level_graph(group, n)
            for loops, graph in ((True, g), (False, strip_loops(g))):
                if closed_form(group, n, loops).expand() != tutte_cactus(graph):
                    failures.append(f"{group} n={n} loops={loops}")
    elapsed = time.perf_counter() - start
    if elapsed > 60:
        failures.append(f"runtime {elapsed:.1f} s exceeds 60 s")
    verdict(1, "closed-form equality, levels 1-10", failures, elapsed)


def test_criterion_2_engine_triple_agreement(verdict, cacti):
    start = time.perf_counter()
    failures = []
    corpus = [(f"{group} n={n}", level_graph(group, n))
              for group, levels in (("grigorchuk", (1, 2)), ("basilica", (1, 2, 3))) for n in levels]
    corpus += [(f"cactus #{k}", g) for k, g in enumerate(cacti)]
    for name, g in corpus:
        assert len(g.edges) <= 16
        ref = tutte_cactus(g)
        if not (tutte_spanning_sum(g) == tutte_deletion_contraction(g) == ref):
            failures.append(name)
    elapsed = time.perf_counter() - start
    if elapsed > 120:
        failures.append(f"runtime {elapsed:.1f} s exceeds 120 s")
    verdict(2, f"engine triple agreement on {len(corpus)} graphs", failures, elapsed)


def _basilica_tau(n: int) -> int:
    return 2 ** ((2 ** (n + 2) + 3 * n - (5 if n % 2 else 4)) // 6)


def test_criterion_3_evaluation_table(verdict):
    start = time.perf_counter()
    failures = []

    def check(label, expected, observed):
        if expected != observed:
            failures.append(f"{label}: expected {expected}, got {observed}")

    for n in range(1, 11):
        h = 2 ** (n - 1)
        ev = special_evaluations(level_tutte("grigorchuk", n), level_graph("grigorchuk", n))
        check(f"tau(G{n})", 2 ** (h - 1), ev["tau"])
        check(f"connected(G{n})", 2 ** (2 ** n + 4) * 3 ** (h - 1), ev["connected_spanning"])
        check(f"forests(G{n})", 2 ** h * 3 ** (h - 1), ev["forests"])
        check(f"acyclic(G{n}*)", 2 ** (2 ** n - 1), level_tutte("grigorchuk", n, False)(2, 0))
        check(f"tau(B{n})", _basilica_tau(n), level_tutte("basilica", n)(1, 1))
        for group in GROUP_NAMES:
            for loops in (True, False):
                g = level_graph(group, n, loops)
                check(f"T(2,2) {group} n={n} loops={loops}", 2 ** len(g.edges), level_tutte(group, n, loops)(2, 2))

    b = [level_tutte("basilica", n) for n in (1, 2, 3)]
    check("T1(1,1)", 2, b[0](1, 1))
    check("T2(1,1)", 2 ** 3, b[1](1, 1))
    check("T3(1,1)", 2 ** 6, b[2](1, 1))
    check("T3(1,2)", 2 ** 4 * 3 ** 4 * 5, b[2](1, 2))
    check("T3(2,1)", 3 ** 5 * 5, b[2](2, 1))
    check("T3*(2,0)", 2 ** 5 * 7, level_tutte("basilica", 3, False)(2, 0))
    verdict(3, "evaluation table, levels 1-10", failures, time.perf_counter() - start)


def test_criterion_4_oracle_confirmation(verdict):
    start = time.perf_counter()
    failures = []
    for group, levels in (("grigorchuk", (1, 2)), ("basilica", (1, 2, 3))):
        for n in levels:
            for loops in (True, False):
                g, T = level_graph(group, n, loops), level_tutte(group, n, loops)
                oc = oracle_counts(g, colors=(2, 3))
                chi = chromatic_polynomial(T, g)
                acyclic = 0 if g.loop_count else T(2, 0)
                pairs = [("trees", oc.trees, T(1, 1)), ("forests", oc.forests, T(2, 1)),
                         ("connected", oc.connected_spanning, T(1, 2)),
                         ("acyclic", oc.acyclic_orientations, acyclic)]
                pairs += [(f"colorings({lam})", c, chi(lam)) for lam, c in oc.colorings.items()]
                for name, brute, poly in pairs:
                    if brute != poly:
                        failures.append(f"{group} n={n} loops={loops} {name}: {brute} vs {poly}")
    elapsed = time.perf_counter() - start
    if elapsed > 300:
        failures.append(f"runtime {elapsed:.1f} s exceeds 5 min")
    verdict(4, "oracle confirmation", failures, elapsed)


def test_criterion_5_chromatic_and_reliability(verdict):
    start = time.perf_counter()
    failures = []
    for n in range(1, 9):
        gs = level_graph("grigorchuk", n, False)
        chi = chromatic_polynomial(level_tutte("grigorchuk", n, False), gs)
        if chi != L * (L - 1) ** (2 ** n - 1):
            failures.append(f"chromatic G{n}*")
        rel = reliability_polynomial(level_tutte("grigorchuk", n), level_graph("grigorchuk", n))
        if rel != P ** (2 ** n - 1) * (2 - P) ** (2 ** (n - 1) - 1):
            failures.append(f"reliability G{n}")
        for group in GROUP_NAMES:
            value = chromatic_polynomial(level_tutte(group, n, False), level_graph(group, n, False))(2)
            if value != 2:
                failures.append(f"chi(2) {group} n={n} = {value}")
    if reliability_polynomial(level_tutte("basilica", 1), level_graph("basilica", 1)) != P * (2 - P):
        failures.append("R(B1)")
    if reliability_polynomial(level_tutte("basilica", 3), level_graph("basilica", 3)) != \
            P ** 7 * (2 - P) ** 4 * (4 - 3 * P):
        failures.append("R(B3)")
    verdict(5, "chromatic and reliability", failures, time.perf_counter() - start)


def test_criterion_6_ising_identities(verdict):
    start = time.perf_counter()
    failures = []
    for group in GROUP_NAMES:
        for n in range(1, 9):
            gs, Ts = level_graph(group, n, False), level_tutte(group, n, False)
            lhs = ising_from_tutte(gs, Ts)
            if lhs != closed_z(group, n):
                failures.append(f"{group} n={n}: Tutte side vs closed form")
            if group == "grigorchuk":
                h = 2 ** (n - 1)
                common = LaurentPoly((L ** 2 + 1) ** h * (L ** 4 + 1) ** (h - 1) * 2, -(3 * h - 2))
                if lhs != common:
                    failures.append(f"grigorchuk n={n}: common form")
            oracle_cap = 3 if group == "grigorchuk" else 4
            if n <= oracle_cap and ising_oracle(gs) != lhs:
                failures.append(f"{group} n={n}: spin enumeration")
    elapsed = time.perf_counter() - start
    if elapsed > 120:
        failures.append(f"runtime {elapsed:.1f} s exceeds 2 min")
    verdict(6, "Ising identities (symbolic 1-8, spin sums G*<=3, B*<=4)", failures, elapsed)


def test_criterion_7_structure_counts(verdict):
    start = time.perf_counter()
    failures = []
    for group in GROUP_NAMES:
        for n in range(1, 13):
            for claim in verify_structure(schreier_graph(GROUPS[group], n)):
                if not claim.ok:
                    failures.append(f"{group} n={n} {claim.name}: {claim.expected} vs {claim.observed}")
    verdict(7, "structure counts, levels 1-12", failures, time.perf_counter() - start)


def test_criterion_8_asymptotic_growth(verdict):
    start = time.perf_counter()
    failures = []
    targets = {"grigorchuk": (Fraction(511, 1024), Fraction(1, 2)),
               "basilica": (Fraction(687, 1024), Fraction(2, 3))}
    for group, (at_ten, limit) in targets.items():
        ratios = {}
        for n in range(4, 11):
            tau = level_tutte(group, n)(1, 1)
            assert tau & (tau - 1) == 0
            ratios[n] = Fraction(tau.bit_length() - 1, 2 ** n)
        if ratios[10] != at_ten:
            failures.append(f"{group}: ratio at n=10 is {ratios[10]}")
        if abs(ratios[10] - limit) > Fraction(5, 1000):
            failures.append(f"{group}: |ratio - limit| = {float(abs(ratios[10] - limit))}")
        gaps = [abs(ratios[n] - limit) for n in range(4, 11)]
        if any(b >= a for a, b in zip(gaps, gaps[1:])):
            failures.append(f"{group}: gap not strictly decreasing over n=4..10: {[str(g) for g in gaps]}")
    verdict(8, "asymptotic growth ratios", failures, time.perf_counter() - start)


def _property_corpus(cacti):
    rng = random.Random(99)
    corpus = list(cacti)
    corpus += [random_multigraph(rng, rng.randint(1, 6), rng.randint(0, 12)) for _ in range(40)]
    corpus += [level_graph(group, n, loops) for group in GROUP_NAMES for n in (1, 2, 3) for loops in (True, False)]
    corpus += [complete_graph(4), delete_edge(complete_graph(5), 0)]
    return corpus


def test_criterion_9_property_suite(verdict, cacti):
    start = time.perf_counter()
    failures = []
    rng = random.Random(2024)
    corpus = _property_corpus(cacti)
    polys = [tutte(g) for g in corpus]
    for k, (g, T) in enumerate(zip(corpus, polys)):
        if not T or any(c <= 0 for _, c in T.items()):
            failures.append(f"#{k}: non-positive coefficient")
        for fmt in ("json", "text", "latex"):
            if parse(serialize(T, fmt), fmt) != T:
                failures.append(f"#{k}: {fmt} round trip")
        if canonical_text(parse_edge_list(to_edge_list(g))) != canonical_text(g):
            failures.append(f"#{k}: edge-list round trip")
        eligible = [eid for b in block_decompose(g).blocks if b.kind in ("cycle", "core") for eid in b.edge_ids]
        for eid in rng.sample(eligible, min(3, len(eligible))):
            if T != tutte(delete_edge(g, eid)) + tutte(contract_edge(g, eid)):
                failures.append(f"#{k}: deletion-contraction at edge {eid}")
        j = rng.randrange(len(corpus))
        h = corpus[j]
        joined = one_point_join(g, h, rng.randrange(g.vertex_count), rng.randrange(h.vertex_count))
        if tutte(joined) != T * polys[j]:
            failures.append(f"#{k}: one-point join with #{j}")
    verdict(9, f"property suite over {len(corpus)} graphs", failures, time.perf_counter() - start)
