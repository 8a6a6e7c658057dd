"""Exit criteria. Every check is exact; there are no tolerances.

Each criterion prints one PASS/FAIL line in the terminal summary.
"""
import json
import subprocess
import sys
from collections import Counter

from icosa5 import fixtures
from icosa5.group import generate, parse_word, partition_by_cycle_type, verify_relations
from icosa5.icosa import ICO_DOMAIN, classify_rotation, shared_vertex_compose
from icosa5.iso import A5_DOMAIN, verify_isomorphism
from icosa5.perm import CycleType, Permutation, format_cycles, parse_cycles
from icosa5.verify import verify_table

RESULTS: dict[int, tuple[str, bool]] = {}


def record(n: int, title: str, ok: bool) -> None:
    RESULTS[n] = (title, ok)
    assert ok, f"criterion {n} failed: {title}"


def test_01_group_orders(model):
    ico = len(generate(model.ico_generators))
    a5 = len(generate(model.a5_generators))
    record(1, f"group orders: ico={ico}, a5={a5} (want 60, 60)", ico == 60 and a5 == 60)


def test_02_relations(model):
    rels = [(parse_word(r.split("=")[0], "DYT"), ()) for r in fixtures.PRESENTATION]
    ico = verify_relations(model.ico_generators, rels).passed
    a5 = verify_relations(model.a5_generators, rels).passed
    record(2, "D^3=Y^3=T^3=(DT)^2=(DY)^2=(YT)^2=I on both sides", ico and a5)


def test_03_words(model):
    rows = {r.name: Permutation.from_images(ICO_DOMAIN, r.images) for r in fixtures.TABLE_1}
    bad = [name for name in fixtures.ROTATION_WORDS if model.named[name] != rows[name]]
    record(3, f"A,Z,V,W,B,C,X words match Table 1 rows (mismatches: {bad or 'none'})", not bad)


def test_04_census(model, graph):
    want = [1, 20, 15, 24]
    a5 = partition_by_cycle_type(model.a5)
    ico = partition_by_cycle_type(model.ico)
    a5_sizes = [len(a5[CycleType.of(**k)]) for k in ({"k1": 5}, {"k1": 2, "k3": 1}, {"k1": 1, "k2": 2}, {"k5": 1})]
    ico_sizes = [len(ico[CycleType.of(**k)]) for k in ({"k1": 12}, {"k3": 4}, {"k2": 6}, {"k1": 2, "k5": 2})]
    kinds = Counter(classify_rotation(g, graph).kind for g in model.ico)
    geo = [kinds[k] for k in ("identity", "face", "edge", "vertex")]
    ok = a5_sizes == ico_sizes == geo == want and want[1] == 60 - 1 - 15 - 24
    record(4, f"class census a5={a5_sizes} ico={ico_sizes} geometric={geo}", ok)


def test_05_isomorphism(model):
    r = verify_isomorphism(model.hom)
    record(5, f"isomorphism: {r.multiplicative_failures}/{r.pairs_checked} pair failures, "
              f"injective={r.injective}, surjective={r.surjective}",
           r.pairs_checked == 3600 and r.passed)


def test_06_geometry(graph):
    counts = (len(graph.faces), len(graph.edges), len(graph.vertices))
    regular = all(len(graph.neighbors(v)) == 5 for v in graph.vertices)
    stated = {frozenset(p) for p in fixtures.AXIS_VERTEX_PAIRS}
    derived = {frozenset(p) for p in graph.antipodal_pairs()}
    record(6, f"geometry: faces/edges/vertices={counts}, 5-regular={regular}, antipodes match text={stated == derived}",
           counts == (20, 30, 12) and regular and stated == derived)


def test_07_fig2(model, graph):
    faces = [g for g in model.ico if g.order() == 3]
    mismatches = 0
    cases = Counter()
    witnesses = Counter()
    for r1 in faces:
        for r2 in faces:
            c1, c2 = classify_rotation(r1, graph), classify_rotation(r2, graph)
            if not any(len(set(a) & set(b)) == 1 for a in c1.axis for b in c2.axis):
                continue
            try:
                res = shared_vertex_compose(r1, r2, graph)
            except AssertionError:
                mismatches += 1
                continue
            cases[res.case] += 1
            product_kind = classify_rotation(r1 * r2, graph).kind
            if (product_kind == "edge") != (res.case != "not_edge_rotation"):
                mismatches += 1
            if product_kind == "edge":
                witnesses[r1 * r2] += 1
    multi = max(witnesses.values(), default=0) >= 2
    record(7, f"Fig. 2 trichotomy over {sum(cases.values())} pairs {dict(cases)}: {mismatches} mismatches; "
              f"edge rotation with >=2 pairs: {multi}", mismatches == 0 and multi and sum(cases.values()) > 0)


def test_08_tables():
    fails = {}
    errata = {}
    for n in range(1, 8):
        report = verify_table(n)
        fails[n] = report.count("fail")
        errata[n] = report.count("errata")
    record(8, f"tables 1-7: fail={sum(fails.values())}, errata={sum(errata.values())}", sum(fails.values()) == 0)


def test_09_powers(model):
    bad = [(i, k) for i in range(1, 7) for k in range(1, 5) if model.hom(model.s[i] ** k) != model.q[i] ** k]
    powers = [model.q[i] ** k for i in range(1, 7) for k in range(1, 5)]
    distinct = len(set(powers)) == 24 and all(p.cycle_type() == CycleType.of(k5=1) for p in powers)
    listing = {(r.index, r.exponent): parse_cycles(r.cycle, A5_DOMAIN) for r in fixtures.TABLE_7}
    table7 = all(listing[(i, k)] == model.q[i] ** k for i in range(1, 7) for k in range(1, 5))
    lex = [r.cycle for r in fixtures.TABLE_7] == sorted(r.cycle for r in fixtures.TABLE_7)
    record(9, f"powers: {len(bad)} mismatches, distinct={distinct}, Table 7 match={table7}, lexicographic={lex}",
           not bad and distinct and table7 and lex)


def test_10_roundtrip_and_determinism(model):
    broken = [p for p in (*model.ico, *model.a5) if parse_cycles(format_cycles(p), p.domain) != p]
    cmd = [sys.executable, "-m", "icosa5", "verify", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    json.loads(first)
    record(10, f"round-trip failures {len(broken)}/120; verify --json byte-identical={first == second}",
           not broken and len(model.ico) + len(model.a5) == 120 and first == second)
