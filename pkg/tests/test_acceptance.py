"""Acceptance criteria, one test each, at the stated tolerances and time limits.

Every test records a line in ``conftest.ACCEPTANCE``; the terminal summary
prints them as a pass/fail table at the end of the run.
"""
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from conftest import ACCEPTANCE
from hochschild.algebra import check_bimodule, check_monoid_axioms, regular_bimodule
from hochschild.coherence import coherence_suite
from hochschild.cohomology import cohomology_table
from hochschild.engine import (
    build_cochain_complex,
    build_cosimplicial,
    check_cosimplicial_identities,
    check_dd_zero,
    compare_formulations,
    realize_monotone,
)
from hochschild.fixtures import STANDARD, dual_numbers, perturb_mu
from hochschild.linalg import Matrix, determinant, rank, smith_normal_form
from hochschild.monoidal import FreeModCategory, GradedVecCategory
from hochschild.oracle import bar_oracle
from hochschild.rings import QQ, ZZ
from hochschild.simplex import (
    check_simplicial_identities,
    compose_maps,
    factorize,
    random_monotone,
    recompose,
)

INSTANCES = Path(__file__).resolve().parent.parent / "instances"
SEED = 20240601

# degree through which C^k is built, per fixture
BUILD_DEGREE = {name: 5 for name in STANDARD}
BUILD_DEGREE["matrices_2_Q"] = 4


def record(key, ok, detail, start, limit=None):
    secs = time.perf_counter() - start
    if limit is not None and secs >= limit:
        ok, detail = False, f"{detail}; took {secs:.1f}s, limit {limit}s"
    ACCEPTANCE[key] = (ok, detail, secs)
    print(f"criterion {key}: {'PASS' if ok else 'FAIL'} ({detail})")
    return ok


@pytest.fixture(scope="module")
def models():
    out = {}
    for name, make in STANDARD.items():
        m = make()
        x = regular_bimodule(m)
        t = time.perf_counter()
        c = build_cochain_complex(m, x, BUILD_DEGREE[name])
        tc = time.perf_counter() - t
        t = time.perf_counter()
        a = build_cosimplicial(m, x, 4)
        ta = time.perf_counter() - t
        out[name] = (m, x, c, a, tc, ta)
    return out


def test_criterion_1_coherence():
    start = time.perf_counter()
    free = FreeModCategory(ZZ)
    free.declare("A", 2)
    twisted = GradedVecCategory(QQ, 2, [1] * 7 + [-1])
    twisted.declare("A", [0, 1])
    bad = GradedVecCategory(QQ, 2, [1] * 7 + [2])
    bad.declare("A", [0, 1])
    n = 0
    ok = True
    for cat in (free, twisted):
        r = coherence_suite(cat, 5)
        n += len(r.checks)
        ok &= r.ok
    # a second atom, so mixed words appear; one leaf fewer keeps the count modest
    free.declare("B", 1)
    twisted.declare("B", [1])
    for cat in (free, twisted):
        r = coherence_suite(cat, 4)
        n += len(r.checks)
        ok &= r.ok
    rb = coherence_suite(bad, 5)
    ok &= "pentagon" in rb.failed_names
    assert record("1", ok, f"{n} diagrams hold; non-cocycle fails "
                  f"{rb.failed_names.count('pentagon')} pentagons", start, 5)


def test_criterion_2_axioms():
    start = time.perf_counter()
    ok = True
    total = caught = 0
    survivors = []
    for name, make in STANDARD.items():
        m = make()
        ok &= check_monoid_axioms(m).ok and check_bimodule(m, regular_bimodule(m)).ok
        for idx in range(len(m.mu.mat.entries)):
            total += 1
            r = check_monoid_axioms(perturb_mu(m, idx))
            if r.ok:
                survivors.append(f"{name}[{idx}]")
            else:
                caught += 1
                ok &= bool(r.failed_names)
    literal = ok and caught == total
    detail = (f"fixtures pass; {caught}/{total} single-entry perturbations fail a named diagram"
              + (f"; still associative and unital: {', '.join(survivors)}" if survivors else ""))
    record("2", literal, detail, start, 5)
    assert ok
    if not literal:
        pytest.xfail("some perturbations of the x*x column give another valid algebra")


def test_criterion_3_dd_zero(models):
    start = time.perf_counter()
    build = sum(v[4] for v in models.values())
    ok = all(check_dd_zero(c).ok for _, _, c, _, _, _ in models.values())
    degs = ", ".join(f"{n}:{BUILD_DEGREE[n]}" for n in models)
    assert record("3", ok, f"exact d∘d = 0 through C^k for {degs}",
                  start - build, 60)


def test_criterion_4_cosimplicial(models):
    start = time.perf_counter()
    build = sum(v[5] for v in models.values())
    reports = [check_cosimplicial_identities(a) for _, _, _, a, _, _ in models.values()]
    ok = all(r.ok for r in reports)
    n = sum(len(r.checks) for r in reports)
    assert record("4", ok, f"{n} identities exact through degree 4", start - build, 60)


def test_criterion_5_formulations(models):
    start = time.perf_counter()
    ok = True
    degrees = 0
    for name, (m, x, c, a, _, _) in models.items():
        r = compare_formulations(c, a)
        ok &= r.ok and len(r.checks) == min(c.k_max, a.k_max)
        degrees += len(r.checks)
    assert record("5", ok, f"bitwise equal at {degrees} (fixture, degree) pairs", start)


EXPECTED_PREFIX = {
    "unit_Z": [(1, ()), (0, ()), (0, ()), (0, ())],
    "dual_numbers_Q": [(2, ()), (1, ()), (1, ()), (1, ())],
    "matrices_2_Q": [(1, ()), (0, ()), (0, ()), (0, ())],
    "dual_numbers_Z": [(2, ()), (1, ())],
}


def test_criterion_6_cohomology(models):
    start = time.perf_counter()
    ok = True
    parts = []
    for name, (m, x, c, _, _, _) in models.items():
        ours = [(g.free_rank, g.torsion) for g in cohomology_table(c)][:4]
        theirs = [(g.free_rank, g.torsion) for g in bar_oracle(m, x, 4)]
        ok &= ours == theirs
        want = EXPECTED_PREFIX.get(name)
        if want is not None:
            ok &= ours[:len(want)] == want
        parts.append(f"{name}=" + ",".join(
            str(f) + "".join(f"+Z/{t}" for t in tor) for f, tor in ours))
    assert record("6", ok, "; ".join(parts), start, 120)


def test_criterion_7_functoriality():
    start = time.perf_counter()
    m = dual_numbers(QQ)
    a = build_cosimplicial(m, regular_bimodule(m), 4)
    rng = random.Random(SEED)
    ok = True
    for _ in range(100):
        k, l, n = (rng.randint(0, 4) for _ in range(3))
        f, g = random_monotone(rng, k, l), random_monotone(rng, l, n)
        ok &= realize_monotone(a, compose_maps(g, f)) == \
            realize_monotone(a, g) @ realize_monotone(a, f)
    assert record("7", ok, "A(g∘f) = A(g)A(f) on 100 seeded pairs", start, 30)


def test_criterion_8_snf():
    start = time.perf_counter()
    rng = random.Random(SEED)
    ok = True
    for _ in range(200):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        A = Matrix(ZZ, r, c, [rng.randint(-9, 9) for _ in range(r * c)])
        res = smith_normal_form(A)
        f = list(res.invariant_factors)
        ok &= res.U @ A @ res.V == res.D
        ok &= abs(determinant(res.U)) == 1 and abs(determinant(res.V)) == 1
        ok &= all(f[i + 1] % f[i] == 0 for i in range(len(f) - 1))
        ok &= res.rank == rank(Matrix(QQ, r, c, A.entries))
    assert record("8", ok, "UAV = D, unimodular U and V, divisibility, rank on 200 matrices",
                  start, 10)


def test_criterion_9_simplex():
    start = time.perf_counter()
    r = check_simplicial_identities(6)
    rng = random.Random(SEED)
    ok = r.ok
    for _ in range(500):
        f = random_monotone(rng, rng.randint(0, 6), rng.randint(0, 6))
        faces, degs = factorize(f)
        ok &= recompose(faces, degs, f.source) == f
    assert record("9", ok, f"{len(r.checks)} identities, 500 factorizations", start, 5)


def test_criterion_10_determinism():
    start = time.perf_counter()
    cmd = [sys.executable, "-m", "hochschild.cli", "cohomology",
           str(INSTANCES / "group_ring_C2_Z.json"), "--format", "json"]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    ok = runs[0] == runs[1] and len(runs[0]) > 0
    assert record("10", ok, f"two runs, {len(runs[0])} bytes, byte-identical", start)
