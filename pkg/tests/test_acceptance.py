"""Exit criteria, one test per criterion, each with its time budget.

A pass/fail line per criterion is printed in the terminal summary.
"""

import itertools
import json
import subprocess
import sys
import time
from collections import deque

import pytest

from mannheim.codec import all_codewords, build_code, decode_single, poly_divmod, verify_perfect, wshift, x_n_minus_w
from mannheim.eisenstein import ONE, W, WBAR, EisensteinInt
from mannheim.metric import WeightKind, audit_metric, distance, graph_weight, weight_M, weight_m, word_distance
from mannheim.residue_field import build_field

E = EisensteinInt
PRIMES = (7, 13, 19, 31, 37, 43)


def best_time(fn, repeat=5):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


@pytest.mark.acceptance(1, "p=7 golden table (pi, r, representatives)")
def test_c01_p7_golden_table():
    elapsed, f = best_time(lambda: build_field(7))
    assert f.pi == E(1, 2) and f.r == 3
    assert list(f.rep_table) == [E(0, 0), ONE, -WBAR, W, -W, WBAR, -ONE]
    assert elapsed < 1e-3, elapsed


@pytest.mark.acceptance(2, "p=193 golden labels 9, 94, 108")
def test_c02_p193_golden_labels():
    elapsed, f = best_time(lambda: build_field(193), repeat=3)
    assert f.rep(9) == E(-7, 7)
    assert f.rep(94) == E(2, -8)
    assert f.rep(108) == E(0, -1)
    assert elapsed < 0.05, elapsed


@pytest.mark.acceptance(3, "W_M triangle counterexample at p=193")
def test_c03_counterexample():
    with Timer() as t:
        f = build_field(193)
        x, y, z = f.label_of(E(-6, 7)), f.label_of(ONE), f.label_of(ONE - W)
        assert (x, y, z) == (10, 1, 109)
        d_xy = distance(f, WeightKind.W_M, x, y)
        d_xz = distance(f, WeightKind.W_M, x, z)
        d_zy = distance(f, WeightKind.W_M, z, y)
        assert (d_xy, d_xz, d_zy) == (14, 10, 1)
        assert d_xy > d_xz + d_zy
        report = audit_metric(f, WeightKind.W_M, exhaustive=False, trials=100_000, seed=1)
    assert report.axioms["triangle"] == "fail"
    assert report.first_violation.replay(f, WeightKind.W_M)
    assert t.elapsed < 5.0, t.elapsed


@pytest.mark.acceptance(4, "graph metric axioms, exhaustive, p in {7..43}")
def test_c04_graph_metric_axioms():
    with Timer() as t:
        reports = [audit_metric(build_field(p), WeightKind.GRAPH, exhaustive=True) for p in PRIMES]
    for r in reports:
        assert r.mode == "exhaustive"
        assert r.axioms == {"identity": "pass", "symmetry": "pass", "triangle": "pass"}
        assert r.violation_count == 0
    assert t.elapsed < 10.0, t.elapsed


@pytest.mark.acceptance(5, "graph <= W_m <= W_M and weight-1 sets are the units")
def test_c05_weight_ordering():
    fields = [build_field(p) for p in PRIMES]
    with Timer() as t:
        for f in fields:
            units = set(f.unit_labels)
            g = [graph_weight(f, l) for l in range(f.p)]
            m = [weight_m(f, l) for l in range(f.p)]
            M = [weight_M(f, l) for l in range(f.p)]
            assert all(a <= b <= c for a, b, c in zip(g, m, M))
            assert {l for l in range(f.p) if g[l] == 1} == units
            assert {l for l in range(f.p) if m[l] == 1} == units
    assert t.elapsed < 1.0, t.elapsed


@pytest.mark.acceptance(6, "p=7: W_M(+-wbar) = 2, W_m = graph = 1")
def test_c06_non_isomorphism():
    f = build_field(7)
    graph_weight(f, 0)  # BFS table built outside the timed region

    def check():
        out = []
        for e in (WBAR, -WBAR):
            l = f.label_of(e)
            out.append((weight_M(f, l), weight_m(f, l), graph_weight(f, l)))
        out.append((weight_M(f, 1), weight_m(f, 1), graph_weight(f, 1)))
        return out

    elapsed, rows = best_time(check)
    assert rows == [(2, 1, 1), (2, 1, 1), (1, 1, 1)]
    assert elapsed < 1e-3, elapsed


@pytest.mark.acceptance(7, "sphere-packing identity p^(n-1)(6n+1) = p^n")
def test_c07_packing_identity():
    codes = [build_code(build_field(p), 0) for p in PRIMES]
    elapsed, reports = best_time(lambda: [verify_perfect(c, exhaustive=False) for c in codes])
    for p, r in zip(PRIMES, reports):
        n = (p - 1) // 6
        assert p ** (n - 1) * (6 * n + 1) == p**n
        assert r.packing_identity_holds
    assert elapsed < 1e-3, elapsed


@pytest.mark.acceptance(8, "radius-1 balls partition the space, p=13 and p=19")
def test_c08_exhaustive_perfectness():
    with Timer() as t:
        reports = [verify_perfect(build_code(build_field(p), 0), exhaustive=True) for p in (13, 19)]
    assert [r.space_size for r in reports] == [169, 6859]
    assert all(r.exhaustive_partition_verified and r.packing_identity_holds for r in reports)
    assert t.elapsed < 10.0, t.elapsed


@pytest.mark.acceptance(9, "decoder corrects every single unit error, p=13 and p=19")
def test_c09_decoder_totality():
    counts = {}
    with Timer() as t:
        for p in (13, 19):
            f = build_field(p)
            code = build_code(f, 0)
            cases = 0
            for c in all_codewords(code):
                assert decode_single(code, c).status == "clean"
                for i in range(code.n):
                    for eps in f.unit_labels:
                        y = list(c)
                        y[i] = f.add(y[i], eps)
                        r = decode_single(code, y)
                        assert (r.codeword, r.status, r.error_position, r.error_value) == (c, "corrected", i, eps)
                        cases += 1
            counts[p] = cases
    assert counts == {13: 156, 19: 6498}
    assert t.elapsed < 10.0, t.elapsed


@pytest.mark.acceptance(10, "w-cyclic closure and g(x) | x^n - w, p=13 and p=19")
def test_c10_w_cyclic_closure():
    with Timer() as t:
        for p in (13, 19):
            f = build_field(p)
            code = build_code(f, 0)
            words = set(all_codewords(code))
            assert len(words) == p ** (code.n - 1)
            assert {wshift(code, c) for c in words} == words
            _, rem = poly_divmod(f, x_n_minus_w(f, code.n), code.g_coeffs)
            assert rem == []
    assert t.elapsed < 1.0, t.elapsed


def _product_bfs(f, start):
    units = f.unit_labels
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for i in range(2):
            for e in units:
                v = u[:i] + ((u[i] + e) % f.p,) + u[i + 1:]
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
    return dist


def _min_rep_scan(p, r):
    best = {}
    for x in range(-p, p + 1):
        for y in range(-p, p + 1):
            key = (x * x + x * y + y * y, x, y)
            l = (x + r * y) % p
            if l not in best or key < best[l]:
                best[l] = key
    return [E(best[l][1], best[l][2]) for l in range(p)]


@pytest.mark.acceptance(11, "oracle equivalences: product-graph BFS and brute-force representatives")
def test_c11_oracle_equivalences():
    with Timer() as t:
        f = build_field(7)
        words = list(itertools.product(range(7), repeat=2))
        pairs = 0
        for start in words:
            dist = _product_bfs(f, start)
            for v in words:
                assert word_distance(f, WeightKind.GRAPH, start, v) == dist[v]
                pairs += 1
        assert pairs == 49**2
        for p in PRIMES:
            g = build_field(p)
            assert list(g.rep_table) == _min_rep_scan(p, g.r)
    assert t.elapsed < 30.0, t.elapsed


@pytest.mark.acceptance(12, "simulate is byte-identical across runs; single errors 100% corrected")
def test_c12_simulation_determinism():
    argv = [sys.executable, "-m", "mannheim", "simulate", "--p", "37", "--trials", "10000",
            "--seed", "42", "--epsilon", "0.05"]
    outputs = []
    for _ in range(2):
        with Timer() as t:
            proc = subprocess.run(argv, capture_output=True, check=True)
        assert t.elapsed < 5.0, t.elapsed
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]
    stats = json.loads(outputs[0])
    assert stats["single_error_trials"] > 0
    assert stats["single_error_corrected"] == stats["single_error_trials"]
    assert stats["single_error_correction_rate"] == 1.0
