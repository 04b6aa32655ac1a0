"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line (visible even when
pytest captures output) and then asserts. Timings are the best of a few
repeats so that one-off interpreter warm-up does not count.
"""
import io
import subprocess
import sys
import time
from collections import Counter

import numpy as np
import pytest

from conftest import BOWTIE, DOUBLE_SQUARE, OVERLAP, RECT, SQUARE4, cover, polygon
from selfclip.classify import classify
from selfclip.cli import main
from selfclip.decompose import contour_is_simple, decompose_polygon, planarize
from selfclip.errors import PointOnBoundary
from selfclip.geom import FillRule, Point, Tolerance, signed_area, winding_number
from selfclip.oracle import compare_regions, grid_membership, random_convex, random_fixture, winding_oracle
from selfclip.pipeline import clip_polygons
from selfclip.polyio import parse_polygon, write_polygon

EO, NZ = FillRule.EVEN_ODD, FillRule.NON_ZERO
HOLE = [(1, 1), (1, 3), (3, 3), (3, 1)]


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")
        assert ok, detail

    return emit


def timed(fn, repeat=3):
    best, value = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t)
    return value, best


def edge_multiset(rings):
    out = Counter()
    for r in rings:
        v = [tuple(p) for p in r]
        out.update(zip(v, v[1:] + v[:1]))
    return out


def result_area(result):
    return sum(signed_area(c) for c in result.polygon.contours)


def test_criterion_1_bowtie_decomposition(report):
    poly = polygon(BOWTIE)
    tol = Tolerance.for_polygons(poly)
    parts, dt = timed(lambda: decompose_polygon(poly, tol))
    areas = [signed_area(c) for c in parts]
    conserved = edge_multiset(parts) == edge_multiset([planarize(poly.contours[0], tol).vertices])
    simple = all(contour_is_simple(c, tol) for c in parts)
    ok = len(parts) == 2 and sorted(areas) == [-4.0, 4.0] and conserved and simple and dt < 0.010
    report(1, ok, f"{len(parts)} contours, areas {areas}, edges conserved={conserved}, "
                  f"simple={simple}, {dt * 1e3:.2f} ms (< 10 ms)")


def test_criterion_2_lens_classification(report):
    def run():
        out = {}
        for rule in (EO, NZ):
            poly = polygon(OVERLAP, rule=rule)
            tol = Tolerance.for_polygons(poly)
            out[rule] = classify(decompose_polygon(poly, tol).contours, poly, tol)
        return out

    cls, dt = timed(run)
    lens_eo = min(cls[EO], key=lambda c: c.area)
    lens_nz = min(cls[NZ], key=lambda c: c.area)
    ok = (lens_eo.winding == 2 and lens_nz.winding == 2 and lens_eo.is_hole
          and not lens_nz.is_hole and dt < 0.010)
    report(2, ok, f"lens winding {lens_eo.winding}; evenodd hole={lens_eo.is_hole}, "
                  f"nonzero hole={lens_nz.is_hole}, {dt * 1e3:.2f} ms for both rules (< 10 ms)")


def test_criterion_3_bowtie_by_rectangle(report):
    subject, clipper = polygon(BOWTIE, rule=NZ), polygon(RECT)

    def run():
        result = clip_polygons(subject, clipper)
        return result, compare_regions(subject, clipper, result.polygon, 512)

    (result, rep), dt = timed(run, repeat=1)
    ok = rep.mismatch_fraction <= 0.005 and result.unclosed_chains == 0 and dt < 2.0
    report(3, ok, f"mismatch {rep.mismatch_fraction:.5f} (<= 0.005) over {rep.sampled} points, "
                  f"unclosed_chains {result.unclosed_chains}, {dt:.2f} s with oracle (< 2 s)")


def test_criterion_4_fill_rule_divergence(report):
    big = polygon(cover(OVERLAP))
    t = time.perf_counter()
    inside = {}
    for rule in (EO, NZ):
        subject = polygon(OVERLAP, rule=rule)
        result = clip_polygons(subject, big).polygon
        xs = np.linspace(3, 5, 258)[1:-1]
        px, py = np.meshgrid(xs, np.linspace(2, 4, 258)[1:-1])
        band = 10 * Tolerance.for_polygons(subject, big).eps
        keep = (np.minimum(np.abs(px - 3), np.abs(px - 5)) > band) & (np.minimum(np.abs(py - 2), np.abs(py - 4)) > band)
        inside[rule] = grid_membership(result, px[keep], py[keep])
    dt = time.perf_counter() - t
    false_eo = 1 - inside[EO].mean()
    true_nz = inside[NZ].mean()
    ok = false_eo >= 0.99 and true_nz >= 0.99 and dt < 2.0
    report(4, ok, f"lens points outside result under evenodd {false_eo:.4f}, inside under nonzero "
                  f"{true_nz:.4f} (both >= 0.99), {dt:.2f} s (< 2 s)")


def test_criterion_5_doubly_wound_square(report):
    big = polygon(cover(SQUARE4))
    t = time.perf_counter()
    eo = clip_polygons(polygon(DOUBLE_SQUARE, rule=EO), big)
    nz = clip_polygons(polygon(DOUBLE_SQUARE, rule=NZ), big)
    dt = time.perf_counter() - t
    area = result_area(nz)
    ok = eo.polygon.is_empty() and abs(area - 16) <= 1e-6 and dt < 1.0
    report(5, ok, f"evenodd empty={eo.polygon.is_empty()}, nonzero area {area!r} (16 +- 1e-6), "
                  f"{dt * 1e3:.1f} ms (< 1 s)")


def test_criterion_6_identity_and_disjoint(report, tmp_path):
    sq = polygon(SQUARE4)
    far = polygon([(10, 10), (11, 10), (11, 11)])
    same, dt_same = timed(lambda: clip_polygons(sq, sq))
    apart, dt_apart = timed(lambda: clip_polygons(sq, far))
    diff = abs(result_area(same) - 16)
    (tmp_path / "a.txt").write_text(write_polygon(sq))
    (tmp_path / "b.txt").write_text(write_polygon(far))
    code = main(["clip", "--subject", str(tmp_path / "a.txt"), "--clip", str(tmp_path / "b.txt"),
                 "--out", str(tmp_path / "r.txt")], out=io.StringIO())
    cli_empty = parse_polygon((tmp_path / "r.txt").read_text()).is_empty()
    ok = diff <= 1e-9 and apart.polygon.is_empty() and code == 0 and cli_empty and max(dt_same, dt_apart) < 0.010
    report(6, ok, f"identity area difference {diff:g} (<= 1e-9), disjoint empty={apart.polygon.is_empty()}, "
                  f"cli exit {code}, {max(dt_same, dt_apart) * 1e3:.2f} ms (< 10 ms)")


def test_criterion_7_interior_hole(report):
    subject = polygon(SQUARE4, HOLE)
    clipper = polygon(cover(SQUARE4))
    t = time.perf_counter()
    result = clip_polygons(subject, clipper)
    rep = compare_regions(subject, clipper, result.polygon, 512)
    dt = time.perf_counter() - t
    areas = [signed_area(c) for c in result.polygon.contours]
    outers = sum(a > 0 for a in areas)
    holes = sum(a < 0 for a in areas)
    ok = outers == 1 and holes == 1 and rep.mismatch_fraction <= 0.005 and dt < 1.0
    report(7, ok, f"{outers} CCW outer, {holes} CW hole, mismatch {rep.mismatch_fraction:.5f} (<= 0.005), "
                  f"{dt:.2f} s with oracle (< 1 s)")


def random_suite():
    for seed in range(200):
        rule = EO if seed % 2 else NZ
        yield seed, random_fixture(seed, 4 + seed % 13, True, rule), random_convex(10_000 + seed)


def test_criterion_8_randomized_suite(report):
    t = time.perf_counter()
    worst, bad = 0.0, []
    for seed, subject, clipper in random_suite():
        result = clip_polygons(subject, clipper)
        rep = compare_regions(subject, clipper, result.polygon, 256)
        worst = max(worst, rep.mismatch_fraction)
        if rep.mismatch_fraction > 0.01 or result.unclosed_chains:
            bad.append(seed)
    dt = time.perf_counter() - t
    ok = not bad and dt < 60
    report(8, ok, f"200 fixtures, worst mismatch {worst:.5f} (<= 0.01), failing seeds {bad}, {dt:.1f} s (< 60 s)")


def test_criterion_9_winding_cross_validation(report):
    rng = np.random.default_rng(2024)
    queries = []
    while len(queries) < 1000:
        k = len(queries)
        c = random_fixture(k, 4 + k % 13, True).contours[0]
        p = Point(*rng.uniform(0, 100, 2))
        tol = Tolerance.for_contours([c])
        try:
            winding_oracle(p, c, tol)
        except PointOnBoundary:
            continue
        queries.append((p, c, tol))

    t = time.perf_counter()
    disagree = sum(winding_number(p, c, tol) != winding_oracle(p, c, tol) for p, c, tol in queries)
    dt = time.perf_counter() - t
    nonzero = sum(winding_oracle(p, c, tol) != 0 for p, c, tol in queries)
    ok = disagree == 0 and dt < 1.0
    report(9, ok, f"{len(queries)} queries ({nonzero} with nonzero winding), {disagree} disagreements, "
                  f"{dt * 1e3:.0f} ms (< 1 s)")


def _cli(args, cwd):
    return subprocess.run([sys.executable, "-m", "selfclip.cli", *args], cwd=cwd, capture_output=True)


def test_criterion_10_round_trip_and_determinism(report, tmp_path):
    fixtures = [polygon(r, rule=rule) for r in (BOWTIE, RECT, OVERLAP, SQUARE4, DOUBLE_SQUARE) for rule in (EO, NZ)]
    fixtures.append(polygon(SQUARE4, HOLE))
    for _, subject, clipper in random_suite():
        fixtures += [subject, clipper, clip_polygons(subject, clipper).polygon]
    worst = 0.0
    for poly in fixtures:
        back = parse_polygon(write_polygon(poly))
        assert back.fill_rule is poly.fill_rule and len(back.contours) == len(poly.contours)
        for a, b in zip(poly.contours, back.contours):
            assert len(a) == len(b)
            worst = max([worst] + [max(abs(p.x - q.x), abs(p.y - q.y)) for p, q in zip(a, b)])

    (tmp_path / "s.txt").write_text(write_polygon(polygon(OVERLAP, rule=EO)))
    (tmp_path / "c.txt").write_text(write_polygon(polygon(RECT)))
    commands = [
        ["clip", "--subject", "s.txt", "--clip", "c.txt", "--out", "{}.txt", "--svg", "{}.svg"],
        ["split", "--in", "s.txt", "--out", "{}.txt"],
        ["classify", "--in", "s.txt"],
        ["winding", "--in", "s.txt", "--point", "4", "3"],
    ]
    identical = True
    for cmd in commands:
        runs = []
        for tag in ("first", "second"):
            args = [a.format(tag) for a in cmd]
            proc = _cli(args, tmp_path)
            files = [(tmp_path / a).read_bytes() for a in args if "{}" in cmd[args.index(a)]]
            runs.append((proc.returncode, proc.stdout, proc.stderr, files))
        identical &= runs[0] == runs[1] and runs[0][0] == 0
    ok = worst <= 1e-12 and identical
    report(10, ok, f"{len(fixtures)} polygons round-trip, worst coordinate error {worst:g} (<= 1e-12); "
                   f"repeated CLI runs byte-identical={identical}")
