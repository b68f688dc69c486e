"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s``.  Criterion 5 is an
exhaustive oracle sweep over every spec with ambient matrix size <= 10 and
takes a few minutes; everything else is seconds.
"""

import math
import os
import random
import time
from contextlib import contextmanager

import pytest

from seaweed.cli import formula_index, run_sweep
from seaweed.core import make_spec, parse_spec
from seaweed.formulas import (ThreeBlockParams, frobenius_census,
                              frobenius_D_repeated, frobenius_threeblock,
                              index_BC_threeblock, index_D_repeated)
from seaweed.meander import build, index_from_meander, render
from seaweed.reduction import index_BC_reduced, index_D_reduced, reduce_index

import property_checks as pc


@contextmanager
def criterion(number, label):
    try:
        yield
    except BaseException:
        print(f"criterion {number} FAIL: {label}")
        raise
    print(f"criterion {number} PASS: {label}")


def test_criterion_1_worked_example_C():
    with criterion(1, "C:200:15,185|17,61,117 reduces to 0 along the known chain"):
        start = time.perf_counter()
        value, trace = index_BC_reduced(parse_spec("C:200:15,185|17,61,117"))
        elapsed = time.perf_counter() - start
        assert value == 0
        assert trace.parabolic_chain() == [
            (400, (185, 15, 17, 61, 117)),
            (385, (185, 17, 61, 117)),
            (369, (185, 1, 61, 117)),
            (185, (1, 1, 61, 117)),
            (69, (1, 1, 61, 1)),
            (9, (1, 1, 1, 1)),
        ]
        assert elapsed < 0.1, f"took {elapsed:.3f}s"


def test_criterion_2_worked_example_D():
    with criterion(2, "D:335:218,15,102|33,301 reduces to 3 with terminal (2|2)"):
        start = time.perf_counter()
        value, trace = index_D_reduced(parse_spec("D:335:218,15,102|33,301"))
        elapsed = time.perf_counter() - start
        assert value == 3
        terminal_state = trace.terminal["state"]
        assert terminal_state["n"] == 2 and tuple(terminal_state["comp"]) == (2,)
        assert trace.terminal["value"] == 0  # the last-vertex-corrected index
        assert trace.terminal["alpha"] == 3
        assert elapsed < 0.1, f"took {elapsed:.3f}s"


def test_criterion_3_boundary_family():
    with criterion(3, "D:n:n|n-1 has index |n-2| for 2 <= n <= 200"):
        for n in range(2, 201):
            value, _ = index_D_reduced(parse_spec(f"D:{n}:{n}|{n-1}"))
            assert value == abs(n - 2), n


def test_criterion_4_gcd_family():
    with criterion(4, "D:n:a,n-a-1|n has index |gcd(a,n)-2| up to n = 32"):
        for n in range(3, 33):
            for a in range(1, n - 1):
                spec = make_spec("D", n, (a, n - a - 1), (n,))
                expected = abs(math.gcd(a, n) - 2)
                value, _ = index_D_reduced(spec)
                assert value == expected, (a, n)
                via_formula = formula_index(spec)
                assert via_formula == expected, (a, n)


def test_criterion_5_oracle_equivalence_sweep():
    with criterion(5, "oracle = meander = reduction on every spec of ambient <= 10"):
        jobs = min(os.cpu_count() or 1, 8)
        report = run_sweep([("A", 10), ("B", 4), ("C", 5), ("D", 5)],
                           use_oracle=True, trials=3, seed=0, jobs=jobs,
                           ambient_bound=10)
        expected = (4 ** 10 - 1) // 3 + 340 + 1364 + 766
        assert report["checked"] == expected
        assert report["mismatch_count"] == 0, report["mismatches"][:3]


def test_criterion_6_threeblock_grid():
    with criterion(6, "three-block formula = reduction = meander; "
                      "verdict matches zero index"):
        for ab in range(2, 13):
            for a in range(1, ab):
                b = ab - a
                for c in range(1, 13):
                    s = max(a + b, c)
                    for n in range(s, s + 4):
                        params = ThreeBlockParams(a, b, c, n)
                        value = index_BC_threeblock(params)
                        spec = make_spec("C", n, (a, b), (c,))
                        assert value == index_BC_reduced(spec)[0], (a, b, c, n)
                        assert value == index_from_meander(spec), (a, b, c, n)
                        verdict = frobenius_threeblock(params, "C")
                        assert verdict.is_frobenius == (value == 0), (a, b, c, n)


def test_criterion_7_doubling_census():
    with criterion(7, "#F^D_{2n} = 2 #F^A_n for n <= 5; odd ranks empty"):
        report = frobenius_census(5, include_odd=True)
        for row in report["rows"]:
            assert row["count_D"] == 2 * row["count_A"], row["n"]
            for member in row["members_D"]:
                assert reduce_index(parse_spec(member))[0] == 0, member
        assert [entry["rank_D"] for entry in report["odd"]] == [3, 5, 7, 9]
        assert all(entry["count_D"] == 0 for entry in report["odd"])


def test_criterion_8_repeated_block_family():
    with criterion(8, "repeated-block formula = reduction; Frobenius "
                      "characterization matches zero index"):
        for a in range(1, 9):
            for b in range(1, 9):
                for m in range(1, 7):
                    n = m * a + b + 1
                    spec = make_spec("D", n, (n,), (a,) * m + (b,))
                    value = index_D_repeated(a, b, m)
                    assert value == index_D_reduced(spec)[0], (a, b, m)
                    assert frobenius_D_repeated(a, b, m).is_frobenius == \
                        (value == 0), (a, b, m)


def test_criterion_9_property_suites():
    with criterion(9, "identity and invariance property suites"):
        for check in pc.ALL_CHECKS:
            rng = random.Random(20240811)
            assert check(rng) > 0


FIGURES = {
    "A:9:2,4,3|5,2,2": {
        "bottom": {(1, 2), (3, 6), (4, 5), (7, 9)},
        "top": {(1, 5), (2, 4), (6, 7), (8, 9)},
    },
    "C:5:2,3|3,1": {
        "bottom": {(1, 2), (3, 5), (6, 8), (9, 10)},
        "top": {(1, 3), (5, 6), (8, 10)},
    },
    "D:10:1,6,3|3,2,4": {
        "bottom": {(2, 7), (3, 6), (4, 5), (8, 11), (10, 13), (14, 19),
                   (15, 18), (16, 17)},
        "top": {(1, 3), (4, 5), (6, 10), (7, 9), (11, 15), (12, 14),
                (16, 17), (18, 20)},
        "crossed": {(8, 11), (10, 13)},
    },
    "D:5:4|5": {
        "bottom": {(1, 5), (2, 4), (6, 10), (7, 9)},
        "top": {(1, 6), (5, 10), (2, 4), (7, 9)},
        "crossed": {(1, 6), (5, 10)},
    },
}


def test_criterion_10_rendering():
    with criterion(10, "figure SVGs byte-stable with hand-verified arcs"):
        for text, expect in FIGURES.items():
            graph = build(parse_spec(text))
            assert set(graph.arcs("bottom")) == expect["bottom"], text
            assert set(graph.arcs("top")) == expect["top"], text
            if "crossed" in expect:
                a1, a2, _ = graph.crossed
                assert {a1, a2} == expect["crossed"], text
            one = render(graph, fmt="svg")
            two = render(graph, fmt="svg")
            assert one == two and one.startswith("<svg"), text
