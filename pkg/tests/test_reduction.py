import json
import math
import random

import pytest

from seaweed.core import Composition, make_spec, parse_spec
from seaweed.meander import index_from_meander
from seaweed.reduction import (ReductionState, alpha_step_C, closed_form_value,
                               evaluate_parabolic_C, first_block_reduce,
                               index_A_reduced, index_BC_reduced,
                               index_D_reduced, insert_block_C, reduce_index,
                               reduce_step_C, reduction_core, replay_trace,
                               to_parabolic_C)


def state(t, blocks, n=None, alpha=0, kind="C"):
    return ReductionState(kind, n if n is not None else t, t,
                          Composition(blocks), alpha)


# ---------------------------------------------------------------------------
# type A


def test_index_A_two_and_three_block():
    for a in range(1, 8):
        for b in range(1, 8):
            spec = make_spec("A", a + b, (a, b), (a + b,))
            assert index_A_reduced(spec)[0] == math.gcd(a, b)
    for a, b, c in [(1, 2, 3), (2, 2, 1), (3, 1, 4)]:
        d = a + b - c
        if d < 1:
            continue
        spec = make_spec("A", a + b, (a, b), (c, d))
        assert index_A_reduced(spec)[0] == math.gcd(a + b, b + c)


def test_index_A_worked_example_and_trace():
    value, trace = index_A_reduced(parse_spec("A:9:2,4,3|5,2,2"))
    assert value == 3
    assert replay_trace(trace) == 3


# ---------------------------------------------------------------------------
# parabolic normalization


def test_to_parabolic_C_worked_example():
    st = to_parabolic_C(parse_spec("C:200:15,185|17,61,117"))
    assert (st.n, st.t) == (400, 400)
    assert st.comp.blocks == (185, 15, 17, 61, 117)
    assert st.alpha == 0


def test_to_parabolic_C_empty():
    st = to_parabolic_C(parse_spec("C:5:-|-"))
    assert st.alpha == 5 and st.comp.total == 0 and st.is_terminal()
    assert closed_form_value(st) == 0


def test_to_parabolic_C_pads_and_swaps():
    st = to_parabolic_C(parse_spec("C:9:3,2|3,2"))
    assert st.alpha == 4
    assert (st.n, st.t) == (10, 10)
    assert st.comp.blocks == (2, 3, 3, 2)


# ---------------------------------------------------------------------------
# single steps


def test_reduce_step_paper_chain_first_step():
    st = state(400, (185, 15, 17, 61, 117))
    nxt = reduce_step_C(st)
    assert nxt.t == 385 and nxt.comp.blocks == (185, 17, 61, 117)


def test_reduce_step_near_terminal():
    st = state(69, (1, 1, 61, 1))
    nxt = reduce_step_C(st)
    assert nxt.t == 9 and nxt.comp.blocks == (1, 1, 1, 1)
    assert nxt.is_terminal() and closed_form_value(nxt) == 0
    with pytest.raises(ValueError):
        reduce_step_C(nxt)


def test_zero_split_priority():
    # d_2 = 0 here: the balanced block splits off and feeds alpha
    st = state(8, (3, 2, 3))
    nxt = reduce_step_C(st)
    assert nxt.alpha == 2 and nxt.comp.blocks == (3, 3) and nxt.t == 6


def test_index_BC_reduced_worked_examples():
    assert index_BC_reduced(parse_spec("C:200:15,185|17,61,117"))[0] == 0
    assert index_BC_reduced(parse_spec("B:200:15,185|17,61,117"))[0] == 0
    value, _ = index_BC_reduced(parse_spec("C:7:7|3,2"))
    assert value == index_from_meander(parse_spec("C:7:7|3,2"))


def test_paper_chain_is_reproduced_exactly():
    _, trace = index_BC_reduced(parse_spec("C:200:15,185|17,61,117"))
    assert trace.parabolic_chain() == [
        (400, (185, 15, 17, 61, 117)),
        (385, (185, 17, 61, 117)),
        (369, (185, 1, 61, 117)),
        (185, (1, 1, 61, 117)),
        (69, (1, 1, 61, 1)),
        (9, (1, 1, 1, 1)),
    ]


# ---------------------------------------------------------------------------
# insertion / shift identities


def test_insert_block_examples():
    st = insert_block_C(state(7, (3, 2)), 1, 3)
    assert (st.n, st.t) == (10, 10) and st.comp.blocks == (3, 2, 3)
    st = insert_block_C(state(8, (3, 3)), 1, 2)
    assert (st.n, st.t) == (10, 10) and st.comp.blocks == (3, 2, 3)
    # zero-size insertion is the identity after normalization
    st0 = state(6, (3, 3))
    assert insert_block_C(st0, 1, 2).comp == st0.comp


def test_insert_block_range_errors():
    with pytest.raises(ValueError):
        insert_block_C(state(7, (3, 2)), 2, 2)
    with pytest.raises(ValueError):
        insert_block_C(state(7, (3, 2)), 0, 1)


def test_alpha_step_requires_imbalance():
    st = state(8, (3, 2, 3))
    with pytest.raises(ValueError):
        alpha_step_C(st, 2, 1)  # d_2 = 0
    with pytest.raises(ValueError):
        alpha_step_C(state(7, (3, 2)), 1, -5)  # would go negative


# ---------------------------------------------------------------------------
# type D


def test_index_D_worked_example():
    value, trace = index_D_reduced(parse_spec("D:335:218,15,102|33,301"))
    assert value == 3
    assert trace.parabolic_chain() == [
        (670, (102, 15, 218, 33, 302)),
        (452, (102, 15, 33, 302)),
        (152, (102, 15, 33, 2)),
        (52, (2, 15, 33, 2)),
        (22, (2, 15, 3, 2)),
        (7, (2, 3, 2)),
        (4, (2, 2)),
        (2, (2,)),
    ]
    assert trace.terminal["form"] == "psi_terminal"
    assert trace.terminal["value"] == 0
    assert replay_trace(trace) == 3


def test_index_D_parabolic_form():
    assert index_D_reduced(parse_spec("D:670:670|102,15,218,33,301"))[0] == 3


def test_index_D_boundary_family():
    for n in range(2, 40):
        assert index_D_reduced(parse_spec(f"D:{n}:{n}|{n-1}"))[0] == abs(n - 2)


def test_index_D_matches_meander_small():
    rng = random.Random(2)
    from property_checks import random_spec
    for _ in range(300):
        spec = random_spec(rng, "D", 7)
        assert index_D_reduced(spec)[0] == index_from_meander(spec), spec


def test_reduce_index_dispatch():
    assert reduce_index(parse_spec("A:9:2,4,3|5,2,2"))[0] == 3
    assert reduce_index(parse_spec("C:200:15,185|17,61,117"))[0] == 0
    assert reduce_index(parse_spec("D:335:218,15,102|33,301"))[0] == 3


def test_huge_inputs_run_fast():
    # arbitrary-precision block sizes; gcd-like termination keeps this instant
    big = 10 ** 30
    value, _ = index_BC_reduced(make_spec("C", big, (big,), (big - 1,)))
    assert value == 0  # two-block rule: a-b = 1 divides everything
    value, _ = index_BC_reduced(make_spec("C", big, (big,), (7,)))
    r = 7 % (big - 7)
    assert value == r // 2 + (big - 7 - r) // 2
    value, _ = index_D_reduced(make_spec("D", big, (big,), (big - 1,)))
    assert value == big - 2


# ---------------------------------------------------------------------------
# core decomposition


def test_reduction_core_fixed_point():
    alpha, core = reduction_core(state(9, (1, 1, 1, 1)))
    assert alpha == 0 and core.blocks == (1, 1, 1, 1)


def test_reduction_core_empty():
    alpha, core = reduction_core(state(7, ()))
    assert alpha == 0 and core.blocks == ()


def test_reduction_core_worked_chain():
    st = state(400, (185, 15, 17, 61, 117))
    alpha, core = reduction_core(st)
    s = st.slack
    tail = evaluate_parabolic_C(ReductionState("C", s + core.total, s + core.total,
                                               core, 0))
    assert alpha + tail == 0
    assert core.total <= s


def test_traces_serialize_and_replay():
    for text in ["C:200:15,185|17,61,117", "D:335:218,15,102|33,301",
                 "A:9:2,4,3|5,2,2", "D:8:2,5|1,4", "C:9:3,2|3,2"]:
        value, trace = reduce_index(parse_spec(text))
        assert replay_trace(trace) == value
        lines = trace.json_lines().strip().splitlines()
        parsed = [json.loads(line) for line in lines]
        assert parsed[-1]["rule"] == "terminal"
        assert parsed[-1]["total"] == value


def test_first_block_reduce_identity():
    spec = make_spec("C", 12, (7, 3), (3, 2))
    reduced = first_block_reduce(spec)
    assert reduced.n == 9
    assert index_BC_reduced(spec)[0] == index_BC_reduced(reduced)[0]
