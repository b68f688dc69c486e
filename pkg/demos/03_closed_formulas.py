#!/usr/bin/env python3
"""Closed formulas for low-block-count families, cross-checked live.

Two-block and three-block seaweeds have gcd/parity formulas; the
repeated-block type-D family has a small case table.  Each value printed
here is recomputed with the reduction engine on the spot.
"""

from math import gcd

from seaweed import make_spec, reduce_index
from seaweed.formulas import (ThreeBlockParams, frobenius_threeblock,
                              index_BC_threeblock, index_C_twoblock,
                              index_D_repeated, index_D_threeblock)

print("-- two-block B/C family (a | b) at rank n --")
for n, a, b in [(7, 4, 4), (5, 5, 1), (2, 2, 1), (12, 9, 4)]:
    value = index_C_twoblock(n, a, b)
    check = reduce_index(make_spec("C", n, (a,), (b,)))[0]
    print(f"   C:{n}:({a}|{b})  formula={value}  reduction={check}")

print()
print("-- three-block family (a, b | c), types C and D --")
for a, b, c, n in [(1, 2, 2, 3), (2, 3, 5, 5), (2, 3, 4, 5), (3, 4, 9, 10),
                   (1, 3, 2, 4)]:
    p = ThreeBlockParams(a, b, c, n)
    vc = index_BC_threeblock(p)
    vd = index_D_threeblock(p)
    rc = reduce_index(make_spec("C", n, (a, b), (c,)))[0]
    rd = reduce_index(make_spec("D", n, (a, b), (c,)))[0]
    verdict = frobenius_threeblock(p, "C")
    tag = f"  Frobenius ({verdict.matched_condition})" if verdict.is_frobenius else ""
    print(f"   ({a},{b}|{c}) n={n}:  C {vc}={rc}  D {vd}={rd}{tag}")

print()
print("-- repeated-block type-D family (n | a,..,a,b), n = ma+b+1 --")
for a, b, m in [(2, 1, 1), (2, 3, 3), (1, 1, 4), (4, 3, 2)]:
    n = m * a + b + 1
    value = index_D_repeated(a, b, m)
    check = reduce_index(make_spec("D", n, (n,), (a,) * m + (b,)))[0]
    print(f"   a={a} b={b} m={m} (n={n}): formula={value} reduction={check} "
          f"gcd(a, b+1)={gcd(a, b + 1)}")
