#!/usr/bin/env python3
"""Frobenius seaweeds: generators and the doubling census.

Index-zero (Frobenius) seaweeds come in families: a chain recurrence
produces parabolic sp-examples, padding widens any of them, and doubling
a gl-seaweed of index 1 gives two crossed-arc so-examples.  Exhaustive
enumeration confirms the doubling map is two-to-one and onto.
"""

from seaweed import parse_spec, reduce_index
from seaweed.formulas import (frobenius_census, frobenius_chain_family,
                              frobenius_doubling, padded_parabolic_family)

print("-- chain recurrence --")
for alphas in [(0,), (2,), (0, 0), (1, 2), (3, 0, 1)]:
    spec = frobenius_chain_family(alphas)
    print(f"   alphas={alphas}: {spec}  index={reduce_index(spec)[0]}")

print()
print("-- widening pads --")
base = parse_spec("C:9:9|1,1,1,1")
for t in (0, 1, 2):
    spec = padded_parabolic_family(base, t)
    print(f"   t={t}: {spec}  index={reduce_index(spec)[0]}")

print()
print("-- doubling gl-index-1 seaweeds into so(4n) --")
for source in ["A:2:1,1|2", "A:3:1,2|2,1", "A:5:2,3|1,4"]:
    spec = parse_spec(source)
    chi = reduce_index(spec)[0]
    print(f"   {source} (index {chi})")
    if chi == 1:
        for image in frobenius_doubling(spec):
            print(f"      -> {image}  index={reduce_index(image)[0]}")

print()
print("-- the census, exhaustively --")
report = frobenius_census(4, include_odd=True)
print(f"   {'n':>3} {'#A(index 1)':>12} {'#D(index 0)':>12}")
for row in report["rows"]:
    print(f"   {row['n']:>3} {row['count_A']:>12} {row['count_D']:>12}")
print("   odd type-D ranks:",
      {entry["rank_D"]: entry["count_D"] for entry in report["odd"]})
