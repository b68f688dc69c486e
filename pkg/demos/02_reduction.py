#!/usr/bin/env python3
"""The gcd-style reduction engine, with its auditable traces.

Counting components works only while the meander fits in memory; the
reduction computes the same index by rewriting the composition, so it
runs at any magnitude.  Every step is recorded and replayable.
"""

import time

from seaweed import make_spec, parse_spec, reduce_index, replay_trace

print("-- sp(400) seaweed, the long worked chain --")
value, trace = reduce_index(parse_spec("C:200:15,185|17,61,117"))
for t, comp in trace.parabolic_chain():
    print(f"   ({t} | {','.join(map(str, comp))})")
print(f"   index = {value}")

print()
print("-- so(670) seaweed, crossed-arc regime --")
value, trace = reduce_index(parse_spec("D:335:218,15,102|33,301"))
print(f"   index = {value}")
print("   trace as JSON lines:")
for line in trace.json_lines().strip().splitlines()[:4]:
    print("   " + line)
print("   ...")
print(f"   replayed total = {replay_trace(trace)}")

print()
print("-- sizes far beyond any drawable graph --")
big = 10 ** 60
for spec in [
    make_spec("C", big, (big,), (big - 1,)),
    make_spec("D", big, (big,), (big - 1,)),
    make_spec("C", big, (big // 3, big // 2), (big // 4,)),
]:
    start = time.perf_counter()
    value, _ = reduce_index(spec)
    ms = (time.perf_counter() - start) * 1000
    shown = str(spec)
    if len(shown) > 60:
        shown = shown[:57] + "..."
    print(f"   {shown:60s} index has {len(str(value))} digits "
          f"({ms:.2f} ms)")
