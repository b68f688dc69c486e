#!/usr/bin/env python3
"""Meander graphs: build them, draw them, read the index off the picture.

A seaweed subalgebra is named by a pair of integer compositions.  Its
meander places vertices on a line, draws the nested arcs of the first
composition below the line and of the second above, and the index is a
weighted count of connected components (cycles and segments).
"""

from seaweed import build, components, index_from_meander, parse_spec, render

EXAMPLES = [
    "A:9:2,4,3|5,2,2",    # gl(9) seaweed
    "C:5:2,3|3,1",        # sp(10) seaweed: doubled, reflection-symmetric
    "D:10:1,6,3|3,2,4",   # so(20), crossed-arc regime
    "D:5:4|5",            # so(10), crossed arcs on the mirrored side
]

for text in EXAMPLES:
    spec = parse_spec(text)
    graph = build(spec)
    report = components(graph)
    print("=" * 64)
    print(f"{spec}   ({graph.vertex_count} vertices)")
    print(render(graph, fmt="ascii"))
    for kind, verts in report.components:
        print(f"  {kind}: {verts}")
    print(f"  cycles={report.cycles} segments={report.segments} "
          f"invariant_segments={report.invariant_segments}")
    if graph.crossed:
        a1, a2, side = graph.crossed
        print(f"  crossed arcs {a1} and {a2} on the {side} side")
    print(f"  index = {index_from_meander(spec)}")

print("=" * 64)
print("SVG output: seaweed render D:10:1,6,3|3,2,4 --format svg -o figure.svg")
