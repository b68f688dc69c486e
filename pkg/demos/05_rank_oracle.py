#!/usr/bin/env python3
"""The matrix-rank oracle: the index from first principles.

The seaweed is realized as the stabilizer of its flag pair inside an
explicit matrix algebra; the index is dim minus the maximal rank of the
antisymmetric pairing f([x_i, x_j]) over sampled functionals.  This route
shares no conventions with the meander count or the reduction, so the
three-way agreement below is a real consistency proof at small rank.
"""

from seaweed import index_from_meander, parse_spec, reduce_index
from seaweed.oracle import oracle_index, realize

spec = parse_spec("C:2:2|1")
basis = realize(spec)
print(f"{spec}: stabilizer of a 2-flag in sp(4), dim {basis.dim}")
for X in basis.matrices():
    print(X, end="\n\n")
result = oracle_index(spec, trials=3, seed=0)
print(f"sampled ranks {result.ranks} -> index {result.index}")
exact = oracle_index(spec, trials=1, seed=0, prime=0)
print(f"exact rational run confirms: index {exact.index}")

print()
print(f"{'spec':24s} {'oracle':>7} {'meander':>8} {'reduce':>7} {'dim':>5}")
for text in ["A:9:2,4,3|5,2,2", "B:4:2,1|3", "C:5:2,3|3,1",
             "D:10:1,6,3|3,2,4", "D:5:4|5", "D:8:2,5|1,4"]:
    s = parse_spec(text)
    r = oracle_index(s, trials=3, seed=0)
    print(f"{text:24s} {r.index:>7} {index_from_meander(s):>8} "
          f"{reduce_index(s)[0]:>7} {r.dim:>5}")

print()
print("exhaustive sweeps: seaweed verify --type D --max-n 5 --oracle --jobs 2")
