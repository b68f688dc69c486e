"""Closed-form indices and Frobenius classifications.

Everything here is plain integer arithmetic (gcds, parities, floors) plus,
for one boundary case, a meander walk; none of it shares a code path with
the reduction engine, so agreement tests between the two are genuine
cross-checks rather than tautologies.

Conventions: gcd(0, x) = x, covering degenerate parameter edges uniformly;
floors are written with // on nonnegative operands.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from . import meander, reduction
from .core import (Composition, SeaweedSpec, SpecError, compositions_at_most,
                   compositions_of, make_spec, normalize, xi_membership)


@dataclass(frozen=True)
class ThreeBlockParams:
    """Parameters of the (a,b | c) family: s = max(a+b, c), p = (a+b)^(b+c)
    (gcd), r = |a+b-c|; the index formulas are stated at rank s and padding
    to rank n adds n - s."""

    a: int
    b: int
    c: int
    n: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise ValueError("blocks a, b, c must be positive")
        if self.s > self.n:
            raise ValueError(f"need max(a+b, c) <= n, got s={self.s} > n={self.n}")

    @property
    def s(self) -> int:
        return max(self.a + self.b, self.c)

    @property
    def p(self) -> int:
        return gcd(self.a + self.b, self.b + self.c)

    @property
    def r(self) -> int:
        return abs(self.a + self.b - self.c)


@dataclass(frozen=True)
class FrobeniusVerdict:
    is_frobenius: bool
    matched_condition: Optional[str] = None


# ---------------------------------------------------------------------------
# type A


def index_A_twoblock(a: int, b: int) -> int:
    """Index of the two-block type-A parabolic (a, b | a+b)."""
    return gcd(a, b)


def index_A_threeblock(a: int, b: int, c: int, d: int) -> int:
    """Index of (a, b | c, d) with a+b = c+d."""
    if a + b != c + d:
        raise ValueError("needs a+b = c+d")
    return gcd(a + b, b + c)


# ---------------------------------------------------------------------------
# types B/C


def index_C_twoblock(n: int, a: int, b: int) -> int:
    """Index of the two-block B/C seaweed (a | b) at rank n (sides may be
    given in either order)."""
    if a < b:
        a, b = b, a
    if a > n:
        raise ValueError("needs max(a, b) <= n")
    if a == b:
        return n
    r = a % (a - b)
    return r // 2 + (a - b - r) // 2 + (n - a)


def index_BC_parabolic(n: int, blocks) -> int:
    """Index of (a | empty): sum of floor(a_i/2) plus the rank slack."""
    comp = normalize(blocks)
    if comp.total > n:
        raise ValueError("needs |a| <= n")
    return sum(x // 2 for x in comp) + (n - comp.total)


def index_BC_threeblock(params: ThreeBlockParams) -> int:
    """Index of (a, b | c) for types B and C."""
    p, r, extra = params.p, params.r, params.n - params.s
    if p > r:
        return p - r + r // 2 + extra
    if (p - r) % 2 == 0:
        return r // 2 + extra
    return r // 2 - 1 + extra


# ---------------------------------------------------------------------------
# type D


def _xi_threeblock(params: ThreeBlockParams) -> bool:
    a, b, c, n = params.a, params.b, params.c, params.n
    return (a + b == n and b > 1 and c == n - 1) or (c == n and a + b == n - 1)


def index_D_threeblock(params: ThreeBlockParams) -> int:
    """Index of the type-D (a, b | c): the B/C value plus the correction,
    except in the crossed-arc regime where it is |gcd(a, n) - 2|."""
    a, b, c, n = params.a, params.b, params.c, params.n
    if a + b == n and b == 1:
        raise ValueError("(a, 1 | c) with a+1 = n is not a canonical type-D name")
    if _xi_threeblock(params):
        return abs(gcd(a, n) - 2)
    base = index_BC_threeblock(params)
    if params.r % 2 == 0:
        return base
    if params.s == n and meander.boundary_arc_in_segment(
            Composition((a, b)), Composition((c,)), n):
        return base + 1
    return base - 1


def frobenius_threeblock(params: ThreeBlockParams, algebra_type: str) -> FrobeniusVerdict:
    """Enumerated zero-index conditions for the (a, b | c) family."""
    p, r, s, n = params.p, params.r, params.s, params.n
    if algebra_type in ("B", "C"):
        if s == n and (r, p) in ((1, 1), (2, 1), (3, 2)):
            return FrobeniusVerdict(True, f"r={r}, p={p}, max=n")
        return FrobeniusVerdict(False)
    if algebra_type == "D":
        q = gcd(params.a, n)
        if r == 1 and q == 2 and s == n:
            return FrobeniusVerdict(True, "r=1, q=2, max=n")
        if r == 1 and p == 1 and s == n - 1:
            return FrobeniusVerdict(True, "r=1, p=1, max=n-1")
        if r == 2 and p == 1 and s == n:
            return FrobeniusVerdict(True, "r=2, p=1, max=n")
        if r == 3 and p == 2 and s == n - 1:
            return FrobeniusVerdict(True, "r=3, p=2, max=n-1")
        return FrobeniusVerdict(False)
    raise SpecError(f"no three-block classification for type {algebra_type!r}")


# ---------------------------------------------------------------------------
# Frobenius families


def frobenius_chain_family(alphas) -> SeaweedSpec:
    """Frobenius parabolic C-seaweeds from a chain recurrence: with
    a_{k+1} = k, a_i = 1 + alphas_i * (a_{i+1} + .. + a_{k+1} - i + 1)
    and r = |a| + k, the seaweed C:r:(r)|a has index 0."""
    alphas = [int(x) for x in alphas]
    k = len(alphas)
    if k < 1 or any(x < 0 for x in alphas):
        raise ValueError("needs k >= 1 nonnegative multipliers")
    blocks = [0] * (k + 1)
    blocks[k] = k  # virtual a_{k+1}
    for i in range(k - 1, -1, -1):  # 0-based a_i at blocks[i]
        tail = sum(blocks[i + 1:]) - (i + 1) + 1
        blocks[i] = 1 + alphas[i] * tail
    comp = Composition(blocks[:k])
    r = comp.total + k
    return make_spec("C", r, (r,), comp)


def padded_parabolic_family(spec: SeaweedSpec, t: int) -> SeaweedSpec:
    """Index-preserving widening of a parabolic B/C seaweed (n | a): pad
    the composition with t blocks of size 2s on each side, s = n - |a|,
    and raise the rank by 4ts."""
    if spec.algebra_type not in ("B", "C") or spec.top.blocks != (spec.n,):
        raise ValueError("expected a parabolic spec with full single block")
    if t < 0:
        raise ValueError("t must be >= 0")
    s = spec.n - spec.bottom.total
    if s == 0 or t == 0:
        return spec
    pad = (2 * s,) * t
    n2 = spec.n + 4 * t * s
    return make_spec(spec.algebra_type, n2, (n2,), pad + spec.bottom.blocks + pad)


def index_A_repeated(a: int, b: int, m: int) -> int:
    """Index of the type-A parabolic with m equal blocks and a remainder,
    (ma+b | a,..,a,b), in the reduced case where a or b is odd."""
    if a % 2 == 0 and b % 2 == 0:
        raise ValueError("defined only when a or b is odd")
    if a % 2 == 1 and b % 2 == 1:
        return m // 2 + 1
    if a % 2 == 1:
        return (m + 1) // 2
    return 1


def index_D_repeated(a: int, b: int, m: int) -> int:
    """Index of the type-D (n | a,..,a,b) with m copies and n = ma+b+1
    (always in the crossed-arc regime)."""
    if min(a, b, m) < 1:
        raise ValueError("needs a, b, m >= 1")
    p = gcd(a, b + 1)
    if p == 1:
        return index_A_repeated(a, b + 1, m)
    return p * index_A_repeated(a // p, (b + 1) // p, m) - 2


def frobenius_D_repeated(a: int, b: int, m: int) -> FrobeniusVerdict:
    """Zero-index characterization of the repeated-block type-D family."""
    p = gcd(a, b + 1)
    if p != 2:
        return FrobeniusVerdict(False)
    if m == 1:
        return FrobeniusVerdict(True, "p=2, m=1")
    half_a, half_b = a // 2, (b + 1) // 2
    if half_a % 2 == 0 and half_b % 2 == 1:
        return FrobeniusVerdict(True, "p=2, a/2 even, (b+1)/2 odd")
    if half_a % 2 == 1 and half_b % 2 == 0 and m == 2:
        return FrobeniusVerdict(True, "p=2, a/2 odd, (b+1)/2 even, m=2")
    return FrobeniusVerdict(False)


def frobenius_doubling(spec: SeaweedSpec) -> tuple[SeaweedSpec, SeaweedSpec]:
    """The two crossed-arc type-D Frobenius seaweeds of rank 2n built from
    a type-A seaweed of gl(n) with index 1 (doubling both compositions and
    decrementing one last block)."""
    if spec.algebra_type != "A":
        raise ValueError("expected a type-A spec")
    a, b, n = spec.top, spec.bottom, spec.n
    im1 = make_spec("D", 2 * n, tuple(2 * x for x in a),
                    tuple(2 * x for x in b.blocks[:-1]) + (2 * b[-1] - 1,))
    im2 = make_spec("D", 2 * n, tuple(2 * x for x in a.blocks[:-1]) + (2 * a[-1] - 1,),
                    tuple(2 * x for x in b))
    return im1, im2


# ---------------------------------------------------------------------------
# census


class CensusBoundError(ValueError):
    pass


def _xi_pairs(rank: int) -> Iterator[SeaweedSpec]:
    """All canonical crossed-arc-regime specs at one type-D rank."""
    if rank < 2:
        return
    full = [c for c in compositions_of(rank) if c[-1] > 1]
    other = list(compositions_of(rank - 1))
    for a in full:
        for b in other:
            yield SeaweedSpec("D", rank, a, b)
    for b in full:
        for a in other:
            yield SeaweedSpec("D", rank, a, b)


def census_cost(max_n: int, include_odd: bool = True) -> int:
    """Number of index evaluations an exhaustive census would perform."""
    cost = 0
    for n in range(1, max_n + 1):
        cost += 4 ** (n - 1)                      # type-A pairs of n
        cost += 2 ** (4 * n - 3) if n >= 1 else 0  # crossed-arc pairs at 2n
        if include_odd and 2 * n + 1 <= 2 * max_n:
            cost += 2 ** (4 * n - 1)
    return cost


def frobenius_census(max_n: int, include_odd: bool = True,
                     cost_limit: int = 2_000_000) -> dict:
    """Exhaustive doubling census.

    For each n <= max_n, lists the type-A seaweeds of gl(n) with index 1
    and the crossed-arc type-D seaweeds of so(4n) with index 0, checks
    every listed type-D member by reduction, and verifies the doubling map
    is a two-to-one onto correspondence.  Odd type-D ranks are checked to
    be empty when ``include_odd``.
    """
    cost = census_cost(max_n, include_odd)
    if cost > cost_limit:
        raise CensusBoundError(
            f"census at max_n={max_n} needs ~{cost} index evaluations "
            f"(limit {cost_limit}); lower the bound")
    rows = []
    for n in range(1, max_n + 1):
        members_a = []
        for a in compositions_of(n):
            for b in compositions_of(n):
                spec = SeaweedSpec("A", n, a, b)
                if meander.index_from_meander(spec) == 1:
                    members_a.append(spec)
        members_d = []
        for spec in _xi_pairs(2 * n):
            value, _ = reduction.index_D_reduced(spec)
            if value == 0:
                members_d.append(spec)
        d_set = {str(s) for s in members_d}
        hit: dict[str, int] = {key: 0 for key in d_set}
        pairs = []
        for src in members_a:
            im1, im2 = frobenius_doubling(src)
            for im in (im1, im2):
                key = str(im)
                if key not in hit:
                    raise RuntimeError(f"doubling image {key} missing from census")
                hit[key] += 1
            pairs.append({"source": str(src), "images": [str(im1), str(im2)]})
        if any(v != 1 for v in hit.values()):
            raise RuntimeError(f"doubling map is not a bijection onto rank {2 * n}")
        rows.append({
            "n": n,
            "rank_D": 2 * n,
            "count_A": len(members_a),
            "count_D": len(members_d),
            "members_A": [str(s) for s in members_a],
            "members_D": [str(s) for s in members_d],
            "pairs": pairs,
        })
    report = {"schema": 1, "max_n": max_n, "rows": rows}
    if include_odd:
        odd = []
        for rank in range(3, 2 * max_n + 1, 2):
            count = 0
            for spec in _xi_pairs(rank):
                value, _ = reduction.index_D_reduced(spec)
                if value == 0:
                    count += 1
            odd.append({"rank_D": rank, "count_D": count})
        report["odd"] = odd
    return report
