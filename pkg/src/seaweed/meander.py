"""Meander graphs of seaweed subalgebras and the index rules that read them.

A meander places m collinear vertices (m = n for type A, 2n otherwise) and
joins them by nested arcs: the first composition draws below the line, the
second above.  Arcs are stored as involutions, so tracing a connected
component is a two-pointer walk with O(1) work per step.  Components are
cycles or segments, and the index is a weighted count of them:

* type A:    2*(cycles) + segments
* types B/C: cycles + (non sigma-invariant segments)/2
* type D:    the B/C count plus a correction term read off the boundary
             arc {n, n+1} or, in the crossed-arc regime, off the pair of
             rewired crossing arcs.

sigma is the central reflection x -> m+1-x; B/C/D meanders are invariant
under it (in the crossed-arc regime sigma exchanges the two crossed arcs).
"""

from __future__ import annotations

import os
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Optional

from .core import Composition, SeaweedSpec, normalize, xi_membership

DEFAULT_RENDER_BOUND = 10_000


class RenderBoundError(ValueError):
    """Meander too large to draw; the reduction engine is the intended path."""


Arc = tuple[int, int]


@dataclass
class Meander:
    """Vertex line with two partial involutions (1-indexed arrays).

    ``top_arc[x] == x`` means no arc at x on that side.  ``crossed`` holds
    the two rewired type-D arcs as ((u1,v1),(u2,v2)) plus the side they
    live on ("bottom" when the full composition is the first argument,
    "top" in the mirrored case).
    """

    vertex_count: int
    top_arc: list[int]
    bottom_arc: list[int]
    origin: SeaweedSpec
    crossed: Optional[tuple[Arc, Arc, str]] = None

    def arcs(self, side: str) -> list[Arc]:
        inv = self.top_arc if side == "top" else self.bottom_arc
        return [(x, inv[x]) for x in range(1, self.vertex_count + 1) if inv[x] > x]

    def check(self) -> None:
        """Involution and degree invariants; raises AssertionError."""
        m = self.vertex_count
        for inv in (self.top_arc, self.bottom_arc):
            assert len(inv) == m + 1
            for x in range(1, m + 1):
                assert 1 <= inv[x] <= m and inv[inv[x]] == x


def _theta(comp: Composition, m: int) -> list[int]:
    """Nested-arc involution of a composition on {1..m} (identity beyond it)."""
    inv = list(range(m + 1))
    pre = comp.prefix
    for i in range(len(comp)):
        lo, hi = pre[i] + 1, pre[i + 1]
        s = lo + hi  # x + theta(x) is constant on a block
        for x in range(lo, hi + 1):
            inv[x] = s - x
    return inv


def padded(comp: Composition, n: int) -> Composition:
    """(c_1..c_k, 2(n-|c|), c_k..c_1): the doubled composition of 2n."""
    mid = 2 * (n - comp.total)
    return normalize(comp.blocks + (mid,) + comp.blocks[::-1])


def build_A(spec: SeaweedSpec) -> Meander:
    assert spec.algebra_type == "A"
    n = spec.n
    return Meander(n, _theta(spec.bottom, n), _theta(spec.top, n), spec)


def build_BC(spec: SeaweedSpec) -> Meander:
    assert spec.algebra_type in ("B", "C") or spec.algebra_type == "D"
    n = spec.n
    return Meander(2 * n, _theta(padded(spec.bottom, n), 2 * n),
                   _theta(padded(spec.top, n), 2 * n), spec)


def build_D(spec: SeaweedSpec) -> Meander:
    """Type D: same as B/C outside the crossed-arc regime; inside it, two
    arcs of the doubled graph are rewired into the unique crossing pair."""
    assert spec.algebra_type == "D"
    xi = xi_membership(spec)
    if not xi.in_xi:
        return build_BC(spec)
    if xi.full_side == "bottom":
        mirror = build_D(spec.swapped())
        arc1, arc2, _ = mirror.crossed
        return Meander(mirror.vertex_count, mirror.bottom_arc, mirror.top_arc,
                       spec, (arc1, arc2, "top"))
    a, b, n = spec.top, spec.bottom, spec.n
    b_plus = Composition(b.blocks[:-1] + (b.blocks[-1] + 1,))
    base = build_BC(SeaweedSpec("D", n, a, b_plus))
    x = a.prefix[-2] + 1  # first vertex of the last block of a
    y = n + a[-1]
    bot = base.bottom_arc
    assert bot[x] == n and bot[n + 1] == y, "rewiring expects the doubled-arc layout"
    bot[x], bot[n + 1] = n + 1, x
    bot[n], bot[y] = y, n
    return Meander(base.vertex_count, base.top_arc, bot, spec,
                   ((x, n + 1), (n, y), "bottom"))


def build(spec: SeaweedSpec) -> Meander:
    if spec.algebra_type == "A":
        return build_A(spec)
    if spec.algebra_type == "D":
        return build_D(spec)
    return build_BC(spec)


# ---------------------------------------------------------------------------
# component decomposition


@dataclass
class ComponentReport:
    """Cycles/segments of a meander with sigma-invariance bookkeeping."""

    components: list[tuple[str, tuple[int, ...]]]  # ("cycle"|"segment", vertices)
    cycles: int
    segments: int
    invariant_segments: int
    component_of_vertex: list[int]  # 1-indexed -> component id

    def kind(self, comp_id: int) -> str:
        return self.components[comp_id][0]


def components(meander: Meander) -> ComponentReport:
    """Walk the alternating top/bottom arcs from every unvisited vertex.

    A component is a cycle iff all its vertices carry both arcs.  Segments
    are listed from their smaller end; cycles from their smallest vertex,
    stepping along the top arc first.
    """
    m = meander.vertex_count
    top, bot = meander.top_arc, meander.bottom_arc
    comp_id = [-1] * (m + 1)
    comps: list[tuple[str, tuple[int, ...]]] = []

    def walk(start: int, first_top: bool) -> tuple[list[int], bool]:
        """Follow arcs from ``start``; stop at a free end or on closing up."""
        path = [start]
        use_top = first_top
        pos = start
        while True:
            nxt = top[pos] if use_top else bot[pos]
            if nxt == pos:
                return path, False
            pos = nxt
            use_top = not use_top
            if pos == start and use_top == first_top:
                return path, True
            path.append(pos)

    for v in range(1, m + 1):
        if comp_id[v] >= 0:
            continue
        fwd, closed = walk(v, True)
        if closed:
            verts, _ = walk(min(fwd), True)
            kind = "cycle"
        else:
            back, _ = walk(v, False)
            if back[-1] <= fwd[-1]:
                verts = back[::-1] + fwd[1:]
            else:
                verts = fwd[::-1] + back[1:]
            kind = "segment"
        cid = len(comps)
        for x in verts:
            comp_id[x] = cid
        comps.append((kind, tuple(verts)))

    cycles = sum(1 for k, _ in comps if k == "cycle")
    segments = len(comps) - cycles
    invariant = 0
    if meander.origin.algebra_type != "A":
        # sigma permutes components, so one representative decides
        for k, verts in comps:
            if k == "segment" and comp_id[m + 1 - verts[0]] == comp_id[verts[0]]:
                invariant += 1
    return ComponentReport(comps, cycles, segments, invariant, comp_id)


# ---------------------------------------------------------------------------
# index rules


def index_A(report: ComponentReport) -> int:
    """gl-convention index (center included): 2*cycles + segments."""
    return 2 * report.cycles + report.segments


def index_BC(report: ComponentReport) -> int:
    non_invariant = report.segments - report.invariant_segments
    if non_invariant % 2:
        raise RuntimeError("non-invariant segments must pair up under sigma")
    return report.cycles + non_invariant // 2


def _boundary_arc_component(meander: Meander) -> int:
    """Component id of the unique arc joining vertices n and n+1."""
    n = meander.vertex_count // 2
    on_top = meander.top_arc[n] == n + 1
    on_bottom = meander.bottom_arc[n] == n + 1
    assert on_top != on_bottom, "expected exactly one boundary arc"
    return n


def index_D(meander: Meander, report: ComponentReport) -> int:
    """B/C count plus the type-D correction term.

    Outside the crossed-arc regime the correction is 0 when the totals
    have even difference; otherwise +1 when one side is full and the
    boundary arc {n, n+1} lies in a segment, else -1.  In the crossed-arc
    regime it is -1 exactly when both crossed arcs lie in one cycle.
    """
    base = index_BC(report)
    spec = meander.origin
    n = spec.n
    if meander.crossed is None:
        delta = spec.top.total - spec.bottom.total
        if delta % 2 == 0:
            return base
        if max(spec.top.total, spec.bottom.total) == n:
            v = _boundary_arc_component(meander)
            if report.kind(report.component_of_vertex[v]) == "segment":
                return base + 1
        return base - 1
    (u1, _), (u2, _), _ = meander.crossed
    c1 = report.component_of_vertex[u1]
    c2 = report.component_of_vertex[u2]
    if c1 == c2 and report.kind(c1) == "cycle":
        return base - 1
    return base


def index_from_meander(spec: SeaweedSpec) -> int:
    """Index by building the meander and applying the matching count rule."""
    m = build(spec)
    rep = components(m)
    if spec.algebra_type == "A":
        return index_A(rep)
    if spec.algebra_type == "D":
        return index_D(m, rep)
    return index_BC(rep)


def psi_A(spec: SeaweedSpec) -> int:
    """Type-A index, reduced by 2 when the last vertex lies in a cycle."""
    m = build_A(spec)
    rep = components(m)
    chi = index_A(rep)
    if rep.kind(rep.component_of_vertex[spec.n]) == "segment":
        return chi
    return chi - 2


# ---------------------------------------------------------------------------
# virtual walk: boundary-arc segment test without materializing the graph


def _theta_at(prefix: tuple[int, ...], x: int) -> int:
    """Involution value at one vertex, via bisection on the prefix sums."""
    i = bisect_left(prefix, x)
    if i >= len(prefix):  # beyond the composition: fixed
        return x
    return prefix[i - 1] + prefix[i] + 1 - x


def boundary_arc_in_segment(top: Composition, bottom: Composition, n: int) -> bool:
    """Whether the arc {n, n+1} of the doubled meander lies in a segment.

    Exactly one side must be full (total n): the other side's central
    block provides the arc.  Arcs are evaluated on the fly, so this works
    at ranks far beyond anything the dense builder could hold; cost is
    linear in the length of the one component walked.
    """
    assert (top.total == n) != (bottom.total == n), \
        "boundary arc test requires exactly one full side"
    below = padded(top, n).prefix     # first argument draws below
    above = padded(bottom, n).prefix
    start_below = top.total < n       # the non-full side owns the arc
    pos, use_below = n, start_below
    limit = 4 * n + 4
    for _ in range(limit):
        nxt = _theta_at(below if use_below else above, pos)
        if nxt == pos:
            return True
        pos = nxt
        use_below = not use_below
        if pos == n and use_below == start_below:
            return False
    raise RuntimeError("walk exceeded the component bound")


# ---------------------------------------------------------------------------
# rendering


def _arc_levels(arcs: list[Arc]) -> dict[Arc, int]:
    """Row assignment: overlapping arcs stack outward, disjoint ones share."""
    levels: dict[Arc, int] = {}
    for arc in sorted(arcs, key=lambda e: (e[1] - e[0], e[0])):
        a, b = arc
        clash = [lv for (c, d), lv in levels.items() if c < b and a < d]
        levels[arc] = 1 + max(clash, default=0)
    return levels


def render(meander: Meander, fmt: str = "ascii", unit: int = 40,
           max_vertices: Optional[int] = None) -> str:
    """Deterministic ASCII or SVG drawing of a meander.

    Byte-for-byte stable given (meander, fmt, unit).  Refuses meanders
    above the vertex bound (default 10^4, or SEAWEED_MAX_RENDER).
    """
    if max_vertices is None:
        max_vertices = int(os.environ.get("SEAWEED_MAX_RENDER", DEFAULT_RENDER_BOUND))
    m = meander.vertex_count
    if m > max_vertices:
        raise RenderBoundError(
            f"meander has {m} vertices, above the rendering bound {max_vertices}; "
            "use the reduction engine for indices at this size")
    if fmt == "ascii":
        return _render_ascii(meander)
    if fmt == "svg":
        return _render_svg(meander, unit)
    raise ValueError(f"unknown format {fmt!r}")


def _render_ascii(meander: Meander) -> str:
    m = meander.vertex_count
    spacing = max(4, len(str(m)) + 1)
    width = spacing * (m - 1) + 1
    col = lambda x: spacing * (x - 1)
    crossed = set()
    if meander.crossed is not None:
        crossed = {meander.crossed[0], meander.crossed[1]}

    def arc_rows(side: str) -> list[str]:
        arcs = meander.arcs(side)
        levels = _arc_levels(arcs)
        depth = max(levels.values(), default=0)
        rows = [[" "] * width for _ in range(depth)]
        for (a, b), lv in levels.items():
            row = rows[lv - 1]
            for c in range(col(a) + 1, col(b)):
                row[c] = "-"
            corner = "x" if (a, b) in crossed else "+"
            row[col(a)] = corner
            row[col(b)] = corner
        return ["".join(r).rstrip() for r in rows]

    top_rows = arc_rows("top")[::-1]  # outermost first
    bottom_rows = arc_rows("bottom")
    vertex_row = "".join("o".ljust(spacing) for _ in range(m)).rstrip()
    label_row = "".join(str(x).ljust(spacing) for x in range(1, m + 1)).rstrip()
    lines = top_rows + [vertex_row] + bottom_rows + [label_row]
    if meander.origin.algebra_type != "A" and m >= 2:
        axis = [" "] * width
        axis[(col(m // 2) + col(m // 2 + 1)) // 2] = "^"
        lines.append("".join(axis).rstrip())
    return "\n".join(lines) + "\n"


def _fmt_num(v: float) -> str:
    return f"{v:g}"


def _render_svg(meander: Meander, unit: int) -> str:
    m = meander.vertex_count
    x = lambda v: unit * v
    pad = unit // 2 + 10

    def max_radius(side: str) -> float:
        return max(((b - a) * unit / 2 for a, b in meander.arcs(side)), default=0.0)

    y0 = pad + max_radius("top")
    height = y0 + max_radius("bottom") + pad
    width = unit * (m + 1)
    crossed = set()
    if meander.crossed is not None:
        crossed = {meander.crossed[0], meander.crossed[1]}

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt_num(width)}" '
        f'height="{_fmt_num(height)}" viewBox="0 0 {_fmt_num(width)} {_fmt_num(height)}">'
    ]
    if meander.origin.algebra_type != "A" and m >= 2:
        ax = (x(m // 2) + x(m // 2 + 1)) / 2
        out.append(
            f'<line x1="{_fmt_num(ax)}" y1="0" x2="{_fmt_num(ax)}" '
            f'y2="{_fmt_num(height)}" stroke="#999999" stroke-dasharray="4 4"/>')
    for side, sweep in (("bottom", 0), ("top", 1)):
        for a, b in sorted(meander.arcs(side)):
            r = (b - a) * unit / 2
            color = "#cc0000" if (a, b) in crossed else "#000000"
            out.append(
                f'<path d="M {_fmt_num(x(a))} {_fmt_num(y0)} '
                f'A {_fmt_num(r)} {_fmt_num(r)} 0 0 {sweep} '
                f'{_fmt_num(x(b))} {_fmt_num(y0)}" '
                f'fill="none" stroke="{color}" stroke-width="1.5"/>')
    for v in range(1, m + 1):
        out.append(f'<circle cx="{_fmt_num(x(v))}" cy="{_fmt_num(y0)}" r="3"/>')
        out.append(
            f'<text x="{_fmt_num(x(v))}" y="{_fmt_num(y0 + 16)}" '
            f'font-size="10" text-anchor="middle">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
