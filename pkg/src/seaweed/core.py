"""Compositions and seaweed specifications.

A seaweed (biparabolic) subalgebra of gl(n), so(2n+1), sp(2n) or so(2n) is
named, up to conjugacy, by a pair of integer compositions.  This module
holds those names: composition normalization, per-type validation, the
canonical text syntax ``TYPE:n:top|bottom`` used by the CLI and JSON
surfaces, and the crossed-arc regime test for type D (one side full, the
other of total n-1).

All block sizes are plain Python integers, so arbitrarily large ranks are
exact.  Every value is immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union


class InvalidComposition(ValueError):
    """A block sequence that cannot be normalized (negative entry)."""


class SpecError(ValueError):
    """A seaweed specification violating the per-type constraints."""


ALGEBRA_TYPES = ("A", "B", "C", "D")


class Composition:
    """An ordered sequence of positive block sizes with cached prefix sums.

    ``prefix[i]`` is the sum of the first ``i`` blocks; every reduction
    step reads these partial sums, so they are precomputed once.
    """

    __slots__ = ("blocks", "prefix")

    def __init__(self, blocks: Iterable[int]):
        blocks = tuple(int(b) for b in blocks)
        for b in blocks:
            if b < 1:
                raise InvalidComposition(f"block sizes must be >= 1, got {b}")
        acc = [0]
        for b in blocks:
            acc.append(acc[-1] + b)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "prefix", tuple(acc))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("Composition is immutable")

    @property
    def total(self) -> int:
        return self.prefix[-1]

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, i):
        return self.blocks[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Composition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"Composition{self.blocks!r}"

    def __str__(self) -> str:
        return ",".join(str(b) for b in self.blocks) if self.blocks else "-"

    def reversed(self) -> "Composition":
        return Composition(self.blocks[::-1])

    def concat(self, other: "Composition") -> "Composition":
        return Composition(self.blocks + other.blocks)

    def replace(self, i: int, value: int) -> "Composition":
        """Copy with block ``i`` (0-based) set to ``value``; 0 drops it."""
        b = list(self.blocks)
        if value == 0:
            del b[i]
        else:
            b[i] = value
        return Composition(b)

    def drop(self, i: int) -> "Composition":
        b = list(self.blocks)
        del b[i]
        return Composition(b)


EMPTY = Composition(())

CompositionLike = Union[Composition, Sequence[int]]


def normalize(blocks: CompositionLike) -> Composition:
    """Drop zero blocks, preserving order; reject negative entries."""
    if isinstance(blocks, Composition):
        return blocks
    out = []
    for b in blocks:
        b = int(b)
        if b < 0:
            raise InvalidComposition(f"negative block size {b}")
        if b > 0:
            out.append(b)
    return Composition(out)


@dataclass(frozen=True)
class SeaweedSpec:
    """Canonical name of a seaweed subalgebra.

    For type A, ``n`` is the matrix size and both compositions must total
    ``n``.  For types B/C/D, ``n`` is the rank of so(2n+1)/sp(2n)/so(2n)
    and both totals are at most ``n``.  In the meander, ``top`` (the first
    argument, left of the bar in the text syntax) draws its arcs *below*
    the vertex line and ``bottom`` draws above.
    """

    algebra_type: str
    n: int
    top: Composition
    bottom: Composition

    def swapped(self) -> "SeaweedSpec":
        return SeaweedSpec(self.algebra_type, self.n, self.bottom, self.top)

    @property
    def ambient_size(self) -> int:
        """Matrix size of the ambient algebra (n, 2n+1, 2n, 2n)."""
        return {"A": self.n, "B": 2 * self.n + 1, "C": 2 * self.n, "D": 2 * self.n}[
            self.algebra_type
        ]

    def __str__(self) -> str:
        return f"{self.algebra_type}:{self.n}:{self.top}|{self.bottom}"


def make_spec(algebra_type: str, n: int, top: CompositionLike,
              bottom: CompositionLike) -> SeaweedSpec:
    """Validate and canonicalize a seaweed specification.

    Type D names are not unique: a composition of total n ending in a
    block of size 1 denotes the same subalgebra as the one with that
    trailing 1 removed (the (n-1)-dimensional isotropic subspace lies in
    exactly two n-dimensional ones, both fixed by its stabilizer), so the
    trailing 1 is dropped here.
    """
    if algebra_type not in ALGEBRA_TYPES:
        raise SpecError(f"algebra type must be one of {ALGEBRA_TYPES}, got {algebra_type!r}")
    n = int(n)
    if n < 1:
        raise SpecError(f"rank parameter must be >= 1, got {n}")
    top = normalize(top)
    bottom = normalize(bottom)
    if algebra_type == "A":
        if top.total != n or bottom.total != n:
            raise SpecError(
                f"type A requires both totals equal to n={n}, "
                f"got |top|={top.total}, |bottom|={bottom.total}")
    else:
        if top.total > n or bottom.total > n:
            raise SpecError(
                f"type {algebra_type} requires totals <= n={n}, "
                f"got |top|={top.total}, |bottom|={bottom.total}")
        if algebra_type == "D":
            if top.total == n and len(top) > 0 and top[-1] == 1:
                top = Composition(top.blocks[:-1])
            if bottom.total == n and len(bottom) > 0 and bottom[-1] == 1:
                bottom = Composition(bottom.blocks[:-1])
    return SeaweedSpec(algebra_type, n, top, bottom)


@dataclass(frozen=True)
class XiMembership:
    """Whether a type-D pair is in the crossed-arc regime, and which side is full."""

    in_xi: bool
    full_side: Optional[str] = None  # "top" or "bottom" when in_xi


def xi_membership(spec: SeaweedSpec) -> XiMembership:
    """Crossed-arc regime test: one total equals n with last block > 1,
    the other total equals n-1.  Trivially false for non-D types and n=1."""
    if spec.algebra_type != "D" or spec.n <= 1:
        return XiMembership(False)
    a, b, n = spec.top, spec.bottom, spec.n
    if a.total == n and len(a) > 0 and a[-1] > 1 and b.total == n - 1:
        return XiMembership(True, "top")
    if b.total == n and len(b) > 0 and b[-1] > 1 and a.total == n - 1:
        return XiMembership(True, "bottom")
    return XiMembership(False)


# ---------------------------------------------------------------------------
# canonical text syntax: TYPE:n:top|bottom, comma-separated blocks, '-' = empty


def _parse_blocks(text: str) -> list[int]:
    text = text.strip()
    if text == "-" or text == "":
        return []
    try:
        return [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise SpecError(f"bad block list {text!r}") from exc


def parse_spec(text: str) -> SeaweedSpec:
    """Parse the canonical syntax, e.g. ``C:200:15,185|17,61,117``."""
    parts = text.strip().split(":")
    if len(parts) != 3:
        raise SpecError(f"expected TYPE:n:top|bottom, got {text!r}")
    algebra_type, n_text, comps = parts
    try:
        n = int(n_text)
    except ValueError as exc:
        raise SpecError(f"bad rank {n_text!r}") from exc
    if "|" not in comps:
        raise SpecError(f"missing '|' between compositions in {text!r}")
    top_text, bottom_text = comps.split("|", 1)
    return make_spec(algebra_type.strip().upper(), n,
                     _parse_blocks(top_text), _parse_blocks(bottom_text))


def format_spec(spec: SeaweedSpec) -> str:
    return str(spec)


# ---------------------------------------------------------------------------
# enumeration helpers (census / verification sweeps)


def compositions_of(total: int) -> Iterator[Composition]:
    """All compositions of ``total`` in a fixed (cut-mask) order."""
    if total == 0:
        yield EMPTY
        return
    if total < 0:
        raise ValueError("total must be >= 0")
    for mask in range(1 << (total - 1)):
        blocks = []
        size = 1
        for pos in range(total - 1):
            if mask >> pos & 1:
                blocks.append(size)
                size = 1
            else:
                size += 1
        blocks.append(size)
        yield Composition(blocks)


def compositions_at_most(bound: int) -> Iterator[Composition]:
    """All compositions of every total from 0 through ``bound``."""
    for total in range(bound + 1):
        yield from compositions_of(total)


def enumerate_specs(algebra_type: str, n: int) -> Iterator[SeaweedSpec]:
    """Every valid spec of one type at one rank (canonical forms for D)."""
    if algebra_type == "A":
        for a in compositions_of(n):
            for b in compositions_of(n):
                yield SeaweedSpec("A", n, a, b)
    elif algebra_type in ("B", "C"):
        for a in compositions_at_most(n):
            for b in compositions_at_most(n):
                yield SeaweedSpec(algebra_type, n, a, b)
    elif algebra_type == "D":
        sides = [c for c in compositions_at_most(n)
                 if c.total < n or (len(c) > 0 and c[-1] > 1)]
        for a in sides:
            for b in sides:
                yield SeaweedSpec("D", n, a, b)
    else:
        raise SpecError(f"unknown algebra type {algebra_type!r}")
