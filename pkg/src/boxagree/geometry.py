"""Exact geometry of axis-parallel boxes and their combinatorial invariants.

Boxes are cartesian products of closed rational intervals, so emptiness of an
intersection is a bit-exact question, never a floating-point judgement.
Boundary contact counts as intersection, and degenerate (zero-width) sides
are legal: a single point is a valid box.

Everything in this module is an immutable value and every operation is a pure
function, so concurrent use needs no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .graphs import Graph

RationalLike = Fraction | int | str


def _frac(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RationalInterval:
    """Closed, non-empty interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    def intersect(self, other: RationalInterval) -> RationalInterval | None:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return RationalInterval(lo, hi) if lo <= hi else None

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def __repr__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class Box:
    """Product of d closed intervals, one per coordinate axis."""

    sides: tuple[RationalInterval, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sides", tuple(self.sides))
        if len(self.sides) < 1:
            raise ValueError("a box needs at least one side")
        for s in self.sides:
            if not isinstance(s, RationalInterval):
                raise TypeError(f"box side must be a RationalInterval, got {s!r}")

    @classmethod
    def of(cls, pairs) -> Box:
        """Build a box from (lo, hi) pairs of ints, strings or Fractions."""
        return cls(tuple(RationalInterval(_frac(lo), _frac(hi)) for lo, hi in pairs))

    @property
    def dimension(self) -> int:
        return len(self.sides)

    def intersect(self, other: Box) -> Box | None:
        return intersect_boxes(self, other)

    def contains(self, point: tuple[Fraction, ...]) -> bool:
        if len(point) != self.dimension:
            raise ValueError("point dimension mismatch")
        return all(s.contains(x) for s, x in zip(self.sides, point))

    def __repr__(self) -> str:
        return " x ".join(repr(s) for s in self.sides)


def intersect_boxes(a: Box, b: Box) -> Box | None:
    """Coordinate-wise intersection; None when any side comes up empty.

    Commutative and associative where defined.
    """
    if a.dimension != b.dimension:
        raise ValueError(f"dimension mismatch: {a.dimension} vs {b.dimension}")
    sides = []
    for sa, sb in zip(a.sides, b.sides):
        s = sa.intersect(sb)
        if s is None:
            return None
        sides.append(s)
    return Box(tuple(sides))


@dataclass(frozen=True)
class Arrangement:
    """An indexed family of same-dimension boxes; indices run 1..n."""

    dimension: int
    boxes: tuple[Box, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "boxes", tuple(self.boxes))
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")
        if len(self.boxes) < 1:
            raise ValueError("an arrangement needs at least one box")
        for i, b in enumerate(self.boxes, start=1):
            if b.dimension != self.dimension:
                raise ValueError(
                    f"box {i} has dimension {b.dimension}, expected {self.dimension}"
                )

    @classmethod
    def of(cls, dimension: int, box_specs) -> Arrangement:
        """Build from per-box lists of (lo, hi) coordinate pairs."""
        return cls(dimension, tuple(Box.of(spec) for spec in box_specs))

    @property
    def n(self) -> int:
        return len(self.boxes)

    def box(self, i: int) -> Box:
        """1-based access, matching the index family convention."""
        if not 1 <= i <= self.n:
            raise IndexError(f"box index {i} out of range 1..{self.n}")
        return self.boxes[i - 1]

    def drop(self, i: int) -> Arrangement:
        """The sub-family without box i (requires n >= 2)."""
        if self.n < 2:
            raise ValueError("cannot drop from a single-box arrangement")
        self.box(i)
        return Arrangement(
            self.dimension, self.boxes[: i - 1] + self.boxes[i:]
        )


@dataclass(frozen=True)
class FVector:
    """Entry k counts the non-empty (k+1)-fold intersections, k = 0..n-1."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        seen_zero = False
        for e in self.entries:
            if e < 0:
                raise ValueError("f-vector entries must be non-negative")
            if seen_zero and e > 0:
                raise ValueError("f-vector support must be an initial segment")
            seen_zero = seen_zero or e == 0

    def f(self, k: int) -> int:
        """f_k, with the natural 0 beyond the stored range."""
        if k < 0:
            raise ValueError("k must be non-negative")
        return self.entries[k] if k < len(self.entries) else 0

    def __len__(self) -> int:
        return len(self.entries)


def intersection_graph(arr: Arrangement) -> Graph:
    """Graph on 1..n with an edge exactly where two boxes meet."""
    edges = []
    for i in range(1, arr.n + 1):
        bi = arr.boxes[i - 1]
        for j in range(i + 1, arr.n + 1):
            if intersect_boxes(bi, arr.boxes[j - 1]) is not None:
                edges.append((i, j))
    return Graph(arr.n, edges)


def agreement_number(arr: Arrangement) -> int:
    """Maximum number of boxes sharing a point.

    Scans the grid of lower endpoints (one candidate coordinate per box per
    axis, so at most n^d points): any deepest cell of the arrangement is
    itself a box whose lower corner lies on that grid.  For boxes this depth
    equals the clique number of the intersection graph.
    """
    axes = [sorted({b.sides[a].lo for b in arr.boxes}) for a in range(arr.dimension)]
    best = 0
    for point in product(*axes):
        depth = sum(1 for b in arr.boxes if b.contains(point))
        if depth > best:
            best = depth
    return best


def agreement_proportion(arr: Arrangement) -> Fraction:
    """agreement_number / n as a reduced fraction."""
    return Fraction(agreement_number(arr), arr.n)


def f_vector(arr: Arrangement) -> FVector:
    """Exact subset-intersection counts with early cut-off on empty prefixes.

    Depth-first over index subsets in increasing order; the running
    intersection of the current prefix is carried down the stack, so a
    subfamily is abandoned as soon as it goes empty.  Exponential in the
    worst case; fine at desk scale (n <= 12 or so).
    """
    n = arr.n
    counts = [0] * n

    def extend(start: int, running: Box, size: int) -> None:
        for j in range(start, n):
            inter = intersect_boxes(running, arr.boxes[j])
            if inter is None:
                continue
            counts[size] += 1
            extend(j + 1, inter, size + 1)

    for i in range(n):
        counts[0] += 1
        extend(i + 1, arr.boxes[i], 1)
    return FVector(tuple(counts))
