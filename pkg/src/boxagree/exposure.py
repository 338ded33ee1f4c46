"""Exposed boxes, arrangement splitting, and the edge-count recurrences that
fall out of the split identity f_k(B) = f_k(B') + f_{k-1}(B'').

A box is exposed when an axis-parallel hyperplane supports it and every box
missing that hyperplane lies in the opposite half-space.  The box whose
lower endpoint on some axis is maximal is always exposed by the hyperplane
through that endpoint.  Note the naive sweep picture (move a hyperplane in
from infinity; the first box it touches is exposed) picks the maximal
*upper* endpoint instead and can fail the opposite-side condition, e.g. for
[0,10] and [2,3] on a line; hence the extremal-lower-endpoint rule here,
with an independent validator guarding every certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .geometry import Arrangement, Box, FVector, f_vector, intersect_boxes
from .search import EtaTable


@dataclass(frozen=True)
class ExposureCertificate:
    """Box `box_index` is exposed by the hyperplane {x_axis = coordinate},
    which supports the named face of the box."""

    box_index: int
    axis: int  # 1..d
    side: str  # "lower" | "upper"
    coordinate: Fraction


def validate_exposure(arr: Arrangement, cert: ExposureCertificate) -> bool:
    """Check the two defining conditions directly: the hyperplane supports
    the box on the named face, and every box disjoint from the hyperplane
    sits strictly on the other side."""
    if not 1 <= cert.axis <= arr.dimension:
        return False
    if cert.side not in ("lower", "upper"):
        return False
    q = arr.box(cert.box_index).sides[cert.axis - 1]
    c = cert.coordinate
    if cert.side == "lower":
        if q.lo != c:
            return False
    else:
        if q.hi != c:
            return False
    for j in range(1, arr.n + 1):
        if j == cert.box_index:
            continue
        side = arr.box(j).sides[cert.axis - 1]
        if side.contains(c):
            continue  # meets the hyperplane
        if cert.side == "lower" and side.lo > c:
            return False  # same (upper) side as the exposed box
        if cert.side == "upper" and side.hi < c:
            return False
    return True


def find_exposed(arr: Arrangement) -> ExposureCertificate:
    """First valid certificate in (axis, lower-before-upper, lowest index)
    order.  The lower-face candidate on an axis is the box with the maximal
    lower endpoint there; the upper-face mirror minimizes the upper
    endpoint.  One of these always validates."""
    for axis in range(1, arr.dimension + 1):
        for side in ("lower", "upper"):
            if side == "lower":
                value = max(b.sides[axis - 1].lo for b in arr.boxes)
                idx = next(
                    i for i in range(1, arr.n + 1)
                    if arr.box(i).sides[axis - 1].lo == value
                )
            else:
                value = min(b.sides[axis - 1].hi for b in arr.boxes)
                idx = next(
                    i for i in range(1, arr.n + 1)
                    if arr.box(i).sides[axis - 1].hi == value
                )
            cert = ExposureCertificate(idx, axis, side, value)
            if validate_exposure(arr, cert):
                return cert
    raise RuntimeError("no exposed box found; arrangement state corrupt")  # pragma: no cover


def split(arr: Arrangement, i: int) -> tuple[Arrangement, dict[int, Box | None]]:
    """Drop box i, and intersect it with every other box.

    Returns (the n-1 remaining boxes as an arrangement, a map from each
    other original index to its intersection with box i, absent entries
    kept as None)."""
    if arr.n < 2:
        raise ValueError("splitting needs at least two boxes")
    bi = arr.box(i)
    rest = arr.drop(i)
    pieces = {
        j: intersect_boxes(bi, arr.box(j))
        for j in range(1, arr.n + 1)
        if j != i
    }
    return rest, pieces


def _f_partial(dimension: int, pieces: dict[int, Box | None]) -> FVector:
    """f-vector of the present members of an optional-box family; a subset
    counts only when every member is present and they intersect."""
    present = [b for b in pieces.values() if b is not None]
    if not present:
        return FVector((0,))
    return f_vector(Arrangement(dimension, tuple(present)))


def verify_split_identity(arr: Arrangement, k: int) -> bool:
    """Evaluate f_k(B) == f_k(B') + f_{k-1}(B'') with the split taken at the
    exposed box; both sides are computed independently by brute force."""
    if not 1 <= k <= arr.n - 1:
        raise ValueError(f"need 1 <= k <= n-1 = {arr.n - 1}, got {k}")
    cert = find_exposed(arr)
    rest, pieces = split(arr, cert.box_index)
    whole = f_vector(arr)
    partial = _f_partial(arr.dimension, pieces)
    return whole.f(k) == f_vector(rest).f(k) + partial.f(k - 1)


def e_upper_recurrence(n: int, r: int, d: int, table: EtaTable) -> int:
    """Edge-count upper bound from unrolling e(n) <= e(n-1) + eta(r-1, d-1)
    down to the r-clique base case: C(r,2) + (n-r) * eta(r-1, d-1).

    The table supplies eta(r-1, d-1) exactly for d-1 in {0, 1} and falls
    back to the dimension-free value (or its upper bound) otherwise; a
    MissingEtaError names any entry it cannot provide.
    """
    if not (n >= r >= 2 and d >= 1):
        raise ValueError(f"need n >= r >= 2 and d >= 1, got n={n}, r={r}, d={d}")
    return math.comb(r, 2) + (n - r) * table.eta_dim(r - 1, d - 1)


def e_upper_closed(n: int, r: int, d: int, gamma_prev: float | Fraction):
    """Closed-form edge bound C(r,2) + (n-r)(r-1)/gamma(d-1); exact when
    gamma_prev is a Fraction, float otherwise."""
    if not (n >= r >= 2 and d >= 1):
        raise ValueError(f"need n >= r >= 2 and d >= 1, got n={n}, r={r}, d={d}")
    if gamma_prev <= 0:
        raise ValueError(f"need gamma_prev > 0, got {gamma_prev}")
    if isinstance(gamma_prev, Fraction):
        return math.comb(r, 2) + Fraction(n - r) * (r - 1) / gamma_prev
    return math.comb(r, 2) + (n - r) * (r - 1) / gamma_prev
