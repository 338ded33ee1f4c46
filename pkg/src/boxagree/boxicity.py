"""Boxicity bounds and exact small-graph decisions.

The exact decision searches for d interval supergraphs of g on the same
vertex set whose edge sets intersect to exactly E(g); equivalently, each
axis certifies ("separates") a set of non-edges, the per-axis graph must be
an interval graph, and the separated sets must jointly cover every non-edge.
Enumerating separated-set candidates quotients the raw space of endpoint
orderings by overlap equivalence, which is what makes n = 8 exhaustible.

A "no" is only ever reported after that space is exhausted; hitting the node
budget yields "inconclusive" instead.  Every "yes" carries a realizing
arrangement whose intersection graph is re-derived and compared bit-exactly
before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .geometry import Arrangement, Box, RationalInterval, intersection_graph
from .graphs import Graph, interval_clique_order, is_interval_graph, strip_universal

DEFAULT_BUDGET = 10**8


class BudgetExhausted(Exception):
    """Internal signal: the configured node budget ran out."""


class _Budget:
    __slots__ = ("remaining", "spent")

    def __init__(self, limit: int) -> None:
        self.remaining = limit
        self.spent = 0

    def spend(self, k: int = 1) -> None:
        self.remaining -= k
        self.spent += k
        if self.remaining < 0:
            raise BudgetExhausted


@dataclass(frozen=True)
class BoxicityDecision:
    status: str  # "yes" | "no" | "inconclusive"
    witness: Arrangement | None
    nodes: int


@dataclass(frozen=True)
class BoxicityReport:
    lower: int
    upper: int
    exact: int | None
    witness: Arrangement | None
    notes: tuple[str, ...] = ()


def adiga_lower_bound(g: Graph) -> int:
    """ceil(n / (2(n - delta - 1))) for graphs without universal vertices."""
    n = g.n
    degs = g.degrees()
    if any(d == n - 1 for d in degs):
        raise ValueError("graph has a universal vertex; strip_universal first")
    delta = min(degs)
    return math.ceil(Fraction(n, 2 * (n - delta - 1)))


def roberts_upper_bound(g: Graph) -> int:
    """floor(n/2), with complete graphs pinned at 0 by convention."""
    return 0 if g.is_complete() else g.n // 2


def _interval_witness_axis(order: list[int]) -> dict[int, tuple[Fraction, Fraction]]:
    """Vertex -> (lo, hi) positions from a consecutive clique order."""
    spans: dict[int, tuple[int, int]] = {}
    for pos, clique in enumerate(order, start=1):
        m = clique
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            first, _ = spans.get(v, (pos, pos))
            spans[v] = (first, pos)
    return {v: (Fraction(a), Fraction(b)) for v, (a, b) in spans.items()}


def _axis_graph(g: Graph, kept_nonedges: list[tuple[int, int]]) -> Graph:
    return Graph(g.n, list(g.edges()) + kept_nonedges)


def _build_witness(g: Graph, d: int, separated_sets: list[int],
                   non_edges: list[tuple[int, int]]) -> Arrangement:
    axes: list[dict[int, tuple[Fraction, Fraction]]] = []
    for sep_mask in separated_sets:
        kept = [e for i, e in enumerate(non_edges) if not sep_mask >> i & 1]
        order = interval_clique_order(_axis_graph(g, kept))
        if order is None:  # pragma: no cover - masks were pre-validated
            raise RuntimeError("separated set lost its interval order")
        axes.append(_interval_witness_axis(order))
    while len(axes) < d:
        axes.append({v: (Fraction(0), Fraction(1)) for v in range(g.n)})
    boxes = []
    for v in range(g.n):
        sides = tuple(RationalInterval(*axis[v]) for axis in axes)
        boxes.append(Box(sides))
    witness = Arrangement(d, tuple(boxes))
    if intersection_graph(witness) != g:  # pragma: no cover - construction invariant
        raise RuntimeError("witness arrangement does not realize the graph")
    return witness


def _is_chordal(g: Graph) -> bool:
    """Quick interval-graph pre-filter: peel simplicial vertices."""
    adj = list(g._adj)
    alive = (1 << g.n) - 1
    for _ in range(g.n):
        found = False
        m = alive
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nb = adj[v] & alive
            ok = True
            t = nb
            while t:
                u = (t & -t).bit_length() - 1
                t &= t - 1
                if nb & ~adj[u] & ~(1 << u):
                    ok = False
                    break
            if ok:
                alive &= ~(1 << v)
                found = True
                break
        if not found:
            return False
    return True


def decide_boxicity_leq(g: Graph, d: int, budget: int = DEFAULT_BUDGET) -> BoxicityDecision:
    """Decide box(g) <= d exactly, within a node budget.

    Returns "yes" with a realizing d-box arrangement, "no" after exhausting
    the symmetry-reduced search space, or "inconclusive" when the budget
    runs out first.  Complete graphs are rejected (their boxicity is 0 by
    convention, so there is nothing to search).
    """
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if g.is_complete():
        raise ValueError("complete graph: boxicity is 0 by convention")
    tracker = _Budget(budget)
    try:
        return _decide(g, d, tracker)
    except BudgetExhausted:
        return BoxicityDecision("inconclusive", None, tracker.spent)


def _decide(g: Graph, d: int, tracker: _Budget) -> BoxicityDecision:
    if d == 1:
        tracker.spend()
        order = interval_clique_order(g)
        if order is None:
            return BoxicityDecision("no", None, tracker.spent)
        axis = _interval_witness_axis(order)
        boxes = tuple(Box((RationalInterval(*axis[v]),)) for v in range(g.n))
        witness = Arrangement(1, boxes)
        if intersection_graph(witness) != g:  # pragma: no cover
            raise RuntimeError("interval witness does not realize the graph")
        return BoxicityDecision("yes", witness, tracker.spent)

    non_edges = [
        (u, v)
        for u in range(1, g.n + 1)
        for v in range(u + 1, g.n + 1)
        if not g.has_edge(u, v)
    ]
    k = len(non_edges)
    edges = list(g.edges())
    if k >= 63 or (1 << k) > tracker.remaining:
        raise BudgetExhausted  # cannot exhaust the separated-set space

    # Every subset of non-edges that an axis could certify, as a bitmask;
    # realizable means the axis graph (g plus the non-separated non-edges)
    # is an interval graph.
    realizable: list[int] = []
    for mask in range((1 << k) - 1, -1, -1):
        tracker.spend()
        kept = [e for i, e in enumerate(non_edges) if not mask >> i & 1]
        h = Graph(g.n, edges + kept)
        if not _is_chordal(h):
            continue
        if interval_clique_order(h) is not None:
            realizable.append(mask)

    full = (1 << k) - 1
    # only maximal separated sets matter for covering
    maximal = [m for m in realizable if not any(m != o and m & o == m for o in realizable)]
    per_element = [[m for m in maximal if m >> i & 1] for i in range(k)]

    chosen: list[int] = []

    def cover(uncovered: int, axes_left: int) -> bool:
        tracker.spend()
        if uncovered == 0:
            return True
        if axes_left == 0:
            return False
        i = (uncovered & -uncovered).bit_length() - 1
        for m in per_element[i]:
            chosen.append(m)
            if cover(uncovered & ~m, axes_left - 1):
                return True
            chosen.pop()
        return False

    if cover(full, d):
        witness = _build_witness(g, d, chosen, non_edges)
        return BoxicityDecision("yes", witness, tracker.spent)
    return BoxicityDecision("no", None, tracker.spent)


def boxicity_report(g: Graph, budget: int = DEFAULT_BUDGET) -> BoxicityReport:
    """Lower/upper bounds with the exact value filled in when the decision
    search can close the gap within budget."""
    if g.is_complete():
        return BoxicityReport(0, 0, 0, None, ("complete graph: boxicity 0",))
    notes: list[str] = []
    upper = roberts_upper_bound(g)
    if is_interval_graph(g):
        decision = decide_boxicity_leq(g, 1, budget)
        return BoxicityReport(1, upper, 1, decision.witness,
                              ("interval graph: boxicity 1",))
    lower = 2
    stripped, k = strip_universal(g)
    target = stripped
    if k:
        notes.append(
            f"adiga bound computed on the graph with {k} universal vertices removed"
        )
    if not target.is_complete():
        adiga = adiga_lower_bound(target)
        lower = max(lower, adiga)
        notes.append(f"adiga lower bound {adiga}")
    if lower >= upper:
        notes.append("bounds meet: exact without search")
        return BoxicityReport(lower, upper, upper, None, tuple(notes))
    remaining = budget
    for d in range(lower, upper + 1):
        decision = decide_boxicity_leq(g, d, remaining)
        remaining -= decision.nodes
        if decision.status == "yes":
            notes.append(f"search realized the graph with {d}-boxes")
            return BoxicityReport(lower, upper, d, decision.witness, tuple(notes))
        if decision.status == "no":
            lower = d + 1
            notes.append(f"search exhausted: no {d}-box realization")
            if lower == upper:
                notes.append("bounds meet: exact without further search")
                return BoxicityReport(lower, upper, upper, None, tuple(notes))
            continue
        notes.append(f"budget exhausted while deciding boxicity <= {d}")
        return BoxicityReport(lower, upper, None, None, tuple(notes))
    # unreachable: the roberts bound always admits a realization
    return BoxicityReport(lower, upper, None, None, tuple(notes))  # pragma: no cover
