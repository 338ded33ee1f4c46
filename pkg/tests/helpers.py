"""Shared generators and independent oracles for the test suite.

The oracles here recompute quantities by direct definition (subset scans,
point grids, triple loops) so the library's optimized paths are always
checked against something that cannot share their bugs.
"""

from __future__ import annotations

from itertools import combinations, product
from random import Random

from boxagree import Arrangement, Graph, intersect_boxes


def random_arrangement(rng: Random, max_n: int = 8, max_d: int = 3,
                       coord_range: int = 8) -> Arrangement:
    d = rng.randint(1, max_d)
    n = rng.randint(1, max_n)
    boxes = []
    for _ in range(n):
        sides = []
        for _ in range(d):
            a = rng.randint(0, coord_range)
            b = rng.randint(0, coord_range)
            sides.append((min(a, b), max(a, b)))
        boxes.append(sides)
    return Arrangement.of(d, boxes)


def random_graph(rng: Random, max_n: int = 10, p: float = 0.5) -> Graph:
    n = rng.randint(1, max_n)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(n, edges)


def brute_force_f_vector(arr: Arrangement) -> list[int]:
    """f_k by scanning every index subset and intersecting from scratch."""
    counts = [0] * arr.n
    for size in range(1, arr.n + 1):
        for subset in combinations(range(arr.n), size):
            running = arr.boxes[subset[0]]
            for idx in subset[1:]:
                running = intersect_boxes(running, arr.boxes[idx])
                if running is None:
                    break
            if running is not None:
                counts[size - 1] += 1
    return counts


def brute_force_depth(arr: Arrangement) -> int:
    """Max overlap count over the full endpoint grid (lows and highs)."""
    axes = []
    for a in range(arr.dimension):
        coords = {b.sides[a].lo for b in arr.boxes}
        coords |= {b.sides[a].hi for b in arr.boxes}
        axes.append(sorted(coords))
    best = 0
    for point in product(*axes):
        best = max(best, sum(1 for b in arr.boxes if b.contains(point)))
    return best


def geometric_triple_property(arr: Arrangement) -> bool:
    """Form 1 of (2,3)-agreeability, straight from the geometry."""
    for i, j, k in combinations(range(arr.n), 3):
        bi, bj, bk = arr.boxes[i], arr.boxes[j], arr.boxes[k]
        if (intersect_boxes(bi, bj) is None
                and intersect_boxes(bi, bk) is None
                and intersect_boxes(bj, bk) is None):
            return False
    return True


def triple_induced_edge_property(g: Graph) -> bool:
    """Form 2: every three vertices induce at least one edge."""
    for a, b, c in combinations(range(1, g.n + 1), 3):
        if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
            return False
    return True


def subset_clique_oracle(g: Graph, s: int) -> int:
    """Count s-cliques by scanning every s-subset."""
    count = 0
    for subset in combinations(range(1, g.n + 1), s):
        if all(g.has_edge(u, v) for u, v in combinations(subset, 2)):
            count += 1
    return count


def max_clique_oracle(g: Graph) -> int:
    for size in range(g.n, 0, -1):
        if subset_clique_oracle(g, size):
            return size
    return 0


def is_chordal_oracle(g: Graph) -> bool:
    """Simplicial elimination by set arithmetic (interval => chordal)."""
    alive = set(range(1, g.n + 1))
    adj = {v: set(g.neighbors(v)) for v in alive}
    while alive:
        simplicial = None
        for v in alive:
            nb = adj[v] & alive
            if all(u in adj[w] for u, w in combinations(sorted(nb), 2)):
                simplicial = v
                break
        if simplicial is None:
            return False
        alive.remove(simplicial)
    return True


def cycle(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])
