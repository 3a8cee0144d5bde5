"""Labeled trees, signed 3-trees, and 4-graphs.

Trees are enumerated through Prufer sequences.  A 3-graph is a multiset of
solid triangles glued at vertices; the contractible ones ("3-trees") carry a
sign delta computed from the cycle structure of the product of their
triangles.  4-graphs pair each 4-subset of vertices with one of two
tetrahedron variants and index the coefficients of the characteristic
polynomial expansion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterator, List, Sequence, Tuple

from .exactmath import StructureError
from .perm import Permutation


class ResourceLimitError(RuntimeError):
    """Enumeration size exceeds the configured bound."""


class NotAThreeTreeError(ValueError):
    """The triangle product is not a single cycle on all vertices."""


THREE_TREE_EDGE_BOUND = 3


# -- plain trees ---------------------------------------------------------


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


@dataclass(frozen=True)
class LabeledTree:
    """A tree on vertices 1..n given by its n-1 unordered edges."""

    n: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple(tuple(sorted(e)) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if len(edges) != self.n - 1:
            raise StructureError(
                "%d edges on %d vertices" % (len(edges), self.n))
        uf = _UnionFind(range(1, self.n + 1))
        for i, j in edges:
            if not 1 <= i <= self.n and 1 <= j <= self.n:
                raise StructureError("edge (%d,%d) out of range" % (i, j))
            if not uf.union(i, j):
                raise StructureError("edge (%d,%d) closes a cycle" % (i, j))


def prufer_decode(seq: Sequence[int], n: int) -> LabeledTree:
    """Tree on 1..n from a Prufer sequence of length n-2."""
    if n < 2:
        if seq:
            raise StructureError("nonempty sequence for n=%d" % n)
        return LabeledTree(n, ())
    seq = list(seq)
    if len(seq) != n - 2:
        raise StructureError("sequence length %d, expected %d"
                             % (len(seq), n - 2))
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return LabeledTree(n, tuple(edges))


def prufer_encode(tree: LabeledTree) -> Tuple[int, ...]:
    """Prufer sequence of a tree; inverse of prufer_decode."""
    n = tree.n
    if n < 3:
        return ()
    adj = {v: set() for v in range(1, n + 1)}
    for i, j in tree.edges:
        adj[i].add(j)
        adj[j].add(i)
    import heapq
    leaves = [v for v in range(1, n + 1) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        neighbor = adj[leaf].pop()
        adj[neighbor].discard(leaf)
        seq.append(neighbor)
        if len(adj[neighbor]) == 1:
            heapq.heappush(leaves, neighbor)
    return tuple(seq)


def enumerate_trees(n: int) -> Iterator[LabeledTree]:
    """All n^(n-2) labeled trees on 1..n, via Prufer decoding."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        yield LabeledTree(1, ())
        return
    if n == 2:
        yield LabeledTree(2, ((1, 2),))
        return
    from itertools import product
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(seq, n)


def tree_weight(tree: LabeledTree, weights):
    """Product of edge weights; the table is read symmetrically."""
    total = Fraction(1)
    for i, j in tree.edges:
        key = (i, j) if (i, j) in weights else (j, i)
        if key not in weights:
            raise KeyError("no weight for edge (%d,%d)" % (i, j))
        total = total * weights[key]
    return total


# -- 3-graphs ------------------------------------------------------------


@dataclass(frozen=True)
class ThreeGraph:
    """A multiset of solid triangles; triples stored sorted ascending."""

    n: int
    triangles: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        triangles = tuple(tuple(sorted(t)) for t in self.triangles)
        object.__setattr__(self, "triangles", triangles)
        for t in triangles:
            if len(set(t)) != 3:
                raise StructureError("degenerate triangle %r" % (t,))
            if not all(1 <= v <= self.n for v in t):
                raise StructureError("triangle %r out of 1..%d"
                                     % (t, self.n))

    @property
    def m(self) -> int:
        return len(self.triangles)

    def vertices(self):
        return sorted({v for t in self.triangles for v in t})


def is_three_tree(graph: ThreeGraph) -> bool:
    """True iff the triangle complex is contractible.

    For complexes of triangles glued only at vertices this is equivalent to:
    connected, exactly 2m+1 vertices covering 1..n, and iterated leaf
    pruning (remove a triangle two of whose vertices lie in no other
    triangle) ending in a single triangle.
    """
    m = graph.m
    if m == 0:
        return False
    verts = graph.vertices()
    if graph.n != 2 * m + 1 or verts != list(range(1, graph.n + 1)):
        return False
    uf = _UnionFind(verts)
    for i, j, k in graph.triangles:
        uf.union(i, j)
        uf.union(i, k)
    if len({uf.find(v) for v in verts}) != 1:
        return False
    remaining = list(graph.triangles)
    while len(remaining) > 1:
        count = {}
        for t in remaining:
            for v in t:
                count[v] = count.get(v, 0) + 1
        for idx, t in enumerate(remaining):
            if sum(1 for v in t if count[v] == 1) >= 2:
                del remaining[idx]
                break
        else:
            return False
    return True


def enumerate_three_trees(m: int,
                          edge_bound: int = THREE_TREE_EDGE_BOUND
                          ) -> Iterator[ThreeGraph]:
    """All 3-trees with m triangles on vertices 1..2m+1, each once."""
    if m < 1:
        raise ValueError("m must be positive")
    if m > edge_bound:
        raise ResourceLimitError(
            "enumerate_three_trees(%d) exceeds the bound %d"
            % (m, edge_bound))
    n = 2 * m + 1
    triples = list(combinations(range(1, n + 1), 3))
    for chosen in combinations_with_replacement(triples, m):
        graph = ThreeGraph(n, chosen)
        if is_three_tree(graph):
            yield graph


def delta_sign(graph: ThreeGraph, check_reorder: bool = True) -> int:
    """Sign of a 3-tree.

    The product of the triangles (as 3-cycles, composed in edge-list order
    with the rightmost applied first) is a single cycle on all vertices;
    writing that cycle as (a_1 ... a_n) starting from a_1 = 1, the sign is
    the parity of the permutation s -> a_s.  The value does not depend on
    the edge order; with check_reorder the computation is repeated on the
    reversed edge list and compared.
    """
    n = graph.n
    value = _delta_from_order(graph.triangles, n)
    if check_reorder and graph.m > 1:
        again = _delta_from_order(tuple(reversed(graph.triangles)), n)
        if again != value:
            raise NotAThreeTreeError("sign depends on the edge order")
    return value


def _delta_from_order(triangles, n: int) -> int:
    sigma = Permutation.identity(n)
    for t in triangles:
        sigma = sigma.compose(Permutation.from_cycles(n, [t]))
    cycle = [1]
    nxt = sigma(1)
    while nxt != 1:
        cycle.append(nxt)
        nxt = sigma(nxt)
    if len(cycle) != n:
        raise NotAThreeTreeError(
            "triangle product is not a single %d-cycle" % n)
    return Permutation(cycle).sign()


# -- 4-graphs ------------------------------------------------------------

VARIANTS = ("T1", "T2")


@dataclass(frozen=True)
class FourGraph:
    """A multiset of 4-edges, each a 4-subset tagged with a variant."""

    n: int
    edges: Tuple[Tuple[Tuple[int, int, int, int], str], ...]

    def __post_init__(self):
        edges = tuple((tuple(sorted(q)), v) for q, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for quad, variant in edges:
            if len(set(quad)) != 4:
                raise StructureError("degenerate 4-edge %r" % (quad,))
            if not all(1 <= v <= self.n for v in quad):
                raise StructureError("4-edge %r out of 1..%d"
                                     % (quad, self.n))
            if variant not in VARIANTS:
                raise StructureError("unknown variant %r" % (variant,))

    @property
    def r(self) -> int:
        return len(self.edges)


def enumerate_four_graphs(r: int, n: int,
                          max_count: int = 2_000_000
                          ) -> Iterator[FourGraph]:
    """All multisets of r (4-subset, variant) pairs on vertices 1..n."""
    if r < 1:
        raise ValueError("r must be positive")
    if n < 4:
        raise ValueError("n must be at least 4")
    from math import comb
    pairs = [(q, v) for q in combinations(range(1, n + 1), 4)
             for v in VARIANTS]
    total = comb(len(pairs) + r - 1, r)
    if total > max_count:
        raise ResourceLimitError(
            "%d four-graphs exceed the bound %d" % (total, max_count))
    for chosen in combinations_with_replacement(pairs, r):
        yield FourGraph(n, chosen)
