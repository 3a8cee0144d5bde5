"""The shuffle determinant and the coefficient functional built on it.

sdet(A, B) sums, over all subsets I of row indices, the product of the
determinants of the two complementary row-shuffles of A and B.  It equals
the coefficient of x_1...x_n in det(A + B diag(x))^2, and its monomial
coefficients are +-2^m read off an auxiliary cycle graph.

Attaching a pair of difference-vector rows to every 4-tuple of labels turns
sums of shuffle determinants over column subsets into coefficients of a
characteristic polynomial; phi and the mu-table machinery below implement
that correspondence.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Sequence, Tuple

from .exactmath import DimensionError, ExactMatrix, MultiPoly, StructureError


class ResourceLimitError(RuntimeError):
    """Requested size exceeds the configured bound."""


SDET_BOUND = 10          # 2^n shuffle pairs
SYMBOLIC_BOUND = 5       # polynomial determinant expansion


# -- shuffles ------------------------------------------------------------


def shuffle(A: ExactMatrix, B: ExactMatrix, I) -> ExactMatrix:
    """Row mix: row i (1-based) comes from A if i is in I, else from B."""
    if A.shape != B.shape:
        raise DimensionError("shapes %r and %r differ" % (A.shape, B.shape))
    rows = A.shape[0]
    I = set(I)
    if not I <= set(range(1, rows + 1)):
        raise DimensionError("row subset %r out of 1..%d" % (sorted(I), rows))
    data = [A.data[i - 1] if i in I else B.data[i - 1]
            for i in range(1, rows + 1)]
    return ExactMatrix(data)


def sdet(A: ExactMatrix, B: ExactMatrix, bound: int = SDET_BOUND):
    """Sum over all row subsets I of det(shuffle I) * det(shuffle I-bar)."""
    if A.shape != B.shape:
        raise DimensionError("shapes %r and %r differ" % (A.shape, B.shape))
    n = A.shape[0]
    if not A.is_square():
        raise DimensionError("sdet needs square matrices")
    if n > bound:
        raise ResourceLimitError("sdet dimension %d exceeds bound %d"
                                 % (n, bound))
    total = Fraction(0)
    indices = list(range(1, n + 1))
    for size in range(n + 1):
        for subset in combinations(indices, size):
            complement = [i for i in indices if i not in subset]
            total = (shuffle(A, B, subset).det()
                     * shuffle(A, B, complement).det()) + total
    return total


def sdet_via_coeff(A: ExactMatrix, B: ExactMatrix,
                   bound: int = SYMBOLIC_BOUND):
    """Coefficient of x_1...x_n in det(A + diag(x_1..x_n) B)^2.

    The diagonal factor scales the rows of B, matching the row-based
    shuffle definition.
    """
    if A.shape != B.shape:
        raise DimensionError("shapes %r and %r differ" % (A.shape, B.shape))
    n = A.shape[0]
    if n > bound:
        raise ResourceLimitError("symbolic dimension %d exceeds bound %d"
                                 % (n, bound))
    xs = [MultiPoly.variable("x%d" % (i + 1)) for i in range(n)]
    data = [[MultiPoly.constant(A.data[i][j]) + MultiPoly.constant(
        B.data[i][j]) * xs[i] for j in range(n)] for i in range(n)]
    poly = ExactMatrix(data).det()
    square = poly * poly
    monomial = {("x%d" % (j + 1)): 1 for j in range(n)}
    return square.coeff_at(monomial)


def sdet_identity_formula(A: ExactMatrix):
    """(-1)^n sum over permutations of (-2)^cycles * diagonal product.

    Equals sdet(A, identity).
    """
    from .perm import all_permutations
    n = A.shape[0]
    if not A.is_square():
        raise DimensionError("square matrix required")
    if n > 7:
        raise ResourceLimitError("n=%d exceeds the bound 7" % n)
    total = Fraction(0)
    for sigma in all_permutations(n):
        prod = Fraction(-2) ** sigma.cycle_count()
        for i in range(1, n + 1):
            prod = prod * A.data[i - 1][sigma(i) - 1]
        total = total + prod
    return total if n % 2 == 0 else -total


# -- monomial coefficients via the cycle graph ---------------------------

MonomialCoefficient = namedtuple("MonomialCoefficient",
                                 ["coefficient", "cycle_count", "cycles"])


def monomial_coefficient(edges: Sequence[Tuple[int, int]]
                         ) -> MonomialCoefficient:
    """Signed coefficient of the monomial whose letters form these edges.

    The 2n directed edges on vertices 1..n must give every vertex
    out-degree 2 and in-degree 2.  The auxiliary graph (vertices = edges,
    adjacency = shared initial or shared terminal vertex) is a disjoint
    union of even cycles; the coefficient is +-2^(number of cycles), the
    sign being the product of the parities of the two permutations cut out
    by one alternating 2-coloring.
    """
    edges = [tuple(e) for e in edges]
    if len(edges) % 2:
        raise StructureError("odd number of edges")
    n = len(edges) // 2
    out_deg = {}
    in_deg = {}
    for i, j in edges:
        out_deg[i] = out_deg.get(i, 0) + 1
        in_deg[j] = in_deg.get(j, 0) + 1
    vertices = set(range(1, n + 1))
    if (set(out_deg) != vertices or set(in_deg) != vertices
            or any(d != 2 for d in out_deg.values())
            or any(d != 2 for d in in_deg.values())):
        raise StructureError(
            "every vertex must have out-degree 2 and in-degree 2")
    # partner maps: the unique other edge sharing the initial (resp.
    # terminal) vertex
    by_init = {}
    by_term = {}
    for idx, (i, j) in enumerate(edges):
        by_init.setdefault(i, []).append(idx)
        by_term.setdefault(j, []).append(idx)

    def partner(table, vertex, idx):
        pair = table[vertex]
        return pair[1] if pair[0] == idx else pair[0]

    seen = [False] * len(edges)
    cycles = []
    color = [0] * len(edges)
    for start in range(len(edges)):
        if seen[start]:
            continue
        # walk the cycle alternating initial-sharing and terminal-sharing
        # steps; alternate colors along the way
        cycle = []
        idx = start
        use_init = True
        current_color = 1
        while not seen[idx]:
            seen[idx] = True
            color[idx] = current_color
            cycle.append(idx)
            vertex = edges[idx][0] if use_init else edges[idx][1]
            table = by_init if use_init else by_term
            idx = partner(table, vertex, idx)
            use_init = not use_init
            current_color = -current_color
        if len(cycle) % 2:
            raise StructureError("odd cycle in the auxiliary graph")
        cycles.append(tuple(cycle))
    from .perm import Permutation
    red = [0] * n
    blue = [0] * n
    for idx, (i, j) in enumerate(edges):
        target = red if color[idx] == 1 else blue
        if target[i - 1]:
            raise StructureError("coloring is not a pair of permutations")
        target[i - 1] = j
    sign = Permutation(red).sign() * Permutation(blue).sign()
    m = len(cycles)
    return MonomialCoefficient(sign * 2 ** m, m, cycles)


# -- edge systems and the coefficient functional -------------------------


@dataclass(frozen=True)
class EdgeSystem:
    """Ordered list of 4-tuples of distinct labels in 1..n (repeats allowed)."""

    n: int
    tuples: Tuple[Tuple[int, int, int, int], ...]

    def __post_init__(self):
        tuples = tuple(tuple(t) for t in self.tuples)
        object.__setattr__(self, "tuples", tuples)
        if not tuples:
            raise StructureError("an edge system needs at least one tuple")
        for t in tuples:
            if len(t) != 4 or len(set(t)) != 4:
                raise StructureError("tuple %r is not 4 distinct labels"
                                     % (t,))
            if not all(1 <= v <= self.n for v in t):
                raise StructureError("tuple %r out of 1..%d" % (t, self.n))

    @property
    def r(self) -> int:
        return len(self.tuples)


def build_AB(system: EdgeSystem) -> Tuple[ExactMatrix, ExactMatrix]:
    """r x n difference matrices: row s of A is e_i - e_j, of B is e_k - e_l."""
    r, n = system.r, system.n
    A = [[Fraction(0)] * n for _ in range(r)]
    B = [[Fraction(0)] * n for _ in range(r)]
    for s, (i, j, k, l) in enumerate(system.tuples):
        A[s][i - 1] = Fraction(1)
        A[s][j - 1] = Fraction(-1)
        B[s][k - 1] = Fraction(1)
        B[s][l - 1] = Fraction(-1)
    return ExactMatrix(A), ExactMatrix(B)


def _column_subset(M: ExactMatrix, cols) -> ExactMatrix:
    return M.submatrix(range(M.shape[0]), [c - 1 for c in cols])


def phi(system: EdgeSystem, weights=None):
    """Weight product times the sum over r-subsets J of columns of
    sdet(A^J, B^J)."""
    r, n = system.r, system.n
    if r > n:
        raise DimensionError("r=%d exceeds n=%d" % (r, n))
    A, B = build_AB(system)
    total = Fraction(0)
    for J in combinations(range(1, n + 1), r):
        total = total + sdet(_column_subset(A, J), _column_subset(B, J))
    return total * _weight_product(system, weights)


def phi_top(system: EdgeSystem, weights=None):
    """The r = n-1 shortcut: n times a single column-subset shuffle
    determinant (all n subsets contribute equally)."""
    r, n = system.r, system.n
    if r != n - 1:
        raise DimensionError("phi_top needs r = n-1, got r=%d n=%d" % (r, n))
    A, B = build_AB(system)
    J = tuple(range(1, n))
    value = sdet(_column_subset(A, J), _column_subset(B, J))
    return value * n * _weight_product(system, weights)


def _weight_product(system: EdgeSystem, weights):
    if weights is None:
        return Fraction(1)
    if len(weights) != system.r:
        raise DimensionError("%d weights for %d tuples"
                             % (len(weights), system.r))
    total = Fraction(1)
    for w in weights:
        total = total * w
    return total


# -- fast integer tables for the characteristic-polynomial check ---------
#
# For z built from the eta generators, the t^(n-r) coefficient of the
# characteristic polynomial is a weighted sum, over size-r multisets of
# (4-subset, variant) instances with multiplicity at most 2, of an integer
# c(M) / prod(multiplicities!), where c(M) is the column-subset sum of
# shuffle determinants of the difference matrices of M.  The c(M) values do
# not depend on the weights, so they are computed once per (n, r) and
# reused across weightings.

Instance = namedtuple("Instance", ["quad", "variant", "tuple4"])


def instances(n: int) -> List[Instance]:
    """All (4-subset, variant) generator instances on labels 1..n.

    Variant T1 of the 4-subset (i,j,k,l) uses the tuple (i,j,k,l); variant
    T2 uses (i,k,l,j).
    """
    out = []
    for q in combinations(range(1, n + 1), 4):
        i, j, k, l = q
        out.append(Instance(q, "T1", (i, j, k, l)))
        out.append(Instance(q, "T2", (i, k, l, j)))
    return out


def _restricted_row(tuple4, J, first_pair: bool) -> Tuple[int, ...]:
    i, j, k, l = tuple4
    p, q = (i, j) if first_pair else (k, l)
    row = [0] * len(J)
    for col, label in enumerate(J):
        if label == p:
            row[col] = 1
        elif label == q:
            row[col] = -1
    return tuple(row)


def _int_det(rows: Tuple[Tuple[int, ...], ...], cache: Dict) -> int:
    """Determinant of a small integer matrix given as a tuple of row
    tuples, memoized after sorting rows (sign tracked)."""
    order = sorted(range(len(rows)), key=lambda i: rows[i])
    sign = 1
    # parity of the sorting permutation
    seen = [False] * len(rows)
    for start in range(len(rows)):
        if seen[start]:
            continue
        length = 0
        idx = start
        while not seen[idx]:
            seen[idx] = True
            idx = order[idx]
            length += 1
        if length % 2 == 0:
            sign = -sign
    key = tuple(rows[i] for i in order)
    for a, b in zip(key, key[1:]):
        if a == b:
            return 0
    value = cache.get(key)
    if value is None:
        value = _det_expand(key)
        cache[key] = value
    return sign * value


def _det_expand(rows) -> int:
    size = len(rows)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    # expand along the sparsest row
    best = min(range(size), key=lambda i: sum(1 for v in rows[i] if v))
    total = 0
    rest = rows[:best] + rows[best + 1:]
    row_sign = -1 if best % 2 else 1
    for col, value in enumerate(rows[best]):
        if not value:
            continue
        minor = tuple(r[:col] + r[col + 1:] for r in rest)
        cof = -1 if col % 2 else 1
        total += row_sign * cof * value * _det_expand(minor)
    return total


def _c_value(tuple4s, n: int, r: int, cache: Dict,
             top_only: bool = False) -> int:
    """Column-subset sum of integer shuffle determinants for a multiset of
    4-tuples.  With top_only (valid when r = n-1) a single column subset
    is used and the result scaled by n."""
    if top_only:
        col_sets = [tuple(range(1, n))]
        scale = n
    else:
        col_sets = list(combinations(range(1, n + 1), r))
        scale = 1
    total = 0
    for J in col_sets:
        a_rows = [_restricted_row(t, J, True) for t in tuple4s]
        b_rows = [_restricted_row(t, J, False) for t in tuple4s]
        if any(not any(a) and not any(b)
               for a, b in zip(a_rows, b_rows)):
            continue
        subtotal = 0
        for mask in range(2 ** r):
            left = tuple(a_rows[s] if mask >> s & 1 else b_rows[s]
                         for s in range(r))
            d1 = _int_det(left, cache)
            if not d1:
                continue
            right = tuple(b_rows[s] if mask >> s & 1 else a_rows[s]
                          for s in range(r))
            subtotal += d1 * _int_det(right, cache)
        total += subtotal
    return scale * total


_MU_TABLES: Dict[Tuple[int, int], List] = {}


def mu_table(n: int, r: int, top_only: bool = False) -> List:
    """Nonzero integer coefficients for the t^(n-r) charpoly term.

    Returns a list of (multiset of instance indices, Fraction value) where
    the value already includes the 1/multiplicity! factors; the weighted
    sum over the list with per-instance weight products gives the
    coefficient.  Cached per (n, r, top_only).
    """
    key = (n, r, top_only)
    cached = _MU_TABLES.get(key)
    if cached is not None:
        return cached
    insts = instances(n)
    det_cache: Dict = {}
    table = []
    for multiset in combinations_with_replacement(range(len(insts)), r):
        counts = {}
        for idx in multiset:
            counts[idx] = counts.get(idx, 0) + 1
        if any(c > 2 for c in counts.values()):
            continue
        tuple4s = [insts[idx].tuple4 for idx in multiset]
        c = _c_value(tuple4s, n, r, det_cache, top_only=top_only)
        if c:
            denom = 1
            for count in counts.values():
                if count == 2:
                    denom *= 2
            table.append((multiset, Fraction(c, denom)))
    _MU_TABLES[key] = table
    return table


def mu_from_weights(n: int, r: int, weight_of, top_only: bool = False):
    """Weighted charpoly coefficient from the cached integer table.

    weight_of maps an Instance to its ring-element weight.
    """
    insts = instances(n)
    total = Fraction(0)
    for multiset, value in mu_table(n, r, top_only=top_only):
        prod = value
        for idx in multiset:
            prod = prod * weight_of(insts[idx])
        total = prod + total
    return total
