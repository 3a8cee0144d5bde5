"""The kappa / nu / eta generator family and its linear structure.

kappa_ij = 1 - (ij)
nu_ijk   = (ijk) - (ikj)
eta_ijkl = (ijkl) + (ilkj) - (ijlk) - (iklj)

nu and eta are iterated commutators of the kappa's; the module also computes
bracket closures and the repeated-commutator family used by the conjecture
reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as index_permutations
from typing import List, Sequence, Tuple

from .exactmath import ExactMatrix
from .group_algebra import GroupAlgebraElement
from .perm import Permutation, all_permutations
from .wedge_rep import ResourceLimitError


@dataclass(frozen=True)
class GeneratorId:
    kind: str  # "kappa" | "nu" | "eta"
    indices: Tuple[int, ...]

    def __post_init__(self):
        expected = {"kappa": 2, "nu": 3, "eta": 4}
        if self.kind not in expected:
            raise ValueError("unknown generator kind %r" % self.kind)
        if len(self.indices) != expected[self.kind]:
            raise ValueError("%s takes %d indices, got %r"
                             % (self.kind, expected[self.kind], self.indices))
        if len(set(self.indices)) != len(self.indices):
            raise ValueError("repeated index in %r" % (self.indices,))


def kappa(n: int, i: int, j: int) -> GroupAlgebraElement:
    return make(GeneratorId("kappa", (i, j)), n)


def nu(n: int, i: int, j: int, k: int) -> GroupAlgebraElement:
    return make(GeneratorId("nu", (i, j, k)), n)


def eta(n: int, i: int, j: int, k: int, l: int) -> GroupAlgebraElement:
    return make(GeneratorId("eta", (i, j, k, l)), n)


def make(gen: GeneratorId, n: int) -> GroupAlgebraElement:
    one = GroupAlgebraElement.one(n)
    cyc = lambda *idx: GroupAlgebraElement.from_cycles(n, [idx])
    if gen.kind == "kappa":
        i, j = gen.indices
        return one - cyc(i, j)
    if gen.kind == "nu":
        i, j, k = gen.indices
        return cyc(i, j, k) - cyc(i, k, j)
    i, j, k, l = gen.indices
    return cyc(i, j, k, l) + cyc(i, l, k, j) - cyc(i, j, l, k) - cyc(i, k, l, j)


# -- linear algebra over coefficient vectors ------------------------------

def element_vector(x: GroupAlgebraElement, perms) -> List[Fraction]:
    return [x.coeff(p) for p in perms]


def span_rank(elements: Sequence[GroupAlgebraElement]) -> int:
    if not elements:
        return 0
    perms = all_permutations(elements[0].n)
    return ExactMatrix([element_vector(x, perms) for x in elements]).rank()


class _Echelon:
    """Incremental reduced echelon basis over permutation coordinates."""

    def __init__(self, n: int):
        self.perms = all_permutations(n)
        self.rows = []    # (pivot index, vector) sorted by pivot

    def reduce(self, vec):
        vec = list(vec)
        for pivot, row in self.rows:
            if vec[pivot]:
                factor = vec[pivot]
                vec = [a - factor * b for a, b in zip(vec, row)]
        return vec

    def insert(self, vec) -> bool:
        """Reduce and insert; True if the vector enlarged the span."""
        vec = self.reduce(vec)
        pivot = next((i for i, v in enumerate(vec) if v), None)
        if pivot is None:
            return False
        inv = Fraction(1) / vec[pivot]
        vec = [v * inv for v in vec]
        for _, row in self.rows:
            if row[pivot]:
                factor = row[pivot]
                row[:] = [a - factor * b for a, b in zip(row, vec)]
        self.rows.append((pivot, vec))
        self.rows.sort(key=lambda item: item[0])
        return True

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def elements(self, n):
        out = []
        for _, row in self.rows:
            terms = {self.perms[i]: c for i, c in enumerate(row) if c}
            out.append(GroupAlgebraElement(n, terms))
        return out


# -- relations and representations ----------------------------------------

def verify_relations(n: int, indices: Tuple[int, int, int, int] = (1, 2, 3, 4)
                     ) -> List[str]:
    """Exhaustively check the symmetry relations of the generator family on
    one 4-index set; returns the list of violated identities (expect [])."""
    if n < 4:
        raise ValueError("relations need n >= 4")
    i, j, k, l = indices
    failures = []

    def check(label, lhs, rhs):
        if lhs != rhs:
            failures.append(label)

    for p, q in index_permutations((i, j), 2):
        check("kappa_%d%d symmetric" % (p, q),
              kappa(n, p, q), kappa(n, q, p))
    for p, q, r in index_permutations((i, j, k), 3):
        check("nu_%d%d%d cyclic" % (p, q, r),
              nu(n, p, q, r), nu(n, q, r, p))
        check("nu_%d%d%d antisymmetric" % (p, q, r),
              nu(n, q, p, r), nu(n, p, q, r).scale(-1))
    for p, q, r, s in index_permutations((i, j, k, l), 4):
        e = eta(n, p, q, r, s)
        check("eta_%d%d%d%d first-pair antisymmetry" % (p, q, r, s),
              eta(n, q, p, r, s), e.scale(-1))
        check("eta_%d%d%d%d last-pair antisymmetry" % (p, q, r, s),
              eta(n, p, q, s, r), e.scale(-1))
        check("eta_%d%d%d%d reversal" % (p, q, r, s),
              eta(n, s, r, q, p), e)
        check("eta_%d%d%d%d half-swap" % (p, q, r, s),
              eta(n, r, s, p, q), e)
        check("eta_%d%d%d%d double-swap" % (p, q, r, s),
              eta(n, q, p, s, r), e)
        check("eta_%d%d%d%d three-term" % (p, q, r, s),
              eta(n, p, q, r, s) + eta(n, p, r, s, q) + eta(n, p, s, q, r),
              GroupAlgebraElement.zero(n))
    return failures


def span_dims(n: int, indices: Tuple[int, int, int, int] = (1, 2, 3, 4)
              ) -> Tuple[int, int, int]:
    """Ranks of the index-permuted spans of kappa, nu, eta on one 4-set.

    Expected (1, 1, 2); also checks that {eta_ijkl, eta_iklj} spans the
    eta space."""
    i, j, k, l = indices
    kappas = [kappa(n, p, q) for p, q in index_permutations((i, j), 2)]
    nus = [nu(n, p, q, r) for p, q, r in index_permutations((i, j, k), 3)]
    etas = [eta(n, p, q, r, s)
            for p, q, r, s in index_permutations((i, j, k, l), 4)]
    dim_h = span_rank(etas)
    basis_rank = span_rank([eta(n, i, j, k, l), eta(n, i, k, l, j)])
    if basis_rank != dim_h:
        raise AssertionError(
            "{eta_ijkl, eta_iklj} does not span the eta space")
    return span_rank(kappas), span_rank(nus), dim_h


def _index_action_matrix(sigma: Permutation, n: int = 4) -> ExactMatrix:
    """2x2 matrix of sigma permuting eta indices, basis
    {eta_1234, eta_1342}."""
    perms = all_permutations(n)
    b1 = element_vector(eta(n, 1, 2, 3, 4), perms)
    b2 = element_vector(eta(n, 1, 3, 4, 2), perms)
    cols = []
    for base in ((1, 2, 3, 4), (1, 3, 4, 2)):
        image = eta(n, *[sigma(t) for t in base])
        vec = element_vector(image, perms)
        # solve c1*b1 + c2*b2 = vec
        system = ExactMatrix(
            [[b1[t], b2[t], vec[t]] for t in range(len(perms))])
        reduced, pivots = system.rref()
        if pivots != [0, 1]:
            raise AssertionError("eta image outside the 2-dim span")
        cols.append((reduced[0][2], reduced[1][2]))
    return ExactMatrix([[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]])


def index_rep_matrices(n: int = 4) -> List[ExactMatrix]:
    """Matrices of the adjacent transpositions (12), (23), (34) acting on
    the 2-dimensional eta span by index relabeling."""
    return [_index_action_matrix(Permutation.from_cycles(4, [(a, a + 1)]), n)
            for a in (1, 2, 3)]


def _invariant_line_form(m: ExactMatrix):
    """Binary quadratic q(x, y) whose roots in P^1 are the invariant lines
    of the 2x2 matrix m: (M v) wedge v for v = (x, y)."""
    a, b = m.data[0]
    c, d = m.data[1]
    # (ax+by, cx+dy) wedge (x, y) = (ax+by)y - (cx+dy)x
    return (-c, a - d, b)  # coefficients of x^2, xy, y^2


def _poly_gcd(p, q):
    """Monic gcd of univariate polynomials given as low-to-high Fraction
    coefficient tuples."""
    def norm(u):
        u = list(u)
        while u and not u[-1]:
            u.pop()
        return u

    p, q = norm(p), norm(q)
    while q:
        # p mod q
        r = p[:]
        while len(r) >= len(q) and any(r):
            if not r[-1]:
                r.pop()
                continue
            factor = r[-1] / q[-1]
            shift = len(r) - len(q)
            for t in range(len(q)):
                r[shift + t] -= factor * q[t]
            r.pop()
        p, q = q, norm(r)
    if p:
        lead = p[-1]
        p = [v / lead for v in p]
    return p


def no_invariant_line(n: int = 4) -> bool:
    """True iff the index-permutation action on the eta span admits no
    common invariant line over the algebraic closure.

    Each 2x2 matrix fixes the line through (x, y) iff the binary quadratic
    (M v) wedge v vanishes; a common line is a common projective root of
    the three quadratics, detected exactly by polynomial gcds over Q."""
    forms = [_invariant_line_form(m) for m in index_rep_matrices(n)]
    # root at infinity (y = 0, the line through (1, 0)): needs x^2 coeff 0
    if all(f[0] == 0 for f in forms):
        return False
    # affine roots: gcd of the dehomogenized quadratics in x (y = 1)
    polys = [(Fraction(f[2]), Fraction(f[1]), Fraction(f[0])) for f in forms]
    g = polys[0]
    for q in polys[1:]:
        g = _poly_gcd(g, q)
    return len(g) <= 1


# -- bracket closure and repeated commutators ------------------------------

DEFAULT_CLOSURE_BOUND = 6


def lie_closure(generators: Sequence[GroupAlgebraElement], n: int,
                max_n: int = DEFAULT_CLOSURE_BOUND
                ) -> List[GroupAlgebraElement]:
    """Basis of the smallest bracket-closed subspace containing the
    generators.  Each round brackets the current basis with the generators
    only; iteration stops when the dimension stabilizes."""
    if n > max_n:
        raise ResourceLimitError(
            "lie_closure at degree %d exceeds the bound %d" % (n, max_n))
    echelon = _Echelon(n)
    frontier = []
    for g in generators:
        if echelon.insert(element_vector(g, echelon.perms)):
            frontier.append(g)
    while frontier:
        new_frontier = []
        for x in frontier:
            for g in generators:
                y = x.bracket(g)
                if not y.is_zero() and echelon.insert(
                        element_vector(y, echelon.perms)):
                    new_frontier.append(y)
        frontier = new_frontier
    return echelon.elements(n)


def all_kappas(n: int) -> List[GroupAlgebraElement]:
    return [kappa(n, i, j) for i in range(1, n + 1)
            for j in range(i + 1, n + 1)]


def repeated_commutator_set(n: int, max_n: int = DEFAULT_CLOSURE_BOUND
                            ) -> List[GroupAlgebraElement]:
    """All (n-1)! left-nested commutators
    [...[kappa_{1 i_1}, kappa_{2 i_2}], ...], kappa_{n-1, i_{n-1}}]
    with s+1 <= i_s <= n."""
    if n > max_n:
        raise ResourceLimitError(
            "repeated commutators at degree %d exceed the bound %d"
            % (n, max_n))
    out = []

    def extend(s, acc):
        if s == n:
            out.append(acc)
            return
        for i_s in range(s + 1, n + 1):
            nxt = kappa(n, s, i_s)
            extend(s + 1, acc.bracket(nxt) if acc is not None else nxt)

    extend(1, None)
    return out
