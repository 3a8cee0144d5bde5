"""Exact arithmetic kernels: rationals, sparse multivariate polynomials and
dense matrices over either, with determinant / charpoly / Pfaffian / nullspace.

No floating point anywhere; every operation is exact over Q or Q[w, x, ...].
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Union


# The scalar field.  Python's Fraction already keeps values reduced with a
# positive denominator, which is exactly the contract we need.
Rational = Fraction

Scalar = Union[int, Fraction, "MultiPoly"]


def rational(value) -> Fraction:
    """Coerce an int, Fraction or string like '3/4' to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError("cannot build a rational from %r" % (value,))


def _as_coeff(value):
    if isinstance(value, MultiPoly):
        return value
    return rational(value)


class MultiPoly:
    """Sparse multivariate polynomial with Fraction coefficients.

    A monomial is stored as a sorted tuple of (variable-name, exponent) pairs
    with positive exponents; the constant monomial is the empty tuple.  Zero
    coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = rational(coeff)
                if coeff:
                    key = tuple(sorted((v, e) for v, e in mono if e))
                    clean[key] = clean.get(key, Fraction(0)) + coeff
                    if not clean[key]:
                        del clean[key]
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, value) -> "MultiPoly":
        return cls({(): rational(value)})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls({((name, 1),): Fraction(1)})

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self.terms)

    def variables(self):
        seen = set()
        for mono in self.terms:
            for v, _ in mono:
                seen.add(v)
        return sorted(seen)

    # -- arithmetic ------------------------------------------------------

    def _combine(self, other, sign):
        other = _poly(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = terms.get(mono, Fraction(0)) + sign * coeff
            if new:
                terms[mono] = new
            else:
                terms.pop(mono, None)
        result = MultiPoly.__new__(MultiPoly)
        result.terms = terms
        return result

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return _poly(other)._combine(self, -1)

    def __neg__(self):
        result = MultiPoly.__new__(MultiPoly)
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = rational(other)
            if not other:
                return MultiPoly()
            result = MultiPoly.__new__(MultiPoly)
            result.terms = {m: c * other for m, c in self.terms.items()}
            return result
        other = _poly(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                new = terms.get(mono, Fraction(0)) + c1 * c2
                if new:
                    terms[mono] = new
                else:
                    del terms[mono]
        result = MultiPoly.__new__(MultiPoly)
        result.terms = terms
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        """Exact division; raises ValueError if the division is not exact."""
        if isinstance(other, (int, Fraction)):
            other = rational(other)
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (Fraction(1) / other)
        other = _poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_constant():
            return self * (Fraction(1) / other.constant_value())
        quotient = {}
        rem = self
        lead_mono, lead_coeff = other._leading_term()
        while not rem.is_zero():
            rmono, rcoeff = rem._leading_term()
            qmono = _mono_div(rmono, lead_mono)
            if qmono is None:
                raise ValueError("inexact polynomial division")
            qcoeff = rcoeff / lead_coeff
            quotient[qmono] = quotient.get(qmono, Fraction(0)) + qcoeff
            rem = rem - MultiPoly({qmono: qcoeff}) * other
        return MultiPoly(quotient)

    def _leading_term(self):
        # Graded lexicographic; purely an internal canonical choice.
        mono = max(self.terms, key=_mono_order_key)
        return mono, self.terms[mono]

    # -- queries ---------------------------------------------------------

    def coeff_at(self, monomial) -> Fraction:
        """Coefficient of exactly the given monomial ({var: exponent})."""
        key = tuple(sorted((v, e) for v, e in monomial.items() if e))
        return self.terms.get(key, Fraction(0))

    def substitute(self, values: dict):
        """Evaluate some variables at Fraction values; returns MultiPoly."""
        result = MultiPoly()
        for mono, coeff in self.terms.items():
            factor = coeff
            rest = []
            for v, e in mono:
                if v in values:
                    factor *= rational(values[v]) ** e
                else:
                    rest.append((v, e))
            result = result + MultiPoly({tuple(rest): factor})
        return result

    # -- comparisons / misc ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "MultiPoly(%s)" % str(self)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=_mono_order_key, reverse=True):
            coeff = self.terms[mono]
            body = "*".join(
                v if e == 1 else "%s^%d" % (v, e) for v, e in mono
            )
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (coeff, body))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _poly(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.constant(value)


def _mono_mul(m1, m2):
    merged = dict(m1)
    for v, e in m2:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def _mono_div(m1, m2):
    merged = dict(m1)
    for v, e in m2:
        new = merged.get(v, 0) - e
        if new < 0:
            return None
        if new:
            merged[v] = new
        else:
            merged.pop(v, None)
    return tuple(sorted(merged.items()))


def _mono_cmp(m1, m2):
    # graded lexicographic: higher total degree wins; ties broken by the
    # first (alphabetically) variable with differing exponents, larger
    # exponent first.  This order is compatible with multiplication, which
    # the exact-division loop requires.
    d1 = sum(e for _, e in m1)
    d2 = sum(e for _, e in m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    e1, e2 = dict(m1), dict(m2)
    for v in sorted(set(e1) | set(e2)):
        a, b = e1.get(v, 0), e2.get(v, 0)
        if a != b:
            return 1 if a > b else -1
    return 0


_mono_order_key = cmp_to_key(_mono_cmp)


def coeff_at(p, monomial) -> Fraction:
    """Coefficient of exactly `monomial` in p; 0 for absent monomials and
    for rational constants with a nonempty monomial."""
    if isinstance(p, MultiPoly):
        return p.coeff_at(monomial)
    clean = {v: e for v, e in monomial.items() if e}
    if clean:
        return Fraction(0)
    return rational(p)


class DimensionError(ValueError):
    """Matrix shapes do not admit the requested operation."""


class StructureError(ValueError):
    """Matrix lacks required structure (e.g. not skew-symmetric)."""


class ExactMatrix:
    """Dense matrix over Fraction or MultiPoly entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable[Scalar]]):
        self.data = [[_as_coeff(v) for v in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise DimensionError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def copy(self) -> "ExactMatrix":
        return ExactMatrix([row[:] for row in self.data])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self.data[i][j] for i in range(self.rows)]
                            for j in range(self.cols)])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _is_rational(self) -> bool:
        return all(isinstance(v, Fraction) for row in self.data for v in row)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in addition")
        return ExactMatrix([[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in subtraction")
        return ExactMatrix([[a - b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        return ExactMatrix([[-v for v in row] for row in self.data])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionError("shape mismatch in product")
        tdata = other.data
        out = []
        for i in range(self.rows):
            row = []
            srow = self.data[i]
            for j in range(other.cols):
                acc = srow[0] * tdata[0][j]
                for k in range(1, self.cols):
                    acc = acc + srow[k] * tdata[k][j]
                row.append(acc)
            out.append(row)
        return ExactMatrix(out)

    def scale(self, factor) -> "ExactMatrix":
        return ExactMatrix([[v * factor for v in row] for row in self.data])

    def apply(self, vector):
        if len(vector) != self.cols:
            raise DimensionError("vector length mismatch")
        return [sum((self.data[i][j] * vector[j] for j in range(self.cols)),
                    Fraction(0)) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for r1, r2 in zip(self.data, other.data)
            for a, b in zip(r1, r2))

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.data))

    def __repr__(self):
        return "ExactMatrix(%r)" % (
            [[str(v) for v in row] for row in self.data],)

    def submatrix(self, row_idx, col_idx) -> "ExactMatrix":
        return ExactMatrix([[self.data[i][j] for j in col_idx]
                            for i in row_idx])

    # -- linear algebra kernels ------------------------------------------

    def det(self):
        """Exact determinant.  Gaussian elimination over rationals,
        fraction-free Bareiss when entries are polynomials."""
        if not self.is_square():
            raise DimensionError("determinant of a non-square matrix")
        if self.rows == 0:
            return Fraction(1)
        if self._is_rational():
            return self._det_gauss()
        return self._det_bareiss()

    def _det_gauss(self):
        n = self.rows
        m = [row[:] for row in self.data]
        det = Fraction(1)
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if m[r][col]:
                    pivot = r
                    break
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            pv = m[col][col]
            det *= pv
            inv = Fraction(1) / pv
            for r in range(col + 1, n):
                if m[r][col]:
                    factor = m[r][col] * inv
                    m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
        return det

    def _det_bareiss(self):
        n = self.rows
        m = [[_poly(v) if not isinstance(v, MultiPoly) else v for v in row]
             for row in self.data]
        sign = 1
        prev = MultiPoly.constant(1)
        for col in range(n - 1):
            pivot = None
            for r in range(col, n):
                if not m[r][col].is_zero():
                    pivot = r
                    break
            if pivot is None:
                return MultiPoly()
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                sign = -sign
            pv = m[col][col]
            for r in range(col + 1, n):
                for c in range(col + 1, n):
                    m[r][c] = (m[r][c] * pv - m[r][col] * m[col][c]) / prev
                m[r][col] = MultiPoly()
            prev = pv
        result = m[n - 1][n - 1]
        return result if sign == 1 else -result

    def rref(self):
        """Reduced row echelon form (over rationals).

        Returns (matrix-as-lists, pivot column list)."""
        m = [row[:] for row in self.data]
        pivots = []
        r = 0
        for col in range(self.cols):
            pivot = None
            for i in range(r, self.rows):
                if m[i][col]:
                    pivot = i
                    break
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = Fraction(1) / m[r][col]
            m[r] = [v * inv for v in m[r]]
            for i in range(self.rows):
                if i != r and m[i][col]:
                    factor = m[i][col]
                    m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
            pivots.append(col)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        if self._is_rational():
            return len(self.rref()[1])
        raise StructureError("rank is implemented over rationals only")

    def nullspace(self):
        """Exact basis of the right kernel; empty iff full column rank."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.cols
            vec[f] = Fraction(1)
            for r, pcol in enumerate(pivots):
                vec[pcol] = -reduced[r][f]
            basis.append(vec)
        return basis

    def trace(self):
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        acc = Fraction(0)
        for i in range(self.rows):
            acc = acc + self.data[i][i]
        return acc

    def charpoly(self):
        """Coefficients c_0..c_n of det(tI - M), monic (c_n = 1), by the
        Faddeev-LeVerrier recurrence.  Rational entries only."""
        if not self.is_square():
            raise DimensionError("charpoly of a non-square matrix")
        if not self._is_rational():
            raise StructureError("charpoly requires rational entries")
        n = self.rows
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        mk = self.copy()
        for k in range(1, n + 1):
            ck = -mk.trace() / k
            coeffs[n - k] = ck
            if k < n:
                for i in range(n):
                    mk.data[i][i] = mk.data[i][i] + ck
                mk = self @ mk
        return coeffs

    def is_skew_symmetric(self) -> bool:
        if not self.is_square():
            return False
        return all(self.data[i][j] == -self.data[j][i]
                   for i in range(self.rows) for j in range(i, self.cols))

    def pfaffian(self):
        """Pfaffian by recursive first-row expansion.

        Sign convention: Pf [[0,1],[-1,0]] = 1."""
        if not self.is_square() or self.rows % 2:
            raise StructureError("Pfaffian needs an even-dimensional matrix")
        if not self.is_skew_symmetric():
            raise StructureError("Pfaffian needs a skew-symmetric matrix")
        return self._pf(tuple(range(self.rows)))

    def _pf(self, idx):
        if not idx:
            return Fraction(1)
        first = idx[0]
        rest = idx[1:]
        acc = None
        for t, j in enumerate(rest):
            entry = self.data[first][j]
            if entry == 0:
                continue
            sub = rest[:t] + rest[t + 1:]
            term = entry * self._pf(sub)
            if t % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            return Fraction(0)
        return acc


def nullspace(matrix: ExactMatrix):
    return matrix.nullspace()


def det(matrix: ExactMatrix):
    return matrix.det()


def charpoly(matrix: ExactMatrix):
    return matrix.charpoly()


def pfaffian(matrix: ExactMatrix):
    return matrix.pfaffian()
