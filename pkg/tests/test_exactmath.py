import random

from fractions import Fraction

import pytest

from lie_elements.exactmath import (DimensionError, ExactMatrix, MultiPoly,
                                    coeff_at, rational)


def rand_matrix(n, rng, lo=-9, hi=9):
    return ExactMatrix([[Fraction(rng.randint(lo, hi)) for _ in range(n)]
                        for _ in range(n)])


class TestRational:
    def test_string_fraction(self):
        assert rational("3/4") == Fraction(3, 4)
        assert rational("-22/7") == Fraction(-22, 7)

    def test_int_passthrough(self):
        assert rational(5) == Fraction(5)

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            rational(0.5)


class TestMultiPoly:
    def test_arithmetic(self):
        x = MultiPoly.variable("x")
        y = MultiPoly.variable("y")
        p = (x + y) * (x - y)
        assert p == x * x - y * y

    def test_scalar_mix(self):
        x = MultiPoly.variable("x")
        assert 2 * x + x == 3 * x
        assert (x + 1) - 1 == x

    def test_pow(self):
        x = MultiPoly.variable("x")
        assert (x + 1) ** 3 == x**3 + 3 * x**2 + 3 * x + 1

    def test_exact_division(self):
        x = MultiPoly.variable("x")
        y = MultiPoly.variable("y")
        num = (x + y) * (x * y - 2)
        assert num / (x + y) == x * y - 2

    def test_inexact_division_raises(self):
        x = MultiPoly.variable("x")
        y = MultiPoly.variable("y")
        with pytest.raises(ValueError):
            (x * x + y) / (x + 1)

    def test_division_random_products(self):
        rng = random.Random(11)
        vars_ = [MultiPoly.variable(v) for v in "abc"]
        for _ in range(25):
            def rand_poly():
                p = MultiPoly.constant(rng.randint(-3, 3))
                for v in vars_:
                    if rng.random() < 0.7:
                        p = p + v * rng.randint(-3, 3)
                if not p:
                    p = MultiPoly.constant(1)
                return p
            f, g = rand_poly(), rand_poly()
            assert (f * g) / g == f

    def test_coeff_at(self):
        x = MultiPoly.variable("x")
        y = MultiPoly.variable("y")
        p = 3 * x * y + 5 * x
        assert p.coeff_at({"x": 1, "y": 1}) == 3
        assert p.coeff_at({"x": 1}) == 5
        assert p.coeff_at({"y": 2}) == 0
        assert coeff_at(Fraction(7), {}) == 7
        assert coeff_at(Fraction(7), {"x": 1}) == 0

    def test_substitute(self):
        x = MultiPoly.variable("x")
        y = MultiPoly.variable("y")
        p = x * x + y
        assert p.substitute({"x": 2, "y": 3}) == 7


class TestExactMatrix:
    def test_det_rational(self):
        m = ExactMatrix([[1, 2], [3, 4]])
        assert m.det() == -2

    def test_det_matches_expansion_random(self):
        rng = random.Random(5)
        from itertools import permutations
        for n in (2, 3, 4):
            m = rand_matrix(n, rng)
            brute = Fraction(0)
            for perm in permutations(range(n)):
                sign = 1
                for i in range(n):
                    for j in range(i + 1, n):
                        if perm[i] > perm[j]:
                            sign = -sign
                prod = Fraction(sign)
                for i in range(n):
                    prod *= m.data[i][perm[i]]
                brute += prod
            assert m.det() == brute

    def test_det_polynomial_bareiss(self):
        x = MultiPoly.variable("x")
        y = MultiPoly.variable("y")
        m = ExactMatrix([[x, y], [y, x]])
        assert m.det() == x * x - y * y

    def test_det_polynomial_vs_rational(self):
        # symbolic determinant evaluated at a point equals the rational one
        rng = random.Random(9)
        n = 3
        vals = {"v%d%d" % (i, j): Fraction(rng.randint(-4, 4))
                for i in range(n) for j in range(n)}
        sym = ExactMatrix([[MultiPoly.variable("v%d%d" % (i, j))
                            for j in range(n)] for i in range(n)])
        num = ExactMatrix([[vals["v%d%d" % (i, j)] for j in range(n)]
                           for i in range(n)])
        evaluated = sym.det().substitute(vals)
        assert evaluated == num.det()

    def test_charpoly_diagonal(self):
        m = ExactMatrix([[2, 0], [0, -3]])
        # det(tI - m) = (t-2)(t+3) = t^2 + t - 6, ascending coefficients
        assert m.charpoly() == [Fraction(-6), Fraction(1), Fraction(1)]

    def test_charpoly_trace_det(self):
        rng = random.Random(17)
        for n in (2, 3, 4):
            m = rand_matrix(n, rng)
            cp = m.charpoly()
            assert cp[n] == 1
            assert cp[n - 1] == -m.trace()
            assert cp[0] == (-1) ** n * m.det()

    def test_rank_nullspace(self):
        m = ExactMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        assert m.rank() == 2
        for vec in m.nullspace():
            assert all(sum(row[j] * vec[j] for j in range(3)) == 0
                       for row in m.data)

    def test_pfaffian_base(self):
        m = ExactMatrix([[0, 1], [-1, 0]])
        assert m.pfaffian() == 1

    def test_pfaffian_squares_to_det(self):
        rng = random.Random(23)
        for n in (2, 4, 6):
            data = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    v = Fraction(rng.randint(-5, 5))
                    data[i][j], data[j][i] = v, -v
            m = ExactMatrix(data)
            assert m.is_skew_symmetric()
            assert m.pfaffian() ** 2 == m.det()

    def test_pfaffian_odd_dimension_rejected(self):
        from lie_elements.exactmath import StructureError
        m = ExactMatrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
        with pytest.raises(StructureError):
            m.pfaffian()

    def test_shape_errors(self):
        with pytest.raises(DimensionError):
            ExactMatrix([[1, 2], [3]])
        with pytest.raises(DimensionError):
            ExactMatrix([[1, 2]]) + ExactMatrix([[1], [2]])

    def test_matmul_identity(self):
        rng = random.Random(2)
        m = rand_matrix(3, rng)
        assert m @ ExactMatrix.identity(3) == m
