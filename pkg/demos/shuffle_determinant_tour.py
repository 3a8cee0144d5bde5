"""Tour of the shuffle determinant and its identities.

sdet(A, B) sums det(U)^2 over all 2^n ways of assembling U row by row
from A or B.  The script evaluates it numerically and symbolically,
checks the coefficient-extraction form, and reads off a monomial
coefficient from its two-colored multigraph.
"""

from fractions import Fraction

from lie_elements.exactmath import ExactMatrix, MultiPoly
from lie_elements.sdet import (monomial_coefficient, sdet,
                               sdet_identity_formula, sdet_via_coeff)


def main():
    A = ExactMatrix([[Fraction(1), Fraction(2)],
                     [Fraction(3), Fraction(4)]])
    B = ExactMatrix([[Fraction(0), Fraction(1)],
                     [Fraction(1), Fraction(1)]])
    print("sdet(A, B) =", sdet(A, B))
    print("sdet(B, A) =", sdet(B, A), "(symmetric)")
    print("coefficient form:", sdet_via_coeff(A, B))
    print("against identity:", sdet(A, ExactMatrix.identity(2)),
          "=", sdet_identity_formula(A))

    print()
    n = 2
    As = ExactMatrix([[MultiPoly.variable("a_%d_%d" % (i, j))
                       for j in range(1, n + 1)]
                      for i in range(1, n + 1)])
    Bs = ExactMatrix([[MultiPoly.variable("b_%d_%d" % (i, j))
                       for j in range(1, n + 1)]
                      for i in range(1, n + 1)])
    value = sdet(As, Bs)
    print("symbolic sdet at n = 2 has %d monomials" % len(value.terms))

    # each monomial coefficient is +-2^m where m counts the cycles of the
    # graph with a directed edge i -> j per chosen matrix entry (i, j)
    edges = [(1, 1), (1, 1), (2, 2), (2, 2)]
    result = monomial_coefficient(edges)
    print("monomial a_11 b_11 a_22 b_22: coefficient %d from %d cycles"
          % (result.coefficient, result.cycle_count))


if __name__ == "__main__":
    main()
