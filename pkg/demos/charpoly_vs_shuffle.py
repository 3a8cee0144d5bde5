"""Characteristic polynomials of weighted generator sums, two ways.

A weighted sum of the 4-index generators acts on the reflection
representation.  Each coefficient of its characteristic polynomial can
also be computed combinatorially: sum shuffle determinants of restricted
incidence matrices over multisets of generator instances.  The script
does both at n = 4 and prints the agreement, then runs the packaged
verification at n = 5.
"""

from fractions import Fraction

from lie_elements.sdet import instances, mu_from_weights
from lie_elements.verify import element_from_quad_weights, verify_main
from lie_elements.wedge_rep import action_matrix


def main():
    n = 4
    weights = {}
    value = 1
    for inst in instances(n):
        weights[(inst.quad, inst.variant)] = Fraction(value, 2)
        value += 1

    x = element_from_quad_weights(n, weights)
    cp = action_matrix(x, "reflection").charpoly()
    print("n = %d element with %d weighted instances" % (n, len(weights)))
    print("charpoly coefficients (ascending):", [str(c) for c in cp])

    def weight_of(inst):
        return weights[(inst.quad, inst.variant)]

    for r in range(1, n):
        mu = mu_from_weights(n, r, weight_of)
        print("  r = %d: shuffle-determinant value %s, charpoly %s, %s"
              % (r, mu, cp[n - 1 - r],
                 "agree" if mu == cp[n - 1 - r] else "DISAGREE"))

    print()
    report = verify_main(5, seed=2)
    print("packaged check at n = 5:", report.status,
          "(%.0f ms)" % report.elapsed_ms)


if __name__ == "__main__":
    main()
