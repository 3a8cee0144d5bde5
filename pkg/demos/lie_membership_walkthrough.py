"""Walk through the membership test for Lie elements in Q[S_n].

An element x of the rational group algebra is a Lie element when its
multiplicative action and its derivation action agree on every exterior
power of Q^n.  This script builds the three generator families, runs the
membership test on each, and shows a couple of non-members for contrast.
"""

from lie_elements.group_algebra import GroupAlgebraElement
from lie_elements.lie_generators import eta, kappa, nu
from lie_elements.wedge_rep import alg_matrix, grp_matrix, is_lie


def describe(label, x):
    print("%-12s terms=%s  is_lie=%s" % (label, x, is_lie(x)))


def main():
    n = 4
    print("generators at n = %d" % n)
    describe("kappa_12", kappa(n, 1, 2))
    describe("nu_123", nu(n, 1, 2, 3))
    describe("eta_1234", eta(n, 1, 2, 3, 4))

    print()
    print("non-members for contrast")
    describe("identity", GroupAlgebraElement.one(n))
    describe("(12)", GroupAlgebraElement.from_cycles(n, [(1, 2)]))

    # the mismatch for the identity element shows up on the second
    # exterior power: the multiplicative action is I but the derivation
    # acts on each of the two factors, giving 2I
    x = GroupAlgebraElement.one(n)
    print()
    print("identity element on the second exterior power (diagonals):")
    g = grp_matrix(x, 2)
    a = alg_matrix(x, 2)
    print("  multiplicative action:",
          [str(g.data[i][i]) for i in range(len(g.data))])
    print("  derivation action:    ",
          [str(a.data[i][i]) for i in range(len(a.data))])

    # brackets of members stay members; this is how the closure is built
    y = kappa(n, 1, 2).bracket(nu(n, 1, 3, 4))
    describe("[k12, n134]", y)


if __name__ == "__main__":
    main()
