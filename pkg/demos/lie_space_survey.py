"""Survey the full space of Lie elements degree by degree.

The solver finds every Lie element in Q[S_n] as the kernel of an exact
linear system.  Comparing its dimension with the span of repeated
brackets of the two-index generators shows the closure stops short at
n = 4: there is a 13th basis element outside it.
"""

from lie_elements.lie_generators import all_kappas, lie_closure, span_rank
from lie_elements.wedge_rep import lie_space


def main():
    for n in (2, 3, 4, 5):
        space = lie_space(n)
        closure = lie_closure(all_kappas(n), n)
        rank = span_rank(closure)
        print("n = %d: solver dim %2d, bracket-closure dim %2d%s"
              % (n, space.dim, rank,
                 "" if space.dim == rank else "  <- strict gap"))

    # exhibit one element of the gap at n = 4: project the solver basis
    # against the closure and print a combination that falls outside
    n = 4
    space = lie_space(n)
    closure = lie_closure(all_kappas(n), n)
    base = span_rank(closure)
    for b in space.basis:
        if span_rank(closure + [b]) > base:
            print()
            print("an element outside the bracket closure at n = 4:")
            print(" ", b)
            break


if __name__ == "__main__":
    main()
