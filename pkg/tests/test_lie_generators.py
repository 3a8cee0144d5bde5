import random

from itertools import permutations

import pytest

from lie_elements.group_algebra import GroupAlgebraElement
from lie_elements.lie_generators import (GeneratorId, all_kappas, eta, kappa,
                                         lie_closure, nu,
                                         no_invariant_line,
                                         repeated_commutator_set, span_dims,
                                         span_rank, verify_relations)
from lie_elements.perm import Permutation
from lie_elements.wedge_rep import is_lie, lie_space


class TestGenerators:
    def test_kappa_terms(self):
        k = kappa(3, 1, 2)
        assert k.coeff(Permutation.identity(3)) == 1
        assert k.coeff(Permutation.from_cycles(3, [(1, 2)])) == -1
        assert len(k.terms) == 2

    def test_nu_terms(self):
        v = nu(4, 1, 2, 3)
        assert v.coeff(Permutation.from_cycles(4, [(1, 2, 3)])) == 1
        assert v.coeff(Permutation.from_cycles(4, [(1, 3, 2)])) == -1

    def test_eta_terms(self):
        e = eta(4, 1, 2, 3, 4)
        assert e.coeff(Permutation.from_cycles(4, [(1, 2, 3, 4)])) == 1
        assert e.coeff(Permutation.from_cycles(4, [(1, 4, 3, 2)])) == 1
        assert e.coeff(Permutation.from_cycles(4, [(1, 2, 4, 3)])) == -1
        assert e.coeff(Permutation.from_cycles(4, [(1, 3, 4, 2)])) == -1

    def test_generator_id_validation(self):
        with pytest.raises(ValueError):
            GeneratorId("kappa", (1, 1))
        with pytest.raises(ValueError):
            GeneratorId("eta", (1, 2, 3))


class TestBracketIdentities:
    def test_nu_from_kappas(self):
        assert kappa(3, 1, 2).bracket(kappa(3, 2, 3)) == nu(3, 1, 2, 3)

    def test_nu_from_kappas_all_tuples(self):
        n = 5
        for i, j, k in permutations(range(1, n + 1), 3):
            assert kappa(n, i, j).bracket(kappa(n, j, k)) == nu(n, i, j, k)

    def test_eta_from_kappa_nu_all_tuples(self):
        # [kappa_il, nu_ijk] = eta_iljk; equivalently eta_ijkl is the
        # bracket [kappa_ij, nu_ikl]
        n = 5
        for i, j, k, l in permutations(range(1, n + 1), 4):
            lhs = kappa(n, i, l).bracket(nu(n, i, j, k))
            assert lhs == eta(n, i, l, j, k)
            assert kappa(n, i, j).bracket(nu(n, i, k, l)) == eta(n, i, j, k, l)

    def test_bracket_with_self_zero(self):
        assert kappa(4, 1, 2).bracket(kappa(4, 1, 2)).is_zero()


class TestRelations:
    def test_no_violations_n4_n5(self):
        assert verify_relations(4) == []
        assert verify_relations(5, indices=(1, 3, 4, 5)) == []

    def test_three_term_relation_explicit(self):
        total = eta(4, 1, 2, 3, 4) + eta(4, 1, 3, 4, 2) + eta(4, 1, 4, 2, 3)
        assert total.is_zero()

    def test_nu_antisymmetry_explicit(self):
        assert nu(4, 2, 1, 3) == -nu(4, 1, 2, 3)
        assert nu(4, 2, 3, 1) == nu(4, 1, 2, 3)


class TestSpans:
    def test_span_dims(self):
        assert span_dims(4) == (1, 1, 2)

    def test_eta_pair_is_basis(self):
        pair = [eta(4, 1, 2, 3, 4), eta(4, 1, 3, 4, 2)]
        assert span_rank(pair) == 2
        # every index permutation stays inside the 2-dimensional span
        for p in permutations((1, 2, 3, 4)):
            assert span_rank(pair + [eta(4, *p)]) == 2

    def test_no_invariant_line(self):
        assert no_invariant_line()


class TestClosure:
    def test_closure_dims(self):
        assert len(lie_closure(all_kappas(3), 3)) == 4
        assert len(lie_closure(all_kappas(4), 4)) == 12

    def test_closure_members_are_lie(self):
        for x in lie_closure(all_kappas(3), 3):
            assert is_lie(x)

    def test_closure_contains_generator_families(self):
        closure = lie_closure(all_kappas(4), 4)
        rank = span_rank(closure)
        for extra in (nu(4, 1, 2, 3), eta(4, 1, 2, 3, 4), eta(4, 1, 3, 4, 2)):
            assert span_rank(closure + [extra]) == rank

    def test_closure_inside_solver_space(self):
        space = lie_space(4)
        closure = lie_closure(all_kappas(4), 4)
        base = span_rank(space.basis)
        assert span_rank(list(space.basis) + closure) == base


class TestRepeatedCommutators:
    def test_count(self):
        assert len(repeated_commutator_set(4)) == 6
        assert len(repeated_commutator_set(5)) == 24

    def test_members_are_lie(self):
        for x in repeated_commutator_set(4):
            assert is_lie(x)
