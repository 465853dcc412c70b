from fractions import Fraction

from arcext import get_algebra
from arcext.laurent import LaurentPoly
from arcext.modules import (
    bound_violations,
    cartan_bound_violations,
    cell_filtration,
    cell_module,
    decomposition_number,
    graded_jordan_holder,
    projective_module,
    simple_module,
)


def test_projectives_of_smallest_case():
    A = get_algebra(1, 1)
    assert len(projective_module(A, "^v")) == 2
    assert len(projective_module(A, "v^")) == 3


def test_cell_module_degrees():
    A = get_algebra(1, 1)
    M = cell_module(A, "^v")
    assert sorted(M.degrees) == [0, 1]
    assert M.graded_dimension() == LaurentPoly({0: 1, 1: 1})
    assert len(cell_module(A, "v^")) == 1


def test_decomposition_number_example():
    A = get_algebra(1, 1)
    assert decomposition_number(A, "v^", "^v") == LaurentPoly.monomial(1)
    assert decomposition_number(A, "^v", "v^") == 0
    assert decomposition_number(A, "v^", "v^") == 1


def test_modules_are_graded_and_associative():
    A = get_algebra(2, 2)
    triples = [(i, j, k) for i in range(0, len(A), 3) for j in range(0, len(A), 5) for k in range(3)]
    for lam in A.weights:
        for M in (projective_module(A, lam), cell_module(A, lam), simple_module(A, lam)):
            assert M.grading_violations() == []
            assert M.associativity_violations([t for t in triples if t[2] < len(M)]) == []


def test_cell_filtration_matches_projective():
    A = get_algebra(3, 2)
    for lam in A.weights:
        total = LaurentPoly()
        for mu, s in cell_filtration(A, lam):
            total = total + cell_module(A, mu).graded_dimension() * LaurentPoly.monomial(s)
        assert total == projective_module(A, lam).graded_dimension()


def test_jordan_holder_dimension():
    A = get_algebra(2, 2)
    for mu in A.weights:
        assert len(graded_jordan_holder(A, mu)) == len(cell_module(A, mu))


def test_shift():
    A = get_algebra(1, 1)
    M = cell_module(A, "^v").shifted(2)
    assert sorted(M.degrees) == [2, 3]
    e = A.idempotent_id("^v")
    top = M.degrees.index(2)
    assert M.act({e: Fraction(1)}, {top: Fraction(1)}) == {top: 1}


def test_bounds():
    for m, n in [(2, 2), (3, 2), (2, 3), (3, 3)]:
        A = get_algebra(m, n)
        assert bound_violations(A) == []
        assert cartan_bound_violations(A) == []
