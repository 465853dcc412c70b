from fractions import Fraction

from hypothesis import given, strategies as st

from arcext.laurent import LaurentPoly
from arcext.linalg import Coordinates, Echelon, axpy, canonical_basis, independent_subset, kernel, rank
import pytest

vectors = st.lists(
    st.dictionaries(st.integers(0, 5), st.integers(-3, 3).filter(bool).map(Fraction), max_size=4),
    max_size=7,
)


def _apply(images, x):
    out = {}
    for k, c in x.items():
        axpy(out, c, images[k])
    return out


@given(vectors)
def test_rank_nullity(images):
    ker = kernel(images)
    assert rank(images) + len(ker) == len(images)
    for v in ker:
        assert _apply(images, v) == {}
    assert rank(ker) == len(ker)


@given(vectors)
def test_canonical_basis_spans(vs):
    basis = canonical_basis(vs)
    e = Echelon()
    for b in basis:
        e.add(b)
    assert all(e.contains(v) for v in vs)
    assert len(basis) == rank(vs)


def test_independent_subset_modulo():
    base = [{0: Fraction(1)}]
    cands = [{0: Fraction(2)}, {1: Fraction(1)}, {0: Fraction(1), 1: Fraction(1)}, {2: Fraction(1)}]
    assert independent_subset(base, cands) == [1, 3]


def test_coordinates():
    co = Coordinates([{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(1)}])
    assert co({0: Fraction(2), 1: Fraction(5)}) == {0: 2, 1: 3}
    with pytest.raises(ValueError):
        co({2: Fraction(1)})


def test_laurent_arithmetic_and_printing():
    q = LaurentPoly.monomial(1)
    p = (q + 1) * (q - 1)
    assert p == LaurentPoly({2: 1, 0: -1})
    assert str(LaurentPoly({2: 1, 4: 1})) == "q^2+q^4"
    assert LaurentPoly.parse("q^2+q^4") == LaurentPoly({2: 1, 4: 1})
    assert LaurentPoly.parse(str(LaurentPoly({-1: 3, 0: -2}))) == LaurentPoly({-1: 3, 0: -2})
    assert not LaurentPoly()
