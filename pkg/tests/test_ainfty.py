import pytest

from arcext.ainfty import AInftyModel, stasheff_check, stasheff_defect, vanishing_scan
from arcext.dg import get_splitting


@pytest.fixture(scope="module")
def model22():
    return AInftyModel(get_splitting(2, 2))


def test_m2_is_yoneda(model22):
    S = model22.S
    n = len(model22.classes)
    for i in range(n):
        for j in range(n):
            if model22.composable((i, j)):
                assert model22.m((i, j)) == S.yoneda(i, j)


def test_m3_nonzero_and_higher_vanish(model22):
    assert len(model22.table(3)) == 15
    for l in (4, 5, 6):
        assert model22.table(l) == {}
    assert vanishing_scan(model22, 6)[0] == 3


def test_m3_degree_bound(model22):
    assert model22.vanishing_violations(3) == []


def test_stasheff(model22):
    assert stasheff_check(model22, 5) == []


def test_n1_is_formal():
    for N in (2, 3):
        model = AInftyModel(get_splitting(N, 1))
        assert vanishing_scan(model, 5)[0] == 2
        for tup in model.chains(3):
            assert stasheff_defect(model, tup) == {}


def test_lambda_rejects_short_tuples(model22):
    with pytest.raises(ValueError):
        model22.lam((0,))
