from fractions import Fraction
import random

import pytest

from arcext.dg import DGAlgebra, HomElement, ext_table, get_splitting
from arcext.diagrams import weight_length


def _random_element(dg, rng, lam, mu, key=None):
    keys = sorted(dg.blocks(lam, mu))
    if not keys:
        return None
    r, t = key or rng.choice(keys)
    basis = dg.block(lam, mu, r, t)
    data = {k: Fraction(rng.randint(-3, 3)) for k in rng.sample(basis, min(4, len(basis)))}
    return HomElement(lam, mu, r, data, t)


@pytest.fixture(scope="module")
def dg22():
    return DGAlgebra(2, 2)


def test_d_squared_and_leibniz(dg22):
    rng = random.Random(7)
    ws = dg22.weights
    for _ in range(150):
        a, b, c = (rng.choice(ws) for _ in range(3))
        F = _random_element(dg22, rng, a, b)
        G = _random_element(dg22, rng, b, c)
        if F is None or G is None:
            continue
        assert not dg22.d(dg22.d(F))
        lhs = dg22.d(dg22.compose(F, G))
        rhs = dg22.compose(dg22.d(F), G) + dg22.compose(F, dg22.d(G)).scale((-1) ** F.r)
        assert lhs == rhs


def test_identity_is_a_unit_cocycle(dg22):
    rng = random.Random(3)
    for lam in dg22.weights:
        e = dg22.identity(lam)
        assert not dg22.d(e)
        for mu in dg22.weights:
            F = _random_element(dg22, rng, lam, mu)
            if F is not None:
                assert dg22.compose(e, F) == F
                assert dg22.compose(F, dg22.identity(mu)) == F


def test_ext_of_smallest_case():
    table = ext_table(DGAlgebra(1, 1))
    assert table == {("^v", "^v", 0): 1, ("v^", "^v", 0): 1, ("v^", "^v", 1): 1, ("v^", "v^", 0): 1}


def test_ext_vanishes_above_length_difference():
    for m, n in [(2, 2), (3, 2)]:
        for (lam, mu, k) in ext_table(DGAlgebra(m, n)):
            assert k <= weight_length(lam) - weight_length(mu)


def test_ext_independent_of_weight_order():
    dg = DGAlgebra(2, 2)
    before = ext_table(dg)
    dg.weights = list(reversed(dg.weights))
    assert ext_table(dg) == before


def test_splitting_homotopy_identity():
    S = get_splitting(3, 2)
    dg = S.dg
    rng = random.Random(11)
    for _ in range(100):
        lam, mu = rng.choice(dg.weights), rng.choice(dg.weights)
        F = _random_element(dg, rng, lam, mu)
        if F is None:
            continue
        assert (F - S.Pi(F)) == dg.d(S.Q(F)) + S.Q(dg.d(F))


def test_class_representatives_are_cocycles():
    S = get_splitting(2, 2)
    for lam, mu, r, t, k, rep in S.classes():
        assert not S.dg.d(rep)
        assert S.to_classes(rep) == {S.class_index(lam, mu, r, t, k): 1}


def test_yoneda_is_associative():
    S = get_splitting(2, 2)
    cl = S.classes()
    n = len(cl)

    def mult(x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in S.yoneda(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    rng = random.Random(5)
    for _ in range(200):
        i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        x, y, z = {i: 1}, {j: 1}, {k: 1}
        assert mult(mult(x, y), z) == mult(x, mult(y, z))
