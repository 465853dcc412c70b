from arcext.diagrams import bruhat_leq, enumerate_weights
from arcext.kl import enumerate_labelings, kl_matrix, kl_poly
from arcext.laurent import LaurentPoly


def test_labeled_cap_example():
    assert kl_poly("vvvv^^", "v^vv^v") == LaurentPoly({2: 1, 4: 1})
    assert len(enumerate_labelings("vvvv^^", "v^vv^v")) == 2


def test_n1_closed_form():
    N = 4
    for j in range(N + 1):
        for s in range(j + 1):
            lam = "v" * j + "^" + "v" * (N - j)
            mu = "v" * s + "^" + "v" * (N - s)
            assert kl_poly(lam, mu) == LaurentPoly.monomial(j - s)


def test_unitriangular():
    for m, n in [(2, 2), (3, 2)]:
        ws = enumerate_weights(m, n)
        for a in ws:
            assert kl_poly(a, a) == 1
            for b in ws:
                if not bruhat_leq(a, b):
                    assert kl_poly(a, b) == 0


def test_nonnegative_coefficients():
    K = kl_matrix(3, 3)
    assert all(c > 0 for p in K.values() for c in p.coeffs.values())
