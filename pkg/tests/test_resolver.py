from arcext import get_algebra
from arcext.kl import kl_poly
from arcext.laurent import LaurentPoly
from arcext.resolver import get_resolution, resolve, verify_bounds


def test_smallest_resolution():
    A = get_algebra(1, 1)
    cx = resolve(A, "v^")
    assert cx.terms == [[("v^", 0)], [("^v", 1)]]
    assert cx.is_linear()
    cx = resolve(A, "^v")
    assert cx.terms == [[("^v", 0)]]


def test_resolutions_are_minimal_linear_complexes():
    for m, n in [(2, 2), (3, 2), (2, 3)]:
        A = get_algebra(m, n)
        for lam in A.weights:
            cx = get_resolution(A, lam)
            assert cx.d_squared_violations() == []
            assert cx.homogeneity_violations() == []
            assert cx.is_minimal() and cx.is_linear()
            assert verify_bounds(cx) == []


def test_betti_polynomials_are_kl():
    A = get_algebra(3, 2)
    for lam in A.weights:
        bp = get_resolution(A, lam).betti_polys()
        for mu in A.weights:
            assert bp.get(mu, LaurentPoly()) == kl_poly(lam, mu)


def test_n1_differentials_are_signed_generators():
    A = get_algebra(4, 1)
    for lam in A.weights:
        cx = get_resolution(A, lam)
        for d in cx.diffs:
            for (src, tgt), x in d.items():
                assert len(x) == 1
                (i, c), = x.items()
                assert abs(c) == 1 and A.degree(i) == 1
