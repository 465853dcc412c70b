"""Minimal linear resolutions of cell modules and the KL polynomials they encode.

The multiplicity of P(mu)<j> in homological position j of the resolution of
M(lam) is the coefficient of q^j in p_{lam,mu}(q).
"""

from arcext import get_algebra
from arcext.kl import enumerate_labelings, kl_poly
from arcext.resolver import get_resolution

A = get_algebra(2, 2)
lam = "vv^^"
cx = get_resolution(A, lam)
print(f"resolution of M({lam}):")
for i, term in enumerate(cx.terms):
    print(f"  P_{i} = " + " + ".join(f"P({nu})<{s}>" for nu, s in term))
print("minimal:", cx.is_minimal(), " linear:", cx.is_linear())

print("\nBetti polynomials against labeled cap diagrams:")
for mu, p in sorted(cx.betti_polys().items()):
    print(f"  {mu}: betti {str(p):10s} kl {kl_poly(lam, mu)}")

lam, mu = "vvvv^^", "v^vv^v"
print(f"\np_{{{lam},{mu}}} = {kl_poly(lam, mu)} from {len(enumerate_labelings(lam, mu))} labelings")
