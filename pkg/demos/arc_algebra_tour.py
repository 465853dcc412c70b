"""A first look at K_m^n: basis diagrams, products, the Cartan matrix.

Run: python3 demos/arc_algebra_tour.py
"""

from fractions import Fraction

from arcext import get_algebra
from arcext.modules import cell_module, decomposition_matrix, projective_module

A = get_algebra(1, 1)
print(f"K_1^1 has dimension {len(A)}, graded dimension {A.graded_dimension()}")
for i in range(len(A)):
    print(f"  {i}: {A.label(i)}  degree {A.degree(i)}")

# the degree two element is a product of the two degree one elements
a = A.degree_one_generator("v^", "^v")
b = A.degree_one_generator("^v", "v^")
print("degree one elements:", A.label(a), A.label(b))
print("their product:", {A.label(k): str(c) for k, c in A.multiply({a: Fraction(1)}, {b: Fraction(1)}).items()})

A = get_algebra(2, 2)
print(f"\nK_2^2: dimension {len(A)}, weights {A.weights}")
D = decomposition_matrix(A)
width = max(len(str(p)) for p in D.values()) + 2
print("decomposition matrix (rows lambda, columns mu):")
for lam in A.weights:
    print("  " + lam + " " + "".join(str(D[(lam, mu)]).rjust(width) for mu in A.weights))

lam = "v^v^"
P, M = projective_module(A, lam), cell_module(A, lam)
print(f"\nP({lam}) has graded dimension {P.graded_dimension()}")
print(f"M({lam}) has graded dimension {M.graded_dimension()}")
