"""Graded modules over K_m^n: projectives, cell modules, simples.

A module is given by a labelled graded basis and the left action of every
algebra basis diagram; the action is computed on demand and cached.
"""

from fractions import Fraction

from .algebra import add_into
from .diagrams import arc_degree, bruhat_leq, is_oriented, weight_length
from .laurent import LaurentPoly


class GradedModule:
    def __init__(self, algebra, labels, degrees, act_basis, name=""):
        self.algebra = algebra
        self.labels = list(labels)
        self.degrees = list(degrees)
        self._act_basis = act_basis
        self._cache = {}
        self.name = name

    def __len__(self):
        return len(self.labels)

    def act_basis(self, i, k):
        """Image of module basis vector ``k`` under algebra basis element ``i``."""
        key = (i, k)
        if key not in self._cache:
            self._cache[key] = self._act_basis(i, k)
        return self._cache[key]

    def act(self, x, v):
        out = {}
        for i, a in x.items():
            for k, b in v.items():
                add_into(out, self.act_basis(i, k), a * b)
        return out

    def action_matrix(self, i):
        """Sparse matrix ``{(row, col): c}``; column ``k`` is the image of vector ``k``."""
        mat = {}
        for k in range(len(self)):
            for r, c in self.act_basis(i, k).items():
                mat[(r, k)] = c
        return mat

    def graded_dimension(self):
        p = {}
        for d in self.degrees:
            p[d] = p.get(d, 0) + 1
        return LaurentPoly(p)

    def shifted(self, s):
        """The shift ``M<s>``: degrees move up by ``s``."""
        return GradedModule(self.algebra, self.labels, [d + s for d in self.degrees], self._act_basis, f"{self.name}<{s}>")

    def grading_violations(self):
        A = self.algebra
        bad = []
        for i in range(len(A)):
            for k in range(len(self)):
                for r in self.act_basis(i, k):
                    if self.degrees[r] != self.degrees[k] + A.degree(i):
                        bad.append((i, k, r))
        return bad

    def associativity_violations(self, triples):
        """Check ``(xy).v == x.(y.v)`` on given ``(i, j, k)``."""
        A = self.algebra
        bad = []
        for i, j, k in triples:
            lhs = self.act(A.multiply_basis(i, j), {k: Fraction(1)})
            rhs = self.act({i: Fraction(1)}, self.act_basis(j, k))
            if lhs != rhs:
                bad.append((i, j, k))
        return bad

    def __repr__(self):
        return f"GradedModule({self.name}, dim={len(self)})"


def projective_module(A, lam):
    """P(lam) = K e_lam, basis the diagrams (alpha, nu, lam)."""
    ids = [i for a in A.weights for i in A.block[(a, lam)]]
    pos = {i: k for k, i in enumerate(ids)}

    def act(i, k):
        prod = A.multiply_basis(i, ids[k])
        return {pos[j]: c for j, c in prod.items()}

    return GradedModule(A, [A.label(i) for i in ids], [A.degree(i) for i in ids], act, f"P({lam})")


def cell_module(A, lam):
    """M(lam) as P(lam) modulo the span of (c mu lam-bar), mu != lam."""
    ids = [i for a in A.weights for i in A.block[(a, lam)] if A.basis[i].weight == lam]
    pos = {i: k for k, i in enumerate(ids)}

    def act(i, k):
        out = {}
        for j, c in A.multiply_basis(i, ids[k]).items():
            if j in pos:
                out[pos[j]] = c
            elif A.basis[j].weight == lam:
                raise AssertionError("cell quotient is not stable under the action")
        return out

    return GradedModule(A, [A.label(i) for i in ids], [A.degree(i) for i in ids], act, f"M({lam})")


def simple_module(A, lam):
    """L(lam), the degree-zero top of M(lam)."""
    i = A.idempotent_id(lam)

    def act(j, k):
        return {0: Fraction(1)} if j == i else {}

    return GradedModule(A, [A.label(i)], [0], act, f"L({lam})")


def decomposition_number(A, lam, mu):
    cup = A.cup[lam]
    if not is_oriented(cup, mu):
        return LaurentPoly()
    return LaurentPoly.monomial(arc_degree(cup, mu))


def decomposition_matrix(A):
    return {(a, b): decomposition_number(A, a, b) for a in A.weights for b in A.weights}


def product_d_dt(A):
    """(D D^T)_{lam,mu} = sum_nu d_{lam,nu} d_{mu,nu}, to compare with the Cartan matrix."""
    D = decomposition_matrix(A)
    out = {}
    for a in A.weights:
        for b in A.weights:
            p = LaurentPoly()
            for v in A.weights:
                p = p + D[(a, v)] * D[(b, v)]
            out[(a, b)] = p
    return out


def cell_filtration(A, lam):
    """Subquotients M(mu)<deg(mu lam-bar)> of P(lam), top layer first."""
    cap = A.cap[lam]
    layers = [(mu, arc_degree(cap, mu)) for mu in A.weights if is_oriented(cap, mu)]
    layers.sort(key=lambda t: (weight_length(t[0]), A.windex[t[0]]))
    return layers


def graded_jordan_holder(A, mu):
    """Multiset of (lam, j) with L(lam)<j> a composition factor of M(mu)."""
    out = []
    for lam in A.weights:
        d = decomposition_number(A, lam, mu)
        for j, c in d.coeffs.items():
            out.extend([(lam, j)] * c)
    return out


def nesting_sum(A, lam):
    from .diagrams import nesting_numbers

    return sum(nesting_numbers(A.cup[lam]))


def bound_violations(A):
    """Pairs with d_{lam,mu} != 0 that break 0 <= l(lam)-l(mu) <= n + 2 sum nes <= n^2."""
    n = A.n
    bad = []
    for lam in A.weights:
        nes = nesting_sum(A, lam)
        for mu in A.weights:
            if not decomposition_number(A, lam, mu):
                continue
            diff = weight_length(lam) - weight_length(mu)
            if not (0 <= diff <= n + 2 * nes <= n * n) or not bruhat_leq(lam, mu):
                bad.append((lam, mu))
    return bad


def cartan_bound_violations(A):
    """Pairs with c_{lam,mu} != 0 but l(lam) - l(mu) > n + 2 sum nes(lam)."""
    bad = []
    for lam in A.weights:
        cap = A.n + 2 * nesting_sum(A, lam)
        for mu in A.weights:
            if A.cartan_entry(lam, mu) and weight_length(lam) - weight_length(mu) > cap:
                bad.append((lam, mu))
    return bad
