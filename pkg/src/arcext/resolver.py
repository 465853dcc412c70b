"""Minimal graded projective resolutions of cell modules.

A complex ``P_.`` is stored by its terms ``terms[i] = [(mu, shift), ...]`` and
differentials ``diffs[i]``, the map ``P_{i+1} -> P_i``, as a dict
``{(source summand, target summand): element of e_src K e_tgt}``.
Maps between projectives act by right multiplication, so a vector of
``P_i`` is a dict keyed by ``(summand, algebra basis id)``.
"""

from fractions import Fraction

from .algebra import add_into
from .diagrams import nesting_numbers, weight_length
from .laurent import LaurentPoly
from .linalg import Echelon, canonical_basis, kernel


class ProjComplex:
    def __init__(self, algebra, weight, terms, diffs):
        self.algebra = algebra
        self.weight = weight
        self.terms = terms
        self.diffs = diffs

    def __len__(self):
        return len(self.terms)

    @property
    def length(self):
        return len(self.terms) - 1

    def term(self, i):
        return self.terms[i] if 0 <= i < len(self.terms) else []

    def diff(self, i):
        """The map P_{i+1} -> P_i (empty outside the complex)."""
        return self.diffs[i] if 0 <= i < len(self.diffs) else {}

    def matrix(self, i):
        """d_i as a list of rows indexed by summands of P_i, columns by P_{i+1}."""
        d = self.diff(i)
        src, tgt = self.term(i + 1), self.term(i)
        return [[d.get((c, r), {}) for c in range(len(src))] for r in range(len(tgt))]

    def betti(self):
        """{position: {(mu, shift): multiplicity}}."""
        out = {}
        for i, t in enumerate(self.terms):
            row = {}
            for s in t:
                row[s] = row.get(s, 0) + 1
            out[i] = row
        return out

    def betti_polys(self):
        """{mu: sum_i (multiplicity of P(mu) at position i) q^i}."""
        out = {}
        for i, t in enumerate(self.terms):
            for mu, _ in t:
                out[mu] = out.get(mu, LaurentPoly()) + LaurentPoly.monomial(i)
        return out

    def d_squared_violations(self):
        A = self.algebra
        bad = []
        for i in range(len(self.diffs) - 1):
            d1, d0 = self.diffs[i + 1], self.diffs[i]
            acc = {}
            for (a, b), x in d1.items():
                for (b2, c), y in d0.items():
                    if b2 == b:
                        add_into(acc.setdefault((a, c), {}), A.multiply(x, y))
            bad.extend((i, k) for k, v in acc.items() if v)
        return bad

    def homogeneity_violations(self):
        A = self.algebra
        bad = []
        for i, d in enumerate(self.diffs):
            for (a, b), x in d.items():
                want = self.terms[i + 1][a][1] - self.terms[i][b][1]
                if any(A.degree(j) != want for j in x):
                    bad.append((i, a, b))
        return bad

    def is_minimal(self):
        A = self.algebra
        return all(A.degree(j) > 0 for d in self.diffs for x in d.values() for j in x)

    def is_linear(self):
        return all(s == i for i, t in enumerate(self.terms) for _, s in t)


def _basis_by_piece(A, summands):
    """Basis of a sum of shifted projectives, grouped by (left weight, degree)."""
    pieces = {}
    for k, (mu, s) in enumerate(summands):
        for a in A.weights:
            for j in A.block[(a, mu)]:
                pieces.setdefault((a, A.degree(j) + s), []).append((k, j))
    return pieces


def _apply(A, d, vec):
    """Image of a vector under right multiplication by the matrix ``d``."""
    rows = {}
    for (a, b), x in d.items():
        rows.setdefault(a, []).append((b, x))
    out = {}
    for (k, j), c in vec.items():
        for b, x in rows.get(k, ()):
            for jj, cc in A.multiply({j: Fraction(1)}, x).items():
                key = (b, jj)
                w = out.get(key, 0) + c * cc
                if w:
                    out[key] = w
                else:
                    del out[key]
    return out


def _left_mult(A, b, vec):
    out = {}
    for (k, j), c in vec.items():
        for jj, cc in A.multiply_basis(b, j).items():
            key = (k, jj)
            w = out.get(key, 0) + c * cc
            if w:
                out[key] = w
            else:
                del out[key]
    return out


def _kernel_pieces(A, summands, image_of):
    """Kernel of a left-linear map on each (left weight, degree) piece, in rref."""
    pieces = _basis_by_piece(A, summands)
    out = {}
    for key in sorted(pieces, key=lambda p: (p[1], A.windex[p[0]])):
        basis = pieces[key]
        rels = kernel([image_of(v) for v in basis])
        vecs = []
        for r in rels:
            vecs.append({basis[i]: c for i, c in r.items()})
        if vecs:
            out[key] = canonical_basis(vecs)
    return out


def _generators(A, ker):
    """Minimal generators: in each piece, a complement of K_+ . ker."""
    gens = []
    for key in sorted(ker, key=lambda p: (p[1], A.windex[p[0]])):
        a, t = key
        rad = []
        for (b, t2), vecs in ker.items():
            d = t - t2
            if d <= 0:
                continue
            for x in A.block_of_degree(a, b, d):
                for v in vecs:
                    w = _left_mult(A, x, v)
                    if w:
                        rad.append(w)
        e = Echelon()
        for w in rad:
            e.add(w)
        for v in ker[key]:
            if e.add(v) is None:
                gens.append((a, t, v))
    return gens


def resolve(A, lam, max_length=None):
    terms = [[(lam, 0)]]
    diffs = []

    def eps(vec_basis):
        k, j = vec_basis
        return {j: Fraction(1)} if A.basis[j].weight == lam else {}

    image_of = lambda b: eps(b)
    while True:
        ker = _kernel_pieces(A, terms[-1], image_of)
        if not ker:
            break
        if max_length is not None and len(terms) > max_length:
            raise AssertionError("resolution longer than allowed")
        gens = _generators(A, ker)
        if not gens:
            raise AssertionError("nonzero kernel without generators")
        new_terms = []
        d = {}
        for a, t, v in gens:
            src = len(new_terms)
            new_terms.append((a, t))
            for (k, j), c in v.items():
                ent = d.setdefault((src, k), {})
                ent[j] = ent.get(j, 0) + c
        _check_cover(A, new_terms, d, ker)
        terms.append(new_terms)
        diffs.append(d)
        dd = d
        image_of = lambda b, dd=dd: _apply(A, dd, {b: Fraction(1)})
    return ProjComplex(A, lam, terms, diffs)


def _check_cover(A, summands, d, ker):
    """The new term must map onto the kernel, piece by piece."""
    pieces = _basis_by_piece(A, summands)
    for key, vecs in ker.items():
        imgs = [_apply(A, d, {b: Fraction(1)}) for b in pieces.get(key, [])]
        e = Echelon()
        for w in imgs:
            e.add(w)
        if len(e) != len(vecs) or any(not e.contains(v) for v in vecs):
            raise AssertionError(f"cover does not surject onto kernel piece {key}")


def degree_one_generator(A, lam, mu):
    return A.degree_one_generator(lam, mu)


def verify_bounds(cx):
    """Summands violating l(lam)-i-(n^2-n-2 nes(nu)) <= l(nu) <= l(lam)-i."""
    A = cx.algebra
    n = A.n
    top = weight_length(cx.weight)
    bad = []
    for i, t in enumerate(cx.terms):
        for nu, s in t:
            ln = weight_length(nu)
            nes = sum(nesting_numbers(A.cup[nu]))
            if not (top - i - (n * n - n - 2 * nes) <= ln <= top - i):
                bad.append((i, nu))
    return bad


_res_cache = {}


def get_resolution(A, lam):
    key = (A.m, A.n, lam)
    if key not in _res_cache:
        _res_cache[key] = resolve(A, lam)
    return _res_cache[key]
