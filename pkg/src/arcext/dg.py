"""The dg algebra hom(P_., P_.) of the cell resolutions and its cohomology.

A homogeneous element of cohomological degree ``r`` from ``lam`` to ``mu``
has components ``F_p : P_p(lam) -> P_{p-r}(mu)`` (homological positions), and
is stored as a dict ``{(p, a, b, j): c}``: the entry from summand ``a`` of
``P_p(lam)`` to summand ``b`` of ``P_{p-r}(mu)`` has coefficient ``c`` on the
algebra basis diagram ``j``.  Composition is left to right, ``(F.G)_p =
F_p G_{p-r}``, and the differential is the graded commutator

    d(F) = d_lam F - (-1)^r F d_mu.

All resolutions here are linear, so an entry ``j`` in cohomological degree
``r`` has internal degree ``t = deg(j) - r``; blocks are keyed by ``(r, t)``.
"""

from fractions import Fraction

from .algebra import get_algebra
from .diagrams import weight_length
from .linalg import Coordinates, axpy, canonical_basis, independent_subset, kernel
from .resolver import get_resolution


class HomElement:
    __slots__ = ("source", "target", "r", "t", "data")

    def __init__(self, source, target, r, data=None, t=None):
        self.source = source
        self.target = target
        self.r = r
        self.t = t
        self.data = {k: v for k, v in (data or {}).items() if v}

    def __bool__(self):
        return bool(self.data)

    def __eq__(self, other):
        if not isinstance(other, HomElement):
            return NotImplemented
        if not self.data and not other.data:
            return True
        return (self.source, self.target, self.r, self.data) == (other.source, other.target, other.r, other.data)

    def __add__(self, other):
        if not other.data:
            return self
        if not self.data:
            return other
        self._check_same(other)
        return HomElement(self.source, self.target, self.r, axpy(dict(self.data), 1, other.data), self.t)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return HomElement(self.source, self.target, self.r, {}, self.t)
        return HomElement(self.source, self.target, self.r, {k: c * v for k, v in self.data.items()}, self.t)

    def _check_same(self, other):
        if (self.source, self.target, self.r) != (other.source, other.target, other.r):
            raise ValueError("adding elements of different hom spaces")

    def __repr__(self):
        return f"HomElement({self.source}->{self.target}, r={self.r}, t={self.t}, {len(self.data)} terms)"


class DGAlgebra:
    def __init__(self, m, n):
        self.m, self.n = m, n
        self.A = get_algebra(m, n)
        self.weights = self.A.weights
        self.res = {lam: get_resolution(self.A, lam) for lam in self.weights}
        self._blocks = {}
        # d_lam arranged for fast lookup: position p -> target summand -> [(source summand, element)]
        self._into = {}
        self._outof = {}
        for lam, cx in self.res.items():
            into, outof = {}, {}
            for i, d in enumerate(cx.diffs):
                for (a, b), x in d.items():
                    into.setdefault((i, b), []).append((a, x))
                    outof.setdefault((i + 1, a), []).append((b, x))
            self._into[lam] = into
            self._outof[lam] = outof

    def blocks(self, lam, mu):
        """{(r, t): sorted basis keys} for hom(P_.(lam), P_.(mu))."""
        key = (lam, mu)
        if key not in self._blocks:
            A = self.A
            P, Q = self.res[lam].terms, self.res[mu].terms
            out = {}
            for p, row in enumerate(P):
                for q, col in enumerate(Q):
                    r = p - q
                    for a, (nu, _) in enumerate(row):
                        for b, (nu2, _) in enumerate(col):
                            for j in A.block[(nu, nu2)]:
                                out.setdefault((r, A.degree(j) - r), []).append((p, a, b, j))
            for v in out.values():
                v.sort()
            self._blocks[key] = out
        return self._blocks[key]

    def block(self, lam, mu, r, t):
        return self.blocks(lam, mu).get((r, t), [])

    def hom_dimension(self, lam, mu, r):
        return sum(len(v) for (rr, _), v in self.blocks(lam, mu).items() if rr == r)

    def identity(self, lam):
        data = {}
        for p, row in enumerate(self.res[lam].terms):
            for a, (nu, _) in enumerate(row):
                data[(p, a, a, self.A.idempotent_id(nu))] = Fraction(1)
        return HomElement(lam, lam, 0, data, 0)

    def d(self, F):
        """Differential; raises the cohomological degree by one."""
        A = self.A
        out = {}
        into = self._into[F.source]
        outof = self._outof[F.target]
        sign = -1 if F.r % 2 == 0 else 1
        for (p, a, b, j), c in F.data.items():
            # (d_lam F)_{p+1}: P_{p+1} -> P_p -> P_{p-r}
            for a2, x in into.get((p, a), ()):
                for i, xc in x.items():
                    for k, v in A.multiply_basis(i, j).items():
                        key = (p + 1, a2, b, k)
                        w = out.get(key, 0) + c * xc * v
                        if w:
                            out[key] = w
                        else:
                            del out[key]
            # -(-1)^r (F d_mu)_p: P_p -> P_{p-r} -> P_{p-r-1}
            for b2, y in outof.get((p - F.r, b), ()):
                for i, yc in y.items():
                    for k, v in A.multiply_basis(j, i).items():
                        key = (p, a, b2, k)
                        w = out.get(key, 0) + sign * c * yc * v
                        if w:
                            out[key] = w
                        else:
                            del out[key]
        return HomElement(F.source, F.target, F.r + 1, out, F.t)

    def compose(self, F, G):
        """``F`` followed by ``G``; zero when the middle weights differ."""
        t = None if F.t is None or G.t is None else F.t + G.t
        if F.target != G.source or not F.data or not G.data:
            return HomElement(F.source, G.target, F.r + G.r, {}, t)
        A = self.A
        by_src = {}
        for (p, b, c, k), v in G.data.items():
            by_src.setdefault((p, b), []).append((c, k, v))
        out = {}
        for (p, a, b, j), u in F.data.items():
            for c, k, v in by_src.get((p - F.r, b), ()):
                for i, w in A.multiply_basis(j, k).items():
                    key = (p, a, c, i)
                    z = out.get(key, 0) + u * v * w
                    if z:
                        out[key] = z
                    else:
                        del out[key]
        return HomElement(F.source, G.target, F.r + G.r, out, t)

    def internal_degree(self, F):
        """The internal degree, or None if ``F`` is not homogeneous."""
        ts = {self.A.degree(j) - F.r for (_, _, _, j) in F.data}
        return ts.pop() if len(ts) == 1 else None

    def vanishing_violations(self):
        """Nonzero hom^k(P(lam), P(mu)) with l(lam) > l(mu) + n^2 + k."""
        bad = []
        n2 = self.n * self.n
        for lam in self.weights:
            for mu in self.weights:
                for (r, t), v in self.blocks(lam, mu).items():
                    if v and weight_length(lam) > weight_length(mu) + n2 + r:
                        bad.append((lam, mu, r))
        return sorted(set(bad))


class BlockSplitting:
    """A^r_t = B + H + L for one (lam, mu, r, t) block."""

    def __init__(self, basis, Z, B, H, L, B_pre):
        self.basis = basis
        self.Z = Z
        self.B = B
        self.H = H
        self.L = L
        # D(B_pre[i]) = B[i]; B_pre spans L^{r-1}
        self.B_pre = B_pre
        self.coords = Coordinates(B + H + L)
        if len(B) + len(H) + len(L) != len(basis):
            raise AssertionError("splitting does not span the block")


class Splitting:
    """Chosen cohomology representatives, projection Pi and homotopy Q."""

    def __init__(self, dg, override=True):
        self.dg = dg
        self._blocks = {}
        self._images = {}
        self.override = override and dg.n == 1
        self._classes = None

    def _vec(self, F):
        return F.data

    def _D_images(self, lam, mu, r, t):
        key = (lam, mu, r, t)
        if key not in self._images:
            basis = self.dg.block(lam, mu, r, t)
            self._images[key] = [self.dg.d(HomElement(lam, mu, r, {k: Fraction(1)}, t)).data for k in basis]
        return self._images[key]

    def get(self, lam, mu, r, t):
        key = (lam, mu, r, t)
        if key in self._blocks:
            return self._blocks[key]
        basis = self.dg.block(lam, mu, r, t)
        imgs = self._D_images(lam, mu, r, t)
        Z = canonical_basis([{basis[i]: c for i, c in rel.items()} for rel in kernel(imgs)])
        units = [{k: Fraction(1)} for k in basis]
        L = [units[i] for i in independent_subset(Z, units)]
        if self.dg.block(lam, mu, r - 1, t):
            prev = self.get(lam, mu, r - 1, t)
            B_pre = prev.L
            B = [self.dg.d(HomElement(lam, mu, r - 1, v, t)).data for v in B_pre]
        else:
            B_pre, B = [], []
        H = None
        if self.override:
            H = self._n1_override(lam, mu, r, t, Z, B)
        if H is None:
            H = [Z[i] for i in independent_subset(B, Z)]
        sp = BlockSplitting(basis, Z, B, H, L, B_pre)
        self._blocks[key] = sp
        return sp

    def _n1_override(self, lam, mu, r, t, Z, B):
        j, l = lam.index("^"), mu.index("^")
        if r == j - l and t == l - j and j >= l:
            rep = n1_identity_map(self.dg, lam, mu)
        elif r == j - l - 1 and t == l - j + 2 and j > l:
            rep = n1_f_map(self.dg, lam, mu)
        else:
            return None
        if self.dg.d(rep):
            raise AssertionError("prescribed representative is not a cocycle")
        if len(Z) - len(B) != 1 or independent_subset(B, [rep.data]) != [0]:
            raise AssertionError("prescribed representative does not span the cohomology")
        return [rep.data]

    def Pi_coords(self, F):
        """Coordinates of Pi(F) in the H basis of F's block."""
        if not F.data:
            return {}
        t = F.t if F.t is not None else self.dg.internal_degree(F)
        sp = self.get(F.source, F.target, F.r, t)
        c = sp.coords(F.data, check=False)
        nb, nh = len(sp.B), len(sp.H)
        return {i - nb: v for i, v in c.items() if nb <= i < nb + nh}

    def Pi(self, F):
        t = F.t if F.t is not None else self.dg.internal_degree(F)
        out = {}
        if F.data:
            sp = self.get(F.source, F.target, F.r, t)
            for i, v in self.Pi_coords(F).items():
                axpy(out, v, sp.H[i])
        return HomElement(F.source, F.target, F.r, out, t)

    def Q(self, F):
        t = F.t if F.t is not None else self.dg.internal_degree(F)
        out = {}
        if F.data:
            sp = self.get(F.source, F.target, F.r, t)
            c = sp.coords(F.data, check=False)
            for i, v in c.items():
                if i < len(sp.B):
                    axpy(out, v, sp.B_pre[i])
        return HomElement(F.source, F.target, F.r - 1, out, t)

    # cohomology classes, indexed globally

    def classes(self):
        """List of (lam, mu, r, t, k, representative) over all H vectors."""
        if self._classes is None:
            out = []
            for lam in self.dg.weights:
                for mu in self.dg.weights:
                    for (r, t) in sorted(self.dg.blocks(lam, mu)):
                        sp = self.get(lam, mu, r, t)
                        for k, h in enumerate(sp.H):
                            out.append((lam, mu, r, t, k, HomElement(lam, mu, r, h, t)))
            self._classes = out
            self._class_index = {c[:5]: i for i, c in enumerate(out)}
        return self._classes

    def class_index(self, lam, mu, r, t, k):
        self.classes()
        return self._class_index[(lam, mu, r, t, k)]

    def to_classes(self, F):
        """Pi(F) as {global class index: coefficient}."""
        if not F.data:
            return {}
        t = F.t if F.t is not None else self.dg.internal_degree(F)
        self.classes()
        return {self._class_index[(F.source, F.target, F.r, t, k)]: v for k, v in self.Pi_coords(F).items()}

    def yoneda(self, x, y):
        """Product of two classes given by global index."""
        cl = self.classes()
        a, b = cl[x][5], cl[y][5]
        if a.target != b.source:
            return {}
        return self.to_classes(self.dg.compose(a, b))


def ext_table(dg, graded=False):
    """{(lam, mu, k): dim} or {(lam, mu, k, t): dim} of nonzero Ext groups."""
    out = {}
    for lam in dg.weights:
        for mu in dg.weights:
            for (r, t), basis in dg.blocks(lam, mu).items():
                dim = _cohomology_dim(dg, lam, mu, r, t)
                if dim:
                    key = (lam, mu, r, t) if graded else (lam, mu, r)
                    out[key] = out.get(key, 0) + dim
    return dict(sorted(out.items()))


def _rank_of_d(dg, lam, mu, r, t):
    from .linalg import rank

    basis = dg.block(lam, mu, r, t)
    return rank(dg.d(HomElement(lam, mu, r, {k: Fraction(1)}, t)).data for k in basis)


def _cohomology_dim(dg, lam, mu, r, t):
    n = len(dg.block(lam, mu, r, t))
    if not n:
        return 0
    return n - _rank_of_d(dg, lam, mu, r, t) - (_rank_of_d(dg, lam, mu, r - 1, t) if dg.block(lam, mu, r - 1, t) else 0)


def build_splitting(m, n, override=True):
    return Splitting(DGAlgebra(m, n), override)


# n = 1: explicit chain maps

def n1_signs(cx):
    """Diagonal change of basis carrying the computed resolution of M(j) onto
    the complex with differentials (-1)^i f (P_{i+1} -> P_i)."""
    A = cx.algebra
    sig = [Fraction(1)]
    for i, d in enumerate(cx.diffs):
        ((_, x),) = d.items()
        ((k, c),) = x.items()
        src, tgt = cx.terms[i + 1][0][0], cx.terms[i][0][0]
        if k != A.degree_one_generator(src, tgt):
            raise AssertionError("unexpected differential for n = 1")
        # our d_i S_i = S_{i+1} (-1)^i f
        sig.append(c * sig[i] * (-1) ** i)
    return sig


def _n1_map(dg, lam, mu, r, entry):
    A = dg.A
    s_lam, s_mu = n1_signs(dg.res[lam]), n1_signs(dg.res[mu])
    data = {}
    for p in range(len(dg.res[lam].terms)):
        q = p - r
        if not 0 <= q < len(dg.res[mu].terms):
            continue
        src = dg.res[lam].terms[p][0][0]
        tgt = dg.res[mu].terms[q][0][0]
        j = entry(src, tgt)
        if j is None:
            continue
        data[(p, 0, 0, j)] = s_lam[p] / s_mu[q]
    return HomElement(lam, mu, r, data, A.degree(next(iter(data))[3]) - r if data else None)


def n1_identity_map(dg, lam, mu):
    """Id^{(j)}_{(l)}: identities P(s) -> P(s) for s <= l."""
    j, l = lam.index("^"), mu.index("^")
    A = dg.A
    return _n1_map(dg, lam, mu, j - l, lambda a, b: A.idempotent_id(a) if a == b else None)


def n1_f_map(dg, lam, mu):
    """F^{(j)}_{(l)}: the maps f_{s,s-1} for s <= l + 1."""
    j, l = lam.index("^"), mu.index("^")
    A = dg.A

    def entry(a, b):
        if a.index("^") == b.index("^") + 1:
            return A.degree_one_generator(a, b)
        return None

    return _n1_map(dg, lam, mu, j - l - 1, entry)


_splittings = {}


def get_splitting(m, n, override=True):
    key = (m, n, override)
    if key not in _splittings:
        _splittings[key] = Splitting(DGAlgebra(m, n), override)
    return _splittings[key]
