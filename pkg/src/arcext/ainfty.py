"""Minimal A-infinity model on the Ext algebra by Merkulov's recursion.

With the homotopy data (Pi, Q) of a :class:`Splitting`,

    lambda_2(a, b) = a b,
    lambda_n(a_1..a_n) = - sum_{k+l=n} (-1)^{k + (l-1)(|a_1|+..+|a_k|)} Q lambda_k(a_1..a_k) . Q lambda_l(a_k+1..a_n),

with Q lambda_1 = -Id, and m_n = Pi lambda_n.  Q lambda_k is memoized on
each contiguous subtuple, so a scan over all tuples of a given arity reuses
every shorter interval.
"""

from fractions import Fraction

from .dg import HomElement, Splitting, DGAlgebra


class AInftyModel:
    def __init__(self, splitting, max_arity=None):
        self.S = splitting
        self.dg = splitting.dg
        self.classes = splitting.classes()
        self.deg = [c[2] for c in self.classes]
        self.src = [c[0] for c in self.classes]
        self.tgt = [c[1] for c in self.classes]
        self.reps = [c[5] for c in self.classes]
        self.m_, self.n_ = self.dg.m, self.dg.n
        self.max_arity = max_arity if max_arity is not None else self.n_ ** 2 + 3
        self._qlam = {}
        self._m = {}
        self.outgoing = {}
        for i, s in enumerate(self.src):
            self.outgoing.setdefault(s, []).append(i)

    def composable(self, tup):
        return all(self.tgt[a] == self.src[b] for a, b in zip(tup, tup[1:]))

    def _zero(self, tup, shift):
        return HomElement(self.src[tup[0]], self.tgt[tup[-1]], sum(self.deg[i] for i in tup) + shift, {})

    def lam(self, tup):
        """lambda_l on class representatives (zero when not composable)."""
        tup = tuple(tup)
        l = len(tup)
        if l < 2:
            raise ValueError("lambda needs arity at least 2")
        if not self.composable(tup):
            return self._zero(tup, 2 - l)
        if l == 2:
            return self.dg.compose(self.reps[tup[0]], self.reps[tup[1]])
        dg = self.dg
        acc = {}
        partial = 0
        for k in range(1, l):
            partial += self.deg[tup[k - 1]]
            left = self.qlam(tup[:k])
            if not left:
                continue
            right = self.qlam(tup[k:])
            if not right:
                continue
            sign = -1 if (k + (l - k - 1) * partial) % 2 else 1
            prod = dg.compose(left, right)
            for key, v in prod.data.items():
                w = acc.get(key, 0) - sign * v
                if w:
                    acc[key] = w
                else:
                    del acc[key]
        r = sum(self.deg[i] for i in tup) + 2 - l
        t = sum(self.classes[i][3] for i in tup)
        return HomElement(self.src[tup[0]], self.tgt[tup[-1]], r, acc, t)

    def qlam(self, tup):
        """Q(lambda_k(tup)), with Q lambda_1 = -Id."""
        if len(tup) == 1:
            return self.reps[tup[0]].scale(-1)
        hit = self._qlam.get(tup)
        if hit is None:
            hit = self.S.Q(self.lam(tup))
            self._qlam[tup] = hit
        return hit

    def m(self, tup):
        """m_l(tup) as {class index: coefficient}; m_1 = 0."""
        tup = tuple(tup)
        if len(tup) == 1:
            return {}
        hit = self._m.get(tup)
        if hit is None:
            if not self.composable(tup):
                hit = {}
            else:
                hit = self.S.to_classes(self.lam(tup))
            self._m[tup] = hit
        return hit

    def m_on(self, items):
        """Multilinear extension of m to a list of {class: coeff} arguments."""
        out = {}
        combos = [((), Fraction(1))]
        for arg in items:
            combos = [(t + (i,), c * v) for t, c in combos for i, v in arg.items()]
        for t, c in combos:
            for i, v in self.m(t).items():
                out[i] = out.get(i, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def chains(self, l, start=None):
        """All composable tuples of length l, in lexicographic order."""
        def grow(prefix):
            if len(prefix) == l:
                yield tuple(prefix)
                return
            for j in self.outgoing.get(self.tgt[prefix[-1]], []):
                prefix.append(j)
                yield from grow(prefix)
                prefix.pop()

        firsts = range(len(self.classes)) if start is None else [start]
        for i in firsts:
            yield from grow([i])

    def table(self, l):
        """Nonzero entries of m_l."""
        out = {}
        for tup in self.chains(l):
            v = self.m(tup)
            if v:
                out[tup] = v
        return out

    def vanishing_violations(self, l):
        """Tuples where lambda_l is nonzero in the wrong degree or degree bound fails."""
        from .diagrams import weight_length

        bad = []
        n2 = self.n_ ** 2
        for tup in self.chains(l):
            lam = self.lam(tup)
            if not lam:
                continue
            want = sum(self.deg[i] for i in tup) + 2 - l
            ds = [weight_length(self.src[i]) - weight_length(self.tgt[i]) - self.deg[i] for i in tup]
            if lam.r != want or any(d < 0 for d in ds) or sum(ds) > n2 + 2 - l:
                bad.append(tup)
        return bad


def minimal_model(m, n, max_arity=None, override=True):
    return AInftyModel(Splitting(DGAlgebra(m, n), override), max_arity)


def stasheff_defect(model, tup):
    """sum (-1)^{r+st} m_{r+t+1}(Id^r x m_s x Id^t) on one tuple, with m_1 = 0."""
    N = len(tup)
    deg = model.deg
    out = {}
    for s in range(2, N + 1):
        for r in range(0, N - s + 1):
            t = N - r - s
            if r + t + 1 < 2:
                continue
            inner = model.m(tup[r : r + s])
            if not inner:
                continue
            koszul = (2 - s) * sum(deg[i] for i in tup[:r])
            sign = -1 if (r + s * t + koszul) % 2 else 1
            args = [{i: Fraction(1)} for i in tup[:r]] + [inner] + [{i: Fraction(1)} for i in tup[r + s :]]
            for k, v in model.m_on(args).items():
                out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def stasheff_check(model, up_to):
    """Tuples of arity 3..up_to violating the Stasheff identities."""
    bad = []
    for N in range(3, up_to + 1):
        for tup in model.chains(N):
            if stasheff_defect(model, tup):
                bad.append(tup)
    return bad


def vanishing_scan(model, up_to=None):
    """Largest arity with a nonzero m_l (2 if none beyond m_2), and a witness."""
    up_to = up_to or model.max_arity
    best, witness = None, None
    for l in range(2, up_to + 1):
        for tup in model.chains(l):
            v = model.m(tup)
            if v:
                best, witness = l, (tup, v)
                break
    return best, witness
