"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``{coordinate: Fraction}`` without zero entries.  All
eliminations choose the smallest available pivot coordinate, so results are
reproducible for a fixed input order.
"""

from fractions import Fraction


def axpy(y, a, x):
    """``y += a * x`` in place."""
    for k, v in x.items():
        w = y.get(k, 0) + a * v
        if w:
            y[k] = w
        else:
            del y[k]
    return y


class Echelon:
    """Reduced row echelon basis, grown one vector at a time.

    With ``track=True`` every stored row remembers which combination of the
    inserted vectors (keyed by the ``tag`` passed to :meth:`add`) produced it.
    """

    def __init__(self, track=False):
        self.rows = {}
        self.combos = {} if track else None
        self.track = track

    def __len__(self):
        return len(self.rows)

    def reduce(self, v, combo=None):
        v = dict(v)
        combo = dict(combo) if combo is not None else ({} if self.track else None)
        for p in [p for p in v if p in self.rows]:
            c = v.get(p)
            if not c:
                continue
            axpy(v, -c, self.rows[p])
            if self.track:
                axpy(combo, -c, self.combos[p])
        return v, combo

    def contains(self, v):
        return not self.reduce(v)[0]

    def add(self, v, tag=None):
        """Insert ``v``; return the reduced combination if ``v`` was dependent."""
        start = {tag: Fraction(1)} if self.track else None
        r, combo = self.reduce(v, start)
        if not r:
            return combo if self.track else {}
        p = min(r)
        inv = 1 / Fraction(r[p])
        r = {k: x * inv for k, x in r.items()}
        if self.track:
            combo = {k: x * inv for k, x in combo.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                axpy(row, -c, r)
                if self.track:
                    axpy(self.combos[q], -c, combo)
        self.rows[p] = r
        if self.track:
            self.combos[p] = combo
        return None

    def coordinates(self, v):
        """Coefficients of ``v`` in the tagged inserted vectors; ``v`` must lie in the span."""
        out = {}
        for p, c in v.items():
            if p not in self.rows:
                continue
            axpy(out, c, self.combos[p])
        return out


def rank(vectors):
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def kernel(images):
    """Kernel of the map sending basis vector ``k`` to ``images[k]``."""
    e = Echelon(track=True)
    out = []
    for k, img in enumerate(images):
        rel = e.add(img, k)
        if rel is not None:
            out.append(rel)
    return out


def independent_subset(base, candidates):
    """Indices of ``candidates`` chosen greedily independent modulo ``span(base)``."""
    e = Echelon()
    for v in base:
        e.add(v)
    chosen = []
    for k, v in enumerate(candidates):
        if e.add(v) is None:
            chosen.append(k)
    return chosen


def canonical_basis(vectors):
    """Reduced echelon basis (rows keyed by pivot, in pivot order) of the span."""
    e = Echelon()
    for v in vectors:
        e.add(v)
    return [e.rows[p] for p in sorted(e.rows)]


class Coordinates:
    """Coordinates with respect to a fixed basis of a subspace."""

    def __init__(self, basis):
        self.basis = list(basis)
        self.ech = Echelon(track=True)
        for k, v in enumerate(self.basis):
            if self.ech.add(v, k) is not None:
                raise ValueError(f"basis vector {k} is dependent")

    def __call__(self, v, check=True):
        out = self.ech.coordinates(v)
        if check:
            back = {}
            for k, c in out.items():
                axpy(back, c, self.basis[k])
            if back != {k: x for k, x in v.items() if x}:
                raise ValueError("vector is not in the span")
        return out
