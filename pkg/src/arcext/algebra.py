"""The graded arc algebra K_m^n: distinguished basis and surgery multiplication.

Elements are plain dicts ``{basis index: Fraction}`` with no zero entries.
A basis diagram ``(alpha, lam, beta)`` stands for the oriented circle diagram
``cup(alpha) lam cap(beta)``; it lies in ``e_alpha K e_beta``.
"""

from collections import namedtuple
from fractions import Fraction

from .diagrams import (
    DOWN,
    UP,
    arc_degree,
    cap_diagram_of,
    cup_diagram_of,
    enumerate_weights,
    is_oriented,
)
from .laurent import LaurentPoly

BasisDiagram = namedtuple("BasisDiagram", "left weight right degree")

ONE, X, LINE = "1", "x", "line"

# Frobenius rules for one surgery.  Circles carry 1 (anticlockwise) or x
# (clockwise); lines carry no state, their orientation is read off at the end.
SURGERY_RULES = {
    "merge": {
        (ONE, ONE): [(1, ONE)],
        (ONE, X): [(1, X)],
        (X, ONE): [(1, X)],
        (X, X): [],
        (ONE, LINE): [(1, LINE)],
        (LINE, ONE): [(1, LINE)],
        (X, LINE): [],
        (LINE, X): [],
    },
    "split": {
        ONE: [(1, (ONE, X)), (1, (X, ONE))],
        X: [(1, (X, X))],
        LINE: [(1, (LINE, X))],
    },
    # two lines reconnecting into two lines, see _lines_rule
    "lines": None,
}


def _lines_rule(x_ends, y_ends, new1_ends, new2_ends):
    """Two propagating lines may only become a bottom line and a top line."""
    prop = ("bot", "top")
    if x_ends == prop and y_ends == prop and {new1_ends, new2_ends} == {("bot", "bot"), ("top", "top")}:
        return [1]
    return []


SURGERY_RULES["lines"] = _lines_rule


def add_into(dst, src, scale=1):
    for k, v in src.items():
        w = dst.get(k, 0) + scale * v
        if w:
            dst[k] = w
        else:
            dst.pop(k, None)
    return dst


def scaled(x, c):
    if not c:
        return {}
    return {k: c * v for k, v in x.items()}


class _Graph:
    """Stacked picture of two circle diagrams, glued along the middle."""

    def __init__(self, size):
        self.size = size
        self.adj = {}

    def link(self, p, q):
        # ray ends are tuples and never become graph nodes
        for a, b in ((p, q), (q, p)):
            if not isinstance(a, tuple):
                self.adj.setdefault(a, []).append(b)

    def unlink(self, p, q):
        self.adj[p].remove(q)
        self.adj[q].remove(p)

    def components(self):
        seen = {}
        comps = []
        for start in sorted(self.adj):
            if start in seen:
                continue
            comp = set()
            stack = [start]
            ends = []
            while stack:
                p = stack.pop()
                if p in comp:
                    continue
                comp.add(p)
                for q in self.adj[p]:
                    if isinstance(q, tuple):
                        ends.append(q[0])
                    elif q not in comp:
                        stack.append(q)
            c = frozenset(comp)
            comps.append((c, tuple(sorted(ends))))
            for p in comp:
                seen[p] = c
        return comps


def surgery_product(bottom_cup, lam, middle, mu, top_cap, rules=None):
    """Multiply ``bottom_cup lam middle*`` by ``middle mu top_cap``.

    ``middle`` is the cup diagram glued under ``mu`` (its mirror sits above
    ``lam``).  Returns ``{nu: coefficient}`` for the resulting diagrams
    ``bottom_cup nu top_cap``.
    """
    rules = rules or SURGERY_RULES
    size = len(lam)
    top = size  # top-row vertex i is the point size + i
    g = _Graph(size)
    for i, j in bottom_cup.arcs:
        g.link(i, j)
    for r in bottom_cup.rays:
        g.link(r, ("bot", r))
    for i, j in middle.arcs:
        g.link(i, j)
        g.link(top + i, top + j)
    for r in middle.rays:
        if lam[r] != mu[r]:
            return {}
        g.link(r, top + r)
    for i, j in top_cap.arcs:
        g.link(top + i, top + j)
    for r in top_cap.rays:
        g.link(top + r, ("top", r))

    label = {i: lam[i] for i in range(size)}
    label.update({top + i: mu[i] for i in range(size)})

    states = {}
    for comp, line in g.components():
        if line:
            states[comp] = LINE
        else:
            left = min(comp, key=lambda p: p % size)
            states[comp] = ONE if label[left] == DOWN else X
    terms = [(1, states)]

    for i, j in sorted(middle.arcs, key=lambda a: a[1]):
        before = {p: c for c in terms[0][1] for p in c} if terms else None
        ends_before = dict(g.components())
        g.unlink(i, j)
        g.unlink(top + i, top + j)
        g.link(i, top + i)
        g.link(j, top + j)
        if not terms:
            continue
        after = dict(g.components())
        owner = {p: c for c in after for p in c}
        xa, ya = before[i], before[top + i]
        new_terms = []
        if xa == ya:
            c1, c2 = owner[i], owner[j]
            if c1 == c2:
                raise AssertionError("surgery on one component must split it")
            for coeff, st in terms:
                s = st[xa]
                if s == LINE:
                    # the line keeps its ends; the closed piece becomes the circle
                    c_line, c_circ = (c1, c2) if after[c1] else (c2, c1)
                    outs = [(k, {c_line: a, c_circ: b}) for k, (a, b) in rules["split"][LINE]]
                else:
                    outs = [(k, {c1: a, c2: b}) for k, (a, b) in rules["split"][s]]
                for k, upd in outs:
                    nst = {c: v for c, v in st.items() if c != xa}
                    nst.update(upd)
                    new_terms.append((coeff * k, nst))
        else:
            for coeff, st in terms:
                a, b = st[xa], st[ya]
                if a == LINE and b == LINE:
                    c1, c2 = owner[i], owner[j]
                    outs = rules["lines"]
                    if callable(outs):
                        outs = outs(ends_before[xa], ends_before[ya], after[c1], after[c2])
                    for k in outs:
                        nst = {c: v for c, v in st.items() if c not in (xa, ya)}
                        nst[c1] = LINE
                        nst[c2] = LINE
                        new_terms.append((coeff * k, nst))
                    continue
                c = owner[i]
                for k, s in rules["merge"][(a, b)]:
                    nst = {cc: v for cc, v in st.items() if cc not in (xa, ya)}
                    nst[c] = s
                    new_terms.append((coeff * k, nst))
        terms = new_terms

    if not terms:
        return {}
    # collapse: vertex i of the result is {i, size + i}
    out = {}
    nbr = {}
    for i, j in bottom_cup.arcs:
        nbr.setdefault(i, []).append(j)
        nbr.setdefault(j, []).append(i)
    for i, j in top_cap.arcs:
        nbr.setdefault(i, []).append(j)
        nbr.setdefault(j, []).append(i)
    ends = {r: lam[r] for r in bottom_cup.rays}
    for coeff, st in terms:
        nu = _read_weight(st, size, nbr, ends, top_cap.rays, mu)
        if nu is None:
            continue
        out[nu] = out.get(nu, 0) + coeff
    return {k: v for k, v in out.items() if v}


def _read_weight(states, size, nbr, bottom_ends, top_rays, mu):
    lab = [None] * size

    def spread(start, value):
        stack = [(start, value)]
        while stack:
            v, c = stack.pop()
            if lab[v] is not None:
                if lab[v] != c:
                    return False
                continue
            lab[v] = c
            other = UP if c == DOWN else DOWN
            for w in nbr.get(v, ()):
                stack.append((w, other))
        return True

    for comp, s in states.items():
        verts = sorted({p % size for p in comp})
        if s == LINE:
            continue
        if not spread(verts[0], DOWN if s == ONE else UP):
            return None
    for r, c in bottom_ends.items():
        if not spread(r, c):
            return None
    for r in top_rays:
        if not spread(r, mu[r]):
            return None
    if any(c is None for c in lab):
        raise AssertionError("unlabelled vertex after surgery")
    return "".join(lab)


class ArcAlgebra:
    """Distinguished basis and multiplication of K_m^n."""

    def __init__(self, m, n, rules=None):
        self.m, self.n = m, n
        self.rules = rules or SURGERY_RULES
        self.weights = enumerate_weights(m, n)
        self.windex = {w: i for i, w in enumerate(self.weights)}
        self.cup = {w: cup_diagram_of(w) for w in self.weights}
        self.cap = {w: cap_diagram_of(w) for w in self.weights}
        self.basis = []
        self.index = {}
        self.block = {}
        for a in self.weights:
            for b in self.weights:
                ids = []
                for lam in self.weights:
                    if is_oriented(self.cup[a], lam) and is_oriented(self.cap[b], lam):
                        deg = arc_degree(self.cup[a], lam) + arc_degree(self.cap[b], lam)
                        self.index[(a, lam, b)] = len(self.basis)
                        ids.append(len(self.basis))
                        self.basis.append(BasisDiagram(a, lam, b, deg))
                self.block[(a, b)] = ids
        self._table = {}

    @property
    def size(self):
        return self.m + self.n

    def __len__(self):
        return len(self.basis)

    def degree(self, i):
        return self.basis[i].degree

    def block_of_degree(self, a, b, deg):
        return [i for i in self.block[(a, b)] if self.basis[i].degree == deg]

    def idempotent(self, w):
        return {self.index[(w, w, w)]: Fraction(1)}

    def idempotent_id(self, w):
        return self.index[(w, w, w)]

    def unit(self):
        out = {}
        for w in self.weights:
            add_into(out, self.idempotent(w))
        return out

    def multiply_basis(self, i, j):
        key = (i, j)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        x, y = self.basis[i], self.basis[j]
        if x.right != y.left:
            res = {}
        else:
            raw = surgery_product(
                self.cup[x.left], x.weight, self.cup[x.right], y.weight, self.cap[y.right], self.rules
            )
            res = {}
            for nu, c in raw.items():
                k = self.index.get((x.left, nu, y.right))
                if k is None:
                    raise AssertionError(f"surgery produced a non-basis diagram {(x.left, nu, y.right)}")
                res[k] = Fraction(c)
        self._table[key] = res
        return res

    def multiply(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.multiply_basis(i, j)
                if prod:
                    add_into(out, prod, a * b)
        return out

    def cartan_entry(self, a, b):
        """Graded dimension of ``e_a K e_b``."""
        p = {}
        for i in self.block[(a, b)]:
            d = self.basis[i].degree
            p[d] = p.get(d, 0) + 1
        return LaurentPoly(p)

    def cartan_matrix(self):
        return [[self.cartan_entry(a, b) for b in self.weights] for a in self.weights]

    def degree_one_generator(self, a, b):
        ids = self.block_of_degree(a, b, 1)
        if len(ids) > 1:
            raise AssertionError(f"degree-1 part of e_{a} K e_{b} has dimension {len(ids)}")
        return ids[0] if ids else None

    def graded_dimension(self):
        p = LaurentPoly()
        for a in self.weights:
            for b in self.weights:
                p = p + self.cartan_entry(a, b)
        return p

    def label(self, i):
        x = self.basis[i]
        return f"{x.left}|{x.weight}|{x.right}"


_cache = {}


def get_algebra(m, n):
    key = (m, n)
    if key not in _cache:
        _cache[key] = ArcAlgebra(m, n)
    return _cache[key]
