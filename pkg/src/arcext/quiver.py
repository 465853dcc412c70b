"""Quiver presentation of the Ext algebra and the relation checks for n = 1, 2.

Arrows are a basis of J / J^2, where J is spanned by the non-idempotent
Ext classes.  An arrow in cohomological degree 0 is drawn cyan, in degree 1
black, and anything else gets a colour from a fixed list.
"""

from fractions import Fraction

from .linalg import Echelon, independent_subset

COLOURS = {0: "cyan", 1: "black", 2: "red", 3: "green"}


def colour_of(r):
    return COLOURS.get(r, "gray")


def multiply(S, x, y):
    """Yoneda product of class combinations ``{class: coeff}``."""
    out = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in S.yoneda(i, j).items():
                out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v}


def _block_of(cl, i):
    lam, mu, r, t = cl[i][:4]
    return (lam, mu, r, t)


class Quiver:
    def __init__(self, m, n, vertices, arrows, report):
        self.m, self.n = m, n
        self.vertices = vertices
        self.arrows = arrows
        self.report = report

    def arrows_between(self, a, b, colour=None):
        return [x for x in self.arrows if x["source"] == a and x["target"] == b and (colour is None or x["colour"] == colour)]


def adjacent(a, b):
    """Do the weights differ by swapping one neighbouring pair?"""
    diff = [i for i in range(len(a)) if a[i] != b[i]]
    return len(diff) == 2 and diff[1] == diff[0] + 1


def radical_classes(S):
    cl = S.classes()
    return [i for i, c in enumerate(cl) if not (c[0] == c[1] and c[2] == 0 and c[3] == 0)]


def quiver_presentation(S):
    dg = S.dg
    cl = S.classes()
    J = radical_classes(S)
    by_src = {}
    for i in J:
        by_src.setdefault(cl[i][0], []).append(i)
    # J^2, block by block
    sq = {}
    for i in J:
        for j in by_src.get(cl[i][1], []):
            v = S.yoneda(i, j)
            if v:
                k = next(iter(v))
                sq.setdefault(_block_of(cl, k), []).append(v)
    arrows = []
    blocks = {}
    for i in J:
        blocks.setdefault(_block_of(cl, i), []).append(i)
    for key in sorted(blocks, key=lambda b: (dg.A.windex[b[0]], dg.A.windex[b[1]], b[2], b[3])):
        ids = blocks[key]
        units = [{i: Fraction(1)} for i in ids]
        for pos in independent_subset(sq.get(key, []), units):
            lam, mu, r, t = key
            arrows.append(
                {"source": lam, "target": mu, "r": r, "t": t, "colour": colour_of(r), "class": ids[pos], "corner": not adjacent(lam, mu)}
            )
    report = {"dim_E": len(cl), "dim_J": len(J), "arrows": len(arrows)}
    report["generates"], report["path_span"] = _generation(S, arrows, J)
    return Quiver(dg.m, dg.n, list(dg.weights), arrows, report)


def _generation(S, arrows, J):
    """Do the arrows generate J under the Yoneda product?"""
    cl = S.classes()
    span = {}
    layer = [{a["class"]: Fraction(1)} for a in arrows]
    for v in layer:
        span.setdefault(_block_of(cl, next(iter(v))), Echelon()).add(v)
    arrow_vecs = list(layer)
    while layer:
        new = []
        for p in layer:
            for a in arrow_vecs:
                w = multiply(S, p, a)
                if not w:
                    continue
                e = span.setdefault(_block_of(cl, next(iter(w))), Echelon())
                if e.add(w) is None:
                    new.append(w)
        layer = new
    total = sum(len(e) for e in span.values())
    return total == len(J), total


# n = 1

def n1_vertex(w):
    return w.index("^")


def n1_relations(S):
    """Cochain and class level checks of the n = 1 relations."""
    from .dg import n1_f_map, n1_identity_map

    dg = S.dg
    ws = {n1_vertex(w): w for w in dg.weights}
    N = len(ws) - 1
    Id = {(j, l): n1_identity_map(dg, ws[j], ws[l]) for j in ws for l in ws if j >= l}
    F = {(j, l): n1_f_map(dg, ws[j], ws[l]) for j in ws for l in ws if j > l}
    out = {"N": N, "FF_zero": True, "IdF": True, "FId": True, "IdId": True, "reps_are_H": True, "failures": []}
    for j in ws:
        for l in ws:
            for k in ws:
                if j > l > k:
                    if dg.compose(F[(j, l)], F[(l, k)]):
                        out["FF_zero"] = False
                        out["failures"].append(("FF", j, l, k))
                if j >= l > k:
                    if dg.compose(Id[(j, l)], F[(l, k)]) != F[(j, k)]:
                        out["IdF"] = False
                        out["failures"].append(("IdF", j, l, k))
                if j > l >= k:
                    if dg.compose(F[(j, l)], Id[(l, k)]) != F[(j, k)]:
                        out["FId"] = False
                        out["failures"].append(("FId", j, l, k))
                if j >= l >= k:
                    if dg.compose(Id[(j, l)], Id[(l, k)]) != Id[(j, k)]:
                        out["IdId"] = False
                        out["failures"].append(("IdId", j, l, k))
    # the prescribed maps are the chosen representatives
    reps = {(c[0], c[1], c[2], c[3]): c[5] for c in S.classes()}
    for (j, l), f in list(Id.items()) + list(F.items()):
        key = (ws[j], ws[l], f.r, f.t)
        if reps.get(key) != f:
            out["reps_are_H"] = False
            out["failures"].append(("rep", j, l, f.r))
    return out


def n1_word_count(N):
    """Nonzero words in the n = 1 quiver modulo the relations.

    A word from (j) to (l) is a sequence of j - l arrows, each cyan or
    black.  Commuting cyan past black reaches a normal form with all cyans in
    front, and two cyans give zero.
    """
    forms = set()
    for j in range(N + 1):
        for l in range(j + 1):
            length = j - l
            for mask in range(1 << length):
                cyans = bin(mask).count("1")
                if cyans <= 1:
                    forms.add((j, l, cyans))
    return len(forms)


def n1_path_rank(S):
    """Rank of all arrow words evaluated in E (should be dim E)."""
    q = quiver_presentation(S)
    cl = S.classes()
    by_src = {}
    for a in q.arrows:
        by_src.setdefault(a["source"], []).append({a["class"]: Fraction(1)})
    e = Echelon()
    for i, c in enumerate(cl):
        if c[0] == c[1] and c[2] == 0:
            e.add({i: Fraction(1)})
    layer = [(a["target"], {a["class"]: Fraction(1)}) for a in q.arrows]
    while layer:
        new = []
        for tgt, v in layer:
            e.add(v)
            for a in by_src.get(tgt, []):
                w = multiply(S, v, a)
                if w:
                    new.append((cl[next(iter(a))][1], w))
        layer = new
    return len(e)


# n = 2

def n2_label(w):
    """(k|l): positions of the two UPs, k > l."""
    ups = [i for i, c in enumerate(w) if c == "^"]
    return ups[1], ups[0]


def n2_weight(k, l, size):
    return "".join("^" if i in (k, l) else "v" for i in range(size))


RELATIONS_N2 = {
    1: (("black", "R"), ("black", "D"), ("black", "D"), ("black", "R"), -1),
    2: (("black", "R"), ("cyan", "D"), ("cyan", "D"), ("black", "R"), 1),
    3: (("cyan", "R"), ("black", "D"), ("black", "D"), ("cyan", "R"), 1),
    4: (("cyan", "R"), ("cyan", "D"), ("cyan", "D"), ("cyan", "R"), 1),
    5: (("cyan", "D"), ("black", "D"), ("black", "D"), ("cyan", "D"), 1),
    6: (("cyan", "R"), ("black", "R"), ("black", "R"), ("cyan", "R"), 1),
    7: (("cyan", "D"), ("cyan", "D")),
    8: (("cyan", "R"), ("cyan", "R")),
}


def _step(k, l, d):
    return (k - 1, l) if d == "R" else (k, l - 1)


def n2_relations(S, q=None):
    """Check relations 1-8 wherever both sides exist.

    Each square relation is reported with the scalar c such that
    lhs = c * rhs; c != 0 is required, and its sign is recorded only since
    the arrows are fixed up to scalars.  The expected sign from the picture
    is kept next to it.
    """
    q = q or quiver_presentation(S)
    size = S.dg.m + S.dg.n
    N = size - 1
    valid = lambda k, l: 0 <= l < k <= N

    def arrow(k, l, colour, d):
        k2, l2 = _step(k, l, d)
        if not valid(k, l) or not valid(k2, l2):
            return None
        found = q.arrows_between(n2_weight(k, l, size), n2_weight(k2, l2, size), colour)
        if len(found) != 1:
            return None
        return {found[0]["class"]: Fraction(1)}

    def path(k, l, steps):
        v = None
        for colour, d in steps:
            a = arrow(k, l, colour, d)
            if a is None:
                return None
            v = a if v is None else multiply(S, v, a)
            k, l = _step(k, l, d)
        return v if v is not None else {}

    rows = []
    for k in range(N + 1):
        for l in range(k):
            for num, rel in RELATIONS_N2.items():
                if num >= 7:
                    v = path(k, l, rel)
                    if v is None:
                        continue
                    rows.append({"relation": num, "start": (k, l), "ok": not v, "scalar": None, "expected_sign": 0})
                    continue
                a, b, c, d, sign = rel
                lhs, rhs = path(k, l, [a, b]), path(k, l, [c, d])
                if lhs is None or rhs is None:
                    continue
                scalar = _ratio(lhs, rhs)
                rows.append(
                    {"relation": num, "start": (k, l), "ok": scalar is not None and scalar != 0, "scalar": scalar, "expected_sign": sign}
                )
    return rows


def _ratio(x, y):
    """c with x = c y, or None."""
    if not x and not y:
        return Fraction(0)
    if not x or not y or set(x) != set(y):
        return None
    k = next(iter(y))
    c = x[k] / y[k]
    return c if all(x[i] == c * y[i] for i in y) else None


def emit_dot(q):
    lines = [f"digraph E_{q.m}_{q.n} {{", "  rankdir=LR;"]
    for v in q.vertices:
        lines.append(f'  "{v}";')
    for a in q.arrows:
        style = ", style=dashed" if a["corner"] else ""
        lines.append(f'  "{a["source"]}" -> "{a["target"]}" [color={a["colour"]}, label="{a["r"]},{a["t"]}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
