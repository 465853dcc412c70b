"""Weights, cup/cap diagrams and their orientations.

A weight is a string over ``"^"`` (UP) and ``"v"`` (DOWN) with ``n`` UPs and
``m`` DOWNs; vertices are numbered from 0.  Everything here is immutable.
"""

from dataclasses import dataclass
from itertools import combinations

UP = "^"
DOWN = "v"

CUP = "cup"
CAP = "cap"


class OrientationError(ValueError):
    pass


def _order_key(w):
    return tuple(0 if c == DOWN else 1 for c in w)


def enumerate_weights(m, n):
    """All weights with ``m`` DOWNs and ``n`` UPs, lexicographic with DOWN < UP."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if m + n == 0:
        raise ValueError("empty domain: m + n = 0")
    size = m + n
    out = []
    for ups in combinations(range(size), n):
        s = set(ups)
        out.append("".join(UP if i in s else DOWN for i in range(size)))
    out.sort(key=_order_key)
    return out


def zero_weight(m, n):
    return UP * n + DOWN * m


def weight_counts(w):
    return w.count(DOWN), w.count(UP)


def check_weight(w, m=None, n=None):
    if not w or set(w) - {UP, DOWN}:
        raise ValueError(f"not a weight: {w!r}")
    if m is not None and weight_counts(w) != (m, n):
        raise ValueError(f"weight {w!r} is not in Lambda_{m}^{n}")
    return w


def weight_length(w):
    """Number of (DOWN, UP) pairs with the DOWN to the left."""
    downs = 0
    total = 0
    for c in w:
        if c == DOWN:
            downs += 1
        else:
            total += downs
    return total


def _up_prefix_counts(w):
    out = []
    k = 0
    for c in w:
        k += c == UP
        out.append(k)
    return out


def bruhat_leq(lam, mu):
    """Bruhat order on weights; the zero weight is the maximum."""
    if len(lam) != len(mu) or lam.count(UP) != mu.count(UP):
        raise ValueError("weights from different blocks")
    return all(a <= b for a, b in zip(_up_prefix_counts(lam), _up_prefix_counts(mu)))


def bruhat_lt(lam, mu):
    return lam != mu and bruhat_leq(lam, mu)


def relative_length(i, lam, mu):
    """``#{j <= i : lam_j = DOWN} - #{j <= i : mu_j = DOWN}``."""
    return lam[: i + 1].count(DOWN) - mu[: i + 1].count(DOWN)


@dataclass(frozen=True)
class ArcDiagram:
    """Cup or cap diagram: non-crossing arcs plus rays on ``size`` vertices."""

    kind: str
    arcs: tuple
    rays: tuple
    size: int

    def __post_init__(self):
        if self.kind not in (CUP, CAP):
            raise ValueError(f"bad kind {self.kind!r}")
        seen = sorted([v for a in self.arcs for v in a] + list(self.rays))
        if seen != list(range(self.size)):
            raise ValueError("arcs and rays must partition the vertices")
        for i, j in self.arcs:
            if not i < j:
                raise ValueError(f"arc {(i, j)} not ordered")
            for k, l in self.arcs:
                if i < k < j < l:
                    raise ValueError(f"arcs {(i, j)} and {(k, l)} cross")
            for r in self.rays:
                if i < r < j:
                    raise ValueError(f"ray {r} crosses arc {(i, j)}")

    def mirror(self):
        return ArcDiagram(CAP if self.kind == CUP else CUP, self.arcs, self.rays, self.size)

    def partner(self):
        """Map vertex -> other endpoint of its arc (rays map to None)."""
        p = dict.fromkeys(self.rays)
        for i, j in self.arcs:
            p[i] = j
            p[j] = i
        return p

    def shape(self):
        """Kind-independent key, so that ``b`` and ``b.mirror()`` compare equal."""
        return (self.arcs, self.rays)

    def __str__(self):
        s = "".join(f"({i},{j})" for i, j in self.arcs)
        if self.rays:
            s += "|rays:" + ",".join(map(str, self.rays))
        return s


def make_diagram(kind, arcs, size):
    arcs = tuple(sorted(tuple(a) for a in arcs))
    used = {v for a in arcs for v in a}
    rays = tuple(v for v in range(size) if v not in used)
    return ArcDiagram(kind, arcs, rays, size)


def parse_diagram(text, kind=CUP):
    """Inverse of ``str(ArcDiagram)``; the size is inferred from the vertices."""
    body, _, rays = text.partition("|rays:")
    arcs = []
    for chunk in body.split(")"):
        chunk = chunk.strip().lstrip("(")
        if chunk:
            i, j = chunk.split(",")
            arcs.append((int(i), int(j)))
    ray_list = [int(r) for r in rays.split(",") if r.strip()]
    size = len(ray_list) + 2 * len(arcs)
    d = make_diagram(kind, arcs, size)
    if list(d.rays) != sorted(ray_list):
        raise ValueError(f"inconsistent diagram text {text!r}")
    return d


def cup_diagram_of(w):
    """The unique cup diagram making ``w`` oriented of degree 0.

    Greedy: repeatedly join neighbouring unmatched (DOWN, UP) pairs.
    """
    stack = []
    arcs = []
    for i, c in enumerate(w):
        if c == DOWN:
            stack.append(i)
        elif stack:
            arcs.append((stack.pop(), i))
    return make_diagram(CUP, arcs, len(w))


def cap_diagram_of(w):
    return cup_diagram_of(w).mirror()


def is_oriented(diagram, w):
    if diagram.size != len(w):
        return False
    for i, j in diagram.arcs:
        if w[i] == w[j]:
            return False
    seen_down = False
    for r in diagram.rays:
        if w[r] == DOWN:
            seen_down = True
        elif seen_down:
            return False
    return True


def arc_degree(diagram, w):
    """Number of clockwise arcs (left endpoint UP) of an oriented half."""
    if not is_oriented(diagram, w):
        raise OrientationError(f"{diagram} is not oriented by {w}")
    return sum(1 for i, _ in diagram.arcs if w[i] == UP)


def degree(cup, w, cap):
    return arc_degree(cup, w) + arc_degree(cap, w)


def nesting_numbers(c):
    """For arcs numbered by right endpoint, the number of arcs nested in each."""
    arcs = sorted(c.arcs, key=lambda a: a[1])
    return [sum(1 for k, l in arcs if i < k and l < j) for i, j in arcs]


def weight_from_text(s):
    return check_weight(s.strip())
