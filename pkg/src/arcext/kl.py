"""Kazhdan-Lusztig polynomials from labeled cap diagrams.

The bounded chambers of a cap diagram are in bijection with its caps (the
region just inside a cap).  A labeling assigns a nonnegative integer to each
cap; the unbounded chamber carries 0.
"""

from dataclasses import dataclass

from .diagrams import DOWN, bruhat_leq, cap_diagram_of, check_weight, relative_length, weight_length
from .laurent import LaurentPoly


@dataclass(frozen=True)
class LabeledCapDiagram:
    base: object  # ArcDiagram of kind CAP
    labels: tuple  # one label per cap, caps sorted by left endpoint

    @property
    def size(self):
        """|C|, the sum of all labels."""
        return sum(self.labels)

    def label_of(self, cap):
        return self.labels[self.base.arcs.index(cap)]


def _parents(arcs):
    """Index of the smallest cap strictly enclosing each cap, or None."""
    out = []
    for i, j in arcs:
        best = None
        for k, (a, b) in enumerate(arcs):
            if a < i and j < b and (best is None or arcs[best][0] < a):
                best = k
        out.append(best)
    return out


def enumerate_labelings(lam, mu):
    check_weight(lam)
    check_weight(mu)
    if not bruhat_leq(lam, mu):
        return []
    base = cap_diagram_of(mu)
    arcs = list(base.arcs)
    parent = _parents(arcs)
    inner = [all(p != k for p in parent) for k in range(len(arcs))]
    upper = []
    for k, (i, j) in enumerate(arcs):
        if inner[k]:
            down = i if mu[i] == DOWN else j
            upper.append(relative_length(down, lam, mu))
        else:
            upper.append(None)
    # outer caps first, so that a cap is labeled after its parent
    order = sorted(range(len(arcs)), key=lambda k: arcs[k][1] - arcs[k][0], reverse=True)
    # a non-inner cap is bounded by the smallest bound among inner caps below it
    cap_bound = {}
    for k in range(len(arcs)):
        i, j = arcs[k]
        below = [upper[t] for t in range(len(arcs)) if inner[t] and i <= arcs[t][0] and arcs[t][1] <= j]
        cap_bound[k] = min(below)

    out = []
    labels = [0] * len(arcs)

    def go(pos):
        if pos == len(order):
            out.append(LabeledCapDiagram(base, tuple(labels)))
            return
        k = order[pos]
        low = 0 if parent[k] is None else labels[parent[k]]
        for v in range(low, cap_bound[k] + 1):
            labels[k] = v
            go(pos + 1)
        labels[k] = 0

    go(0)
    return out


def kl_poly(lam, mu):
    """p_{lam,mu}(q) = q^{l(lam)-l(mu)} * sum over labelings C of q^{-2|C|}."""
    labs = enumerate_labelings(lam, mu)
    if not labs:
        return LaurentPoly()
    top = weight_length(lam) - weight_length(mu)
    coeffs = {}
    for c in labs:
        e = top - 2 * c.size
        coeffs[e] = coeffs.get(e, 0) + 1
    return LaurentPoly(coeffs)


def kl_matrix(m, n):
    from .diagrams import enumerate_weights

    ws = enumerate_weights(m, n)
    return {(a, b): kl_poly(a, b) for a in ws for b in ws}
