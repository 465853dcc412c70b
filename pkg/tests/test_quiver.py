from arcext.dg import get_splitting
from arcext.quiver import (
    adjacent,
    emit_dot,
    n1_path_rank,
    n1_relations,
    n1_word_count,
    n2_label,
    n2_relations,
    n2_weight,
    quiver_presentation,
)


def test_adjacent():
    assert adjacent("v^v", "^vv")
    assert not adjacent("vv^", "^vv")


def test_n2_labels_round_trip():
    for w in ["vv^^", "^v^v", "^^vv", "v^v^"]:
        k, l = n2_label(w)
        assert k > l
        assert n2_weight(k, l, 4) == w


def test_n1_quiver():
    for N in (1, 2, 3, 4):
        S = get_splitting(N, 1)
        rel = n1_relations(S)
        assert rel["failures"] == []
        assert n1_word_count(N) == n1_path_rank(S) == len(S.classes()) == (N + 1) ** 2
        q = quiver_presentation(S)
        assert len(q.arrows) == 2 * N
        assert {a["colour"] for a in q.arrows} == {"cyan", "black"}
        assert q.report["generates"]


def test_n2_quiver_relations():
    S = get_splitting(2, 2)
    q = quiver_presentation(S)
    assert q.report["generates"]
    rows = n2_relations(S, q)
    assert rows and all(r["ok"] for r in rows)
    for r in rows:
        if r["scalar"] is not None:
            assert r["scalar"] == r["expected_sign"]


def test_corner_arrows_are_flagged():
    q = quiver_presentation(get_splitting(2, 2))
    corner = [a for a in q.arrows if a["corner"]]
    assert sorted(a["colour"] for a in corner) == ["black", "cyan"]
    assert sorted((a["r"], a["t"]) for a in corner) == [(0, 2), (1, 0)]


def test_dot_output():
    text = emit_dot(quiver_presentation(get_splitting(1, 1)))
    assert text.startswith("digraph E_1_1 {")
    assert '"v^" -> "^v"' in text
    assert text.rstrip().endswith("}")
