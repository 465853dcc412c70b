from arcext.shelton import Shelton, coset_leq, cross_check, right_multiply, shelton_dims, shelton_table, support_violations


def test_right_multiply():
    assert right_multiply("v^v", 1) == ("^vv", True, False)
    assert right_multiply("^vv", 1) == ("v^v", True, True)
    assert right_multiply("vv^", 1) == ("vv^", False, False)


def test_smallest_case():
    table = shelton_table(1, 1)
    assert sum(table.values()) == 4
    assert shelton_dims("v^", "^v") == {0: 1, 1: 1}
    assert shelton_dims("^v", "v^") == {}


def test_coset_order_reverses_weight_order():
    assert coset_leq("^v", "v^")
    assert not coset_leq("v^", "^v")


def test_choice_of_reflection_does_not_matter():
    for m, n in [(3, 2), (2, 3), (3, 3)]:
        assert shelton_table(m, n, Shelton("min")) == shelton_table(m, n, Shelton("max"))


def test_support():
    for m, n in [(2, 2), (3, 3)]:
        assert support_violations(m, n) == []


def test_agrees_with_hom_complex():
    for m, n in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        r = cross_check(m, n)
        assert r["discrepancies"] == []
        assert r["total_shelton"] == r["total_ext"]
