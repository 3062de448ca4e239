import random

import pytest
from hypothesis import given, settings, strategies as st

from supersnark.coloring import (
    ABNORMAL,
    POOR,
    RICH,
    ColorScheme,
    abnormal_edges,
    classify_edge,
    find_kempe_chain,
    is_normal,
    is_proper,
    kempe_swap,
    permute_colors,
    poor_count,
    restriction,
    rich_count,
    scheme_of,
    schemes_consistent,
)
from supersnark.multipole import induced_submultipole, make_multipole
from supersnark.oracle import find_normal_coloring, search_normal_coloring
from supersnark.petersen import template


def k4_three_coloring(k4):
    return {"v1-v2": 1, "v3-v4": 1, "v1-v3": 2, "v2-v4": 2, "v1-v4": 3, "v2-v3": 3}


def test_proper_k4(k4):
    assert is_proper(k4, k4_three_coloring(k4))


def test_improper_all_ones(p10):
    col = {e.id: 1 for e in p10.edges}
    assert not is_proper(p10, col)


def test_r_template_is_proper(layout):
    inst = template("R", 1, 2, 3)
    assert is_proper(layout.multipole, inst.coloring)


def test_three_coloring_all_poor(k4):
    col = k4_three_coloring(k4)
    assert all(classify_edge(k4, col, e.id) == POOR for e in k4.edges)
    assert is_normal(k4, col)


def test_r_has_nine_poor_edges(layout):
    inst = template("R", 1, 2, 3)
    assert poor_count(layout.multipole, inst.coloring) == 9
    assert is_normal(layout.multipole, inst.coloring)


def test_classification_by_palette_union():
    # two cubic vertices joined by one edge, palettes set by semiedge colors
    m = make_multipole(
        ["a", "b"],
        [("ab", "a", "b")],
        [("a1", "a"), ("a2", "a"), ("b1", "b"), ("b2", "b")],
    )
    rich = {"ab": 1, "a1": 2, "a2": 3, "b1": 4, "b2": 5}
    assert classify_edge(m, rich, "ab") == RICH
    abnormal = {"ab": 1, "a1": 2, "a2": 3, "b1": 2, "b2": 4}
    assert classify_edge(m, abnormal, "ab") == ABNORMAL
    poor = {"ab": 1, "a1": 2, "a2": 3, "b1": 2, "b2": 3}
    assert classify_edge(m, poor, "ab") == POOR


def test_k4_four_coloring_with_abnormal_edge_not_normal(k4):
    col = {"v1-v2": 1, "v3-v4": 1, "v1-v3": 2, "v2-v4": 2, "v1-v4": 3, "v2-v3": 4}
    assert is_proper(k4, col)
    assert classify_edge(k4, col, "v1-v2") == ABNORMAL
    assert not is_normal(k4, col)
    assert "v1-v2" in abnormal_edges(k4, col)


def test_scheme_of(layout):
    inst = template("R", 1, 2, 3)
    m = layout.multipole
    assert scheme_of(m, inst.coloring, "R1") == ColorScheme(1, frozenset({2, 3}))
    # the left scheme at the dock-2 semiedge
    assert scheme_of(m, inst.coloring, "L2") == ColorScheme(1, frozenset({2, 3}))
    assert scheme_of(m, inst.coloring, "L1").lead == 2


def test_schemes_consistent():
    a = ColorScheme(1, frozenset({2, 3}))
    assert schemes_consistent(a, ColorScheme(1, frozenset({2, 3})))
    assert schemes_consistent(a, ColorScheme(1, frozenset({4, 5})))
    assert not schemes_consistent(a, ColorScheme(2, frozenset({1, 3})))
    assert not schemes_consistent(a, ColorScheme(1, frozenset({2, 4})))


def test_kempe_chain_on_r(layout):
    inst = template("R", 1, 2, 3)
    chain, terminal = find_kempe_chain(layout.multipole, inst.coloring, "L1", (2, 3))
    assert terminal == "L3"
    # the whole (2,3)-subgraph is this one chain: 2 semiedges + 7 edges
    assert len(chain) == 9


def test_kempe_chain_absent_color(layout):
    inst = template("R", 1, 2, 3)  # uses colors 1..3 only
    chain, terminal = find_kempe_chain(layout.multipole, inst.coloring, "L1", (2, 5))
    assert chain == ("L1",)
    assert terminal is None


def test_kempe_chain_wrong_start_color(layout):
    inst = template("R", 1, 2, 3)
    with pytest.raises(ValueError):
        find_kempe_chain(layout.multipole, inst.coloring, "L1", (1, 4))


def test_kempe_swap_gives_complement(layout):
    m = layout.multipole
    inst = template("R", 1, 2, 3)
    chain, _ = find_kempe_chain(m, inst.coloring, "L1", (2, 3))
    swapped = kempe_swap(m, inst.coloring, chain)
    assert swapped == template("R", 1, 3, 2).coloring
    assert kempe_swap(m, swapped, chain) == inst.coloring


def test_kempe_swap_on_l_chain(layout):
    m = layout.multipole
    inst = template("L1", 1, 2, 3, (4, 5))
    swapped = kempe_swap(m, inst.coloring, inst.chain, (4, 5))
    assert is_normal(m, swapped)
    assert swapped["L2"] == 5 and swapped["L3"] == 5


def test_permute_identity(layout):
    inst = template("R", 1, 2, 3)
    assert permute_colors(inst.coloring, {c: c for c in range(1, 6)}) == inst.coloring


def test_permute_riches_poor_count(layout):
    inst = template("R", 1, 2, 3)
    out = permute_colors(inst.coloring, {1: 2, 2: 4, 3: 5, 4: 1, 5: 3})
    assert out == template("R", 2, 4, 5).coloring
    assert poor_count(layout.multipole, out) == 9


def test_permute_rejects_non_permutation(layout):
    inst = template("R", 1, 2, 3)
    with pytest.raises(ValueError):
        permute_colors(inst.coloring, {1: 1, 2: 1, 3: 3, 4: 4, 5: 5})


@settings(max_examples=100, deadline=None)
@given(st.permutations([1, 2, 3, 4, 5]))
def test_poor_count_invariant_under_permutation(perm):
    from supersnark.petersen import petersen_superedge

    layout = petersen_superedge()
    pi = {k + 1: v for k, v in enumerate(perm)}
    for tid, chain in (("R", None), ("L1", (4, 5))):
        inst = template(tid, 1, 2, 3, chain)
        before = poor_count(layout.multipole, inst.coloring)
        after = poor_count(layout.multipole, permute_colors(inst.coloring, pi))
        assert before == after


def test_restriction_identity(p10, base_sigma):
    assert restriction(base_sigma, p10, p10) == base_sigma


def test_restriction_to_empty(p10, base_sigma):
    sub = induced_submultipole(p10, [])
    assert restriction(base_sigma, p10, sub) == {}


def test_restriction_carries_cut_colors(p10, base_sigma):
    sub = induced_submultipole(p10, [v for v in p10.vertices if v != "o0"])
    res = restriction(base_sigma, p10, sub)
    for s in sub.semiedges:
        src = s.id[len("cut:"):].rsplit("@", 1)[0]
        assert res[s.id] == base_sigma[src]
    assert is_normal(sub, res)


@settings(max_examples=30, deadline=None)
@given(st.permutations([1, 2, 3, 4, 5]))
def test_restriction_commutes_with_permutation(perm):
    from supersnark.petersen import petersen_graph

    p10 = petersen_graph()
    sigma = find_normal_coloring(p10)
    sub = induced_submultipole(p10, [v for v in p10.vertices if v not in ("o0", "o2")])
    pi = {k + 1: v for k, v in enumerate(perm)}
    a = restriction(permute_colors(sigma, pi), p10, sub)
    b = permute_colors(restriction(sigma, p10, sub), pi)
    assert a == b


def test_poor_rich_abnormal_partition(layout, base_sigma, p10):
    """Classification is total: every internal edge lands in one class."""
    for m, col in ((p10, base_sigma), (layout.multipole, template("L1", 1, 2, 3).coloring)):
        total = poor_count(m, col) + rich_count(m, col) + len(abnormal_edges(m, col))
        assert total == len(m.edges)
