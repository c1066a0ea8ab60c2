import pytest
from hypothesis import given, settings, strategies as st

from meshpatterns.embed import (
    embed_at_box, embed_multi, embed_multi_sequential, figure1_pattern, run34_pattern,
    staircase_pattern,
)
from meshpatterns.patterns import MeshPattern, Permutation, catalog_pattern, parse_mesh_pattern

FIGURE_BOXES = {
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6),
    (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 0), (2, 1), (2, 2), (2, 3), (2, 4), (2, 6),
    (3, 0), (3, 1), (3, 2), (3, 3), (3, 4), (3, 5), (3, 6),
    (4, 0), (4, 1), (4, 2), (4, 3), (4, 5), (4, 6),
    (5, 0), (5, 1), (5, 2), (5, 5), (5, 6),
    (6, 0), (6, 2), (6, 3), (6, 4), (6, 5), (6, 6),
}


@pytest.mark.parametrize("inner,target", [("1;", "12"), ("1;0,1 1,0 1,1", "13"),
                                          ("1;0,1 1,0", "17"), ("1;0,0", "66")])
def test_y_insertions_give_catalog_patterns(inner, target):
    assert embed_at_box(catalog_pattern("Y"), (1, 1), parse_mesh_pattern(inner)) == catalog_pattern(target)


def test_stretch_rule():
    # shaded (0, 0) of the outer pattern covers both halves of the widened row 0
    got = embed_at_box(parse_mesh_pattern("1;0,0"), (1, 0), parse_mesh_pattern("1;"))
    assert got == parse_mesh_pattern("21;0,0 0,1")


def test_staircase_and_run34():
    assert staircase_pattern(2) == catalog_pattern("33")
    assert staircase_pattern(1) == catalog_pattern("X")
    assert run34_pattern(2) == catalog_pattern("34")
    assert run34_pattern(1) == catalog_pattern("Z")
    p = run34_pattern(3, (3, 2), parse_mesh_pattern("1;"))
    assert p.perm == (2, 4, 3, 1)
    with pytest.raises(ValueError):
        run34_pattern(3, (2, 2))
    with pytest.raises(ValueError):
        staircase_pattern(0)


def test_figure1():
    p = figure1_pattern()
    assert p.perm == (1, 6, 2, 3, 4, 5)
    assert p.shaded == FIGURE_BOXES
    assert len(p.perm) == 6
    assert (4, 5) in p.shaded and (4, 4) not in p.shaded and (6, 1) not in p.shaded


def test_embed_errors():
    y = catalog_pattern("Y")
    one = parse_mesh_pattern("1;")
    with pytest.raises(ValueError):
        embed_at_box(y, (0, 0), one)  # shaded
    with pytest.raises(ValueError):
        embed_at_box(y, (2, 0), one)  # out of range
    with pytest.raises(ValueError):
        embed_at_box(y, (1, 1), MeshPattern(Permutation(()), frozenset()))
    with pytest.raises(ValueError):
        embed_multi(parse_mesh_pattern("12;"), {(0, 0): one, (0, 1): one})


def test_none_leaves_box_alone():
    twenty = catalog_pattern("20")
    assert embed_multi(twenty, {(2, 2): None, (1, 0): None}) == twenty


@st.composite
def multi_case(draw):
    k = draw(st.integers(1, 3))
    perm = draw(st.permutations(range(1, k + 1)))
    cols = draw(st.lists(st.integers(0, k), unique=True, min_size=1, max_size=k + 1))
    rows = draw(st.lists(st.integers(0, k), unique=True, min_size=len(cols), max_size=len(cols)))
    boxes = list(zip(cols, rows))
    shaded = draw(st.sets(st.tuples(st.integers(0, k), st.integers(0, k)))) - set(boxes)
    outer = MeshPattern(Permutation(perm), frozenset(shaded))
    inners = {}
    for b in boxes:
        m = draw(st.integers(1, 2))
        ip = draw(st.permutations(range(1, m + 1)))
        ish = draw(st.sets(st.tuples(st.integers(0, m), st.integers(0, m))))
        inners[b] = MeshPattern(Permutation(ip), frozenset(ish))
    return outer, inners


@settings(max_examples=150, deadline=None)
@given(multi_case())
def test_simultaneous_equals_sequential(case):
    outer, inners = case
    a = embed_multi(outer, inners)
    assert a == embed_multi_sequential(outer, inners)
    assert len(a.perm) == len(outer.perm) + sum(len(p.perm) for p in inners.values())
