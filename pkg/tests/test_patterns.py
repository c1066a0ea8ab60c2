from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from meshpatterns.patterns import (
    CATALOG, MeshPattern, Permutation, catalog_pattern, count_occurrences, find_occurrences,
    is_irreducible, parse_mesh_pattern, parse_permutation, pattern_from_json, rotate180,
    rotate_permutation,
)


def test_parse_permutation_forms():
    assert parse_permutation("24531") == (2, 4, 5, 3, 1)
    assert parse_permutation("") == ()
    p = parse_permutation("10,2,1,3,4,5,6,7,8,9")
    assert len(p) == 10 and p[0] == 10
    assert str(p) == "10,2,1,3,4,5,6,7,8,9"
    assert str(parse_permutation("312")) == "312"


@pytest.mark.parametrize("bad", ["122", "1a3", "0,1", "1,,2", "13"])
def test_parse_permutation_rejects(bad):
    with pytest.raises(ValueError):
        parse_permutation(bad)


def test_parse_mesh_pattern():
    p = parse_mesh_pattern("231;1,2 2,1")
    assert p.perm == (2, 3, 1)
    assert p.shaded == {(1, 2), (2, 1)}
    assert parse_mesh_pattern("1;").shaded == frozenset()
    assert parse_mesh_pattern("12;0,0 0,1 0,2 1,0 2,0") == catalog_pattern("12")


@pytest.mark.parametrize("bad", ["21;3,0", "21;0,0 0,0", "21", "21;0-0", "22;"])
def test_parse_mesh_pattern_rejects(bad):
    with pytest.raises(ValueError):
        parse_mesh_pattern(bad)


def test_canonical_text_and_json_roundtrip():
    p = parse_mesh_pattern("231;2,1 1,2")
    assert str(p) == "231;1,2 2,1"
    assert parse_mesh_pattern(str(p)) == p
    assert pattern_from_json(p.to_json()) == p
    assert parse_mesh_pattern(p.to_json()) == p


def test_json_rejects_duplicate_boxes():
    with pytest.raises(ValueError):
        pattern_from_json('{"perm": [1], "shaded": [[0, 0], [0, 0]]}')


def test_occurrences_in_24531():
    # the definition admits 241, 453 and also 231 (positions 1, 4, 5);
    # 251 and 451 are blocked by 4 and 3 in shaded boxes
    p = parse_mesh_pattern("231;1,2 2,1")
    host = parse_permutation("24531")
    occ = find_occurrences(p, host)
    assert occ == [(1, 2, 5), (1, 4, 5), (2, 3, 4)]
    values = {tuple(host[i - 1] for i in o) for o in occ}
    assert {(2, 4, 1), (4, 5, 3)} <= values
    assert (2, 5, 1) not in values and (4, 5, 1) not in values
    assert count_occurrences(p, host) == 3


def test_small_occurrence_examples():
    assert count_occurrences("12;", (2, 3, 1)) == 1
    z = catalog_pattern("Z")
    assert count_occurrences(z, (1,)) == 1
    assert count_occurrences(z, (1, 2)) == 0
    assert count_occurrences(z, (2, 1)) == 2
    assert find_occurrences("123;", (2, 1)) == []
    assert count_occurrences(MeshPattern(Permutation(()), frozenset()), (3, 1, 2)) == 1


@pytest.mark.parametrize("perm,expected", [((2, 1), True), ((1,), False), ((2, 3, 1), False),
                                            ((3, 1, 2), True), ((), False), ((1, 2), False)])
def test_is_irreducible_examples(perm, expected):
    assert is_irreducible(perm) is expected


def _irreducible_by_definition(perm):
    if len(perm) < 2:
        return False
    return not any(all(perm[j] < perm[i] for j in range(i)) for i in range(1, len(perm)))


def test_is_irreducible_matches_definition_up_to_6():
    for n in range(7):
        for perm in permutations(range(1, n + 1)):
            assert is_irreducible(perm) == _irreducible_by_definition(perm)


def test_rotation_examples():
    assert rotate180(catalog_pattern("X")) == catalog_pattern("X")
    assert rotate180(parse_mesh_pattern("12;0,0")) == parse_mesh_pattern("12;2,2")
    assert rotate_permutation((2, 3, 1)) == (3, 1, 2)


def test_catalog():
    assert catalog_pattern("66") == parse_mesh_pattern("12;0,0 0,1 0,2 1,0 1,1 2,0")
    assert catalog_pattern("X") == parse_mesh_pattern("1;0,1 1,0")
    assert catalog_pattern("Z") == parse_mesh_pattern("1;0,0 1,1")
    assert set(CATALOG) >= {"Y", "12", "13", "16", "17", "19", "20", "22", "27", "28", "30", "33", "34"}
    with pytest.raises(KeyError):
        catalog_pattern("99")


# independent occurrence test written straight from the definition
def _naive_occurrences(p, host):
    n, k = len(host), len(p.perm)
    out = []
    for pos in combinations(range(n), k):
        sub = [host[i] for i in pos]
        if sorted(range(k), key=lambda i: sub[i]) != sorted(range(k), key=lambda i: p.perm[i]):
            continue
        xs = [0] + [i + 1 for i in pos] + [n + 1]
        ys = [0] + sorted(sub) + [n + 1]
        blocked = any(xs[a] < t + 1 < xs[a + 1] and ys[b] < host[t] < ys[b + 1]
                      for (a, b) in p.shaded for t in range(n))
        if not blocked:
            out.append(tuple(i + 1 for i in pos))
    return out


@st.composite
def mesh_patterns(draw, max_len=3):
    k = draw(st.integers(1, max_len))
    perm = draw(st.permutations(range(1, k + 1)))
    boxes = draw(st.sets(st.tuples(st.integers(0, k), st.integers(0, k))))
    return MeshPattern(Permutation(perm), frozenset(boxes))


@st.composite
def hosts(draw, max_len=7):
    n = draw(st.integers(0, max_len))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@settings(max_examples=200, deadline=None)
@given(mesh_patterns(), hosts())
def test_occurrences_match_definition(p, host):
    assert find_occurrences(p, host) == _naive_occurrences(p, host)


@settings(max_examples=200, deadline=None)
@given(mesh_patterns(), hosts(), st.data())
def test_shading_more_boxes_never_adds_occurrences(p, host, data):
    k = len(p.perm)
    extra = data.draw(st.sets(st.tuples(st.integers(0, k), st.integers(0, k))))
    more = p.with_shading(p.shaded | extra)
    assert set(find_occurrences(more, host)) <= set(find_occurrences(p, host))


@settings(max_examples=200, deadline=None)
@given(mesh_patterns(), hosts())
def test_rotation_equivariance(p, host):
    assert count_occurrences(rotate180(p), rotate_permutation(host)) == count_occurrences(p, host)
    assert rotate180(rotate180(p)) == p
