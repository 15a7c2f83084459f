from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from kostant.rootsys import build_root_system
from kostant.weyl import (
    act,
    compose,
    enumerate_elements,
    format_word,
    from_word,
    identity,
    inverse,
    length,
    parse_word,
    reduced_word,
    simple_reflection,
    weyl_order,
)

SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G2", 2)]


def test_orders():
    assert weyl_order(build_root_system("A", 2)) == 6
    assert weyl_order(build_root_system("B", 3)) == 48
    assert weyl_order(build_root_system("G2", 2)) == 12


def test_small_groups():
    a1 = list(enumerate_elements(build_root_system("A", 1)))
    assert sorted(e.sign for e in a1) == [-1, 1]
    b2 = list(enumerate_elements(build_root_system("B", 2)))
    assert len(b2) == 8 and sum(e.sign == 1 for e in b2) == 4
    a4 = list(enumerate_elements(build_root_system("A", 4)))
    assert len(a4) == 120 and sum(e.sign for e in a4) == 0


def test_action_examples():
    a2 = build_root_system("A", 2)
    assert act(a2, simple_reflection(a2, 1), (1, 0)) == (-1, 0)
    g2 = build_root_system("G2", 2)
    lam_rho = g2.fw_to_root_coords((1, 2))
    mu_rho = g2.fw_to_root_coords((2, 1))
    image = act(g2, simple_reflection(g2, 1), lam_rho)
    assert tuple(a - b for a, b in zip(image, mu_rho)) == (0, 1)


def test_words():
    b3 = build_root_system("B", 3)
    assert reduced_word(b3, identity(b3)) == []
    assert reduced_word(b3, from_word(b3, [2, 3])) == [2, 3]
    a2 = build_root_system("A", 2)
    longest = max(enumerate_elements(a2), key=lambda e: length(a2, e))
    assert reduced_word(a2, longest) == [1, 2, 1]
    assert parse_word("s2s3") == [2, 3] and parse_word("1") == []
    assert format_word([]) == "1" and format_word([1, 2]) == "s1s2"
    with pytest.raises(ValueError):
        parse_word("s2x")


@pytest.mark.parametrize("fam,r", SMALL)
def test_group_invariants(fam, r):
    rs = build_root_system(fam, r)
    elems = list(enumerate_elements(rs))
    assert len(elems) == len(set(elems)) == weyl_order(rs)
    assert sum(e.sign for e in elems) == 0
    gens = [simple_reflection(rs, i) for i in range(1, r + 1)]
    for e in elems:
        ln = length(rs, e)
        assert e.sign == (-1) ** ln
        w = reduced_word(rs, e)
        assert len(w) == ln and from_word(rs, w) == e
        assert compose(rs, e, inverse(rs, e)) == identity(rs)
        for g in gens:
            assert abs(length(rs, compose(rs, g, e)) - ln) == 1


@pytest.mark.parametrize("fam,r", SMALL + [("A", 4), ("B", 4)])
def test_action_is_isometry(fam, r):
    rs = build_root_system(fam, r)
    vecs = [tuple(F(i * j % 5 - 2, 1 + (i == j)) for j in range(r)) for i in range(3)]
    for e in enumerate_elements(rs):
        for x in vecs:
            for y in vecs:
                assert rs.inner(act(rs, e, x), act(rs, e, y)) == rs.inner(x, y)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.lists(st.integers(1, 3), max_size=8))
def test_composition_matches_action(sys_, word):
    fam, r = sys_
    rs = build_root_system(fam, r)
    word = [min(i, r) for i in word]
    e = from_word(rs, word)
    v = tuple(range(1, r + 1))
    direct = v
    for i in reversed(word):
        direct = act(rs, simple_reflection(rs, i), direct)
    assert act(rs, e, v) == direct
