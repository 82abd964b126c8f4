import itertools

import pytest
from hypothesis import given, strategies as st

from fixcalc import (
    SizeCapError, Subset, SubsetSyntaxError, Universe, UniverseMismatchError, complement,
    enumerate_subsets, join, leq, meet, parse_subset,
)
from oracles import powerset

U5 = Universe(5)


def S(u, *members):
    return Subset.of(u, members)


def test_complement_examples():
    assert complement(U5.empty()) == S(U5, 0, 1, 2, 3, 4)
    assert complement(U5.full()) == U5.empty()
    # oracle: set difference on plain sets
    expected = set(range(5)) - {0, 2}
    assert set(complement(S(U5, 0, 2))) == expected == {1, 3, 4}


def test_leq_examples():
    u = Universe(4)
    assert leq(u.empty(), S(u, 3))
    assert leq(S(u, 1, 2), S(u, 1, 2))
    assert not leq(S(u, 1, 3), S(u, 1, 2))


def test_join_meet_examples():
    u = Universe(3)
    assert join(S(u, 0), S(u, 1)) == S(u, 0, 1)
    assert meet(S(u, 0, 1), S(u, 1, 2)) == S(u, 1)
    for s in enumerate_subsets(u):
        assert meet(s, complement(s)) == u.empty()


def test_universe_mismatch_raises():
    a, b = Universe(3).empty(), Universe(4).empty()
    for op in (leq, join, meet):
        with pytest.raises(UniverseMismatchError):
            op(a, b)


def test_enumeration_order():
    u2 = Universe(2)
    assert [str(s) for s in enumerate_subsets(u2)] == ["{}", "{0}", "{1}", "{0,1}"]
    assert [str(s) for s in enumerate_subsets(Universe(1))] == ["{}", "{0}"]
    assert len(list(enumerate_subsets(Universe(4)))) == 16


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_is_bijection_onto_powerset(n):
    got = [frozenset(s) for s in enumerate_subsets(Universe(n))]
    assert len(got) == len(set(got)) == 2**n
    assert set(got) == set(powerset(n))


def test_size_caps():
    with pytest.raises(SizeCapError):
        Universe(0)
    with pytest.raises(SizeCapError):
        Universe(64)
    Universe(63)
    with pytest.raises(SizeCapError):
        enumerate_subsets(Universe(21))


def test_members_must_be_in_carrier():
    with pytest.raises(ValueError):
        Subset.of(Universe(3), [3])


@pytest.mark.parametrize("text,members", [
    ("{}", ()), ("{0,2}", (0, 2)), (" { 4 , 1 } ", (1, 4)), ("{3,3}", (3,)),
])
def test_parse(text, members):
    assert parse_subset(U5, text).members == members


@pytest.mark.parametrize("text", ["", "0,1", "{a}", "{1,,2}", "{5}", "{-1}"])
def test_parse_rejects(text):
    with pytest.raises(SubsetSyntaxError):
        parse_subset(U5, text)


@pytest.mark.parametrize("n", range(1, 7))
def test_lattice_laws_exhaustive(n):
    subsets = list(enumerate_subsets(Universe(n)))
    for a, b in itertools.product(subsets, repeat=2):
        assert leq(a, join(a, b)) and leq(meet(a, b), a)
        assert join(a, b) == join(b, a) and meet(a, b) == meet(b, a)
        assert join(a, a) == a and meet(a, a) == a
        # complement reverses the order
        assert leq(a, b) == leq(complement(b), complement(a))
        assert (leq(a, b) and leq(b, a)) == (a == b)


@pytest.mark.parametrize("n", range(1, 5))
def test_associativity_exhaustive(n):
    subsets = list(enumerate_subsets(Universe(n)))
    for a, b, c in itertools.product(subsets, repeat=3):
        assert join(join(a, b), c) == join(a, join(b, c))
        assert meet(meet(a, b), c) == meet(a, meet(b, c))


@st.composite
def triples(draw):
    n = draw(st.integers(7, 63))
    u = Universe(n)
    masks = st.integers(0, (1 << n) - 1)
    return tuple(Subset(u, draw(masks)) for _ in range(3))


@given(triples())
def test_lattice_laws_random(t):
    a, b, c = t
    assert leq(a, join(a, b)) and leq(meet(a, b), a)
    assert join(join(a, b), c) == join(a, join(b, c))
    assert meet(meet(a, b), c) == meet(a, meet(b, c))
    assert complement(complement(a)) == a
    assert leq(a, b) == leq(complement(b), complement(a))
    # transitivity
    if leq(a, b) and leq(b, c):
        assert leq(a, c)


@given(triples())
def test_text_round_trip(t):
    for s in t:
        assert parse_subset(s.universe, str(s)) == s
        assert str(s) == "{" + ",".join(str(m) for m in sorted(set(s))) + "}"
