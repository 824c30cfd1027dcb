import pytest
from hypothesis import given
from hypothesis import strategies as st

from submodlat.errors import SpecParseError
from submodlat.perms import (
    compose,
    cycles,
    format_cycles,
    identity,
    inverse,
    is_permutation,
    order_of,
    parse_cycles,
)

perms = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.permutations(range(n)).map(tuple)
)


def same_degree_pairs(k):
    return st.integers(min_value=1, max_value=8).flatmap(
        lambda n: st.tuples(*[st.permutations(range(n)).map(tuple)] * k)
    )


def test_compose_applies_right_factor_first():
    # swap 0,1 after swapping 1,2 is the 3-cycle 0->1->2->0
    a = (1, 0, 2)
    b = (0, 2, 1)
    assert compose(a, b) == (1, 2, 0)
    assert format_cycles(compose(a, b)) == "(0 1 2)"


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose((0, 1), (0, 1, 2))


@given(same_degree_pairs(3))
def test_compose_associative(ps):
    a, b, c = ps
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perms)
def test_inverse_cancels(p):
    e = identity(len(p))
    assert compose(p, inverse(p)) == e
    assert compose(inverse(p), p) == e


@given(same_degree_pairs(2))
def test_identity_neutral(ps):
    a, _ = ps
    e = identity(len(a))
    assert compose(a, e) == a
    assert compose(e, a) == a


@given(perms)
def test_order_matches_iterated_composition(p):
    n = order_of(p)
    acc = identity(len(p))
    for _ in range(n):
        acc = compose(p, acc)
    assert acc == identity(len(p))
    # and no smaller positive power is the identity
    acc = p
    for _ in range(n - 1):
        assert acc != identity(len(p))
        acc = compose(p, acc)


@given(perms)
def test_cycle_notation_round_trips(p):
    assert parse_cycles(format_cycles(p), len(p)) == p


def test_cycles_of_identity():
    assert cycles(identity(4)) == []
    assert format_cycles(identity(4)) == "()"


def test_is_permutation():
    assert is_permutation((2, 0, 1))
    assert not is_permutation((0, 0, 1))
    assert not is_permutation((0, 3, 1))


def test_parse_rejects_out_of_range_point():
    with pytest.raises(SpecParseError):
        parse_cycles("(0 5)", 3)


def test_parse_rejects_repeated_point():
    with pytest.raises(SpecParseError):
        parse_cycles("(0 1)(1 2)", 3)


def test_parse_rejects_garbage():
    with pytest.raises(SpecParseError):
        parse_cycles("(0 x)", 3)
    with pytest.raises(SpecParseError):
        parse_cycles("0 1", 3)


def test_parse_identity_text():
    assert parse_cycles("()", 3) == identity(3)
