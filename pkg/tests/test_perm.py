"""Permutation arithmetic, cycle structure, and text forms."""
import math

import pytest
from hypothesis import given, strategies as st

from quandlekit import CycleType, Permutation, compose, conjugate
from quandlekit.errors import DegreeMismatch, ParseError


def P(text, degree):
    return Permutation.parse(text, degree)


def perms(degree):
    return st.permutations(range(degree)).map(Permutation)


any_perm = st.integers(min_value=1, max_value=10).flatmap(perms)


# -- composition and conjugation -------------------------------------------


def test_compose_identity_is_neutral():
    p = P("(1,4,2)(3,5)", 5)
    e = Permutation.identity(5)
    assert compose(e, p) == p
    assert compose(p, e) == p


def test_compose_applies_right_factor_first():
    p = P("(1,2)", 3)
    q = P("(2,3)", 3)
    # (p*q)(2) = p(q(2)) = p(3) = 3  (1-based reading)
    assert (p * q)(1) == 2


def test_compose_with_inverse_is_identity():
    p = P("(1,3,2,5)", 6)
    assert (p * p.inverse()).is_identity()


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_conjugate_by_identity():
    b = P("(2,3)", 3)
    assert conjugate(Permutation.identity(3), b) == b


def test_conjugate_self_is_self():
    a = P("(1,2,3)", 4)
    assert conjugate(a, a) == a


def test_conjugate_transposition():
    # conjugating (2,3) by (1,2) relabels the moved points: gives (1,3)
    assert conjugate(P("(1,2)", 3), P("(2,3)", 3)) == P("(1,3)", 3)


@given(st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_compose_associative(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)


@given(st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.tuples(perms(n), perms(n))))
def test_conjugation_preserves_cycle_type(pair):
    a, b = pair
    assert conjugate(a, b).cycle_type() == b.cycle_type()


# -- cycle structure -----------------------------------------------------------


def test_cycle_type_of_golden_row(golden):
    assert golden.phi(0).cycle_type() == CycleType([(1, 1), (2, 1), (3, 1), (6, 1)])


def test_cycle_type_identity():
    assert Permutation.identity(5).cycle_type() == CycleType([(1, 5)])


def test_cycle_type_five_cycle_in_degree_seven():
    assert P("(1,2,3,4,5)", 7).cycle_type() == CycleType([(1, 2), (5, 1)])


def test_squaring_golden_row_splits_the_six_cycle(golden):
    sq = golden.phi(0) * golden.phi(0)
    assert sq.cycle_type() == CycleType([(1, 3), (3, 3)])


def test_order_identity():
    assert Permutation.identity(4).order() == 1


def test_order_golden_row(golden):
    assert golden.phi(0).order() == 6


def test_order_mixed_cycles():
    assert P("(1,2)(3,4,5)", 5).order() == 6


@given(any_perm)
def test_order_is_lcm_of_cycle_lengths(p):
    assert p.order() == math.lcm(*(len(c) for c in p.cycles()))
    assert (p ** p.order()).is_identity()


def test_k_part_golden(golden):
    assert golden.phi(0).k_part(2) == frozenset({4, 8})   # points 5, 9
    assert golden.phi(4).k_part(2) == frozenset({0, 8})   # points 1, 9


def test_k_part_identity_has_no_two_cycles():
    assert Permutation.identity(6).k_part(2) == frozenset()


def test_k_tilde_part_golden(golden):
    assert golden.phi(0).k_tilde_part(2) == frozenset({0, 4, 8})
    assert golden.phi(0).k_tilde_part(3) == frozenset({0, 1, 2, 3})


@given(any_perm)
def test_k_tilde_at_order_covers_everything(p):
    assert p.k_tilde_part(p.order()) == frozenset(range(p.degree))


@given(any_perm, st.integers(min_value=1, max_value=12))
def test_k_tilde_is_union_of_divisor_parts(p, k):
    union = frozenset().union(
        *(p.k_part(d) for d in range(1, k + 1) if k % d == 0))
    assert p.k_tilde_part(k) == union


# -- cycle type object -----------------------------------------------------------


def test_cycle_type_str_form():
    assert str(CycleType([(1, 1), (2, 1), (3, 1), (6, 1)])) == "1^1 2^1 3^1 6^1"


def test_cycle_type_degree_and_largest():
    ct = CycleType([(1, 2), (4, 1)])
    assert ct.degree == 6
    assert ct.largest == 4
    assert ct.multiplicity(4) == 1
    assert ct.multiplicity(3) == 0


def test_cycle_type_rejects_unsorted_parts():
    with pytest.raises(ValueError):
        CycleType([(3, 1), (2, 1)])


# -- text forms ------------------------------------------------------------------


def test_parse_fixed_points_optional():
    assert P("(5,9)(2,4,3)(6,12,7,10,8,11)", 12) == P(
        "(1)(5,9)(2,4,3)(6,12,7,10,8,11)", 12)


def test_cycle_string_sorted_by_least_moved_point(golden):
    assert golden.phi(0).cycle_string() == "(2,4,3)(5,9)(6,12,7,10,8,11)"


def test_identity_prints_as_empty_cycle():
    assert Permutation.identity(3).cycle_string() == "()"
    assert P("()", 3).is_identity()


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        P("(1,2) junk", 3)
    with pytest.raises(ParseError):
        P("(1,5)", 3)


def test_one_line_round_trip(golden):
    p = golden.phi(0)
    assert Permutation.from_one_line(p.one_line()) == p
    assert p.one_line() == "1 4 2 3 9 12 10 11 5 8 6 7"


@given(any_perm)
def test_cycle_string_round_trip(p):
    assert Permutation.parse(p.cycle_string(), p.degree) == p
