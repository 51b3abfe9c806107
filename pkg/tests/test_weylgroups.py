"""Signed permutation groups, their actions, invariance tests and Reynolds."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qnoether.scalars import RatFn
from qnoether.skewring import SkewSpec, skew_mul
from qnoether.weylgroups import (
    SignedPerm,
    act,
    enumerate_group,
    generators,
    is_invariant,
    parse_signed_perm,
    reynolds,
)

S2 = SkewSpec.diagonal(2)
S3 = SkewSpec.diagonal(3)


def test_enumeration_sizes():
    assert len(enumerate_group("A", 3)) == 6
    assert len(enumerate_group("B", 2)) == 8
    assert len(enumerate_group("D", 3)) == 24


def test_enumeration_no_duplicates():
    for gtype in ("A", "B", "D"):
        g = enumerate_group(gtype, 3)
        assert len({(e.perm, e.signs) for e in g}) == len(g)


def test_enumeration_guard():
    with pytest.raises(ValueError):
        enumerate_group("B", 8)


def test_type_constraints():
    with pytest.raises(ValueError):
        SignedPerm((0, 1), (1, 0), "A")
    with pytest.raises(ValueError):
        SignedPerm((0, 1), (1, 0), "D")


# -- the action -----------------------------------------------------------------


def swap12(gtype="A", n=2):
    perm = list(range(n))
    perm[0], perm[1] = 1, 0
    return SignedPerm(tuple(perm), (0,) * n, gtype)


def test_transposition_moves_x():
    assert act(swap12(), S2.x(1)) == S2.x(2)


def test_even_signs_fix_even_monomial():
    g = SignedPerm((0, 1), (1, 1), "D")
    a = S2.x(1) * S2.x(2)
    assert act(g, a) == a


def test_transposition_negates_antisymmetric():
    a = S2.y(1) - S2.y(2)
    assert act(swap12(), a) == -a


def test_y_fixed_convention_fixes_units():
    g = SignedPerm((0, 1), (1, 1), "B")
    assert act(g, S2.y(1), convention="y-fixed") == S2.y(1)
    assert act(g, S2.y(1), convention="standard") == -S2.y(1)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_action_property_and_automorphism(data):
    group = enumerate_group("B", 2)
    g = data.draw(st.sampled_from(group))
    h = data.draw(st.sampled_from(group))
    coeff = st.sampled_from(
        [
            RatFn.const(1, 2),
            RatFn.var(1, 2),
            RatFn.qpow(1, 2),
            RatFn.const(1, 2) / (RatFn.var(1, 2) - RatFn.var(2, 2)),
        ]
    )
    exp = st.tuples(st.integers(0, 2), st.integers(0, 2))
    from qnoether.skewring import make_element

    a = make_element(S2, data.draw(st.lists(st.tuples(exp, coeff), max_size=3)))
    b = make_element(S2, data.draw(st.lists(st.tuples(exp, coeff), max_size=2)))
    for convention in ("standard", "y-fixed"):
        assert act(g.compose(h), a, convention) == act(g, act(h, a, convention), convention)
        assert act(g, skew_mul(a, b), convention) == skew_mul(
            act(g, a, convention), act(g, b, convention)
        )


# -- invariance -------------------------------------------------------------------


def test_symmetric_polynomial_invariant():
    e2 = S3.x(1) * S3.x(2) + S3.x(2) * S3.x(3) + S3.x(1) * S3.x(3)
    assert is_invariant(e2, "A", 3)


def test_y1_not_invariant():
    assert not is_invariant(S2.y(1), "A", 2)


def test_generator_invariance_matches_full_enumeration():
    for n in (2, 3, 4):
        spec = SkewSpec.diagonal(n)
        probe = reynolds(spec.x(1) * spec.y(2), "B", n)
        for gtype in ("A", "B", "D"):
            for a in (probe, spec.x(1), spec.x(1) * spec.x(2)):
                assert is_invariant(a, gtype, n) == is_invariant(
                    a, gtype, n, use_generators=False
                )


def test_dn_eigenvector():
    # x_1...x_n is D_n-invariant but a single flip negates it, so B_n fails
    for n in (2, 3):
        spec = SkewSpec.diagonal(n)
        prod = spec.one()
        for j in range(1, n + 1):
            prod = skew_mul(prod, spec.x(j))
        assert is_invariant(prod, "D", n)
        assert not is_invariant(prod, "B", n)


# -- Reynolds ---------------------------------------------------------------------


def test_reynolds_x1():
    avg = reynolds(S2.x(1), "A", 2)
    assert avg == (S2.x(1) + S2.x(2)).scale(RatFn.const(Fraction(1, 2), 2))


def test_reynolds_fixes_invariants():
    e1 = S3.x(1) + S3.x(2) + S3.x(3)
    assert reynolds(e1, "A", 3) == e1


def test_reynolds_projects_and_is_idempotent():
    a = S2.x(1) * S2.y(2)
    for gtype in ("A", "B", "D"):
        for convention in ("standard", "y-fixed"):
            r = reynolds(a, gtype, 2, convention)
            assert is_invariant(r, gtype, 2, convention)
            assert reynolds(r, gtype, 2, convention) == r


def test_reynolds_y1():
    avg = reynolds(S2.y(1), "A", 2)
    assert avg == (S2.y(1) + S2.y(2)).scale(RatFn.const(Fraction(1, 2), 2))


# -- parsing -----------------------------------------------------------------------


def test_parse_cycles():
    g = parse_signed_perm("(1 2)(3)", 3)
    assert g.perm == (1, 0, 2)
    assert g.signs == (0, 0, 0)


def test_parse_cycles_with_signs():
    g = parse_signed_perm("(1 2)(3)++-", 3, "B")
    assert g.perm == (1, 0, 2)
    assert g.signs == (0, 0, 1)


def test_parse_rejects_bad_signs():
    with pytest.raises(ValueError):
        parse_signed_perm("(1 2)+-", 3, "B")
