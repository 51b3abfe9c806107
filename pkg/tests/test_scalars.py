"""Field arithmetic, q-shift substitution and equality for RatFn scalars."""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qnoether.scalars import (
    QRat,
    RatFn,
    mrat_arith,
    mrat_eq,
    parse_qrat,
    div_exact,
    qrat_arith,
    qshift_substitute,
)


def q():
    return RatFn.qpow(1)


def x(j, v):
    return RatFn.var(j, v)


# -- q-rational examples ------------------------------------------------------


def test_add_zero_is_identity():
    assert qrat_arith("add", q(), RatFn.const(0)) == q()


def test_difference_of_squares():
    assert qrat_arith("mul", q() - 1, q() + 1) == q() ** 2 - 1


def test_q_bracket_two():
    # (q^2 - q^-2)/(q - q^-1) = q + q^-1, the quantum integer [2]_q
    num = RatFn.qpow(2) - RatFn.qpow(-2)
    den = q() - RatFn.qpow(-1)
    assert qrat_arith("div", num, den) == q() + RatFn.qpow(-1)


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        qrat_arith("div", q(), RatFn.const(0))


def test_qrat_str_ascending_powers():
    assert (q() + RatFn.qpow(-1)).qrat_str() == "(1+q^2)/(q)"
    assert RatFn.const(Fraction(-3, 2)).qrat_str() == "(-3)/(2)"


# -- multivariate examples ----------------------------------------------------


def test_inverse_cancels():
    f = x(1, 2) - x(2, 2)
    assert mrat_arith("mul", f, RatFn.const(1, 2) / f).is_one()


def test_common_denominator_sum():
    d = x(1, 2) - x(2, 2)
    lhs = mrat_arith("add", x(1, 2) / d, -x(2, 2) / d)
    assert lhs.is_one()


def test_elementary_symmetric_product_n2():
    # direct expansion oracle: (x1+x2)(x1x2) = x1^2 x2 + x1 x2^2
    e1 = x(1, 2) + x(2, 2)
    e2 = x(1, 2) * x(2, 2)
    expected = x(1, 2) ** 2 * x(2, 2) + x(1, 2) * x(2, 2) ** 2
    assert mrat_arith("mul", e1, e2) == expected


def test_mrat_eq_common_factor():
    f = x(1, 3) / x(2, 3)
    g = (x(1, 3) * x(3, 3)) / (x(2, 3) * x(3, 3))
    assert mrat_eq(f, g)


def test_mrat_eq_sign_symmetry():
    f = RatFn.const(1, 2) / (x(1, 2) - x(2, 2))
    g = RatFn.const(-1, 2) / (x(2, 2) - x(1, 2))
    assert mrat_eq(f, g)


def test_varcount_mismatch_rejected():
    with pytest.raises(ValueError):
        mrat_arith("add", x(1, 2), x(1, 3))


# -- q-shift substitution -----------------------------------------------------


def test_qshift_single_variable():
    assert qshift_substitute(x(1, 2), (1, 0)) == q() * x(1, 2)


def test_qshift_identity():
    f = x(1, 2) - x(2, 2)
    assert qshift_substitute(f, (0, 0)) == f


def test_qshift_factors_out_of_denominator():
    f = RatFn.const(1, 2) / (x(1, 2) - x(2, 2))
    shifted = qshift_substitute(f, (1, 1))
    assert shifted == RatFn.qpow(-1) / (x(1, 2) - x(2, 2))


# -- randomized property tests -------------------------------------------------

coeffs = st.integers(min_value=-4, max_value=4)


def _terms(v, max_terms, max_exp):
    exp = st.tuples(*[st.integers(min_value=0, max_value=max_exp)] * (v + 1))
    return st.lists(st.tuples(exp, coeffs), max_size=max_terms)


@st.composite
def ratfns(draw, v=2, max_terms=3, max_exp=2):
    def collect(items):
        p = {}
        for e, c in items:
            p[e] = p.get(e, 0) + c
        return {e: c for e, c in p.items() if c}

    num = collect(draw(_terms(v, max_terms, max_exp)))
    den = collect(draw(_terms(v, max_terms, max_exp)))
    if not den:
        den = {(0,) * (v + 1): 1}
    return RatFn(num, den, v)


@settings(max_examples=60, deadline=None)
@given(ratfns(), ratfns(), ratfns())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    if not a.is_zero():
        assert (a * b) / a == b


@settings(max_examples=40, deadline=None)
@given(ratfns(), ratfns(), ratfns(), ratfns())
def test_eq_consistent_with_arithmetic(f, g, h, k):
    if f == g and h == k:
        assert f + h == g + k
        assert f * h == g * k


shifts = st.tuples(
    st.integers(min_value=-2, max_value=2), st.integers(min_value=-2, max_value=2)
)


@settings(max_examples=40, deadline=None)
@given(ratfns(), shifts, shifts)
def test_qshift_is_an_action(f, a, b):
    ab = tuple(x + y for x, y in zip(a, b))
    assert qshift_substitute(f, ab) == qshift_substitute(qshift_substitute(f, b), a)


@settings(max_examples=40, deadline=None)
@given(ratfns(), ratfns(), shifts)
def test_qshift_is_ring_homomorphism(f, g, a):
    assert qshift_substitute(f * g, a) == qshift_substitute(f, a) * qshift_substitute(g, a)
    assert qshift_substitute(f + g, a) == qshift_substitute(f, a) + qshift_substitute(g, a)


# -- independent oracle: sympy rational functions ------------------------------

_SQ, _SX1, _SX2 = sympy.symbols("q x1 x2")


def _to_sympy(f: RatFn):
    def conv(p):
        total = sympy.Integer(0)
        for e, c in p.items():
            total += sympy.Integer(c) * _SQ ** e[0] * _SX1 ** e[1] * _SX2 ** e[2]
        return total

    return conv(f.num) / conv(f.den)


@settings(max_examples=25, deadline=None)
@given(ratfns(), ratfns())
def test_arithmetic_matches_sympy(a, b):
    assert sympy.simplify(_to_sympy(a + b) - (_to_sympy(a) + _to_sympy(b))) == 0
    assert sympy.simplify(_to_sympy(a * b) - _to_sympy(a) * _to_sympy(b)) == 0


# -- exact division and parsing -------------------------------------------------


def test_pdiv_exact_finds_factor():
    a = ((x(1, 2) - x(2, 2)) * (x(1, 2) + x(2, 2))).num
    b = (x(1, 2) - x(2, 2)).num
    assert div_exact(a, b) == (x(1, 2) + x(2, 2)).num


def test_pdiv_exact_rejects_nonfactor():
    a = (x(1, 2) + x(2, 2)).num
    b = (x(1, 2) - x(2, 2)).num
    assert div_exact(a, b) is None


def test_parse_qrat():
    assert parse_qrat("q") == q()
    assert parse_qrat("q^4") == q() ** 4
    assert parse_qrat("q^-2") == RatFn.qpow(-2)
    assert parse_qrat("7") == RatFn.const(7)


def test_eval_at():
    f = (q() * x(1, 2)) / (x(1, 2) - x(2, 2))
    val = f.eval_at(Fraction(2), (Fraction(3), Fraction(1)))
    assert val == Fraction(2 * 3, 3 - 1)


def test_json_shape():
    f = (x(1, 1) + q()) / x(1, 1)
    data = f.to_json()
    assert data["num"] == [
        {"exp": [0], "coeff": "(q)/(1)"},
        {"exp": [1], "coeff": "(1)/(1)"},
    ]
    assert data["den"] == [{"exp": [1], "coeff": "(1)/(1)"}]
