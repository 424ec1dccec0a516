from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stringyhodge.errors import ZeroAtNegativeExponent
from stringyhodge.exactpoly import (BivariateLaurent, UnivariateInt,
                                    binomial_poly, lp_arith, lp_eval,
                                    mirror_transform)

UV = BivariateLaurent.monomial(1, 1)
ONE = BivariateLaurent.one()


def laurent(entries):
    return BivariateLaurent(entries)


small_exps = st.integers(min_value=-3, max_value=3)
small_coeffs = st.integers(min_value=-9, max_value=9)
polys = st.dictionaries(st.tuples(small_exps, small_exps), small_coeffs,
                        max_size=6).map(BivariateLaurent)


def test_product_expansion():
    p = UV - ONE
    assert (p * p).terms == {(2, 2): 1, (1, 1): -2, (0, 0): 1}
    assert lp_arith(p, p, "mul") == p * p


def test_additive_identity():
    p = laurent({(2, -1): 3, (0, 0): 1})
    assert lp_arith(p, BivariateLaurent.zero(), "add") == p


def test_cancellation_to_zero():
    p = laurent({(0, 0): 1, (1, 1): 6, (2, 2): 1})
    assert lp_arith(p, p, "sub") == BivariateLaurent.zero()
    assert not (p - p)


def test_no_zero_coefficients_stored():
    p = laurent({(0, 0): 2, (1, 0): 0})
    assert (0, 0) in p.terms and (1, 0) not in p.terms
    q = laurent({(1, 1): 1}) - laurent({(1, 1): 1})
    assert q.terms == {}


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(polys)
@settings(max_examples=40, deadline=None)
def test_canonical_form_is_idempotent(a):
    assert BivariateLaurent(dict(a.terms)) == a
    assert all(c != 0 for c in a.terms.values())


def test_mirror_transform_monomials():
    assert mirror_transform(ONE, 2) == BivariateLaurent.monomial(2, 0)
    assert mirror_transform(BivariateLaurent.monomial(2, 1), 2) == \
        BivariateLaurent.monomial(0, 1)


@given(polys, st.integers(min_value=0, max_value=5))
@settings(max_examples=40, deadline=None)
def test_mirror_transform_involution(p, m):
    assert mirror_transform(mirror_transform(p, m), m) == p


def test_eval_examples():
    p = (UV - ONE) ** 3
    assert lp_eval(p, -1, -1) == 0
    q = laurent({(0, 0): 1, (1, 1): 2, (2, 2): 1})
    assert lp_eval(q, 1, 1) == 4
    assert lp_eval(q, Fraction(1, 2), 2) == 4


def test_eval_zero_at_negative_exponent():
    p = laurent({(-1, 0): 1})
    with pytest.raises(ZeroAtNegativeExponent):
        lp_eval(p, 0, 1)
    assert lp_eval(p, 2, 0) == Fraction(1, 2)


def test_poincare_transform():
    p = laurent({(0, 0): 1, (1, 1): 5, (2, 2): 5, (3, 3): 1})
    assert p.poincare_transform(3) == p
    q = laurent({(0, 0): 1, (1, 0): 2})
    assert q.poincare_transform(1) == laurent({(1, 1): 1, (0, 1): 2})


def test_substitute_u1():
    p = laurent({(0, 0): 1, (1, 1): 3, (2, 1): -1})
    assert p.substitute_u1() == {0: 1, 1: 2}


def test_serialization_sorted_and_round_trip():
    p = laurent({(1, -2): 3, (-1, 0): 2, (0, 0): -1})
    triples = p.to_json()
    assert triples == sorted(triples)
    assert BivariateLaurent.from_json(triples) == p


def test_univariate_basics():
    p = UnivariateInt([1, 2, 1, 0, 0])
    assert p.coeffs == (1, 2, 1)
    assert p.degree == 2
    assert p(1) == 4 and p(-1) == 0
    q = UnivariateInt([0, 1])
    assert (p * q).coeffs == (0, 1, 2, 1)
    assert (p + q).coeffs == (1, 3, 1)
    assert (p - p) == UnivariateInt.zero()


def test_univariate_reversal():
    p = UnivariateInt([0, 2, 3])
    assert p.reversed_in_degree(3).coeffs == (0, 3, 2)
    assert p.reversed_in_degree(2).coeffs == (3, 2)
    with pytest.raises(ValueError):
        p.reversed_in_degree(1)


def test_binomial_poly():
    assert binomial_poly(-1, 2).coeffs == (1, -2, 1)
    assert binomial_poly(-1, 0).coeffs == (1,)


def test_uv_diagonal_embedding():
    p = UnivariateInt([1, 6, 1])
    bl = BivariateLaurent.from_uv_diagonal(p)
    assert bl == laurent({(0, 0): 1, (1, 1): 6, (2, 2): 1})
    assert BivariateLaurent.from_uinv_v(p) == \
        laurent({(0, 0): 1, (-1, 1): 6, (-2, 2): 1})
