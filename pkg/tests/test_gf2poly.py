"""Kernel arithmetic in F2[t] against schoolbook coefficient-list oracles."""

import pytest
from hypothesis import given, strategies as st

from ivp import gf2poly
from ivp.gf2poly import BinaryPoly, add, mul, divrem, gcd, eval_at, multiplicity_at, inverse_mod

from oracles import (mask_to_list, list_to_mask, o_add, o_mul, o_divmod,
                     o_gcd, o_eval, o_mult_at)

masks = st.integers(min_value=0, max_value=2**9 - 1)
nonzero_masks = st.integers(min_value=1, max_value=2**9 - 1)


def P(value):
    return BinaryPoly(value)


# --- construction and representation -------------------------------------

def test_constructor_accepts_int_str_and_poly():
    assert P(0b110) == P('t^2+t') == P(P('t^2+t'))
    assert P('0') == P(0)
    assert P('1+t') == P('t+1') == P(0b11)


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        P('t^2 + s')
    with pytest.raises(ValueError):
        P(-1)
    with pytest.raises(TypeError):
        P(1.5)


def test_term_strings():
    assert str(P(0)) == '0'
    assert str(P(1)) == '1'
    assert str(P(0b10)) == 't'
    assert str(P(0b11)) == 't+1'
    assert str(P(0b111)) == 't^2+t+1'


@given(masks)
def test_string_round_trip(mask):
    p = P(mask)
    assert P(str(p)) == p


def test_degree_and_zero_marker():
    assert P(0).degree is None
    assert P(0).is_zero
    assert P(1).degree == 0
    assert P(0b10).degree == 1
    assert P(0b1001).degree == 3
    assert not P(1).is_zero


# --- add ------------------------------------------------------------------

def test_add_examples():
    assert P('t') + P('t') == P(0)                    # char-2 cancellation
    assert P('t^2+t') + P('t+1') == P('t^2+1')        # frozen: oracle XOR
    assert P(0) + P('t^2+1') == P('t^2+1')            # identity


@given(masks, masks)
def test_add_matches_oracle(a, b):
    expect = list_to_mask(o_add(mask_to_list(a), mask_to_list(b)))
    assert add(P(a), P(b)) == P(expect)


def test_sub_is_add():
    assert P('t^2+t') - P('t+1') == P('t^2+t') + P('t+1')


# --- mul ------------------------------------------------------------------

def test_mul_examples():
    assert P('t') * P('t+1') == P('t^2+t')            # the conductor generator
    assert P('t+1') * P('t+1') == P('t^2+1')          # frozen: convolution oracle
    assert P('t^3+t') * P(1) == P('t^3+t')            # identity


@given(masks, masks)
def test_mul_matches_oracle(a, b):
    expect = list_to_mask(o_mul(mask_to_list(a), mask_to_list(b)))
    assert mul(P(a), P(b)) == P(expect)


@given(nonzero_masks, nonzero_masks)
def test_mul_degree_adds(a, b):
    assert (P(a) * P(b)).degree == P(a).degree + P(b).degree


def test_pow():
    assert P('t+1') ** 0 == P(1)
    assert P('t+1') ** 2 == P('t^2+1')
    assert P('t') ** 5 == P(1 << 5)
    with pytest.raises(ValueError):
        P('t') ** -1


def test_frobenius_exhaustive_to_degree_8():
    odd_positions = sum(1 << i for i in range(1, 18, 2))
    for mask in range(2**9):
        p = P(mask)
        assert (p + p).is_zero
        assert (p * p).mask & odd_positions == 0  # squares have even-degree terms only


# --- divrem ---------------------------------------------------------------

def test_divrem_examples():
    assert divrem(P('t^2+t'), P('t')) == (P('t+1'), P(0))        # factor split
    assert divrem(P('t^2+1'), P('t+1')) == (P('t+1'), P(0))      # frozen: multiply-back
    assert divrem(P('t^2+t+1'), P('t^2+t')) == (P(1), P(1))      # frozen: multiply-back


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        divrem(P('t'), P(0))
    with pytest.raises(ZeroDivisionError):
        P('t') % P(0)


@given(masks, nonzero_masks)
def test_divrem_multiplies_back(a, b):
    q, r = divrem(P(a), P(b))
    assert q * P(b) + r == P(a)
    assert r.is_zero or r.degree < P(b).degree


@given(masks, nonzero_masks)
def test_divrem_matches_oracle(a, b):
    oq, orem = o_divmod(mask_to_list(a), mask_to_list(b))
    assert divrem(P(a), P(b)) == (P(list_to_mask(oq)), P(list_to_mask(orem)))


def test_floordiv_and_mod_operators():
    assert P('t^2+t+1') // P('t^2+t') == P(1)
    assert P('t^2+t+1') % P('t^2+t') == P(1)


# --- gcd ------------------------------------------------------------------

def test_gcd_examples():
    assert gcd(P('t^2+t'), P('t^2')) == P('t')        # frozen: search oracle
    assert gcd(P('t^3+1'), P(0)) == P('t^3+1')
    assert gcd(P('t'), P('t+1')) == P(1)              # distinct irreducibles


def test_gcd_of_two_zeros():
    with pytest.raises(ValueError):
        gcd(P(0), P(0))


@given(st.integers(min_value=0, max_value=2**7 - 1),
       st.integers(min_value=0, max_value=2**7 - 1))
def test_gcd_matches_search_oracle(a, b):
    if a == 0 and b == 0:
        return
    expect = list_to_mask(o_gcd(mask_to_list(a), mask_to_list(b)))
    assert gcd(P(a), P(b)) == P(expect)


@given(nonzero_masks, nonzero_masks, nonzero_masks)
def test_common_divisors_divide_the_gcd(a, b, c):
    g = gcd(P(a) * P(c), P(b) * P(c))
    assert (P(a) * P(c)) % g == P(0)
    assert (P(b) * P(c)) % g == P(0)
    assert g % gcd(P(a), P(b)) == P(0)
    assert g % P(c) == P(0)


# --- eval_at / multiplicity_at ---------------------------------------------

def test_eval_examples():
    assert eval_at(P('t^2+t+1'), 0) == 1
    assert eval_at(P('t^2+t+1'), 1) == 1              # frozen: parity count
    assert eval_at(P('t^2+t'), 0) == 0
    assert eval_at(P('t^2+t'), 1) == 0                # m vanishes at both roots
    assert P('t+1')(1) == 0


@given(masks, st.integers(min_value=0, max_value=1))
def test_eval_matches_oracle(a, c):
    assert eval_at(P(a), c) == o_eval(mask_to_list(a), c)


def test_multiplicity_examples():
    assert multiplicity_at(P('t^3+t^2'), 0) == 2      # t^2(t+1)
    assert multiplicity_at(P('t^2+t'), 1) == 1
    assert multiplicity_at(P('t+1'), 0) == 0


def test_multiplicity_of_zero_polynomial():
    with pytest.raises(ValueError):
        multiplicity_at(P(0), 0)


@given(nonzero_masks, st.integers(min_value=0, max_value=1))
def test_multiplicity_matches_oracle(a, c):
    assert multiplicity_at(P(a), c) == o_mult_at(mask_to_list(a), c)


@given(nonzero_masks, st.integers(min_value=0, max_value=1))
def test_multiplicity_bounds_exact_division(a, c):
    k = multiplicity_at(P(a), c)
    factor = P('t') if c == 0 else P('t+1')
    assert P(a) % factor ** k == P(0)
    assert P(a) % factor ** (k + 1) != P(0)


@given(nonzero_masks, st.integers(min_value=0, max_value=1))
def test_root_iff_positive_multiplicity(a, c):
    assert (eval_at(P(a), c) == 0) == (multiplicity_at(P(a), c) >= 1)


# --- inverse_mod ------------------------------------------------------------

def test_inverse_mod_examples():
    assert inverse_mod(P('t+1'), P('t^2')) == P('t+1')   # (t+1)^2 = t^2+1 ≡ 1
    assert inverse_mod(P(1), P('t^5+t+1')) == P(1)
    with pytest.raises(ValueError):
        inverse_mod(P('t'), P('t^2'))                    # shared factor t


@given(nonzero_masks, st.integers(min_value=2, max_value=2**8 - 1))
def test_inverse_mod_multiplies_back(a, modulus):
    if gcd(P(a), P(modulus)) != P(1):
        with pytest.raises(ValueError):
            inverse_mod(P(a), P(modulus))
        return
    q = inverse_mod(P(a), P(modulus))
    assert (P(a) * q) % P(modulus) == P(1)
    assert q.degree is None or q.degree < P(modulus).degree


def test_hash_and_equality_consistency():
    assert hash(P('t^2+t')) == hash(P(0b110))
    assert P('t') != P('t+1')
    assert P(1) == 1 and P(0) == 0
    assert len({P('t'), P(0b10), P('t+1')}) == 2


def test_module_constants():
    assert gf2poly.T * gf2poly.T_PLUS_1 == gf2poly.M
    assert gf2poly.ZERO.is_zero and gf2poly.ONE == P(1)

