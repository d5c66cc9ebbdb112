import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coprimelab.gf import (FiniteField, cyclotomic_polynomial, default_modulus,
                           poly_divmod, poly_gcd, poly_is_irreducible, poly_mul)

GF125 = FiniteField(5, 3)
GF8 = FiniteField(2, 3)


def test_default_modulus_gf125():
    # least monic irreducible cubic over F_5 in base-5 coefficient order
    assert GF125.modulus == (1, 1, 0, 1)


def test_default_modulus_gf8():
    assert GF8.modulus == (1, 1, 0, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FiniteField(2, 2, modulus=(1, 0, 1))  # (x+1)^2 over F_2


def test_irreducibility_degree4_paths():
    assert poly_is_irreducible((1, 1, 0, 0, 1), 2)       # x^4+x+1
    assert poly_is_irreducible((1, 1, 1, 1, 1), 2)       # x^4+x^3+x^2+x+1
    assert not poly_is_irreducible((1, 0, 0, 0, 1), 2)   # x^4+1 = (x+1)^4
    assert not poly_is_irreducible((1, 0, 1, 0, 1), 2)   # (x^2+x+1)^2


def test_frobenius_fixes_prime_field():
    three = GF125.from_int(3)
    assert three.frobenius() == three


def test_frobenius_cubed_is_identity():
    for i in range(0, 125, 7):
        a = GF125.from_index(i)
        assert a.frobenius().frobenius().frobenius() == a


def test_inverse_roundtrip():
    for i in range(1, 125, 11):
        a = GF125.from_index(i)
        assert a * a.inverse() == GF125.one


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        GF125.zero.inverse()


@given(st.integers(0, 124), st.integers(0, 124), st.integers(0, 124))
@settings(max_examples=60, deadline=None)
def test_field_axioms(i, j, k):
    a, b, c = GF125.from_index(i), GF125.from_index(j), GF125.from_index(k)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(st.integers(0, 124), st.integers(0, 124))
@settings(max_examples=40, deadline=None)
def test_frobenius_is_field_automorphism(i, j):
    a, b = GF125.from_index(i), GF125.from_index(j)
    assert (a + b).frobenius() == a.frobenius() + b.frobenius()
    assert (a * b).frobenius() == a.frobenius() * b.frobenius()


def test_multiplicative_generator_small_fields():
    assert FiniteField(5, 1).multiplicative_generator().coeffs == (2,)
    assert FiniteField(7, 1).multiplicative_generator().coeffs == (3,)
    g = GF125.multiplicative_generator()
    assert g.multiplicative_order() == 124


def test_index_roundtrip():
    for i in range(125):
        assert GF125.index(GF125.from_index(i)) == i


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1, 5) == (4, 1)          # x - 1
    assert cyclotomic_polynomial(3, 5) == (1, 1, 1)       # x^2 + x + 1
    assert cyclotomic_polynomial(7, 2) == (1, 1, 1, 1, 1, 1, 1)
    # phi_5 over F_2 stays irreducible, phi_7 splits into two cubics
    phi7 = cyclotomic_polynomial(7, 2)
    q, r = poly_divmod(phi7, (1, 1, 0, 1), 2)
    assert r == ()
    assert q == (1, 0, 1, 1)  # x^3 + x^2 + 1


def test_poly_gcd_and_mul():
    f = poly_mul((1, 1), (2, 1), 5)
    assert poly_gcd(f, (1, 1), 5) == (1, 1)
