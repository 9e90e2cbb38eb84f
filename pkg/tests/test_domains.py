"""Field arithmetic: prime fields, extension towers, square roots."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exactgeom.domains import (
    QQ,
    ExtensionField,
    PrimeField,
    adjoin_sqrt,
    is_prime,
)
from exactgeom.errors import DomainMismatchError


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 10007, 31991, 2**31 - 1}
    composites = {1, 0, 4, 9, 10007 * 3, 31991 * 7, 2**31 - 2}
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(n) for n in composites)


def test_prime_field_validation():
    with pytest.raises(ValueError):
        PrimeField(2)
    with pytest.raises(ValueError):
        PrimeField(10006)
    with pytest.raises(ValueError):
        PrimeField(2**31 + 11)


def test_prime_field_arithmetic():
    F = PrimeField(13)
    a, b = F.elem(7), F.elem(9)
    assert a + b == F.elem(3)
    assert a - b == F.elem(-2)
    assert a * b == F.elem(63)
    assert (a / b) * b == a
    assert a ** (13 - 1) == F.one()
    assert -a == F.elem(6)
    assert bool(F.zero()) is False
    with pytest.raises(ZeroDivisionError):
        a / F.zero()


def test_mixed_field_operations_rejected():
    a = PrimeField(13).elem(1)
    b = PrimeField(17).elem(1)
    with pytest.raises(DomainMismatchError):
        a + b


def test_reflected_operators_with_ints():
    F = PrimeField(13)
    a = F.elem(4)
    assert 1 - a == F.elem(-3)
    assert 2 + a == F.elem(6)
    assert 3 * a == F.elem(12)
    assert 1 / a == F.one() / a
    assert a ** (-1) * a == F.one()


def test_sqrt_fast_path_p3mod4():
    F = PrimeField(10007)  # 3 mod 4
    for n in (4, 9, 2500, 123 * 123):
        r = F.sqrt(F.elem(n))
        assert r is not None and r * r == F.elem(n)


def test_sqrt_exhaustive_small_field():
    # p = 13 is 1 mod 4, exercising Tonelli-Shanks
    F = PrimeField(13)
    squares = {(F.elem(n) * F.elem(n)).value for n in range(13)}
    for n in range(13):
        a = F.elem(n)
        r = F.sqrt(a)
        if n in squares:
            assert r is not None and r * r == a
        else:
            assert r is None


def test_rational_sqrt():
    assert QQ.sqrt(Fraction(4, 9)) == Fraction(2, 3)
    assert QQ.sqrt(Fraction(0)) == 0
    assert QQ.sqrt(Fraction(2)) is None
    assert QQ.sqrt(Fraction(-4)) is None


def test_extension_field_gf9():
    F3 = PrimeField(3)
    K = ExtensionField(F3, [1, 0, 1], name="i")  # i^2 = -1
    assert K.order == 9 and K.char == 3
    i = K.generator()
    assert i * i == K.elem(-1)
    # every nonzero element is invertible and satisfies x^8 = 1
    seen = set()
    for n in range(9):
        x = K.wrap(K._rfrom_index(n))
        seen.add(x.value)
        if x:
            assert x * (K.one() / x) == K.one()
            assert x**8 == K.one()
    assert len(seen) == 9


def test_extension_rejects_reducible_modulus():
    F5 = PrimeField(5)
    with pytest.raises(ValueError):
        ExtensionField(F5, [1, 0, 1])  # t^2 + 1 = (t+2)(t+3) over GF(5)


def test_extension_rejects_nonmonic():
    F5 = PrimeField(5)
    with pytest.raises(ValueError):
        ExtensionField(F5, [1, 0, 2])


def test_tower_field():
    F3 = PrimeField(3)
    K = ExtensionField(F3, [1, 0, 1], name="i")
    # find a non-square in K and climb one more level
    non_square = next(
        x for x in K._element_iter() if x and K.sqrt(x) is None
    )
    L, root, lift = adjoin_sqrt(K, non_square, name="s")
    assert L.order == 81
    assert root * root == lift(non_square)
    # arithmetic in the tower stays consistent with the base embedding
    a = K.elem(2)
    assert lift(a) + lift(K.one()) == lift(a + K.one())


def test_adjoin_sqrt_when_square_exists():
    F = PrimeField(10007)
    field2, root, lift = adjoin_sqrt(F, F.elem(49))
    assert field2 is F
    assert root * root == F.elem(49)
    assert lift(F.elem(5)) == F.elem(5)


@given(st.integers(0, 10006), st.integers(0, 10006), st.integers(0, 10006))
def test_prime_field_ring_axioms(a, b, c):
    F = PrimeField(10007)
    x, y, z = F.elem(a), F.elem(b), F.elem(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


def test_extension_sqrt():
    F = PrimeField(10007)
    K = ExtensionField(F, [5, 1, 1], name="t", check=True)
    rng = random.Random(0)
    found_square = found_nonsquare = False
    for _ in range(40):
        a = K.rand(rng)
        if not a:
            continue
        r = K.sqrt(a)
        if r is None:
            found_nonsquare = True
        else:
            found_square = True
            assert r * r == a
    assert found_square and found_nonsquare
