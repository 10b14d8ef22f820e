"""Coefficient field arithmetic and primality screening."""

from fractions import Fraction

import pytest

from idealkit.fields import GF, QQ, PrimeField, is_prime


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 101, 7919}
    for n in range(-3, 120):
        assert is_prime(n) == (n in primes or (n > 1 and all(
            n % d for d in range(2, int(n**0.5) + 1))))


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


def test_rationals_exact():
    assert QQ.add(Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)
    assert QQ.mul(Fraction(2, 3), Fraction(3, 2)) == 1
    assert QQ.inv(Fraction(-4, 7)) == Fraction(-7, 4)
    assert QQ.sub(QQ.one, QQ.one) == QQ.zero
    assert QQ.char == 0


def test_rational_coerce():
    assert QQ.coerce(5) == Fraction(5)
    assert QQ.coerce(Fraction(2, 4)) == Fraction(1, 2)


def test_prime_field_arithmetic():
    f7 = GF(7)
    assert f7.char == 7
    assert f7.add(5, 4) == 2
    assert f7.mul(3, 5) == 1
    assert f7.neg(3) == 4
    for a in range(1, 7):
        assert f7.mul(a, f7.inv(a)) == 1


def test_prime_field_coerces_fractions():
    f5 = GF(5)
    assert f5.coerce(7) == 2
    assert f5.coerce(Fraction(1, 2)) == 3  # 2 * 3 = 6 = 1 mod 5
    with pytest.raises(ZeroDivisionError):
        f5.coerce(Fraction(1, 5))


def test_gf_rejects_composites():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(1)


def test_gf_cached_and_equal():
    assert GF(11) is GF(11)
    assert GF(11) == PrimeField(11)
    assert GF(11) != GF(13)
    assert GF(3) != QQ


def test_field_division():
    f101 = GF(101)
    for a in (1, 2, 50, 100):
        for b in (1, 3, 99):
            assert f101.mul(f101.div(a, b), b) == a
