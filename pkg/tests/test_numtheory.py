from __future__ import annotations

import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cdgraph.numtheory import (
    Factorization,
    factor,
    is_prime,
    is_prime_power,
    pi_set,
    prime_form,
    primes_up_to,
    zsygmondy,
    zsygmondy_exception,
)


def test_small_primality_matches_sympy():
    for n in range(0, 50_000):
        assert is_prime(n) == sympy.isprime(n), n


@pytest.mark.parametrize(
    "n",
    [
        561,  # Carmichael
        3215031751,  # strong pseudoprime to bases 2, 3, 5, 7
        3825123056546413051,  # strong pseudoprime to the first nine prime bases
        318665857834031151167461,  # strong pseudoprime to the first twelve prime bases
        (2**61 - 1) * (2**31 - 1),
    ],
)
def test_pseudoprimes_rejected(n):
    assert not is_prime(n)


@pytest.mark.parametrize("e", [31, 61, 89, 107, 127])
def test_mersenne_primes(e):
    assert is_prime(2**e - 1)


def test_range_checks():
    with pytest.raises(ValueError):
        is_prime(2**128)
    with pytest.raises(ValueError):
        factor(0)
    with pytest.raises(TypeError):
        factor(2.0)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=2**64))
def test_factor_matches_sympy(n):
    f = factor(n)
    assert f.as_dict() == sympy.factorint(n)
    assert math.prod(p**e for p, e in f.factors) == n


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2**64, max_value=2**127))
def test_large_primality_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


def test_factor_known_values():
    assert factor(20160).as_dict() == {2: 6, 3: 2, 5: 1, 7: 1}
    assert str(factor(175560)) == "2^3 * 3 * 5 * 7 * 11 * 19"
    assert factor(1).factors == ()
    assert factor(2**64 + 1).as_dict() == {274177: 1, 67280421310721: 1}


def test_factorization_validates():
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))


def test_pi_set():
    assert pi_set(1) == frozenset()
    assert pi_set(63) == {3, 7}
    assert pi_set(2**12 - 1) == {3, 5, 7, 13}


def test_primes_up_to():
    assert primes_up_to(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert len(primes_up_to(10**5)) == 9592


def test_is_prime_power():
    assert [n for n in range(1, 30) if is_prime_power(n)] == [
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29
    ]


@pytest.mark.parametrize(
    "n, tag",
    [
        (2, "other_prime"),
        (3, "mersenne_prime"),
        (5, "fermat_prime"),
        (7, "mersenne_prime"),
        (11, "other_prime"),
        (17, "fermat_prime"),
        (31, "mersenne_prime"),
        (9, "prime_power_not_prime"),
        (12, "composite_not_prime_power"),
    ],
)
def test_prime_form(n, tag):
    assert prime_form(n).tag == tag


def test_prime_form_flags_of_three():
    form = prime_form(3)
    assert form.mersenne and form.fermat


def _primitive_divisors_brute(a: int, n: int) -> list[int]:
    earlier = math.prod(a**b - 1 for b in range(1, n))
    return sorted(p for p in sympy.factorint(a**n - 1) if earlier % p)


def test_zsygmondy_matches_brute_force():
    for a in range(2, 31):
        for n in range(2, 13):
            expected = _primitive_divisors_brute(a, n)
            got = zsygmondy(a, n)
            assert got == (expected[0] if expected else None), (a, n)
            assert (zsygmondy_exception(a, n) is None) == bool(expected), (a, n)


@pytest.mark.parametrize(
    "a, n, p",
    [(2, 3, 7), (2, 4, 5), (3, 3, 13), (5, 2, 3), (2, 5, 31), (2, 10, 11), (2, 12, 13)],
)
def test_zsygmondy_values(a, n, p):
    assert zsygmondy(a, n) == p


def test_zsygmondy_exceptions():
    assert zsygmondy(2, 6) is None
    assert zsygmondy_exception(2, 6) == "n=6, a=2"
    assert zsygmondy(7, 2) is None
    assert zsygmondy_exception(7, 2) == "n=2, a=2^3-1"
    assert zsygmondy(31, 2) is None


def test_zsygmondy_large_exponent():
    # 2^100 - 1: primitive divisors are those of Phi_100(2)
    assert zsygmondy(2, 100) == _primitive_divisors_brute(2, 100)[0]
