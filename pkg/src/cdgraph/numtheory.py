"""Exact integer arithmetic: primality, factorization, primitive prime divisors.

Every input is bounded by 2**128.  Primality is decided by trial division
followed by strong probable-prime tests; below 3.3e24 the first thirteen
prime bases are a proven deterministic witness set, and above that bound a
strong Lucas test is added (Baillie-PSW), which has no known counterexample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

__all__ = [
    "LIMIT",
    "Factorization",
    "PrimeForm",
    "factor",
    "is_prime",
    "is_prime_power",
    "pi_set",
    "prime_form",
    "primes_up_to",
    "zsygmondy",
    "zsygmondy_exception",
]

LIMIT = 1 << 128

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# first 13 prime bases are deterministic below this bound (Sorenson-Webster)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981


def _check_range(n: int, name: str = "n", low: int = 1) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < low:
        raise ValueError(f"{name} must be >= {low}, got {n}")
    if n >= LIMIT:
        raise ValueError(f"{name} must be below 2**128")


@lru_cache(maxsize=None)
def primes_up_to(bound: int) -> tuple[int, ...]:
    """All primes <= bound, by the sieve of Eratosthenes."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_TRIAL_PRIMES = primes_up_to(1 << 12)


def _strong_probable_prime(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -d - 2 if d > 0 else -d + 2
        if d == 13 and math.isqrt(n) ** 2 == n:
            return False
    p, q = 1, (1 - d) // 4

    k, s = n + 1, 0
    while k % 2 == 0:
        k //= 2
        s += 1

    inv2 = (n + 1) // 2
    u, v, qk = 1, p, q % n
    for bit in bin(k)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) * inv2 % n, (d * u + p * v) * inv2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**128."""
    _check_range(n, low=0)
    if n < 2:
        return False
    for p in _TRIAL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
        if p * p > n:
            return True
    if not all(_strong_probable_prime(n, b) for b in _SMALL_PRIMES):
        return False
    if n < _MR_PROVEN_BOUND:
        return True
    return _strong_lucas_probable_prime(n)


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of the odd composite n (deterministic seeds)."""
    for c in range(1, 1000):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed on {n}")  # pragma: no cover


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer, primes ascending."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1 or not is_prime(p):
                raise ValueError(f"invalid factor entry ({p}, {e})")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


@lru_cache(maxsize=1 << 16)
def factor(n: int) -> Factorization:
    """Complete prime factorization of 1 <= n < 2**128."""
    _check_range(n)
    counts: dict[int, int] = {}
    m = n
    for p in _TRIAL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            counts[p] = e
    stack = [m] if m > 1 else []
    while stack:
        x = stack.pop()
        if is_prime(x):
            counts[x] = counts.get(x, 0) + 1
            continue
        r = math.isqrt(x)
        if r * r == x:
            stack += [r, r]
            continue
        d = _pollard_brent(x)
        stack += [d, x // d]
    return Factorization(n, tuple(sorted(counts.items())))


@lru_cache(maxsize=1 << 16)
def pi_set(n: int) -> frozenset[int]:
    """The set of primes dividing n; empty for n = 1."""
    return frozenset(factor(n).primes)


def is_prime_power(n: int) -> bool:
    """True if n = p**k with p prime and k >= 1."""
    _check_range(n)
    return len(factor(n).factors) == 1


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


class PrimeForm(NamedTuple):
    tag: str
    mersenne: bool
    fermat: bool


def prime_form(n: int) -> PrimeForm:
    """Classify n >= 2 as Mersenne / Fermat / other prime, or non-prime.

    A Mersenne prime is a prime 2**k - 1 and a Fermat prime a prime 2**k + 1,
    both with k >= 1 (so 2 is neither, and 3 is both).  When both flags hold
    the tag is ``mersenne_prime``.
    """
    _check_range(n, low=2)
    if is_prime(n):
        mersenne = _is_power_of_two(n + 1)
        fermat = n > 2 and _is_power_of_two(n - 1)
        if mersenne:
            tag = "mersenne_prime"
        elif fermat:
            tag = "fermat_prime"
        else:
            tag = "other_prime"
        return PrimeForm(tag, mersenne, fermat)
    if is_prime_power(n):
        return PrimeForm("prime_power_not_prime", False, False)
    return PrimeForm("composite_not_prime_power", False, False)


def _mobius(n: int) -> int:
    fac = factor(n).factors
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def _cyclotomic_value(a: int, n: int) -> int:
    num, den = 1, 1
    for d in range(1, n + 1):
        if n % d == 0:
            mu = _mobius(n // d)
            if mu == 1:
                num *= a**d - 1
            elif mu == -1:
                den *= a**d - 1
    return num // den


def zsygmondy_exception(a: int, n: int) -> str | None:
    """Describe why a**n - 1 has no primitive prime divisor, or None."""
    if n == 2 and _is_power_of_two(a + 1):
        c = (a + 1).bit_length() - 1
        return f"n=2, a=2^{c}-1"
    if n == 6 and a == 2:
        return "n=6, a=2"
    return None


def zsygmondy(a: int, n: int) -> int | None:
    """Smallest primitive prime divisor of a**n - 1, or None if there is none.

    A prime q is primitive when it divides a**n - 1 and no a**b - 1 with
    1 <= b < n.  Such q are exactly the primes dividing the cyclotomic value
    Phi_n(a) that do not divide n.
    """
    _check_range(a, "a", low=2)
    _check_range(n, "n", low=2)
    if a**n >= LIMIT:
        raise ValueError("a**n must be below 2**128")
    m = _cyclotomic_value(a, n)
    for p in pi_set(n):
        while m % p == 0:
            m //= p
    if m == 1:
        return None
    # primitive primes are 1 mod n; try the cheap candidates before factoring
    q = n + 1
    while q < 1 << 16 and q * q <= m:
        if m % q == 0 and is_prime(q):
            return q
        q += n
    return min(factor(m).primes)
