"""Polynomials over prime fields and the regular representation of F_{t^a}.

Polynomials are tuples of coefficients in F_t, lowest degree first.  The
field F_{t^a} is F_t[x]/(f) with f the first monic irreducible polynomial of
degree a in the order of :func:`monic_polynomials`, so every embedding built
from it is reproducible.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator

import numpy as np

from ..numtheory import is_prime

__all__ = [
    "Poly",
    "blow_up",
    "companion_matrix",
    "field_element_matrix",
    "irreducible_polynomials",
    "is_irreducible",
    "monic_polynomials",
    "poly_mod",
    "smallest_irreducible",
]

Poly = tuple[int, ...]


def _trim(c: list[int]) -> Poly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mod(f: Poly, g: Poly, t: int) -> Poly:
    """Remainder of f modulo the nonzero polynomial g over F_t."""
    g = _trim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = [x % t for x in f]
    inv = pow(g[-1], -1, t)
    while len(_trim(r)) >= len(g):
        r = list(_trim(r))
        shift = len(r) - len(g)
        coef = r[-1] * inv % t
        for i, gi in enumerate(g):
            r[shift + i] = (r[shift + i] - coef * gi) % t
    return _trim(r)


def monic_polynomials(t: int, degree: int) -> Iterator[Poly]:
    """Monic polynomials of the given degree, lexicographic from the top.

    The order compares the coefficient of x^(degree-1) first, then lower
    ones, each from 0 to t-1.
    """
    for top_down in product(range(t), repeat=degree):
        yield tuple(reversed(top_down)) + (1,)


def is_irreducible(f: Poly, t: int) -> bool:
    """Irreducibility over F_t by trial division by monic polynomials."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    for deg in range(1, n // 2 + 1):
        for g in monic_polynomials(t, deg):
            if not poly_mod(f, g, t):
                return False
    return True


def irreducible_polynomials(t: int, degree: int) -> Iterator[Poly]:
    for f in monic_polynomials(t, degree):
        if is_irreducible(f, t):
            yield f


@lru_cache(maxsize=None)
def smallest_irreducible(t: int, degree: int) -> Poly:
    if not is_prime(t) or degree < 1:
        raise ValueError("need a prime t and degree >= 1")
    return next(irreducible_polynomials(t, degree))


def companion_matrix(f: Poly, t: int) -> np.ndarray:
    """Matrix of multiplication by x on F_t[x]/(f), basis 1, x, ..., x^(n-1).

    Column j holds the coordinates of x * x^j.
    """
    n = len(f) - 1
    m = np.zeros((n, n), dtype=np.int64)
    for j in range(n - 1):
        m[j + 1, j] = 1
    m[:, n - 1] = [(-c) % t for c in f[:n]]
    return m


def field_element_matrix(c: Poly, f: Poly, t: int) -> np.ndarray:
    """Matrix of multiplication by the field element c on F_t[x]/(f)."""
    n = len(f) - 1
    x = companion_matrix(f, t)
    out = np.zeros((n, n), dtype=np.int64)
    power = np.eye(n, dtype=np.int64)
    for coef in c:
        out = (out + coef * power) % t
        power = power @ x % t
    return out


def blow_up(entries: list[list[Poly]], f: Poly, t: int) -> np.ndarray:
    """Replace each F_{t^a} entry of a matrix by its a x a multiplication block."""
    rows = [np.hstack([field_element_matrix(c, f, t) for c in row]) for row in entries]
    return np.vstack(rows) % t
