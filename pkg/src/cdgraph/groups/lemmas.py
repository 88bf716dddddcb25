"""Brute-force checks of centralizers in GL and the Sylow-count filter for N_q."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..numtheory import is_prime, is_prime_power, factor, zsygmondy, zsygmondy_exception
from .action import sl2_generators
from .field import blow_up, companion_matrix, irreducible_polynomials, smallest_irreducible
from .matrices import GroupOverflowError, enumerate_gl, enumeration_cap, gl_order

__all__ = [
    "CentralizerReport",
    "SYLOW_COUNTS",
    "SingerReport",
    "admits_nq",
    "nq_expansions",
    "sl2_centralizer_check",
    "singer_check",
]


@dataclass(frozen=True)
class SingerReport:
    t: int
    a: int
    p: int
    centralizer_order: int
    is_cyclic: bool

    @property
    def expected_order(self) -> int:
        return self.t**self.a - 1


@dataclass(frozen=True)
class CentralizerReport:
    t: int
    a: int
    centralizer_order: int
    is_cyclic: bool
    equals_center_of_GL2_extension: bool

    @property
    def expected_order(self) -> int:
        return self.t**self.a - 1


def _matrix_order(m: np.ndarray, t: int) -> int:
    ident = np.eye(len(m), dtype=np.int64)
    cur = m % t
    k = 1
    while not (cur == ident).all():
        cur = cur @ m % t
        k += 1
    return k


def _matrix_power(m: np.ndarray, e: int, t: int) -> np.ndarray:
    out = np.eye(len(m), dtype=np.int64)
    base = m % t
    while e:
        if e & 1:
            out = out @ base % t
        base = base @ base % t
        e >>= 1
    return out


def singer_check(t: int, a: int, cap: int | None = None) -> SingerReport:
    """Centralizer in GL_a(t) of an element of primitive prime order p.

    p is the smallest primitive prime divisor of t^a - 1.  The element is
    a power of the companion matrix of the first irreducible polynomial of
    degree a whose root has order divisible by p.  The centralizer is found
    by scanning the whole of GL_a(t).
    """
    if not is_prime(t) or not 2 <= a <= 4:
        raise ValueError("need a prime t and 2 <= a <= 4")
    p = zsygmondy(t, a)
    if p is None:
        raise ValueError(f"t^a - 1 = {t}^{a} - 1 has no primitive prime divisor ({zsygmondy_exception(t, a)})")
    gl = enumerate_gl(t, a, cap)
    for f in irreducible_polynomials(t, a):
        c = companion_matrix(f, t)
        order = _matrix_order(c, t)
        if order % p == 0:
            x = _matrix_power(c, order // p, t)
            break
    else:  # pragma: no cover
        raise ArithmeticError("no irreducible polynomial gives an element of order p")
    mask = gl.centralizer_mask(x[None])
    orders = gl.element_orders[mask]
    size = int(mask.sum())
    return SingerReport(t, a, p, size, bool((orders == size).any()))


def sl2_centralizer_check(t: int, a: int, cap: int | None = None) -> CentralizerReport:
    """Centralizer in GL_{2a}(t) of SL2(t^a) embedded through its natural module.

    Also compares the centralizer with the scalars of F_{t^a}^* blown up
    into 2a x 2a matrices, the centre of the GL2 extension.
    """
    if not is_prime(t) or not 1 <= a <= 2:
        raise ValueError("need a prime t and a in {1, 2}")
    cap = enumeration_cap() if cap is None else cap
    d = 2 * a
    if gl_order(t, d) > cap:
        raise GroupOverflowError(f"|GL_{d}({t})| = {gl_order(t, d)} exceeds the cap of {cap} elements")
    gl = enumerate_gl(t, d, cap)
    gens = np.stack([g.array for g in sl2_generators(t, a)])
    mask = gl.centralizer_mask(gens)
    size = int(mask.sum())
    orders = gl.element_orders[mask]

    f = smallest_irreducible(t, a)
    zero: tuple[int, ...] = ()
    scalars = []
    for digits in np.ndindex(*([t] * a)):
        lam = tuple(int(x) for x in digits)
        if any(lam):
            scalars.append(blow_up([[lam, zero], [zero, lam]], f, t))
    scalar_rows = set(int(i) for i in gl.lookup(np.stack(scalars)))
    central = set(int(i) for i in np.flatnonzero(mask))
    return CentralizerReport(t, a, size, bool((orders == size).any()), scalar_rows == central)


# -- arithmetic filter ---------------------------------------------------------


def nq_expansions(n: int, r: int) -> list[tuple[int, int]]:
    """All (b, c) with b >= 1, c >= 2 and n = (r^(bc) - 1) / (r^b - 1).

    Equivalently n = 1 + k + ... + k^(c-1) with k = r^b, the form the
    Sylow count must take when N_q holds on a module of characteristic r.
    """
    if not is_prime(r):
        raise ValueError(f"{r} is not a prime")
    out = []
    k, b = r, 1
    while 1 + k <= n:
        s, c = 1 + k, 2
        while s < n:
            s = s * k + 1
            c += 1
        if s == n:
            out.append((b, c))
        k *= r
        b += 1
    return out


def admits_nq(sylow_counts: dict[int, int], primes: frozenset[int] | set[int]) -> list[tuple[int, int, int, int]]:
    """Pairs (q, r) for which n_q has the required r-adic form, as (q, r, b, c).

    An empty result means no module of any characteristic r in ``primes``
    can satisfy N_q for any q, by counting alone.
    """
    hits = []
    for q, n in sorted(sylow_counts.items()):
        for r in sorted(primes):
            hits += [(q, r, b, c) for b, c in nq_expansions(n, r)]
    return hits


# Sylow counts n_q = |S : N_S(Q)|, from normalizer orders in the ATLAS of
# Finite Groups (Conway et al., 1985); the same counts hold for every
# quasi-simple cover since the centre lies in each normalizer.
SYLOW_COUNTS: dict[str, dict[int, int]] = {
    "M11": {2: 495, 3: 55, 5: 396, 11: 144},
    "J1": {2: 1045, 3: 2926, 5: 2926, 7: 4180, 11: 1596, 19: 1540},
    "PSL3_4": {2: 105, 3: 280, 5: 2016, 7: 960},
}
