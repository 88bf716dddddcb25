"""Invertible matrices over prime fields and groups given by full enumeration.

Group elements are stored as one integer array of shape (order, d, d).  A
matrix is identified by its integer code: the entries read row by row as
the digits of a base-t number.  Codes make membership tests and lookups
vectorized binary searches.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from ..numtheory import factor, is_prime

__all__ = [
    "DEFAULT_CAP",
    "FqMatrix",
    "GroupOverflowError",
    "MatrixGroup",
    "enumerate_gl",
    "enumeration_cap",
    "generate",
    "gl_order",
]

DEFAULT_CAP = 1 << 20
CAP_ENV = "CDGRAPH_ENUM_CAP"
MAX_DIMENSION = 6


class GroupOverflowError(OverflowError):
    """An enumeration would exceed the configured element cap."""


def enumeration_cap() -> int:
    """The element cap, from ``CDGRAPH_ENUM_CAP`` if set, else 2**20."""
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV} must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{CAP_ENV} must be a positive integer, got {cap}")
    return cap


def _det_mod(rows: list[list[int]], t: int) -> int:
    m = [r[:] for r in rows]
    n = len(m)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % t), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col] % t
        inv = pow(m[col][col], -1, t)
        for r in range(col + 1, n):
            k = m[r][col] * inv % t
            if k:
                m[r] = [(x - k * y) % t for x, y in zip(m[r], m[col])]
    return det % t


@dataclass(frozen=True)
class FqMatrix:
    """An invertible d x d matrix over F_t, 1 <= d <= 6."""

    characteristic: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        t = self.characteristic
        if not isinstance(t, int) or not is_prime(t):
            raise ValueError(f"characteristic must be prime, got {t!r}")
        d = len(self.entries)
        if not 1 <= d <= MAX_DIMENSION:
            raise ValueError(f"dimension must be between 1 and {MAX_DIMENSION}, got {d}")
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if any(len(row) != d for row in rows):
            raise ValueError("matrix must be square")
        if any(not 0 <= x < t for row in rows for x in row):
            raise ValueError(f"entries must lie in [0, {t})")
        object.__setattr__(self, "entries", rows)
        if _det_mod([list(r) for r in rows], t) == 0:
            raise ValueError("matrix is singular")

    @classmethod
    def from_array(cls, t: int, arr: np.ndarray | Sequence[Sequence[int]]) -> FqMatrix:
        a = np.asarray(arr, dtype=np.int64) % t
        return cls(t, tuple(tuple(int(x) for x in row) for row in a))

    @classmethod
    def identity(cls, t: int, d: int) -> FqMatrix:
        return cls.from_array(t, np.eye(d, dtype=np.int64))

    @property
    def dimension(self) -> int:
        return len(self.entries)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def det(self) -> int:
        return _det_mod([list(r) for r in self.entries], self.characteristic)

    def __matmul__(self, other: FqMatrix) -> FqMatrix:
        if not isinstance(other, FqMatrix):
            return NotImplemented
        if (other.characteristic, other.dimension) != (self.characteristic, self.dimension):
            raise ValueError("matrices over different fields or dimensions")
        return FqMatrix.from_array(self.characteristic, self.array @ other.array)


class _Codec:
    def __init__(self, t: int, d: int):
        if t ** (d * d) >= 1 << 62:
            raise ValueError(f"{d}x{d} matrices over F_{t} are too many to index by integer code")
        self.t, self.d = t, d
        self.weights = t ** np.arange(d * d, dtype=np.int64)

    def encode(self, mats: np.ndarray) -> np.ndarray:
        return mats.reshape(len(mats), self.d * self.d) @ self.weights

    def decode(self, codes: np.ndarray) -> np.ndarray:
        digits = (np.asarray(codes, dtype=np.int64)[:, None] // self.weights) % self.t
        return digits.reshape(len(codes), self.d, self.d)


def _as_stack(gens: Sequence[FqMatrix]) -> tuple[int, int, np.ndarray]:
    if not gens:
        raise ValueError("need at least one generator")
    t, d = gens[0].characteristic, gens[0].dimension
    for g in gens:
        if (g.characteristic, g.dimension) != (t, d):
            raise ValueError("generators must share characteristic and dimension")
    return t, d, np.stack([g.array for g in gens])


def _closure(gens: np.ndarray, t: int, codec: _Codec, cap: int) -> np.ndarray:
    """All products of the generators, breadth first from the identity."""
    d = codec.d
    ident = np.eye(d, dtype=np.int64)[None]
    known = codec.encode(ident)
    layers = [ident]
    frontier = ident
    total = 1
    while len(frontier):
        prods = (frontier[:, None] @ gens[None]).reshape(-1, d, d) % t
        codes = codec.encode(prods)
        uniq, first = np.unique(codes, return_index=True)
        pos = np.searchsorted(known, uniq)
        pos[pos == len(known)] = 0
        fresh = known[pos] != uniq
        frontier = prods[first[fresh]]
        total += len(frontier)
        if total > cap:
            raise GroupOverflowError(f"group closure exceeds the cap of {cap} elements")
        known = np.union1d(known, uniq[fresh])
        layers.append(frontier)
    return np.concatenate(layers)


def gl_order(t: int, d: int) -> int:
    """|GL_d(t)| = prod (t^d - t^i)."""
    out = 1
    for i in range(d):
        out *= t**d - t**i
    return out


class MatrixGroup:
    """A finite group of invertible matrices with all elements listed.

    The identity is element 0; the remaining elements follow in
    breadth-first order of word length in the generators, ties broken by
    code.  Instances are immutable.
    """

    def __init__(self, t: int, d: int, generators: Sequence[FqMatrix], matrices: np.ndarray):
        self.characteristic = t
        self.dimension = d
        self.generators = tuple(generators)
        self._codec = _Codec(t, d)
        mats = np.ascontiguousarray(matrices, dtype=np.int64)
        mats.setflags(write=False)
        self.matrices = mats
        codes = self._codec.encode(mats)
        codes.setflags(write=False)
        self.codes = codes
        self._sort = np.argsort(codes, kind="stable")
        self._sorted_codes = codes[self._sort]

    @property
    def order(self) -> int:
        return len(self.matrices)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"MatrixGroup(order={self.order}, dimension={self.dimension}, F_{self.characteristic})"

    def element(self, i: int) -> FqMatrix:
        return FqMatrix.from_array(self.characteristic, self.matrices[i])

    @property
    def elements(self) -> list[FqMatrix]:
        return [self.element(i) for i in range(self.order)]

    def lookup(self, mats: np.ndarray) -> np.ndarray:
        """Indices of the given matrices; -1 for matrices outside the group."""
        codes = self._codec.encode(np.asarray(mats, dtype=np.int64) % self.characteristic)
        pos = np.searchsorted(self._sorted_codes, codes)
        pos[pos == len(self._sorted_codes)] = 0
        hit = self._sorted_codes[pos] == codes
        return np.where(hit, self._sort[pos], -1)

    def __contains__(self, m: object) -> bool:
        if not isinstance(m, FqMatrix) or (m.characteristic, m.dimension) != (
            self.characteristic,
            self.dimension,
        ):
            return False
        return bool(self.lookup(m.array[None])[0] >= 0)

    def _mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a @ b) % self.characteristic

    @cached_property
    def element_orders(self) -> np.ndarray:
        t, d = self.characteristic, self.dimension
        ident = np.eye(d, dtype=np.int64)
        orders = np.zeros(self.order, dtype=np.int64)
        cur = self.matrices.copy()
        k = 1
        while True:
            done = (cur == ident).all(axis=(1, 2)) & (orders == 0)
            orders[done] = k
            if orders.all():
                break
            k += 1
            if k > t**d:
                raise ArithmeticError("element order exceeds t^d")  # pragma: no cover
            cur = self._mul(cur, self.matrices)
        orders.setflags(write=False)
        return orders

    @cached_property
    def inverse_indices(self) -> np.ndarray:
        orders = self.element_orders
        inv = np.zeros_like(self.matrices)
        cur = np.broadcast_to(np.eye(self.dimension, dtype=np.int64), self.matrices.shape).copy()
        for k in range(1, int(orders.max()) + 1):
            sel = orders == k
            inv[sel] = cur[sel]
            cur = self._mul(cur, self.matrices)
        idx = self.lookup(inv)
        idx.setflags(write=False)
        return idx

    def q_element_mask(self, q: int) -> np.ndarray:
        """Elements whose order is a power of q (the identity included)."""
        o = self.element_orders.copy()
        while True:
            div = o % q == 0
            if not div.any():
                break
            o[div] //= q
        return o == 1

    def is_closed(self, rows: Iterable[int] | None = None) -> bool:
        """Check that products g*h stay in the group, for g in ``rows`` (default all)."""
        rows = range(self.order) if rows is None else rows
        for i in rows:
            prods = self._mul(self.matrices[i][None], self.matrices)
            if (self.lookup(prods) < 0).any():
                return False
        return True

    def subgroup(self, indices: Iterable[int], cap: int | None = None) -> MatrixGroup:
        """Subgroup generated by the elements with the given indices."""
        idx = sorted(set(int(i) for i in indices))
        gens = [self.element(i) for i in idx] or [self.element(0)]
        return generate(gens, cap)

    def centralizer_mask(self, mats: np.ndarray) -> np.ndarray:
        """Elements commuting with every matrix in ``mats``."""
        ok = np.ones(self.order, dtype=bool)
        for x in np.asarray(mats, dtype=np.int64):
            ok &= (self._mul(self.matrices, x) == self._mul(x, self.matrices)).all(axis=(1, 2))
        return ok

    def normalizer_mask(self, h: MatrixGroup) -> np.ndarray:
        """Elements g with g H g^-1 = H, tested on the generators of H."""
        inv = self.matrices[self.inverse_indices]
        ok = np.ones(self.order, dtype=bool)
        for x in h.generators:
            conj = self._mul(self._mul(self.matrices, x.array), inv)
            ok &= h.lookup(conj) >= 0
        return ok

    def sylow_subgroup(self, q: int) -> MatrixGroup:
        """A Sylow q-subgroup, grown greedily from a q-element of maximal order.

        While P is too small, q divides |N(P) : P|, so some q-element of
        N(P) outside P exists; adjoining it gives a larger q-subgroup.
        """
        target = _q_part(self.order, q)
        qmask = self.q_element_mask(q)
        candidates = np.flatnonzero(qmask)
        if target == 1:
            return self.subgroup([0])
        orders = self.element_orders[candidates]
        chosen = [int(candidates[np.argmax(orders)])]
        p = self.subgroup(chosen)
        while p.order < target:
            norm = self.normalizer_mask(p)
            outside = p.lookup(self.matrices[candidates]) < 0
            pick = candidates[norm[candidates] & outside]
            if not len(pick):
                raise ArithmeticError("no q-element extends the q-subgroup")  # pragma: no cover
            chosen.append(int(pick[0]))
            p = self.subgroup(chosen)
        if p.order != target:
            raise ArithmeticError("greedy Sylow construction overshot")  # pragma: no cover
        return p

    def sylow_count(self, q: int) -> int:
        """n_q = |G : N_G(Q)| for a constructed Sylow q-subgroup Q."""
        if not is_prime(q):
            raise ValueError(f"{q} is not a prime")
        if self.order % q:
            return 1
        sylow = self.sylow_subgroup(q)
        return self.order // int(self.normalizer_mask(sylow).sum())


def _q_part(n: int, q: int) -> int:
    return q ** factor(n).as_dict().get(q, 0)


def generate(gens: Sequence[FqMatrix], cap: int | None = None) -> MatrixGroup:
    """The group generated by ``gens``, enumerated up to ``cap`` elements.

    Raises :class:`GroupOverflowError` rather than truncating.
    """
    cap = enumeration_cap() if cap is None else cap
    t, d, stack = _as_stack(list(gens))
    codec = _Codec(t, d)
    mats = _closure(stack, t, codec, cap)
    return MatrixGroup(t, d, gens, mats)


def _det_stack(mats: np.ndarray, t: int) -> np.ndarray:
    """Determinants mod t of a stack of small matrices by the Leibniz sum."""
    d = mats.shape[1]
    total = np.zeros(len(mats), dtype=np.int64)
    for perm in permutations(range(d)):
        sign = 1
        seen = list(perm)
        for i in range(d):
            for j in range(i + 1, d):
                if seen[i] > seen[j]:
                    sign = -sign
        term = np.ones(len(mats), dtype=np.int64)
        for i, j in enumerate(perm):
            term = term * mats[:, i, j] % t
        total = (total + sign * term) % t
    return total


def _primitive_root(t: int) -> int:
    if t == 2:
        return 1
    ps = factor(t - 1).primes
    return next(g for g in range(2, t) if all(pow(g, (t - 1) // p, t) != 1 for p in ps))


def enumerate_gl(t: int, d: int, cap: int | None = None) -> MatrixGroup:
    """GL_d(t) by scanning every d x d matrix and keeping the invertible ones.

    The generators recorded are the elementary transvections and one
    diagonal matrix with a primitive root in the corner.
    """
    cap = enumeration_cap() if cap is None else cap
    order = gl_order(t, d)
    if order > cap:
        raise GroupOverflowError(f"|GL_{d}({t})| = {order} exceeds the cap of {cap} elements")
    space = t ** (d * d)
    if space > 1 << 26:
        raise GroupOverflowError(f"scanning all {space} matrices of size {d} over F_{t} is too large")
    codec = _Codec(t, d)
    mats = codec.decode(np.arange(space, dtype=np.int64))
    mats = mats[_det_stack(mats, t) != 0]
    is_ident = (mats == np.eye(d, dtype=np.int64)).all(axis=(1, 2))
    mats = np.concatenate([mats[is_ident], mats[~is_ident]])
    gens = []
    for i in range(d):
        for j in range(d):
            if i != j:
                e = np.eye(d, dtype=np.int64)
                e[i, j] = 1
                gens.append(FqMatrix.from_array(t, e))
    diag = np.eye(d, dtype=np.int64)
    diag[0, 0] = _primitive_root(t)
    gens.append(FqMatrix.from_array(t, diag))
    group = MatrixGroup(t, d, gens, mats)
    if group.order != order:
        raise ArithmeticError("GL enumeration miscounted")  # pragma: no cover
    return group
