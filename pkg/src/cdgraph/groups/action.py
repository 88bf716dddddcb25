"""Matrix groups acting on their natural modules F_t^d.

Vectors are coded as base-t integers (first coordinate least significant),
and the action of the whole group is held as one permutation table
``perm[g, v]``.  The condition N_q and the counting identity are checked
directly from that table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..numtheory import factor, is_prime
from .field import blow_up, smallest_irreducible
from .matrices import FqMatrix, GroupOverflowError, MatrixGroup, generate

__all__ = [
    "ModuleAction",
    "NqReport",
    "check_Nq",
    "counting_identity",
    "orbits",
    "sl2_generators",
    "sl2_natural",
    "sylow_count",
]

TABLE_LIMIT = 1 << 27


class ModuleAction:
    """A matrix group acting on all column vectors of F_t^d."""

    def __init__(self, group: MatrixGroup):
        t, d = group.characteristic, group.dimension
        size = t**d
        if group.order * size > TABLE_LIMIT:
            raise GroupOverflowError(
                f"action table of {group.order} x {size} entries exceeds {TABLE_LIMIT}"
            )
        self.group = group
        self.characteristic = t
        self.dimension = d
        self.size = size
        self._weights = t ** np.arange(d, dtype=np.int64)
        vecs = (np.arange(size, dtype=np.int64)[None, :] // self._weights[:, None]) % t
        images = (group.matrices @ vecs) % t
        perm = np.einsum("i,gij->gj", self._weights, images)
        perm.setflags(write=False)
        self.perm = perm

    def vector(self, code: int) -> tuple[int, ...]:
        if not 0 <= code < self.size:
            raise ValueError(f"vector code {code} out of range")
        return tuple(int(code // w % self.characteristic) for w in self._weights)

    def code(self, vec: tuple[int, ...]) -> int:
        if len(vec) != self.dimension:
            raise ValueError("wrong vector length")
        return int(np.dot(np.asarray(vec, dtype=np.int64) % self.characteristic, self._weights))

    @cached_property
    def kernel_mask(self) -> np.ndarray:
        return (self.perm == np.arange(self.size)).all(axis=1)

    @cached_property
    def kernel(self) -> MatrixGroup:
        """Elements fixing every vector (the identity alone for a faithful action)."""
        return self.group.subgroup(np.flatnonzero(self.kernel_mask))

    def stabilizer_mask(self, code: int) -> np.ndarray:
        return self.perm[:, code] == code

    def __repr__(self) -> str:
        return f"ModuleAction({self.group!r} on F_{self.characteristic}^{self.dimension})"


def orbits(act: ModuleAction) -> list[int]:
    """Orbit sizes of the group on the module, ascending."""
    gen_rows = act.group.lookup(np.stack([g.array for g in act.group.generators]))
    perms = [act.perm[i] for i in gen_rows]
    seen = np.zeros(act.size, dtype=bool)
    sizes = []
    for start in range(act.size):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        count = 0
        while stack:
            v = stack.pop()
            count += 1
            for p in perms:
                w = int(p[v])
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        sizes.append(count)
    return sorted(sizes)


def sylow_count(g: MatrixGroup, q: int) -> int:
    """Number of Sylow q-subgroups of g."""
    return g.sylow_count(q)


@dataclass(frozen=True)
class NqReport:
    """Result of :func:`check_Nq`.

    ``d_exponent`` and ``b_exponent`` give |V| = r^d and |C_V(Q)| = r^b for
    one Sylow q-subgroup Q; ``witnesses`` lists nonzero vectors whose
    stabilizer has no normal Sylow q-subgroup of the whole group.
    """

    q: int
    r: int
    holds: bool
    reason: str
    witnesses: tuple[tuple[int, ...], ...]
    d_exponent: int
    b_exponent: int | None
    sylow_count: int


def _q_part(n: int, q: int) -> int:
    return q ** factor(n).as_dict().get(q, 0)


def _log(n: int, r: int) -> int:
    e = 0
    while n > 1:
        if n % r:
            raise ArithmeticError(f"{n} is not a power of {r}")  # pragma: no cover
        n //= r
        e += 1
    return e


def check_Nq(act: ModuleAction, q: int) -> NqReport:
    """Decide the condition N_q for the pair (group, module).

    It holds when q divides |H : C_H(V)| and every nonzero v has a
    stabilizer containing a normal Sylow q-subgroup of H.  The latter is
    tested by counting: C_H(v) must have |H|_q elements of q-power order
    and order divisible by |H|_q, which happens exactly when it has a
    unique Sylow q-subgroup and that subgroup is Sylow in H.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not a prime")
    h = act.group
    r, d = act.characteristic, act.dimension
    if h.order % q:
        return NqReport(q, r, False, f"q = {q} does not divide |H| = {h.order}", (), d, None, 1)
    hq = _q_part(h.order, q)
    sylow = h.sylow_subgroup(q)
    n_q = h.order // int(h.normalizer_mask(sylow).sum())
    sylow_rows = h.lookup(sylow.matrices)
    fixed = (act.perm[sylow_rows] == np.arange(act.size)).all(axis=0)
    b = _log(int(fixed.sum()), r)

    kernel_order = int(act.kernel_mask.sum())
    if (h.order // kernel_order) % q:
        return NqReport(q, r, False, f"q = {q} does not divide |H : C_H(V)|", (), d, b, n_q)

    stab = act.perm == np.arange(act.size)
    qmask = h.q_element_mask(q)
    stab_order = stab.sum(axis=0)
    q_elements = stab[qmask].sum(axis=0)
    good = (stab_order % hq == 0) & (q_elements == hq)
    bad = [act.vector(v) for v in range(1, act.size) if not good[v]]
    reason = "holds" if not bad else f"{len(bad)} nonzero vectors have no normal Sylow {q}-subgroup in their stabilizer"
    return NqReport(q, r, not bad, reason, tuple(bad), d, b, n_q)


def counting_identity(act: ModuleAction, q: int) -> bool:
    """n_q(H) (r^b - 1) = r^d - 1, the partition of nonzero vectors by Sylow fixed spaces.

    Only meaningful when N_q holds; raises ValueError otherwise.
    """
    rep = check_Nq(act, q)
    if not rep.holds:
        raise ValueError(f"condition N_{q} fails ({rep.reason}); the identity is not defined")
    r = rep.r
    return rep.sylow_count * (r**rep.b_exponent - 1) == r**rep.d_exponent - 1


def sl2_generators(t: int, a: int) -> list[FqMatrix]:
    """Root elements [[1, w^i], [0, 1]] and [[1, 0], [w^i, 1]] of SL2(t^a), blown up.

    w is the class of x in F_t[x]/(f), f the smallest irreducible of degree
    a; the elements w^i (i < a) form an F_t-basis, so these generate SL2(t^a).
    """
    f = smallest_irreducible(t, a)
    one: tuple[int, ...] = (1,)
    zero: tuple[int, ...] = ()
    gens = []
    for i in range(a):
        w = tuple([0] * i + [1])
        gens.append(FqMatrix.from_array(t, blow_up([[one, w], [zero, one]], f, t)))
        gens.append(FqMatrix.from_array(t, blow_up([[one, zero], [w, one]], f, t)))
    return gens


def sl2_natural(t: int, a: int, cap: int | None = None) -> ModuleAction:
    """SL2(t^a) as 2a x 2a matrices over F_t acting on F_t^(2a)."""
    if not is_prime(t):
        raise ValueError(f"t = {t} is not a prime")
    if not 1 <= a <= 3:
        raise ValueError(f"a must be 1, 2 or 3, got {a}")
    if t ** (2 * a) > 1 << 16:
        raise GroupOverflowError(f"module of size {t}^{2 * a} exceeds 2^16")
    group = generate(sl2_generators(t, a), cap)
    q = t**a
    if group.order != q * (q * q - 1):
        raise ArithmeticError("SL2 generators produced the wrong order")  # pragma: no cover
    return ModuleAction(group)
