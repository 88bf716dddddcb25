"""Decision procedure for non-solvable groups whose degree graph has a cut-vertex.

A :class:`GroupDescriptor` records the structural data the classification
is phrased in: the socle S of G/R, the shape of the solvable residual K,
vertex sets of G/K and R, the index |G:KR| and a candidate prime p.  These
are declared facts, not derived from a presentation.

:func:`classify` tests the clauses in the order C, A, B and returns the
first match together with the predicted graph, or ``not_covered`` with the
conditions that failed.  Clause tags are a letter plus sub-case, e.g.
``"A(e)(ii)"`` or ``"C(a)"``: A and B give connected graphs (B when the socle
is A5), C gives disconnected ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .degree_graphs import SimpleFamily, parse_family_name, sporadic_graph
from .graph import (
    PrimeGraph,
    complete_graph,
    components,
    cut_vertices,
    is_complete_vertex,
    join,
    to_canonical,
)
from .numtheory import factor, is_prime, pi_set, prime_form

__all__ = [
    "CUT_OUTCOMES",
    "DESCRIPTOR_KEYS",
    "DescriptorError",
    "GroupDescriptor",
    "OUTCOMES",
    "RESIDUAL_SHAPES",
    "Verdict",
    "classify",
    "descriptor_sweep",
    "format_descriptor",
    "format_verdict",
    "graph_outcome",
    "group_vertex_set",
    "p_is_complete_where_required",
    "parse_descriptor",
    "predict_graph",
]

OUTCOMES = (
    "connected_cut_vertex",
    "disconnected_cut_vertex",
    "disconnected_no_cut_vertex",
    "two_connected",
    "not_covered",
)
CUT_OUTCOMES = ("connected_cut_vertex", "disconnected_cut_vertex")
RESIDUAL_SHAPES = ("simple", "sl2_cover", "extension_natural", "extension_special")


class DescriptorError(ValueError):
    """A descriptor field is malformed or contradicts another field."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name
        self.message = message


def _vertex_set(name: str, value: Iterable[int]) -> frozenset[int]:
    s = frozenset(value)
    if len(s) > 1:
        raise DescriptorError(name, f"at most one prime allowed, got {sorted(s)}")
    for v in s:
        if not isinstance(v, int) or not is_prime(v):
            raise DescriptorError(name, f"{v!r} is not a prime")
    return s


@dataclass(frozen=True, kw_only=True)
class GroupDescriptor:
    """Structural description of a non-solvable group G.

    ``quotient_vertices`` is V(G/K); it is empty exactly when G/K is
    abelian.  ``outer_index`` is |G:KR|, which must divide the order of
    Out(S).  ``direct_product_with_R`` declares G = K x R (for clause
    B(b)(ii), G = K x C_G(K)); it forces V(G/K) = V(R).
    """

    socle: SimpleFamily
    candidate_p: int
    residual_shape: str = "simple"
    radical_vertices: frozenset[int] = frozenset()
    quotient_vertices: frozenset[int] = frozenset()
    outer_index: int = 1
    outer_part_odd: bool | None = None
    sylow2_condition: bool = False
    direct_product_with_R: bool = False

    def __post_init__(self) -> None:
        socle = self.socle
        if not isinstance(socle, SimpleFamily):
            raise DescriptorError("socle", "expected a SimpleFamily")
        if socle.tag == "SL2":
            if socle.t != 2:
                raise DescriptorError(
                    "socle", "the socle is simple: use PSL2 with residual_shape = sl2_cover"
                )
            object.__setattr__(self, "socle", SimpleFamily("PSL2", socle.t, socle.a))
        if self.residual_shape not in RESIDUAL_SHAPES:
            raise DescriptorError("residual_shape", f"expected one of {RESIDUAL_SHAPES}")
        object.__setattr__(self, "radical_vertices", _vertex_set("radical_vertices", self.radical_vertices))
        object.__setattr__(self, "quotient_vertices", _vertex_set("quotient_vertices", self.quotient_vertices))
        if not isinstance(self.candidate_p, int) or not is_prime(self.candidate_p):
            raise DescriptorError("p", f"{self.candidate_p!r} is not a prime")
        if not isinstance(self.outer_index, int) or self.outer_index < 1:
            raise DescriptorError("outer_index", "must be a positive integer")
        out = self.socle.outer_order()
        if out % self.outer_index:
            raise DescriptorError(
                "outer_index", f"|G:KR| = {self.outer_index} does not divide |Out(S)| = {out}"
            )
        odd = self.outer_index % 2 == 1
        if self.outer_part_odd is None:
            object.__setattr__(self, "outer_part_odd", odd)
        elif self.outer_part_odd != odd:
            raise DescriptorError("outer_part_odd", f"contradicts outer_index = {self.outer_index}")
        if self.direct_product_with_R and self.quotient_vertices != self.radical_vertices:
            raise DescriptorError(
                "quotient_vertices", "G = K x R forces V(G/K) = V(R)"
            )

    @property
    def p(self) -> int:
        return self.candidate_p

    @property
    def q(self) -> int | None:
        return self.socle.q


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`classify`."""

    outcome: str
    matched_clause: str | None = None
    cut_vertex: int | None = None
    predicted_graph: PrimeGraph | None = None
    violations: tuple[tuple[str, str], ...] = ()
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.outcome not in OUTCOMES:
            raise ValueError(f"unknown outcome {self.outcome!r}")
        if self.outcome in CUT_OUTCOMES:
            if self.cut_vertex is None or self.predicted_graph is None:
                raise ValueError("a cut-vertex outcome needs a cut vertex and a graph")
            found = cut_vertices(self.predicted_graph)
            if found != {self.cut_vertex}:
                raise ValueError(
                    f"predicted graph has cut vertices {sorted(found)}, expected {{{self.cut_vertex}}}"
                )

    @property
    def covered(self) -> bool:
        return self.outcome != "not_covered"


# -- descriptor facts ------------------------------------------------------


def group_vertex_set(d: GroupDescriptor, with_p: bool = True) -> frozenset[int]:
    """pi(G/R), together with p unless ``with_p`` is false.

    Every cut-vertex outcome predicts pi(G/R) together with p; the
    no-cut-vertex outcomes of the C clauses do not involve p and predict pi(G/R).
    """
    base = pi_set(d.socle.simple_order()) | pi_set(d.outer_index)
    return base | {d.p} if with_p else base


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _is_a5(d: GroupDescriptor) -> bool:
    return d.socle.tag == "PSL2" and d.q in (4, 5)


def _k_quasisimple(d: GroupDescriptor) -> bool:
    return d.residual_shape in ("simple", "sl2_cover")


def _k_double_cover(d: GroupDescriptor) -> bool:
    """K is SL2(t^a) with t odd, a proper central extension of S."""
    return d.residual_shape == "sl2_cover" and d.socle.t is not None and d.socle.t % 2 == 1


def _fmt(s: Iterable[int]) -> str:
    return "{" + ", ".join(map(str, sorted(s))) + "}"


# -- clauses ---------------------------------------------------------------
#
# Each clause is a function returning None when it does not apply to the
# socle at all, or a _Check listing the failed side conditions.


@dataclass
class _Check:
    clause: str
    failures: list[str]
    outcome: str = "connected_cut_vertex"
    notes: list[str] = field(default_factory=list)


def _require(failures: list[str], ok: bool, text: str) -> None:
    if not ok:
        failures.append(text)


def _disconnected_base(d: GroupDescriptor) -> list[str]:
    f: list[str] = []
    _require(f, _k_quasisimple(d), "K is isomorphic to PSL2(t^a) or SL2(t^a)")
    _require(f, not d.quotient_vertices, "G/K is abelian (V(G/K) empty)")
    _require(f, _is_power_of(d.outer_index, d.p), f"|G:KR| = p^b (|G:KR| = {d.outer_index}, p = {d.p})")
    return f


def _clause_ca(d: GroupDescriptor) -> _Check | None:
    s = d.socle
    if s.tag != "PSL2" or s.t == 2 or (d.q == 5 and not _k_double_cover(d)):
        return None
    f = _disconnected_base(d)
    _require(f, d.p == 2, "p = 2")
    _require(f, d.q != 9, "t^a != 9")
    form = prime_form(d.q)
    _require(f, not form.fermat, "t^a is a Fermat prime")
    _require(f, not form.mersenne, "t^a is a Mersenne prime")
    return _Check("C(a)", f, "disconnected_cut_vertex")


def _clause_cb(d: GroupDescriptor) -> _Check | None:
    s = d.socle
    if s.tag != "PSL2" or s.t != 2:
        return None
    f = _disconnected_base(d)
    _require(f, d.q != 4, "t^a != 4")
    _require(f, d.p != 2, "p != 2")
    _require(f, d.outer_index > 1, "b >= 1 (|G:KR| > 1)")
    check = _Check("C(b)", f, "disconnected_cut_vertex")
    if not f:
        left, right = pi_set(d.q - 1) - {d.p}, pi_set(d.q + 1) - {d.p}
        if not left or not right:
            check.outcome = "disconnected_no_cut_vertex"
            check.notes.append(
                f"pi(2^a - 1) - {{p}} = {_fmt(left)} and pi(2^a + 1) - {{p}} = {_fmt(right)}: "
                "one side is empty, so p does not separate its component"
            )
    return check


def _clause_c_a5(d: GroupDescriptor) -> _Check | None:
    if not _is_a5(d) or _k_double_cover(d):
        return None
    f = _disconnected_base(d)
    check = _Check("C(t^a=4)", f, "disconnected_no_cut_vertex")
    check.notes.append("K is A5 = SL2(4); the graph is disconnected and has no cut-vertex")
    return check


def _clause_c_three(d: GroupDescriptor) -> _Check | None:
    s = d.socle
    if s.tag != "PSL2" or s.t != 2 or d.q == 4:
        return None
    f = _disconnected_base(d)
    _require(f, d.outer_index == 1, "G = KR, so G = SL2(2^a) x A with A abelian")
    check = _Check("C(three-components)", f, "disconnected_no_cut_vertex")
    check.notes.append("three complete components {2}, pi(2^a - 1), pi(2^a + 1); no cut-vertex")
    return check


def _clause_aa(d: GroupDescriptor) -> _Check | None:
    if d.socle.tag != "Sz":
        return None
    a = d.socle.a
    f: list[str] = []
    _require(f, d.residual_shape == "simple", "K is isomorphic to S")
    _require(f, is_prime(a), f"a is a prime (a = {a})")
    _require(f, d.p == 2**a - 1, f"p = 2^a - 1 = {2**a - 1}")
    _require(f, is_prime(2**a - 1), f"2^a - 1 = {2**a - 1} is prime")
    _require(f, d.quotient_vertices <= {d.p}, "V(G/K) is contained in {p}")
    return _Check("A(a)", f)


def _clause_ab(d: GroupDescriptor) -> _Check | None:
    if d.socle.tag != "PSL3_4":
        return None
    f: list[str] = []
    _require(f, d.residual_shape == "simple", "K is isomorphic to S")
    _require(f, d.outer_index in (1, 3), "|G:KR| is 1 or 3")
    _require(f, d.p == 5, "p = 5")
    _require(f, d.quotient_vertices <= {5}, "V(G/K) is contained in {5}")
    return _Check("A(b)", f)


def _clause_sporadic(tag: str, clause: str, p: int) -> Callable[[GroupDescriptor], _Check | None]:
    def check(d: GroupDescriptor) -> _Check | None:
        if d.socle.tag != tag:
            return None
        f: list[str] = []
        _require(f, d.residual_shape == "simple", "K is isomorphic to S")
        _require(f, d.direct_product_with_R, "G = K x R")
        _require(f, d.p == p, f"p = {p}")
        _require(f, d.radical_vertices <= {p}, f"V(R) is contained in {{{p}}}")
        return _Check(clause, f)

    return check


def _clause_ae(d: GroupDescriptor) -> _Check | None:
    s = d.socle
    if s.tag != "PSL2" or s.t == 2 or d.q <= 5:
        return None
    f: list[str] = []
    _require(f, d.outer_index % s.t != 0, "t does not divide |G/KR|")
    _require(f, d.p != s.t, "p != t")
    if d.residual_shape == "extension_special":
        _require(f, d.q == 13, "t^a = 13 (3^6 module for SL2(13))")
        _require(f, d.p == 2, "p = 2")
        _require(f, d.quotient_vertices <= {2}, "V(G/K) is contained in {2}")
        return _Check("A(e)(iii)", f)
    _require(f, d.quotient_vertices == {d.p}, "V(G/K) = {p}")
    sub = "(ii)" if d.residual_shape == "extension_natural" else "(i)"
    return _Check("A(e)" + sub, f)


def _clause_af(d: GroupDescriptor) -> _Check | None:
    s = d.socle
    if s.tag != "PSL2" or s.t != 2 or s.a <= 2:
        return None
    if d.residual_shape == "extension_special":
        return _Check("A(f)", ["no exceptional module occurs for SL2(2^a) with a > 2"])
    f: list[str] = []
    if d.residual_shape == "extension_natural":
        _require(f, d.outer_part_odd, "G/KR has odd order")
        _require(f, d.p != 2, "p != 2")
        _require(f, d.quotient_vertices == {d.p}, "V(G/K) = {p}")
        _require(f, d.sylow2_condition, "T' = (T cap K)' for a Sylow 2-subgroup T")
        return _Check("A(f)(ii)", f)
    union = d.quotient_vertices | pi_set(d.outer_index)
    first: list[str] = []
    _require(first, union == {2}, "V(G/K) cup pi(G/KR) = {2}")
    _require(first, d.p == 2, "p = 2")
    second: list[str] = []
    _require(second, d.outer_part_odd, "G/KR has odd order")
    _require(second, d.p != 2, "p != 2")
    _require(second, d.quotient_vertices == {d.p}, "V(G/K) = {p}")
    check = _Check("A(f)(i)", f)
    if not first:
        check.notes.append(
            f"first alternative read as a union: V(G/K) = {_fmt(d.quotient_vertices)}, "
            f"pi(G/KR) = {_fmt(pi_set(d.outer_index))}"
        )
    elif second:
        f += [f"first alternative: {x}" for x in first]
        f += [f"second alternative: {x}" for x in second]
    return check


def _clause_b(d: GroupDescriptor) -> _Check | None:
    if not _is_a5(d):
        return None
    f: list[str] = []
    p = d.p
    if _k_quasisimple(d):
        _require(f, d.quotient_vertices == {p}, "V(G/K) = {p}")
        if p == 5:
            _require(f, not _k_double_cover(d), "p = 5 forces K = SL2(4)")
            _require(f, d.direct_product_with_R, "p = 5 forces G = K x R")
        return _Check("B(a)", f)
    natural = d.residual_shape == "extension_natural"
    if d.socle.t == 2:
        _require(f, d.outer_index == 1, "G = KR")
        if natural:
            _require(f, p != 2, "p != 2")
            _require(f, d.quotient_vertices == {p}, "V(G/K) = {p}")
            return _Check("B(b)(i)", f)
        _require(f, p == 5, "p = 5")
        _require(f, d.direct_product_with_R, "G = K x R0 with R0 = C_G(K)")
        _require(f, d.radical_vertices == d.quotient_vertices, "V(R0) = V(G/K)")
        _require(f, d.quotient_vertices <= {5}, "V(G/K) is contained in {5}")
        return _Check("B(b)(ii)", f)
    if natural:
        _require(f, p != 5, "p != 5")
        _require(f, d.quotient_vertices == {p}, "V(G/K) = {p}")
        return _Check("B(c)(i)", f)
    _require(f, p == 2, "p = 2")
    _require(f, d.quotient_vertices <= {2}, "V(G/K) is contained in {2}")
    return _Check("B(c)(ii)", f)


_CLAUSES: tuple[Callable[[GroupDescriptor], _Check | None], ...] = (
    _clause_ca,
    _clause_cb,
    _clause_c_a5,
    _clause_c_three,
    _clause_aa,
    _clause_ab,
    _clause_sporadic("M11", "A(c)", 5),
    _clause_sporadic("J1", "A(d)", 2),
    _clause_ae,
    _clause_af,
    _clause_b,
)


# -- graphs ----------------------------------------------------------------


def _union(*graphs: PrimeGraph) -> PrimeGraph:
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for g in graphs:
        verts |= g.vertices
        edges |= g.edges
    return PrimeGraph(verts, edges)


def _cone(g: PrimeGraph, p: int) -> PrimeGraph:
    """Add p (if new) and join it to every other vertex."""
    verts = g.vertices | {p}
    return PrimeGraph(verts, [*g.edges, *((p, v) for v in verts if v != p)])


def _join_construction(d: GroupDescriptor) -> PrimeGraph:
    t, q = d.socle.t, d.q
    core = pi_set(d.outer_index) | ({2} if t != 2 else set())
    gamma1 = complete_graph(core)
    gamma2 = _union(complete_graph(pi_set(q - 1) - core), complete_graph(pi_set(q + 1) - core))
    big = join(gamma1, gamma2)
    return _cone(_union(big, PrimeGraph({t})), d.p)


def _pendant_clique(verts: frozenset[int], leaf: int, p: int) -> PrimeGraph:
    body = complete_graph(verts - {leaf})
    return PrimeGraph(verts, [*body.edges, (leaf, p)])


def _a5_socle_graph(d: GroupDescriptor, clause: str) -> PrimeGraph:
    p = d.p
    if p in (2, 3, 5):
        return PrimeGraph({2, 3, 5}, [(p, x) for x in (2, 3, 5) if x != p])
    if clause == "B(a)" and d.direct_product_with_R and not _k_double_cover(d):
        return PrimeGraph({2, 3, 5, p}, [(p, 2), (p, 3), (p, 5)])
    if clause == "B(b)(i)":
        return PrimeGraph({2, 3, 5, p}, [(p, 3), (p, 5), (3, 5), (p, 2)])
    return PrimeGraph({2, 3, 5, p}, [(p, 2), (p, 3), (2, 3), (p, 5)])


def _build_graph(d: GroupDescriptor, clause: str) -> PrimeGraph | None:
    p, q, t = d.p, d.q, d.socle.t
    verts = group_vertex_set(d)
    if clause == "A(a)":
        return PrimeGraph(verts, [*complete_graph(verts - {2}).edges, (2, p)])
    if clause == "A(b)":
        return sporadic_graph("PSL3_4")
    if clause == "A(c)":
        return sporadic_graph("M11")
    if clause == "A(d)":
        g = sporadic_graph("J1")
        if d.radical_vertices == {2}:
            g = PrimeGraph(g.vertices, [*g.edges, (2, 11)])
        return g
    if clause in ("A(e)(ii)", "A(f)(ii)"):
        return _pendant_clique(verts, t, p)
    if clause == "A(e)(iii)":
        return PrimeGraph({2, 3, 7, 13}, [(2, 3), (2, 7), (2, 13), (7, 13)])
    if clause == "A(e)(i)":
        return _join_construction(d)
    if clause == "A(f)(i)":
        if p == 2:
            return _union(complete_graph(pi_set(q - 1) | {2}), complete_graph(pi_set(q + 1) | {2}))
        return _join_construction(d)
    if clause.startswith("B("):
        return _a5_socle_graph(d, clause)
    if clause == "C(a)":
        return _union(PrimeGraph({t}), complete_graph(pi_set(q - 1)), complete_graph(pi_set(q + 1)))
    if clause == "C(b)":
        return _union(
            PrimeGraph({2}),
            complete_graph(pi_set(q - 1) | {p}),
            complete_graph(pi_set(q + 1) | {p}),
        )
    if clause == "C(three-components)":
        return _union(PrimeGraph({2}), complete_graph(pi_set(q - 1)), complete_graph(pi_set(q + 1)))
    if clause == "C(t^a=4)":
        return PrimeGraph({2, 3, 5}) if d.outer_index == 1 else None
    raise ValueError(f"unknown clause {clause!r}")


def _evaluate(d: GroupDescriptor, clause: str) -> _Check:
    for fn in _CLAUSES:
        check = fn(d)
        if check is not None and check.clause == clause:
            return check
    raise ValueError(f"clause {clause!r} does not apply to this descriptor")


def predict_graph(d: GroupDescriptor, matched_clause: str) -> PrimeGraph | None:
    """Degree graph predicted for a descriptor that satisfies ``matched_clause``.

    Returns None only for descriptors whose graph the classification leaves
    open (A5 socle, G/R = S5, no cut-vertex).
    """
    check = _evaluate(d, matched_clause)
    if check.failures:
        raise ValueError(f"descriptor does not satisfy {matched_clause}: {check.failures}")
    return _build_graph(d, matched_clause)


def classify(d: GroupDescriptor) -> Verdict:
    """Match a descriptor against the classification, clauses C, A, B in turn."""
    violations: list[tuple[str, str]] = []
    for fn in _CLAUSES:
        check = fn(d)
        if check is None:
            continue
        if check.failures:
            violations += [(check.clause, text) for text in check.failures]
            continue
        graph = _build_graph(d, check.clause)
        cut = d.p if check.outcome in CUT_OUTCOMES else None
        return Verdict(check.outcome, check.clause, cut, graph, tuple(violations), tuple(check.notes))
    return Verdict("not_covered", violations=tuple(violations))


def graph_outcome(g: PrimeGraph) -> str:
    """Outcome category of a graph, by direct connectivity analysis."""
    connected = len(components(g)) == 1
    has_cut = bool(cut_vertices(g))
    if connected:
        if has_cut:
            return "connected_cut_vertex"
        return "two_connected" if len(g.vertices) >= 3 else "not_covered"
    return "disconnected_cut_vertex" if has_cut else "disconnected_no_cut_vertex"


# -- sweep -----------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def _prime_powers(lo: int, hi: int) -> Iterator[tuple[int, int]]:
    for n in range(lo, hi + 1):
        fac = factor(n).factors
        if len(fac) == 1:
            yield fac[0]


def _candidate_primes(socle: SimpleFamily, outer: int) -> list[int]:
    base = pi_set(socle.simple_order()) | pi_set(outer)
    extra = 2
    while extra in base:
        extra += 1
        while not is_prime(extra):
            extra += 1
    return sorted(base | {extra})


def descriptor_sweep(max_q: int = 2**14) -> Iterator[GroupDescriptor]:
    """Every descriptor on a finite grid covering all clauses.

    PSL2 socles range over prime powers 4 <= t^a <= max_q, Suzuki socles
    over odd a with 2^a <= max_q; for each socle the grid takes every
    residual shape, every divisor of |Out(S)| as |G:KR|, every prime in
    pi(G/R) plus one prime outside it as p, and V(G/K) in {empty, {p}}.
    Flags that only one clause reads are varied only where they matter.
    """
    socles: list[SimpleFamily] = [SimpleFamily("PSL3_4"), SimpleFamily("M11"), SimpleFamily("J1")]
    socles += [SimpleFamily("Sz", 2, a) for a in range(3, max_q.bit_length(), 2) if 2**a <= max_q]
    socles += [SimpleFamily("PSL2", t, a) for t, a in _prime_powers(4, max_q)]
    for socle in socles:
        a5 = socle.tag == "PSL2" and socle.q in (4, 5)
        sporadic = socle.tag in ("M11", "J1")
        for outer in _divisors(socle.outer_order()):
            for p in _candidate_primes(socle, outer):
                for shape in RESIDUAL_SHAPES:
                    sylow_opts = (True, False) if socle.t == 2 and shape == "extension_natural" else (False,)
                    direct_opts = (True, False) if (a5 or sporadic) else (False,)
                    for sylow2 in sylow_opts:
                        for direct in direct_opts:
                            for qv in (frozenset(), frozenset({p})):
                                radicals = (qv,) if direct else (
                                    (frozenset(), frozenset({p})) if (a5 or sporadic) else (frozenset(),)
                                )
                                for rv in radicals:
                                    yield GroupDescriptor(
                                        socle=socle,
                                        candidate_p=p,
                                        residual_shape=shape,
                                        radical_vertices=rv,
                                        quotient_vertices=qv,
                                        outer_index=outer,
                                        sylow2_condition=sylow2,
                                        direct_product_with_R=direct,
                                    )


def p_is_complete_where_required(d: GroupDescriptor, v: Verdict) -> bool:
    """Whether p is complete as the classification asserts for this verdict.

    For connected outcomes p is complete in the whole graph, except in
    clause A(d) with R abelian (V(R) empty); for the C clauses it is complete
    within its own component.
    """
    g = v.predicted_graph
    if v.matched_clause == "A(d)" and not d.radical_vertices:
        return True
    if v.outcome == "disconnected_cut_vertex":
        comp = next(c for c in components(g) if d.p in c)
        return all(g.has_edge(d.p, w) for w in comp if w != d.p)
    return is_complete_vertex(g, d.p)



# -- text formats ----------------------------------------------------------

DESCRIPTOR_KEYS = (
    "socle",
    "t",
    "a",
    "residual_shape",
    "radical_vertices",
    "quotient_vertices",
    "outer_index",
    "outer_part_odd",
    "sylow2_condition",
    "direct_product_with_R",
    "p",
)
_TRUE = {"true", "yes", "1"}
_FALSE = {"false", "no", "0"}


def _parse_int(key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise DescriptorError(key, f"expected an integer, got {raw!r}") from None


def _parse_bool(key: str, raw: str) -> bool:
    low = raw.lower()
    if low in _TRUE:
        return True
    if low in _FALSE:
        return False
    raise DescriptorError(key, f"expected true or false, got {raw!r}")


def _parse_primes(key: str, raw: str) -> frozenset[int]:
    body = raw.strip().strip("{}").replace(",", " ").split()
    return frozenset(_parse_int(key, x) for x in body)


def parse_descriptor(text: str) -> GroupDescriptor:
    """Read a descriptor from ``key = value`` lines; ``#`` starts a comment.

    Raises :class:`DescriptorError` naming the offending field, or
    :class:`~cdgraph.degree_graphs.UnknownFamilyError` for an unknown socle.
    """
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise DescriptorError(key or f"line {lineno}", "expected 'key = value'")
        if key not in DESCRIPTOR_KEYS:
            raise DescriptorError(key, f"unknown field; expected one of {list(DESCRIPTOR_KEYS)}")
        if key in fields:
            raise DescriptorError(key, "given more than once")
        fields[key] = value
    for key in ("socle", "p"):
        if key not in fields:
            raise DescriptorError(key, "required field missing")
    tag = parse_family_name(fields["socle"])
    t = _parse_int("t", fields["t"]) if "t" in fields else None
    a = _parse_int("a", fields["a"]) if "a" in fields else None
    try:
        socle = SimpleFamily(tag, t, a)
    except ValueError as exc:
        raise DescriptorError("socle", str(exc)) from None
    kwargs: dict[str, object] = {"socle": socle, "candidate_p": _parse_int("p", fields["p"])}
    if "residual_shape" in fields:
        kwargs["residual_shape"] = fields["residual_shape"]
    for key in ("radical_vertices", "quotient_vertices"):
        if key in fields:
            kwargs[key] = _parse_primes(key, fields[key])
    if "outer_index" in fields:
        kwargs["outer_index"] = _parse_int("outer_index", fields["outer_index"])
    for key in ("outer_part_odd", "sylow2_condition", "direct_product_with_R"):
        if key in fields:
            kwargs[key] = _parse_bool(key, fields[key])
    return GroupDescriptor(**kwargs)


def format_descriptor(d: GroupDescriptor) -> str:
    """Inverse of :func:`parse_descriptor`."""

    def primes(s: frozenset[int]) -> str:
        return _fmt(s)

    lines = [f"socle = {d.socle.tag}"]
    if d.socle.tag in ("PSL2", "SL2"):
        lines.append(f"t = {d.socle.t}")
    if d.socle.a is not None:
        lines.append(f"a = {d.socle.a}")
    lines += [
        f"residual_shape = {d.residual_shape}",
        f"radical_vertices = {primes(d.radical_vertices)}",
        f"quotient_vertices = {primes(d.quotient_vertices)}",
        f"outer_index = {d.outer_index}",
        f"outer_part_odd = {str(d.outer_part_odd).lower()}",
        f"sylow2_condition = {str(d.sylow2_condition).lower()}",
        f"direct_product_with_R = {str(d.direct_product_with_R).lower()}",
        f"p = {d.p}",
    ]
    return "\n".join(lines) + "\n"


def format_verdict(v: Verdict) -> str:
    """Machine-readable verdict: ``key: value`` lines, then the graph, violations and notes."""
    lines = [
        f"outcome: {v.outcome}",
        f"clause: {v.matched_clause or '-'}",
        f"cut_vertex: {v.cut_vertex if v.cut_vertex is not None else '-'}",
    ]
    if v.predicted_graph is not None:
        lines.append(to_canonical(v.predicted_graph).rstrip("\n"))
    else:
        lines.append("# graph: -")
    lines += [f"violation: {clause}: {text}" for clause, text in v.violations]
    lines += [f"note: {n}" for n in v.notes]
    return "\n".join(lines) + "\n"

