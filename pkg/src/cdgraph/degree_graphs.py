"""Degree graphs of the simple groups that occur in the cut-vertex classification.

Two routes produce a graph: :func:`graph_from_degrees` applies the
definition to a set of character degrees, while :func:`psl2_graph`,
:func:`sz_graph` and :func:`sporadic_graph` build the graph from its known
structure.  The structural constructors are authoritative; bundled degree
fixtures exist to cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Iterable

from .graph import PrimeGraph, complete_graph
from .numtheory import factor, is_prime, pi_set

__all__ = [
    "DegreeSet",
    "DegreeFixture",
    "SimpleFamily",
    "UnknownFamilyError",
    "family_graph",
    "fixture_family",
    "fixture_labels",
    "graph_from_degrees",
    "load_fixture",
    "parse_family_name",
    "parse_fixture",
    "psl2_graph",
    "sporadic_graph",
    "sz_graph",
]

FAMILY_TAGS = ("PSL2", "SL2", "Sz", "PSL3_4", "M11", "J1")

SPORADIC_EDGES: dict[str, tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = {
    "M11": ((2, 3, 5, 11), ((3, 5), (2, 5), (2, 11), (5, 11))),
    "J1": (
        (2, 3, 5, 7, 11, 19),
        ((2, 3), (3, 5), (2, 5), (2, 7), (2, 19), (7, 11), (7, 19), (11, 19)),
    ),
    "PSL3_4": ((2, 3, 5, 7), ((2, 5), (3, 5), (5, 7), (3, 7))),
}

_FAMILY_NAMES = {
    "psl2": "PSL2",
    "sl2": "SL2",
    "sz": "Sz",
    "psl3_4": "PSL3_4",
    "psl3(4)": "PSL3_4",
    "m11": "M11",
    "j1": "J1",
}


class UnknownFamilyError(ValueError):
    """A family name outside PSL2, SL2, Sz, PSL3_4, M11, J1."""


def parse_family_name(name: str) -> str:
    """Canonical tag for a family name, case-insensitive."""
    try:
        return _FAMILY_NAMES[name.strip().lower()]
    except KeyError:
        raise UnknownFamilyError(f"unknown family {name!r}; expected one of {list(FAMILY_TAGS)}") from None


@dataclass(frozen=True)
class DegreeSet:
    """A set of irreducible character degrees; always contains 1."""

    degrees: frozenset[int]

    def __init__(self, degrees: Iterable[int]):
        degs = frozenset(degrees)
        if 1 not in degs:
            raise ValueError("a degree set must contain 1")
        if any(d < 1 for d in degs):
            raise ValueError("degrees must be positive integers")
        object.__setattr__(self, "degrees", degs)


@dataclass(frozen=True)
class SimpleFamily:
    """One of the simple (or quasi-simple) groups the classification names.

    ``t`` and ``a`` are the field parameters for ``PSL2``/``SL2`` (field of
    order t**a) and ``a`` is the exponent for ``Sz`` (field of order 2**a).
    """

    tag: str
    t: int | None = None
    a: int | None = None

    def __post_init__(self) -> None:
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family {self.tag!r}; expected one of {FAMILY_TAGS}")
        if self.tag in ("PSL2", "SL2"):
            if self.t is None or self.a is None:
                raise ValueError(f"{self.tag} needs parameters t and a")
            if not is_prime(self.t) or self.a < 1:
                raise ValueError(f"{self.tag}: t must be prime and a >= 1")
            if self.t**self.a < 4:
                raise ValueError(f"{self.tag}: need t^a >= 4, got {self.t}^{self.a}")
        elif self.tag == "Sz":
            if self.a is None or self.a < 3 or self.a % 2 == 0:
                raise ValueError("Sz(2^a) needs a odd and a >= 3")
            if self.t not in (None, 2):
                raise ValueError("Sz is defined over a field of characteristic 2")
            object.__setattr__(self, "t", 2)
        elif self.t is not None or self.a is not None:
            raise ValueError(f"{self.tag} takes no parameters")

    @property
    def q(self) -> int | None:
        return self.t**self.a if self.a is not None else None

    def simple_order(self) -> int:
        """Order of the simple group (the central quotient for SL2)."""
        if self.tag in ("PSL2", "SL2"):
            q = self.q
            return q * (q * q - 1) // (2 if q % 2 else 1)
        if self.tag == "Sz":
            q = self.q
            return q * q * (q * q + 1) * (q - 1)
        return {"PSL3_4": 20160, "M11": 7920, "J1": 175560}[self.tag]

    def outer_order(self) -> int:
        """Order of the outer automorphism group of the simple group."""
        if self.tag in ("PSL2", "SL2"):
            return (2 if self.q % 2 else 1) * self.a
        if self.tag == "Sz":
            return self.a
        return {"PSL3_4": 12, "M11": 1, "J1": 1}[self.tag]

    def label(self) -> str:
        if self.tag in ("PSL2", "SL2"):
            return f"{self.tag}({self.t}^{self.a})" if self.a > 1 else f"{self.tag}({self.t})"
        if self.tag == "Sz":
            return f"Sz(2^{self.a})"
        return self.tag


def graph_from_degrees(d: DegreeSet | Iterable[int]) -> PrimeGraph:
    """Character degree graph of a degree set, straight from the definition."""
    if not isinstance(d, DegreeSet):
        d = DegreeSet(d)
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for deg in d.degrees:
        ps = sorted(pi_set(deg))
        verts.update(ps)
        edges.update(combinations(ps, 2))
    return PrimeGraph(verts, edges)


def _union(*graphs: PrimeGraph) -> PrimeGraph:
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for g in graphs:
        verts |= g.vertices
        edges |= g.edges
    return PrimeGraph(verts, edges)


@lru_cache(maxsize=4096)
def psl2_graph(t: int, a: int, variant: str = "PSL2") -> PrimeGraph:
    """Degree graph of PSL2(t^a) or SL2(t^a).

    Even characteristic: three complete components {2}, pi(q-1), pi(q+1).
    Odd characteristic, q > 5: {t} isolated plus the union of the cliques on
    pi(q+1) and pi(q-1), which share the vertex 2.  For q = 5, PSL2(5) is A5
    and has the same graph as q = 4, whereas its double cover SL2(5) has the
    additional degree 6.
    """
    if variant not in ("PSL2", "SL2"):
        raise ValueError(f"variant must be 'PSL2' or 'SL2', got {variant!r}")
    if not is_prime(t) or a < 1:
        raise ValueError("t must be prime and a >= 1")
    q = t**a
    if q < 4:
        raise ValueError(f"need t^a >= 4, got {q}")
    minus, plus = pi_set(q - 1), pi_set(q + 1)
    if q == 5:
        edges = [(2, 3)] if variant == "SL2" else []
        return PrimeGraph({2, 3, 5}, edges)
    return _union(PrimeGraph({t}), complete_graph(minus), complete_graph(plus))


@lru_cache(maxsize=64)
def sz_graph(a: int) -> PrimeGraph:
    """Degree graph of the Suzuki group Sz(2^a), a odd and at least 3."""
    if a < 3 or a % 2 == 0:
        raise ValueError(f"Sz(2^a) needs a odd and a >= 3, got a = {a}")
    q = 2**a
    pi1 = pi_set(q - 1)
    pi0 = pi1 | pi_set(q * q + 1)
    clique = complete_graph(pi0)
    return PrimeGraph(pi0 | {2}, [*clique.edges, *((2, p) for p in pi1)])


def sporadic_graph(name: str) -> PrimeGraph:
    """Degree graph of M11, J1 or PSL3(4), as fixed edge lists."""
    try:
        verts, edges = SPORADIC_EDGES[name]
    except KeyError:
        raise ValueError(f"unknown group {name!r}; expected one of {sorted(SPORADIC_EDGES)}") from None
    return PrimeGraph(verts, edges)


def family_graph(f: SimpleFamily) -> PrimeGraph:
    """Degree graph of the group named by a :class:`SimpleFamily`."""
    if f.tag in ("PSL2", "SL2"):
        return psl2_graph(f.t, f.a, f.tag)
    if f.tag == "Sz":
        return sz_graph(f.a)
    return sporadic_graph(f.tag)


@dataclass(frozen=True)
class DegreeFixture:
    label: str
    source: str
    degrees: tuple[int, ...]

    @property
    def degree_set(self) -> DegreeSet:
        return DegreeSet(self.degrees)


_FIXTURE_PACKAGE = "cdgraph.data.degrees"


def parse_fixture(text: str) -> DegreeFixture:
    """Parse the three-line fixture format (source, label, degrees)."""
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if len(lines) != 3 or not lines[0].startswith("# source:"):
        raise ValueError("fixture needs '# source: ...', a label line and a degree line")
    source = lines[0][len("# source:") :].strip()
    degrees = tuple(int(x) for x in lines[2].split())
    if not degrees:
        raise ValueError("empty degree list")
    return DegreeFixture(lines[1], source, degrees)


@lru_cache(maxsize=None)
def _fixtures() -> dict[str, DegreeFixture]:
    out = {}
    for entry in sorted(resources.files(_FIXTURE_PACKAGE).iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".txt"):
            fx = parse_fixture(entry.read_text())
            out[fx.label] = fx
    return out


def fixture_labels() -> list[str]:
    return sorted(_fixtures())


def load_fixture(label: str) -> DegreeFixture:
    try:
        return _fixtures()[label]
    except KeyError:
        raise KeyError(f"no degree fixture {label!r}; have {fixture_labels()}") from None


def fixture_family(label: str) -> SimpleFamily:
    """The family a fixture label such as ``PSL2_9`` or ``Sz_8`` refers to."""
    if label in SPORADIC_EDGES:
        return SimpleFamily(label)
    tag, _, n = label.partition("_")
    fac = factor(int(n)).factors
    if len(fac) != 1:
        raise ValueError(f"fixture {label!r} does not name a prime-power field")
    (t, a), = fac
    if tag == "Sz":
        return SimpleFamily("Sz", 2, a)
    return SimpleFamily(tag, t, a)
