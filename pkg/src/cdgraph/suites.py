"""Named brute-force verification suites of module actions and centralizers.

Each suite yields :class:`CheckResult` records; the command line prints one
line per record and fails if any record fails.
"""

from __future__ import annotations

from typing import Callable, Iterator, NamedTuple

from .degree_graphs import SimpleFamily
from .groups import (
    SYLOW_COUNTS,
    admits_nq,
    check_Nq,
    counting_identity,
    sl2_centralizer_check,
    sl2_natural,
    singer_check,
)
from .numtheory import pi_set

__all__ = ["CheckResult", "SUITES", "run_suite"]


class CheckResult(NamedTuple):
    suite: str
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.suite} {self.name}: {self.detail}"


def _label(t: int, a: int) -> str:
    return f"SL2({t}^{a})" if a > 1 else f"SL2({t})"


# (t, a, q, expected to hold)
NQ_CASES = ((2, 2, 2, True), (2, 3, 2, True), (5, 1, 5, True), (7, 1, 7, True), (13, 1, 13, True), (2, 2, 3, False))


def nq_suite() -> Iterator[CheckResult]:
    for t, a, q, expected in NQ_CASES:
        rep = check_Nq(sl2_natural(t, a), q)
        detail = f"holds={rep.holds} d={rep.d_exponent} b={rep.b_exponent} n_q={rep.sylow_count}"
        if not rep.holds:
            detail += f" witnesses={len(rep.witnesses)}"
        yield CheckResult("nq", f"{_label(t, a)} q={q}", rep.holds == expected, detail)
    for name, counts in SYLOW_COUNTS.items():
        hits = admits_nq(counts, pi_set(SimpleFamily(name).simple_order()))
        yield CheckResult("nq", f"{name} sylow-count filter", not hits, f"expansions={hits}")


def counting_suite() -> Iterator[CheckResult]:
    for t, a, q, expected in NQ_CASES:
        if not expected:
            continue
        act = sl2_natural(t, a)
        rep = check_Nq(act, q)
        ok = counting_identity(act, q) and (rep.d_exponent, rep.b_exponent) == (2 * a, a)
        lhs = rep.sylow_count * (t**rep.b_exponent - 1)
        yield CheckResult(
            "counting",
            f"{_label(t, a)} q={q}",
            ok,
            f"{rep.sylow_count}*({t}^{rep.b_exponent}-1) = {lhs}, {t}^{rep.d_exponent}-1 = {t**rep.d_exponent - 1}",
        )


def singer_suite() -> Iterator[CheckResult]:
    for t, a in ((2, 3), (2, 4), (3, 3), (5, 2)):
        rep = singer_check(t, a)
        ok = rep.centralizer_order == t**a - 1 and rep.is_cyclic
        yield CheckResult(
            "singer", f"({t},{a})", ok, f"p={rep.p} order={rep.centralizer_order} cyclic={rep.is_cyclic}"
        )
    for t, a in ((3, 2), (7, 2)):
        try:
            singer_check(t, a)
        except ValueError as exc:
            yield CheckResult("singer", f"({t},{a})", True, f"rejected: {exc}")
        else:
            yield CheckResult("singer", f"({t},{a})", False, "accepted an exceptional pair")


def clg_suite() -> Iterator[CheckResult]:
    for t, a in ((2, 2), (3, 1), (5, 1)):
        rep = sl2_centralizer_check(t, a)
        ok = rep.centralizer_order == t**a - 1 and rep.is_cyclic and rep.equals_center_of_GL2_extension
        yield CheckResult(
            "clg",
            _label(t, a),
            ok,
            f"order={rep.centralizer_order} cyclic={rep.is_cyclic} scalars={rep.equals_center_of_GL2_extension}",
        )


SUITES: dict[str, Callable[[], Iterator[CheckResult]]] = {
    "nq": nq_suite,
    "counting": counting_suite,
    "singer": singer_suite,
    "clg": clg_suite,
}


def run_suite(name: str) -> list[CheckResult]:
    """Run one suite, or every suite for ``all``."""
    if name == "all":
        return [r for fn in SUITES.values() for r in fn()]
    try:
        return list(SUITES[name]())
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {[*SUITES, 'all']}") from None
