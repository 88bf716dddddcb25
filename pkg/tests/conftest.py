from __future__ import annotations

import time
from contextlib import contextmanager

import pytest

_CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion: pass/fail, elapsed time and detail."""

    @contextmanager
    def record(number: int, title: str, budget: float | None = None):
        info: dict[str, str] = {}
        start = time.perf_counter()
        ok = False
        try:
            yield info
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            if ok and budget is not None and elapsed > budget:
                ok = False
                info.setdefault("detail", f"over budget {budget:g}s")
            line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {title} ({elapsed:.3f}s)"
            if info.get("detail"):
                line += f" {info['detail']}"
            _CRITERIA.append(line)
            print(line)
        if budget is not None:
            assert elapsed <= budget, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
