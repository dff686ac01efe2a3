import time
from contextlib import contextmanager

import pytest

_LINES: list[str] = []


class _Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit
        self.notes: list[str] = []

    def note(self, text: str) -> None:
        self.notes.append(text)


@pytest.fixture
def criterion():
    @contextmanager
    def run(number, title, limit_seconds):
        c = _Criterion(number, title, limit_seconds)
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield c
            elapsed = time.perf_counter() - start
            if elapsed > limit_seconds:
                c.note(f"runtime {elapsed:.1f}s over the {limit_seconds}s limit")
                raise AssertionError(f"criterion {number} took {elapsed:.1f}s, limit {limit_seconds}s")
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            extra = f" [{'; '.join(c.notes)}]" if c.notes else ""
            line = f"criterion {number} {status}: {title} ({elapsed:.2f}s / limit {limit_seconds}s){extra}"
            _LINES.append(line)
            print(line)
    return run


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
