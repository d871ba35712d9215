import time

import pytest

_RESULTS = []


class Criterion:
    def __init__(self, name, limit):
        self.name, self.limit = name, limit
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.elapsed = time.perf_counter() - self.start
        ok = exc_type is None and self.elapsed < self.limit
        _RESULTS.append((self.name, ok, self.elapsed, self.limit, self.detail))
        if exc_type is None and not ok:
            pytest.fail(f"{self.name}: {self.elapsed:.2f}s exceeds the {self.limit}s limit")
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, elapsed, limit, detail in _RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f}s, limit {limit}s)"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
