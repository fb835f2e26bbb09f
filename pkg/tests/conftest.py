import contextlib
import time

import pytest

_ACCEPTANCE = []


class _Criterion:
    def __init__(self):
        self.notes = []

    def note(self, text):
        self.notes.append(text)

    @contextlib.contextmanager
    def __call__(self, number, title):
        start = time.perf_counter()
        self.notes = []
        try:
            yield self
        except BaseException as exc:
            _ACCEPTANCE.append((number, title, False, time.perf_counter() - start, [f"{type(exc).__name__}: {exc}"]))
            raise
        _ACCEPTANCE.append((number, title, True, time.perf_counter() - start, list(self.notes)))


@pytest.fixture
def criterion():
    return _Criterion()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, elapsed, notes in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title} ({elapsed:.2f}s)")
        for note in notes:
            terminalreporter.write_line(f"       {note}")
