import pytest

from helpers import lp_gap, ori, tight_greedy

_report: list[str] = []


@pytest.fixture
def record():
    def _record(criterion: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f"  ({detail})" if detail else "")
        _report.append(line)
        print(line)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if _report:
        terminalreporter.section("acceptance criteria")
        for line in _report:
            terminalreporter.write_line(line)


@pytest.fixture
def fig1():
    return tight_greedy()


@pytest.fixture
def gap():
    return lp_gap()


@pytest.fixture
def ori_inst():
    return ori()
