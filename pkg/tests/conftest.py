import pytest

from laurent_goldbach import parse_poly

from families import PAPER_F

_ACCEPTANCE = []


@pytest.fixture
def paper_f():
    return parse_poly(PAPER_F)


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test marks it passed by calling it with a detail string."""
    entry = {"name": request.node.name, "ok": False, "detail": ""}
    _ACCEPTANCE.append(entry)

    def passed(detail=""):
        entry["ok"] = True
        entry["detail"] = detail

    def note(detail):
        entry["detail"] = detail

    passed.note = note
    return passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for e in _ACCEPTANCE:
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"[{status}] {e['name']}  {e['detail']}")
