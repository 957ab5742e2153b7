import pytest

from ffroots.rthroot import factor_group_order


@pytest.fixture
def f13():
    return factor_group_order(13)


@pytest.fixture
def f19():
    return factor_group_order(19)


_ACCEPTANCE: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or report.when != "call":
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        _ACCEPTANCE[props["criterion"]] = (report.outcome, props.get("title", ""), props.get("detail", ""))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        outcome, title, detail = _ACCEPTANCE[num]
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{status}] criterion {num}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
