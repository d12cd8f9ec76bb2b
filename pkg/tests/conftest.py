import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        detail = item.user_properties and dict(item.user_properties).get("detail", "") or ""
        _criteria.append((mark.args[0], mark.args[1], rep.passed, rep.duration, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num, title, ok, secs, detail in sorted(_criteria):
        tail = f"  [{detail}]" if detail else ""
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  {num:>2}. {title}  ({secs:.2f}s){tail}")
    passed = sum(c[2] for c in _criteria)
    tr.write_line(f"{passed}/{len(_criteria)} criteria passed")
