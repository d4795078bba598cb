import pytest

_results: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    num, title = mark.args
    _, statuses = _results.setdefault(num, (title, []))
    if rep.failed or rep.when == "call":
        statuses.append("FAIL" if rep.failed else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        title, statuses = _results[num]
        verdict = "PASS" if statuses and all(s == "PASS" for s in statuses) else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}  {title}")
