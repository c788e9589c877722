import pytest

ACCEPTANCE_RESULTS: list[tuple[int, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; marked failed unless the test body completes."""
    entry = {"detail": ""}

    def set_detail(text):
        entry["detail"] = text

    yield set_detail
    number = request.node.get_closest_marker("criterion").args[0]
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    ACCEPTANCE_RESULTS.append((number, not failed, entry["detail"]))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {detail}")
