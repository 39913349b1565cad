from collections import defaultdict

import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("fast", max_examples=20, deadline=None)
settings.load_profile("ci")

_criteria: dict[int, dict] = defaultdict(lambda: {"text": "", "outcomes": []})


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, text = marker.args
        entry = _criteria[number]
        entry["text"] = text
        entry["outcomes"].append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["outcomes"] and all(entry["outcomes"]) else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {entry['text']}")
