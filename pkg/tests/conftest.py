import pytest

_results: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results.setdefault(crit, []).append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(_results):
        runs = _results[crit]
        bad = [nid.split("::")[-1] for nid, outcome in runs if outcome != "passed"]
        status = "PASS" if not bad else "FAIL"
        detail = f" ({', '.join(bad)})" if bad else ""
        tr.write_line(f"criterion {crit:2d}: {status}  [{len(runs) - len(bad)}/{len(runs)} checks]{detail}")
