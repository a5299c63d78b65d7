import pytest

from citebenford import _pykernels

try:
    from citebenford import _ckernels
except ImportError:  # pragma: no cover - extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and summary")
    config._criteria = {}
    config._criteria_text = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    store = report.config_criteria
    ok = report.outcome == "passed"
    store[crit] = store.get(crit, True) and ok


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        rep.criterion = marker.args[0]
        item.config._criteria_text.setdefault(marker.args[0], []).append(marker.args[1])
        rep.config_criteria = item.config._criteria


def pytest_terminal_summary(terminalreporter, config):
    results = config._criteria
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok in sorted(results.items()):
        parts = "; ".join(dict.fromkeys(config._criteria_text.get(n, [])))
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {parts}")
