import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def entries():
    from dihedral_flows.corpus import corpus
    return {e.name: e for e in corpus()}


@pytest.fixture(params=[True, False], ids=["numba", "numpy"])
def use_numba(request):
    return request.param


# one summary line per acceptance criterion, printed after the run

def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k, title): acceptance criterion k")
    config._criteria = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    k, title = mark.args
    ok = call.excinfo is None or call.excinfo.errisinstance(pytest.skip.Exception)
    prev = item.config._criteria.get(k, (True, title))
    item.config._criteria[k] = (prev[0] and ok, title)


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "_criteria", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        ok, title = results[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {title}")
