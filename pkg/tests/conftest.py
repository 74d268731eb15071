import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    """Print one PASS/FAIL line per acceptance criterion."""
    rows = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid or rep.when not in ("call", "setup"):
                continue
            name = nodeid.split("::")[-1][len("test_criterion_"):]
            ok = status == "passed"
            rows[name] = rows.get(name, True) and ok
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(rows):
        num, _, desc = name.partition("_")
        terminalreporter.write_line(f"criterion {num} {'PASS' if rows[name] else 'FAIL'}  {desc.replace('_', ' ')}")
