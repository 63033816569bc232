import os
import sys

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=300, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    results = None
    for name, mod in list(sys.modules.items()):
        if name.endswith("test_acceptance") and hasattr(mod, "RESULTS"):
            results = mod.RESULTS
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=lambda k: int(k[1:])):
        title, ok, detail = results[key]
        terminalreporter.write_line(f"{key} {'PASS' if ok else 'FAIL'}: {title} -- {detail}")
