import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=int(os.environ.get("HOPFCALC_HYPOTHESIS_EXAMPLES", "40")),
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

import pytest


@pytest.fixture(scope="session")
def full_report():
    """The complete verification report over the shipped catalog, computed once."""
    from hopfcalc.report import run_suite
    return run_suite("all")
