import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def report(capsys):
    """Print one acceptance line straight to the terminal, then assert."""
    def _report(criterion, ok, detail=""):
        with capsys.disabled():
            print(f"\nACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, f"criterion {criterion} failed: {detail}"
    return _report
