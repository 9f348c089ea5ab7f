import numpy as np
import pytest

from nyqwave.spectra import DEFAULT_ALPHAS
from nyqwave.synth import FaultSpec, synthesize_fault_signal

ORTHO_ALPHAS = [a for a in DEFAULT_ALPHAS if a > 0]



def short_signal(cycles, samples_per_cycle=64, fault=True):
    n = cycles * samples_per_cycle
    spec = FaultSpec(onset=n // 2, decay=4.0) if fault else None
    return synthesize_fault_signal(cycles, samples_per_cycle, fault=spec)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def outdir(tmp_path, monkeypatch):
    monkeypatch.setenv("NYQWAVE_OUTDIR", str(tmp_path))
    return tmp_path


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is None or not module.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.REPORT:
        terminalreporter.write_line(line)
