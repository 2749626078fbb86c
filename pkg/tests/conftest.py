import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import GOLDEN_INPUT  # noqa: E402

from census4x4 import GrayImage  # noqa: E402


@pytest.fixture
def golden_image():
    return GrayImage.from_rows(GOLDEN_INPUT)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(test_acceptance.RESULTS, key=lambda k: int(k[2:])):
        ok, desc = test_acceptance.RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {desc}")
