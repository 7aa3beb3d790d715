import sys
from pathlib import Path

import pytest

from semikernel import kernels

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile (or load from cache) the jit kernels once so no timed test pays for it
    kernels.warmup()


@pytest.fixture
def numpy_backend():
    old = kernels.get_backend()
    kernels.set_backend("numpy")
    yield
    kernels.set_backend(old)
