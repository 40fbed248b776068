import pytest

from tpckit import _kernels_py, kernels

BACKENDS = [pytest.param(_kernels_py, id="python")]
if kernels._compiled is not None:
    BACKENDS.append(pytest.param(kernels._compiled, id="compiled"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param
