import pytest

from steinberg import make_model


@pytest.fixture(scope="session")
def E():
    """Conductor-1406 curve with signs (+1, -1, -1) at (2, 19, 37)."""
    return make_model(1, 1, 1, -614, -5501)


@pytest.fixture(scope="session")
def Eprime():
    """Conductor-1406 curve with signs (+1, +1, -1) at (2, 19, 37)."""
    return make_model(1, -1, 1, -1191, 507615)
