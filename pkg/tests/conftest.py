import pytest

from curlicue import InterferometerConfig, SpectralWindow, SumSpec, simulate

# Demonstration geometry used across the suite: x chosen so that the ratio
# window spans the seven integers 1130..1136.
DEMO_X_NM = 523426.8
DEMO_WINDOW = (460.36, 463.24)


@pytest.fixture(scope="session")
def demo_spec():
    return SumSpec(path_count=3, order=2)


@pytest.fixture(scope="session")
def demo_config(demo_spec):
    return InterferometerConfig(displacement_unit_nm=DEMO_X_NM, sum_spec=demo_spec)


@pytest.fixture(scope="session")
def demo_window():
    return SpectralWindow(*DEMO_WINDOW, pixel_count=2048)


@pytest.fixture(scope="session")
def demo_interferogram(demo_config, demo_window):
    return simulate(demo_config, demo_window)
