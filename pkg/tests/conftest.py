import pytest
from hypothesis import settings

from recoil_lines import Isotope, Medium

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture
def fe57():
    return Isotope("57Fe", 56.9354, 14.4)


@pytest.fixture
def sn119():
    return Isotope("119Sn", 118.9033, 23.8)


@pytest.fixture
def iron():
    return Medium(7874.0, 5000.0, name="iron")


@pytest.fixture
def tin():
    return Medium(7310.0, 2500.0, name="tin")
