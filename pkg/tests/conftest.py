import hypothesis
import pytest

from src.polarmaps.algebra.polycore import Poly
from src.polarmaps.presentation.cli.parser import parse_poly
from tests.corpus import DISCRIMINANT_QUARTIC, FERMAT_CUBIC, FERMAT_QUARTIC, NODAL_CUBIC, SMOOTH_CONIC

hypothesis.settings.register_profile("polarmaps", max_examples=25, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.load_profile("polarmaps")


@pytest.fixture
def nodal_cubic() -> Poly:
    return parse_poly(NODAL_CUBIC)


@pytest.fixture
def fermat_cubic() -> Poly:
    return parse_poly(FERMAT_CUBIC)


@pytest.fixture
def fermat_quartic() -> Poly:
    return parse_poly(FERMAT_QUARTIC)


@pytest.fixture
def discriminant_quartic() -> Poly:
    return parse_poly(DISCRIMINANT_QUARTIC)


@pytest.fixture
def smooth_conic() -> Poly:
    return parse_poly(SMOOTH_CONIC)
