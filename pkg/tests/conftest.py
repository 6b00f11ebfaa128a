import pytest
from hypothesis import settings

from zrc.zeta import ZetaEngine

settings.register_profile("numerics", deadline=None, max_examples=60)
settings.load_profile("numerics")


@pytest.fixture(scope="session")
def engine():
    """Shared engine so the zeta cache warms across the suite."""
    return ZetaEngine()
