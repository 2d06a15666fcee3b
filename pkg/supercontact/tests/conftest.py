import pytest
from hypothesis import HealthCheck, settings

from supercontact.grassmann.dims import Dims


settings.register_profile(
    'supercontact',
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile('supercontact')


@pytest.fixture
def dims():
    return Dims(1, 2)
