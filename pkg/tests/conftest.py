import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def F2():
    from linperm import FieldSpec

    return FieldSpec(2)


@pytest.fixture(scope="session")
def F3():
    from linperm import FieldSpec

    return FieldSpec(3)


@pytest.fixture(scope="session")
def F8():
    from linperm import base_field

    return base_field(8)


@pytest.fixture(scope="session")
def F11():
    from linperm import FieldSpec

    return FieldSpec(11)
