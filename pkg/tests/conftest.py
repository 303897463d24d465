import pytest

from burstkit import field_new


@pytest.fixture(scope="session")
def fields():
    """The fields the suite keeps coming back to, built once."""
    return {
        2: field_new(2, 1),
        3: field_new(3, 1),
        4: field_new(2, 2),
        5: field_new(5, 1),
        7: field_new(7, 1),
        8: field_new(2, 3),
        13: field_new(13, 1),
        16: field_new(2, 4),
        17: field_new(17, 1),
    }
