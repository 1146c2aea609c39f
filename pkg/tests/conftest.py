import pytest


@pytest.fixture(scope="session")
def lib():
    """The compiled shared library, built on demand."""
    from crand import native

    return native.load()
