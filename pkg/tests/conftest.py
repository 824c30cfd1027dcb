import pytest

from submodlat.context import Context


@pytest.fixture(scope="session")
def ctx():
    """Shared computation cache so the catalog is built once per test run.

    Tests that exercise determinism or cache behaviour build their own
    fresh Context instead of using this fixture.
    """
    return Context()
