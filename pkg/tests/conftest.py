import pytest

from degenerate_sums import common


@pytest.fixture(autouse=True)
def reset_logging():
    """Drops the handlers the command line attaches, their streams are
    replaced between tests."""

    yield
    common.LOGGER.handlers.clear()
    common.set_debug(False)
