import pytest

def pytest_configure(config):
    config.addinivalue_line("markers",
                            "slow: long exact computations (run by default)")

@pytest.fixture(scope="session", autouse=True)
def testmode(request):
    """Switches the package to unit test mode and hides any persisted cache
    directory of the developer's environment.
    """
    from os import environ
    from eisdet import base
    base.set_testmode(True)
    cachedir = environ.pop("MODFORMS_CACHE_DIR", None)

    def restore():
        base.set_testmode(False)
        if cachedir is not None:
            environ["MODFORMS_CACHE_DIR"] = cachedir
    request.addfinalizer(restore)
    return True

@pytest.fixture
def rng():
    """Returns a seeded random state so randomized properties are
    reproducible.
    """
    import numpy as np
    return np.random.RandomState(1729)

