import numpy as np
import pytest

from quadbound import delay_ode


@pytest.fixture(scope="session")
def lambda_grid_k2():
    """The kappa = 2 reference grid shared across tests (0.5 s to build)."""
    return delay_ode.build_lambda_grid(2.0, 40, 2.0**-10)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)
