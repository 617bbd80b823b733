from __future__ import annotations

import pytest

from coxforge.coxcli.builtins import cy_instance, koszul_instance
from coxforge.scalar import Field

# (d, e, n, index sequence) of the regular families exercised throughout
REGULAR_FAMILIES = [
    (2, 2, 3, (0, 1, 2)),
    (2, 3, 3, (0, 1, 2)),
    (2, 2, 3, (0, 2)),
    (5, 2, 4, (0, 3, 5)),
    (3, 2, 3, (0, 1, 2, 3)),
]


@pytest.fixture(scope="session")
def fp():
    return Field()


@pytest.fixture(scope="session")
def cy_generic():
    return cy_instance(7, "generic")


@pytest.fixture(scope="session")
def cy_zero():
    return cy_instance(7, 0)


@pytest.fixture(scope="session")
def regular_instances():
    return [koszul_instance(11, d, e, n, seq) for d, e, n, seq in REGULAR_FAMILIES]


@pytest.fixture(scope="session")
def small_full():
    """Regular full sequence, d = 2, e = 2, n = 3."""
    return koszul_instance(11, 2, 2, 3, (0, 1, 2))


@pytest.fixture(scope="session")
def gap_instance():
    """Regular instance with index sequence {0, 2}."""
    return koszul_instance(11, 2, 2, 3, (0, 2))
