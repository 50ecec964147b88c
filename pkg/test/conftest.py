import random

import pytest


@pytest.fixture(scope="session")
def table():
    from sl3cycles.control.morse import morse_table
    from sl3cycles.model.apartment import SectorWindow

    print("Build Morse table...")
    return morse_table(SectorWindow(21))


@pytest.fixture(scope="session")
def small_table():
    from sl3cycles.control.morse import morse_table
    from sl3cycles.model.apartment import SectorWindow

    return morse_table(SectorWindow(9))


@pytest.fixture(scope="function")
def rng():
    return random.Random(20170)
