'''
Shared fixtures. Everything random is seeded so failures reproduce.
'''
import numpy as np
import pytest
from sortedcontainers import SortedList



@pytest.fixture
def rng ():
	return np.random.default_rng(20240601)


@pytest.fixture
def oracle ():
	return SortedList()
