import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from netconsist.graph import Partition


def random_partition(rng: np.random.Generator, nodes: int, max_comms: int) -> Partition:
    m = int(rng.integers(1, max_comms + 1))
    labels = list(rng.integers(0, m, size=nodes))
    return Partition.from_labels(labels)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
