import numpy as np
import pytest

from antipodal import AntipodalGraph


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def complete_graph(k: int) -> AntipodalGraph:
    m = np.ones((k, k), dtype=np.uint8)
    np.fill_diagonal(m, 0)
    return AntipodalGraph.from_dense(m)


def cycle_graph(k: int) -> AntipodalGraph:
    m = np.zeros((k, k), dtype=np.uint8)
    idx = np.arange(k)
    m[idx, (idx + 1) % k] = 1
    m[(idx + 1) % k, idx] = 1
    return AntipodalGraph.from_dense(m)


def star_graph(m_leaves: int) -> AntipodalGraph:
    m = np.zeros((m_leaves + 1, m_leaves + 1), dtype=np.uint8)
    m[0, 1:] = 1
    m[1:, 0] = 1
    return AntipodalGraph.from_dense(m)


def random_graph(k: int, p: float, seed: int) -> AntipodalGraph:
    gen = np.random.default_rng(seed)
    upper = np.triu(gen.random((k, k)) < p, 1)
    return AntipodalGraph.from_dense((upper | upper.T).astype(np.uint8))
