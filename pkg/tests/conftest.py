import math
from functools import reduce

import numpy as np
import pytest

from stabgauge.pauli import PauliSum

SQRT2 = math.sqrt(2.0)

MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def kron_label(label: str) -> np.ndarray:
    """Dense matrix of a Pauli label, qubit 1 leftmost (most significant)."""
    return reduce(np.kron, [MATS[c] for c in label])


def kron_sum(h: PauliSum) -> np.ndarray:
    dim = 1 << h.n
    out = np.zeros((dim, dim), dtype=complex)
    for t in h.terms:
        out += t.coeff * kron_label(t.string.label)
    return out


def random_hamiltonian(seed: int, max_n: int = 3, max_terms: int = 8) -> PauliSum:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, max_n + 1))
    k = int(rng.integers(1, max_terms + 1))
    pairs = [(float(rng.normal()), "".join(rng.choice(list("IXYZ"), n))) for _ in range(k)]
    return PauliSum.from_terms(n, pairs)


def random_angles(seed: int, n: int) -> tuple[float, ...]:
    rng = np.random.default_rng(10_000 + seed)
    return tuple(float(a) for a in rng.uniform(0, 2 * math.pi, n))


@pytest.fixture
def h0():
    return PauliSum.from_labels([(-1, "XX"), (-1, "XZ"), (-1, "ZX"), (1, "ZZ")])


@pytest.fixture
def h2_bound():
    return PauliSum.from_labels([(2, "IZ"), (-2, "ZI")])


@pytest.fixture
def h2_asym():
    return PauliSum.from_labels([(2, "XX")])


@pytest.fixture
def h2_mid():
    return PauliSum.from_labels([(1, "IZ"), (-1, "ZI"), (2, "XX")])


def field_sum(n: int) -> PauliSum:
    """sum_i (X_i + Z_i)"""
    pairs = []
    for i in range(n):
        for a in "XZ":
            pairs.append((1.0, "I" * i + a + "I" * (n - i - 1)))
    return PauliSum.from_terms(n, pairs)
