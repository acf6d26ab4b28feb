"""Two-player binary XOR games with uniform questions.

Covers the classical and EPR-assisted biases, and the encoding of a game as a
two-qubit Hamiltonian whose terms reward the winning answer correlations.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import to_dense
from .pauli import PauliSum

EPR = np.array([1, 0, 0, 1], dtype=np.complex128) / math.sqrt(2)


class InvalidStrategyError(ValueError):
    pass


@dataclass(frozen=True)
class XorGameRule:
    """Winning condition ``a_i XOR b_j == f(i, j)``; ``table[i][j]`` holds f."""

    table: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        if len(self.table) != 2 or any(len(row) != 2 for row in self.table):
            raise ValueError("an XOR game rule has exactly four entries")
        if any(v not in (0, 1) for row in self.table for v in row):
            raise ValueError("rule values must be bits")

    @classmethod
    def from_function(cls, f) -> "XorGameRule":
        return cls(tuple(tuple(int(f(i, j)) for j in (0, 1)) for i in (0, 1)))

    def f(self, i: int, j: int) -> int:
        return self.table[i][j]

    def sign(self, i: int, j: int) -> int:
        return 1 - 2 * self.table[i][j]


CHSH = XorGameRule.from_function(lambda i, j: i & j)


def _single_qubit(pairs) -> PauliSum:
    return PauliSum.from_terms(1, pairs)


@dataclass(frozen=True)
class QuantumStrategy:
    observables_a: tuple[PauliSum, PauliSum]
    observables_b: tuple[PauliSum, PauliSum]
    shared_state: str = "EPR"

    @classmethod
    def standard(cls) -> "QuantumStrategy":
        r = 1 / math.sqrt(2)
        return cls(
            (_single_qubit([(1, "Z")]), _single_qubit([(1, "X")])),
            (_single_qubit([(r, "X"), (r, "Z")]), _single_qubit([(r, "Z"), (-r, "X")])),
        )


def classical_bias(rule: XorGameRule) -> Fraction:
    """Best bias over the 16 deterministic strategies, exactly."""
    best = None
    for a0, a1, b0, b1 in itertools.product((1, -1), repeat=4):
        a, b = (a0, a1), (b0, b1)
        total = sum(rule.sign(i, j) * a[i] * b[j] for i in (0, 1) for j in (0, 1))
        if best is None or total > best:
            best = total
    return Fraction(best, 4)


def _observable_matrix(obs: PauliSum) -> np.ndarray:
    if obs.n != 1:
        raise InvalidStrategyError("observables act on a single qubit")
    m = to_dense(obs)
    if not np.allclose(m @ m, np.eye(2), atol=1e-9):
        raise InvalidStrategyError(f"observable {obs.as_dict()} does not square to identity")
    return m


def quantum_bias(rule: XorGameRule, strat: QuantumStrategy) -> float:
    if strat.shared_state != "EPR":
        raise InvalidStrategyError("only the EPR pair is supported as shared state")
    mats_a = [_observable_matrix(o) for o in strat.observables_a]
    mats_b = [_observable_matrix(o) for o in strat.observables_b]
    total = 0.0
    for i in (0, 1):
        for j in (0, 1):
            corr = EPR.conj() @ np.kron(mats_a[i], mats_b[j]) @ EPR
            total += rule.sign(i, j) * corr.real
    return total / 4


def winning_probability(bias: float) -> float:
    if abs(bias) > 1:
        raise ValueError(f"bias must lie in [-1, 1], got {bias}")
    return 0.5 + bias / 2


def game_to_hamiltonian(rule: XorGameRule) -> PauliSum:
    """Question 0 asks X, question 1 asks Z; each term carries ``-spin(f(i, j))``."""
    letters = ("X", "Z")
    return PauliSum.from_terms(
        2,
        [(-rule.sign(i, j), letters[i] + letters[j]) for i in (0, 1) for j in (0, 1)],
    )
