"""Stabilizer approximations of qubit ground states, improved by per-qubit R_y gauging."""
from .chsh import CHSH, QuantumStrategy, XorGameRule, classical_bias, game_to_hamiltonian, quantum_bias, winning_probability
from .exact import ground_energy, projector_energy, to_dense
from .gauge import compose, conjugate_factor, negate, rotate_frame
from .hamio import ModelSpec, build_model, parse_hamiltonian, serialize_hamiltonian
from .optimizer import OptimizerConfig, OptResult, objective, optimize
from .pauli import PauliString, PauliSum, PauliTerm, canonicalize, coeff_norm_sq, commutes, multiply, parse_pauli
from .sequential import QubitChoice, SweepTrace, reduce, sweep
from .stabilizer import (
    Membership,
    Rejection,
    SignedPauli,
    StabilizerSet,
    gauged_energy,
    greedy_select,
    membership,
    stabilizer_energy,
    try_extend,
)

__version__ = "0.1.0"
