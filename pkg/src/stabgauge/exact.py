"""Dense reference operators and exact ground energies for small qubit counts.

Kronecker order puts qubit 1 on the most significant index bit.
"""
from __future__ import annotations

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import eigsh

from .pauli import PauliString, PauliSum

DEFAULT_MAX_QUBITS = 14
DENSE_EIG_MAX_QUBITS = 10
EIGSH_SEED = 20240917


class ResourceGuardError(RuntimeError):
    pass


def _check_limit(n: int, max_qubits: int) -> None:
    if n > max_qubits:
        raise ResourceGuardError(
            f"{n} qubits exceeds the dense-oracle limit of {max_qubits}"
        )


def _pauli_columns(s: PauliString) -> tuple[np.ndarray, np.ndarray]:
    """Row index and value of the single nonzero in each column of ``s``.

    P|b> = i**nY * (-1)**popcount(b & z) |b ^ x>, with masks in index bit order.
    """
    n = s.n
    xm = zm = 0
    for q in range(n):
        bit = 1 << (n - 1 - q)
        if (s.x >> q) & 1:
            xm |= bit
        if (s.z >> q) & 1:
            zm |= bit
    n_y = bin(s.x & s.z).count("1")
    cols = np.arange(1 << n, dtype=np.int64)
    rows = cols ^ xm
    parity = np.bitwise_count(cols & zm) & 1
    vals = (1j ** n_y) * (1 - 2 * parity.astype(np.float64))
    return rows, vals.astype(np.complex128)


def pauli_matrix(s: PauliString) -> np.ndarray:
    rows, vals = _pauli_columns(s)
    dim = 1 << s.n
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[rows, np.arange(dim)] = vals
    return m


def to_dense(h: PauliSum, max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    _check_limit(h.n, max_qubits)
    dim = 1 << h.n
    out = np.zeros((dim, dim), dtype=np.complex128)
    cols = np.arange(dim)
    for coeff, s in h.terms:
        rows, vals = _pauli_columns(s)
        out[rows, cols] += coeff * vals
    return out


def to_sparse(h: PauliSum, max_qubits: int = DEFAULT_MAX_QUBITS) -> sparse.csr_matrix:
    _check_limit(h.n, max_qubits)
    dim = 1 << h.n
    cols = np.arange(dim)
    out = sparse.csr_matrix((dim, dim), dtype=np.complex128)
    for coeff, s in h.terms:
        rows, vals = _pauli_columns(s)
        out = out + sparse.csr_matrix((coeff * vals, (rows, cols)), shape=(dim, dim))
    return out


def ground_energy(h: PauliSum, max_qubits: int = DEFAULT_MAX_QUBITS) -> float:
    """Smallest eigenvalue of ``h``.

    Dense ``eigvalsh`` up to 10 qubits; above that, Lanczos (``eigsh``) from a
    fixed-seed start vector.
    """
    _check_limit(h.n, max_qubits)
    if not h.terms:
        return 0.0
    if h.n <= DENSE_EIG_MAX_QUBITS:
        return float(np.linalg.eigvalsh(to_dense(h, max_qubits))[0])
    mat = to_sparse(h, max_qubits)
    v0 = np.random.default_rng(EIGSH_SEED).standard_normal(mat.shape[0])
    vals = eigsh(mat, k=1, which="SA", v0=v0, tol=1e-12, return_eigenvectors=False)
    return float(vals[0].real)


def spectrum(h: PauliSum, max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    _check_limit(h.n, min(max_qubits, DENSE_EIG_MAX_QUBITS))
    return np.linalg.eigvalsh(to_dense(h, max_qubits))


def projector(stabilizers, n: int, max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    """Dense code-space projector prod_j (I + sign_j g_j) / 2."""
    _check_limit(n, max_qubits)
    dim = 1 << n
    proj = np.eye(dim, dtype=np.complex128)
    for sign, s in stabilizers:
        proj = proj @ ((np.eye(dim) + sign * pauli_matrix(s)) / 2)
    return proj


def projector_energy(h: PauliSum, stabilizers, max_qubits: int = DEFAULT_MAX_QUBITS) -> float:
    """Code-space average ``Tr(H P) / Tr(P)`` computed densely.

    ``stabilizers`` is any iterable of ``(sign, PauliString)`` pairs, e.g. a
    :class:`~stabgauge.stabilizer.StabilizerSet`.
    """
    proj = projector(list(stabilizers), h.n, max_qubits)
    tr = np.trace(proj).real
    if tr < 0.5:
        raise ValueError("stabilizers have an empty code space (inconsistent signs)")
    return float(np.trace(to_dense(h, max_qubits) @ proj).real / tr)
