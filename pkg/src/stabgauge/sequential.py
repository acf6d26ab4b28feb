"""Qubit-by-qubit gauging: rotate one qubit, fix a primed single-qubit
stabilizer there, substitute its eigenvalue and continue on the rest."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .gauge import make_angles, normalize_angle, rotate_qubit
from .pauli import MERGE_EPS, PauliString, PauliSum, PauliTerm, canonicalize
from .stabilizer import SignedPauli, StabilizerSet

MODES = ("fixed_pi4", "analytic")
TIE_TOL = 1e-12


@dataclass(frozen=True)
class QubitChoice:
    """Gauge angle and primed stabilizer fixed at one qubit.

    ``op`` is ``"X"`` or ``"Z"`` and stands for the primed operator.
    """

    qubit: int
    theta: float
    op: str
    eigenvalue: int

    def __post_init__(self):
        if self.qubit < 1:
            raise ValueError("qubit index is 1-based")
        if self.op not in ("X", "Z"):
            raise ValueError(f"op must be 'X' or 'Z', got {self.op!r}")
        if self.eigenvalue not in (1, -1):
            raise ValueError("eigenvalue must be +1 or -1")

    def to_dict(self) -> dict:
        return {
            "qubit": self.qubit,
            "theta": self.theta,
            "op": self.op + "'",
            "eigenvalue": self.eigenvalue,
        }


@dataclass
class SweepTrace:
    steps: list[QubitChoice] = field(default_factory=list)
    reduced_hamiltonians: list[PauliSum | float] = field(default_factory=list)
    final_energy: float = 0.0

    def angles(self, n: int) -> tuple[float, ...]:
        g = [0.0] * n
        for st in self.steps:
            g[st.qubit - 1] = st.theta
        return make_angles(g)

    def stabilizers(self, n: int) -> StabilizerSet:
        gens = [SignedPauli(st.eigenvalue, PauliString.single(n, st.qubit, st.op)) for st in self.steps]
        return StabilizerSet.from_generators(n, gens)

    def to_dict(self) -> dict:
        snaps = []
        for h in self.reduced_hamiltonians:
            if isinstance(h, PauliSum):
                snaps.append([[t.coeff, t.string.label] for t in h.terms])
            else:
                snaps.append([[h, ""]])
        return {
            "steps": [s.to_dict() for s in self.steps],
            "snapshots": snaps,
            "final_energy": self.final_energy,
        }


def reduce(h: PauliSum, choice: QubitChoice, eps: float = MERGE_EPS) -> PauliSum | float:
    """Fix the primed stabilizer ``choice`` and remove its qubit from ``h``.

    ``choice.qubit`` indexes the qubits of ``h`` itself, and ``h`` must already
    be rotated at that qubit. Returns a float once no qubits are left.
    """
    if not 1 <= choice.qubit <= h.n:
        raise IndexError(f"qubit {choice.qubit} out of range for {h.n} qubits")
    kept: list[tuple[float, PauliString | None]] = []
    for coeff, s in h.terms:
        letter = s.letter(choice.qubit)
        if letter == "I":
            w = coeff
        elif letter == choice.op:
            w = coeff * choice.eigenvalue
        else:
            continue
        kept.append((w, None if h.n == 1 else s.drop(choice.qubit)))
    if h.n == 1:
        return math.fsum(w for w, _ in kept)
    raw = tuple(PauliTerm(w, s) for w, s in kept)
    return canonicalize(PauliSum(h.n - 1, raw), eps)


def local_field(h: PauliSum, qubit: int) -> tuple[float, float]:
    """Coefficients of the X-only and Z-only terms at ``qubit``."""
    ax = az = 0.0
    for coeff, s in h.terms:
        if s.support != 1 << (qubit - 1):
            continue
        letter = s.letter(qubit)
        if letter == "X":
            ax += coeff
        elif letter == "Z":
            az += coeff
    return ax, az


def analytic_angle(ax: float, az: float) -> float:
    """Smallest rotation that lines the field (ax, az) up with a primed axis.

    The angle atan2(az, ax) puts the whole field on X'; any multiple of pi/2
    away does equally well on +-X' or +-Z', so the one nearest zero is used
    (ties go to +pi/4). A pure Z field therefore keeps theta = 0.
    """
    if ax == 0.0 and az == 0.0:
        return 0.0
    phi = math.atan2(az, ax)
    k = math.ceil(phi / (math.pi / 2) - 0.5)
    return normalize_angle(phi - k * (math.pi / 2))


def select_op(h: PauliSum, qubit: int) -> tuple[str, int]:
    ax, az = local_field(h, qubit)
    if abs(ax) >= abs(az) - TIE_TOL * max(abs(ax), abs(az), 1.0):
        op, c = "X", ax
    else:
        op, c = "Z", az
    return op, (-1 if c > 0 else 1)


def _check_order(order: Sequence[int], n: int) -> list[int]:
    order = [int(q) for q in order]
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"order {order} is not a permutation of 1..{n}")
    return order


def sweep(h: PauliSum, mode: str = "fixed_pi4", order: Sequence[int] | None = None) -> SweepTrace:
    """Gauge and fix qubits one at a time in ``order`` (1-based, default ascending).

    Snapshots hold the Hamiltonian after each reduction, on the qubits not
    yet fixed in their original relative order; the last one is the constant
    energy.
    """
    if mode not in MODES:
        raise ValueError(f"unknown sweep mode {mode!r}")
    order = _check_order(range(1, h.n + 1) if order is None else order, h.n)
    remaining = list(range(1, h.n + 1))
    trace = SweepTrace()
    cur: PauliSum | float = h
    for q in order:
        pos = remaining.index(q) + 1
        if mode == "fixed_pi4":
            theta = math.pi / 4
        else:
            theta = analytic_angle(*local_field(cur, pos))
        cur = rotate_qubit(cur, pos, theta)
        op, eig = select_op(cur, pos)
        cur = reduce(cur, QubitChoice(pos, theta, op, eig))
        remaining.remove(q)
        trace.steps.append(QubitChoice(q, theta, op, eig))
        trace.reduced_hamiltonians.append(cur)
    trace.final_energy = float(cur)
    return trace
