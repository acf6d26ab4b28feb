"""Continuous optimization of the gauge angles.

Cyclic coordinate descent over the per-qubit angles. Each coordinate is set by
a 16-point scan of [0, 2pi) plus the current value, refined with golden-section
search in the scan cell around the best point. Restart 0 starts at the ungauged
frame; the others start at uniform random angles drawn from numpy's PCG64
generator (``numpy.random.default_rng(seed)``), one ``rng.uniform(0, 2pi, n)``
call per restart in restart order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .gauge import TWO_PI, GaugeAngles, make_angles, normalize_angle, zeros
from .pauli import PauliSum
from .stabilizer import StabilizerSet, gauged_energy

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
SCAN_POINTS = 16


class InvalidInputError(ValueError):
    pass


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 8
    seed: int = 0
    max_sweeps: int = 200
    angle_tol: float = 1e-8
    energy_tol: float = 1e-10

    def __post_init__(self):
        if self.restarts < 1 or self.max_sweeps < 1:
            raise ValueError("restarts and max_sweeps must be positive")
        if self.angle_tol <= 0 or self.energy_tol <= 0:
            raise ValueError("tolerances must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")

    def to_dict(self) -> dict:
        return {
            "restarts": self.restarts,
            "seed": self.seed,
            "max_sweeps": self.max_sweeps,
            "angle_tol": self.angle_tol,
            "energy_tol": self.energy_tol,
        }


@dataclass(frozen=True)
class OptResult:
    angles: GaugeAngles
    energy: float
    stabilizers: StabilizerSet
    converged: bool
    restart_index: int
    sweeps: int = 0


def objective(h: PauliSum, g) -> float:
    return gauged_energy(h, g, h.n)[0]


def golden_section(f: Callable[[float], float], lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Minimize ``f`` on [lo, hi]; returns the best evaluated ``(x, f(x))``."""
    a, b = lo, hi
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    best = (x1, f1) if f1 <= f2 else (x2, f2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
            if f1 < best[1]:
                best = (x1, f1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
            if f2 < best[1]:
                best = (x2, f2)
    return best


def _minimize_coordinate(f: Callable[[float], float], current: float, f_current: float, tol: float):
    step = TWO_PI / SCAN_POINTS
    best_t, best_f = current, f_current
    for k in range(SCAN_POINTS):
        t = k * step
        v = f(t)
        if v < best_f:
            best_t, best_f = t, v
    t, v = golden_section(f, best_t - step, best_t + step, tol)
    if v < best_f:
        best_t, best_f = t, v
    return normalize_angle(best_t), best_f


def _descend(h: PauliSum, start: GaugeAngles, cfg: OptimizerConfig) -> tuple[GaugeAngles, float, bool, int]:
    angles = list(start)
    energy = objective(h, angles)
    for sweep_no in range(1, cfg.max_sweeps + 1):
        before = energy
        for i in range(h.n):
            def f(t, i=i):
                trial = angles.copy()
                trial[i] = t
                return objective(h, trial)

            t, v = _minimize_coordinate(f, angles[i], energy, cfg.angle_tol)
            if v < energy:
                angles[i], energy = t, v
        if before - energy < cfg.energy_tol:
            return make_angles(angles), energy, True, sweep_no
    return make_angles(angles), energy, False, cfg.max_sweeps


def optimize(h: PauliSum, cfg: OptimizerConfig | None = None) -> OptResult:
    cfg = cfg or OptimizerConfig()
    if not h.terms:
        raise InvalidInputError("cannot optimize an empty Hamiltonian")
    rng = np.random.default_rng(cfg.seed)
    starts = [zeros(h.n)]
    for _ in range(1, cfg.restarts):
        starts.append(make_angles(rng.uniform(0.0, TWO_PI, h.n)))

    best: OptResult | None = None
    for idx, start in enumerate(starts):
        angles, energy, converged, sweeps = _descend(h, start, cfg)
        if best is None or energy < best.energy:
            e, stabs, _ = gauged_energy(h, angles, h.n)
            best = OptResult(angles, e, stabs, converged, idx, sweeps)
    return best
