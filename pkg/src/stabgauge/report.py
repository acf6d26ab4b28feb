from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

METHODS = ("stab", "gauge_fixed", "sweep_pi4", "sweep_analytic", "optimize", "exact", "chsh")
GAP_TOL = 1e-9


@dataclass
class Report:
    method: str
    energy: float
    angles: tuple[float, ...] | None = None
    stabilizers: list[str] | None = None
    exact_energy: float | None = None
    trace: dict | None = None
    config: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown report method {self.method!r}")

    @property
    def gap(self) -> float | None:
        if self.exact_energy is None:
            return None
        return self.energy - self.exact_energy

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"method": self.method, "energy": self.energy}
        if self.angles is not None:
            d["angles"] = list(self.angles)
        if self.stabilizers is not None:
            d["stabilizers"] = list(self.stabilizers)
        if self.exact_energy is not None:
            d["exact_energy"] = self.exact_energy
            d["gap"] = self.gap
        if self.trace is not None:
            d["trace"] = self.trace
        d.update(self.extra)
        d["config"] = self.config
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"
