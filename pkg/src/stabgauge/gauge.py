"""Per-qubit R_y frame rotations ("gauging") of Pauli sums.

Rewriting a Hamiltonian in the gauged frame substitutes, at each qubit,

    X -> cos(t) X' - sin(t) Z'
    Z -> sin(t) X' + cos(t) Z'
    Y -> Y,  I -> I

so that t = pi/4 gives X' = (X + Z)/sqrt(2) and Z' = (Z - X)/sqrt(2). The
(X, Z) coefficient pair of every qubit turns by a planar rotation, which keeps
the spectrum and the coefficient norm.
"""
from __future__ import annotations

import math
import re
from typing import Sequence

from .pauli import MERGE_EPS, PauliError, PauliSum, sum_from_masks

TWO_PI = 2.0 * math.pi

GaugeAngles = tuple[float, ...]


def normalize_angle(theta: float) -> float:
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    # fmod of a value just below 0 can round up to exactly 2pi
    return 0.0 if t >= TWO_PI else t


def make_angles(values: Sequence[float]) -> GaugeAngles:
    return tuple(normalize_angle(float(v)) for v in values)


def zeros(n: int) -> GaugeAngles:
    return (0.0,) * n


_R = math.sqrt(0.5)
_EIGHTHS = (
    (1.0, 0.0), (_R, _R), (0.0, 1.0), (-_R, _R),
    (-1.0, 0.0), (-_R, -_R), (0.0, -1.0), (_R, -_R),
)


def _cos_sin(theta: float) -> tuple[float, float]:
    # exact values at multiples of pi/4 keep canonical forms free of 1e-16
    # debris and keep |cos| == |sin| ties exact
    q = theta / (math.pi / 4)
    k = round(q)
    if abs(q - k) < 1e-14:
        return _EIGHTHS[k % 8]
    return math.cos(theta), math.sin(theta)


def conjugate_factor(axis: str, theta: float) -> list[tuple[float, str]]:
    """Expansion of the unprimed factor ``axis`` in primed operators."""
    if not math.isfinite(theta):
        raise ValueError("gauge angle must be finite")
    if axis in ("I", "Y"):
        return [(1.0, axis)]
    c, s = _cos_sin(theta)
    if axis == "X":
        pairs = [(c, "X"), (-s, "Z")]
    elif axis == "Z":
        pairs = [(s, "X"), (c, "Z")]
    else:
        raise PauliError(f"unknown Pauli axis {axis!r}")
    return [(w, a) for w, a in pairs if w != 0.0]


def _check_length(h: PauliSum, g: Sequence[float]) -> None:
    if len(g) != h.n:
        raise ValueError(f"{len(g)} gauge angles given for {h.n} qubits")


def rotate_frame(h: PauliSum, g: Sequence[float], eps: float = MERGE_EPS) -> PauliSum:
    """Rewrite ``h`` in the frame gauged by per-qubit angles ``g``."""
    _check_length(h, g)
    rot = [_cos_sin(t) for t in g]
    acc: dict[tuple[int, int], float] = {}
    for coeff, s in h.terms:
        # partial expansions as (coeff, x, z); only X and Z factors branch
        partial = [(coeff, s.x, s.z)]
        xz_only = s.x ^ s.z
        i = 0
        while xz_only >> i:
            if (xz_only >> i) & 1:
                c, sn = rot[i]
                if sn != 0.0 or c != 1.0:
                    bit = 1 << i
                    is_x = (s.x >> i) & 1
                    nxt = []
                    for w, x, z in partial:
                        base_x, base_z = x & ~bit, z & ~bit
                        # coefficient on X' and on Z'
                        wx, wz = (c, -sn) if is_x else (sn, c)
                        if wx != 0.0:
                            nxt.append((w * wx, base_x | bit, base_z))
                        if wz != 0.0:
                            nxt.append((w * wz, base_x, base_z | bit))
                    partial = nxt
            i += 1
        for w, x, z in partial:
            acc[(x, z)] = acc.get((x, z), 0.0) + w
    return sum_from_masks(h.n, acc, eps)


def rotate_qubit(h: PauliSum, qubit: int, theta: float, eps: float = MERGE_EPS) -> PauliSum:
    """Gauge a single 1-based ``qubit`` by ``theta``; other qubits untouched."""
    g = [0.0] * h.n
    g[qubit - 1] = theta
    return rotate_frame(h, g, eps)


def compose(g1: Sequence[float], g2: Sequence[float]) -> GaugeAngles:
    if len(g1) != len(g2):
        raise ValueError("gauge angle lists differ in length")
    return tuple(normalize_angle(a + b) for a, b in zip(g1, g2))


def negate(g: Sequence[float]) -> GaugeAngles:
    return tuple(normalize_angle(-a) for a in g)


_ANGLE_RE = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)?\s*\*?\s*"
    r"(?P<pi>pi)?\s*(?:/\s*(?P<den>\d+(?:\.\d*)?))?\s*$"
)


def parse_angle(token: str) -> float:
    """Parse ``"0.3"``, ``"pi/4"``, ``"3pi/4"``, ``"-pi/2"`` or ``"2*pi/3"``."""
    m = _ANGLE_RE.match(token.lower())
    if not m or (m["num"] is None and m["pi"] is None):
        raise ValueError(f"cannot parse angle {token!r}")
    if m["den"] is not None and m["pi"] is None:
        raise ValueError(f"fractions are only accepted with pi: {token!r}")
    value = float(m["num"]) if m["num"] is not None else 1.0
    if m["pi"]:
        value *= math.pi
    if m["den"] is not None:
        value /= float(m["den"])
    if m["sign"] == "-":
        value = -value
    return value


def parse_angles(text: str) -> GaugeAngles:
    return make_angles(parse_angle(tok) for tok in text.split(","))
