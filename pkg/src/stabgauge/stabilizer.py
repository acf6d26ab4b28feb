"""Stabilizer sets with sign tracking, greedy selection and code-space energies."""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .gauge import rotate_frame
from .pauli import (
    DimensionError,
    PauliError,
    PauliString,
    PauliSum,
    commute_bits,
    parse_pauli,
    phase_power,
)

log = logging.getLogger(__name__)


class SignedPauli(NamedTuple):
    sign: int
    string: PauliString

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.string.label

    @classmethod
    def parse(cls, text: str) -> "SignedPauli":
        text = text.strip()
        sign = 1
        if text[:1] in "+-":
            sign = -1 if text[0] == "-" else 1
            text = text[1:]
        return cls(sign, parse_pauli(text))


class Membership(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"
    OUTSIDE = "outside"


class Rejection(enum.Enum):
    ANTICOMMUTES = "anticommutes"
    IMPLIED_CONSISTENT = "already-implied-consistent"
    IMPLIED_CONFLICTING = "already-implied-conflicting"


class InvalidGeneratorError(PauliError):
    pass


def _pivot(x: int, z: int, n: int) -> int:
    # columns 0..n-1 are x bits, n..2n-1 are z bits
    v = x | (z << n)
    return (v & -v).bit_length() - 1


# tableau row: (sign, x, z, pivot column); the row is the group element sign * P(x, z)
_Row = tuple[int, int, int, int]


@dataclass(frozen=True)
class StabilizerSet:
    """Independent, commuting signed generators plus a reduced GF(2) tableau.

    The tableau holds group elements in reduced row-echelon form over the 2n
    symplectic columns, each with its sign, so that membership is a single
    elimination pass.
    """

    n: int
    generators: tuple[SignedPauli, ...] = ()
    _rows: tuple[_Row, ...] = field(default=(), repr=False, compare=False)

    @classmethod
    def empty(cls, n: int) -> "StabilizerSet":
        return cls(n)

    @classmethod
    def from_generators(cls, n: int, gens: Sequence[SignedPauli | str]) -> "StabilizerSet":
        s = cls(n)
        for g in gens:
            if isinstance(g, str):
                g = SignedPauli.parse(g)
            res = try_extend(s, g)
            if isinstance(res, Rejection):
                raise InvalidGeneratorError(f"cannot add {g}: {res.value}")
            s = res
        return s

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def labels(self) -> list[str]:
        return [str(g) for g in self.generators]

    def tableau(self) -> list[tuple[int, list[int]]]:
        """Rows as ``(sign, bits)`` with bits over the 2n columns x_1..x_n, z_1..z_n."""
        n = self.n
        return [
            (sign, [((x | (z << n)) >> c) & 1 for c in range(2 * n)])
            for sign, x, z, _ in self._rows
        ]

    def _reduce(self, x: int, z: int) -> tuple[int, int, int]:
        """Left-multiply P(x, z) by tableau rows until no pivot remains.

        Returns ``(power, x', z')`` with (product of used rows) * P = i**power * P(x', z').
        """
        power = 0
        n = self.n
        for sign, rx, rz, piv in self._rows:
            if ((x | (z << n)) >> piv) & 1:
                power += phase_power(rx, rz, x, z) + (0 if sign > 0 else 2)
                x ^= rx
                z ^= rz
        return power % 4, x, z


def _membership_bits(s: StabilizerSet, x: int, z: int) -> Membership:
    if x == 0 and z == 0:
        return Membership.PLUS
    power, rx, rz = s._reduce(x, z)
    if rx or rz:
        return Membership.OUTSIDE
    # (product of rows) * P == i**power * I, hence i**power * P is in the group
    if power == 0:
        return Membership.PLUS
    if power == 2:
        return Membership.MINUS
    raise AssertionError("imaginary phase in stabilizer group: tableau is inconsistent")


def membership(s: StabilizerSet, p: PauliString) -> Membership:
    if p.n != s.n:
        raise DimensionError(f"string has {p.n} qubits, stabilizer set has {s.n}")
    return _membership_bits(s, p.x, p.z)


def try_extend(s: StabilizerSet, g: SignedPauli) -> StabilizerSet | Rejection:
    """Add ``g`` to ``s``, or return why it cannot be added."""
    if g.string.n != s.n:
        raise DimensionError(f"generator has {g.string.n} qubits, set has {s.n}")
    if g.string.is_identity:
        raise InvalidGeneratorError("identity is not a valid stabilizer generator")
    if g.sign not in (1, -1):
        raise InvalidGeneratorError(f"generator sign must be +1 or -1, got {g.sign}")
    gx, gz = g.string.x, g.string.z
    if not all(commute_bits(gx, gz, h.string.x, h.string.z) for h in s.generators):
        return Rejection.ANTICOMMUTES
    power, rx, rz = s._reduce(gx, gz)
    if not (rx or rz):
        implied = 1 if power == 0 else -1
        return Rejection.IMPLIED_CONSISTENT if implied == g.sign else Rejection.IMPLIED_CONFLICTING

    n = s.n
    # rows * g = i**power * P(rx, rz), so sign * i**power * P(rx, rz) joins the group
    new_sign = g.sign * (1 if power == 0 else -1)
    piv = _pivot(rx, rz, n)
    rows = []
    for sign, x, z, p in s._rows:
        if ((x | (z << n)) >> piv) & 1:
            ph = phase_power(rx, rz, x, z)
            rows.append((sign * new_sign * (1 if ph == 0 else -1), x ^ rx, z ^ rz, p))
        else:
            rows.append((sign, x, z, p))
    rows.append((new_sign, rx, rz, piv))
    rows.sort(key=lambda r: r[3])
    return StabilizerSet(n, s.generators + (g,), tuple(rows))


def greedy_select(h: PauliSum, max_k: int | None = None, rejections: list | None = None) -> StabilizerSet:
    """Pick stabilizers from the terms of ``h`` in canonical order.

    Each term ``c P`` proposes ``-sign(c) P``. Candidates that conflict with a
    sign already fixed by the group are skipped and, if ``rejections`` is
    given, recorded there as ``(SignedPauli, Rejection)``.
    """
    if max_k is None:
        max_k = h.n
    if not 0 <= max_k <= h.n:
        raise ValueError(f"max_k must lie in [0, {h.n}], got {max_k}")
    s = StabilizerSet.empty(h.n)
    for coeff, p in h.terms:
        if len(s) >= max_k:
            break
        if p.is_identity:
            continue
        cand = SignedPauli(-1 if coeff > 0 else 1, p)
        res = try_extend(s, cand)
        if isinstance(res, Rejection):
            if res is Rejection.IMPLIED_CONFLICTING:
                log.debug("skipping %s: %s", cand, res.value)
                if rejections is not None:
                    rejections.append((cand, res))
            continue
        s = res
    return s


_EXPECT = {Membership.PLUS: 1.0, Membership.MINUS: -1.0, Membership.OUTSIDE: 0.0}


def stabilizer_energy(h: PauliSum, s: StabilizerSet) -> float:
    """Average energy of ``h`` over the code space of ``s``."""
    if h.n != s.n:
        raise DimensionError(f"Hamiltonian has {h.n} qubits, stabilizer set has {s.n}")
    return math.fsum(c * _EXPECT[_membership_bits(s, p.x, p.z)] for c, p in h.terms)


def gauged_energy(
    h: PauliSum, g: Sequence[float], max_k: int | None = None
) -> tuple[float, StabilizerSet, PauliSum]:
    rotated = rotate_frame(h, g)
    s = greedy_select(rotated, h.n if max_k is None else max_k)
    return stabilizer_energy(rotated, s), s, rotated
