"""Pauli strings in symplectic form and real-weighted Pauli sums.

Qubit 1 is the leftmost character of the text form and bit 0 of the packed
``x``/``z`` masks. A qubit carries I/X/Y/Z for (x, z) = (0,0)/(1,0)/(1,1)/(0,1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

MERGE_EPS = 1e-12

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}

PHASES = (1, 1j, -1, -1j)


class PauliError(ValueError):
    pass


class DimensionError(PauliError):
    pass


@dataclass(frozen=True, order=False)
class PauliString:
    n: int
    x: int
    z: int

    def __post_init__(self):
        if self.n < 1:
            raise PauliError(f"qubit count must be positive, got {self.n}")
        full = (1 << self.n) - 1
        if self.x & ~full or self.z & ~full:
            raise PauliError("bit masks exceed qubit count")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliString":
        """Letter ``letter`` at 1-based ``qubit``, identity elsewhere."""
        xb, zb = _LETTER_BITS[letter]
        return cls(n, xb << (qubit - 1), zb << (qubit - 1))

    def letter(self, qubit: int) -> str:
        i = qubit - 1
        return _BITS_LETTER[((self.x >> i) & 1, (self.z >> i) & 1)]

    @property
    def label(self) -> str:
        return _label(self.n, self.x, self.z)

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def support(self) -> int:
        return self.x | self.z

    @property
    def weight(self) -> int:
        return self.support.bit_count()

    def x_bits(self) -> list[int]:
        return [(self.x >> i) & 1 for i in range(self.n)]

    def z_bits(self) -> list[int]:
        return [(self.z >> i) & 1 for i in range(self.n)]

    def replace(self, qubit: int, letter: str) -> "PauliString":
        i = qubit - 1
        xb, zb = _LETTER_BITS[letter]
        x = (self.x & ~(1 << i)) | (xb << i)
        z = (self.z & ~(1 << i)) | (zb << i)
        return PauliString(self.n, x, z)

    def drop(self, qubit: int) -> "PauliString":
        """Remove ``qubit`` from the string; the result has ``n - 1`` qubits."""
        if self.n == 1:
            raise PauliError("cannot drop the only qubit of a string")
        i = qubit - 1
        low = (1 << i) - 1

        def squeeze(m: int) -> int:
            return (m & low) | ((m >> (i + 1)) << i)

        return PauliString(self.n - 1, squeeze(self.x), squeeze(self.z))

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f"PauliString({self.label!r})"


@lru_cache(maxsize=1 << 16)
def _label(n: int, x: int, z: int) -> str:
    return "".join(_BITS_LETTER[((x >> i) & 1, (z >> i) & 1)] for i in range(n))


def parse_pauli(text: str) -> PauliString:
    """Parse a bare letter string such as ``"XZI"``."""
    if not text:
        raise PauliError("empty Pauli string")
    x = z = 0
    for pos, ch in enumerate(text):
        try:
            xb, zb = _LETTER_BITS[ch]
        except KeyError:
            raise PauliError(
                f"illegal character {ch!r} at position {pos + 1} of {text!r}"
            ) from None
        x |= xb << pos
        z |= zb << pos
    return PauliString(len(text), x, z)


def _check_same_n(p: PauliString, q: PauliString) -> None:
    if p.n != q.n:
        raise DimensionError(f"qubit counts differ: {p.n} vs {q.n}")


def commute_bits(x1: int, z1: int, x2: int, z2: int) -> bool:
    return ((x1 & z2) ^ (z1 & x2)).bit_count() % 2 == 0


def commutes(p: PauliString, q: PauliString) -> bool:
    _check_same_n(p, q)
    return commute_bits(p.x, p.z, q.x, q.z)


def phase_power(x1: int, z1: int, x2: int, z2: int) -> int:
    """Power of i in the product of two Hermitian Pauli strings given as masks."""
    xo1, y1, zo1 = x1 & ~z1, x1 & z1, z1 & ~x1
    xo2, y2, zo2 = x2 & ~z2, x2 & z2, z2 & ~x2
    # XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i
    plus = (xo1 & y2) | (y1 & zo2) | (zo1 & xo2)
    minus = (y1 & xo2) | (zo1 & y2) | (xo1 & zo2)
    return (plus.bit_count() - minus.bit_count()) % 4


def multiply(p: PauliString, q: PauliString) -> tuple[complex, PauliString]:
    """Return ``(phase, r)`` with ``phase * r == p @ q`` and phase in {1, i, -1, -i}."""
    _check_same_n(p, q)
    power = phase_power(p.x, p.z, q.x, q.z)
    return PHASES[power], PauliString(p.n, p.x ^ q.x, p.z ^ q.z)


class PauliTerm(NamedTuple):
    coeff: float
    string: PauliString

    def __str__(self) -> str:
        return f"{self.coeff:.17g} {self.string.label}"


def term_sort_key(term: PauliTerm) -> tuple[float, str]:
    # I < X < Y < Z is plain ASCII order
    return (-abs(term.coeff), term.string.label)


@dataclass(frozen=True)
class PauliSum:
    """A Hamiltonian as a list of real-weighted Pauli strings on ``n`` qubits.

    Instances built through :meth:`from_terms` or :func:`canonicalize` are in
    canonical form: distinct strings, sorted by descending ``|coeff|`` then
    label, with no coefficient below the merge epsilon.
    """

    n: int
    terms: tuple[PauliTerm, ...] = ()

    def __post_init__(self):
        if not all(type(t) is PauliTerm for t in self.terms):
            object.__setattr__(self, "terms", tuple(PauliTerm(float(c), s) for c, s in self.terms))
        for t in self.terms:
            if t.string.n != self.n:
                raise DimensionError(
                    f"term {t.string.label} has {t.string.n} qubits, expected {self.n}"
                )
            if not math.isfinite(t.coeff):
                raise PauliError(f"non-finite coefficient for {t.string.label}")

    @classmethod
    def from_terms(
        cls, n: int, terms: Iterable[tuple[float, PauliString | str]], eps: float = MERGE_EPS
    ) -> "PauliSum":
        raw = []
        for coeff, s in terms:
            if isinstance(s, str):
                s = parse_pauli(s)
            raw.append(PauliTerm(float(coeff), s))
        return canonicalize(cls(n, tuple(raw)), eps)

    @classmethod
    def from_labels(cls, pairs: Iterable[tuple[float, str]], eps: float = MERGE_EPS) -> "PauliSum":
        pairs = list(pairs)
        if not pairs:
            raise PauliError("cannot infer qubit count from an empty term list")
        return cls.from_terms(len(pairs[0][1]), pairs, eps)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def coefficient(self, s: PauliString | str) -> float:
        label = s if isinstance(s, str) else s.label
        return sum(t.coeff for t in self.terms if t.string.label == label)

    def as_dict(self) -> dict[str, float]:
        out: dict[str, float] = {}
        for t in self.terms:
            out[t.string.label] = out.get(t.string.label, 0.0) + t.coeff
        return out

    def constant(self) -> float:
        """Coefficient of the identity string."""
        return sum(t.coeff for t in self.terms if t.string.is_identity)

    def __str__(self) -> str:
        return "\n".join(str(t) for t in self.terms)


def canonicalize(h: PauliSum, eps: float = MERGE_EPS) -> PauliSum:
    merged: dict[tuple[int, int], float] = {}
    for coeff, s in h.terms:
        key = (s.x, s.z)
        merged[key] = merged.get(key, 0.0) + coeff
    return sum_from_masks(h.n, merged, eps)


def sum_from_masks(n: int, merged: dict[tuple[int, int], float], eps: float = MERGE_EPS) -> PauliSum:
    """Canonical sum from a ``{(x, z): coeff}`` map with distinct keys."""
    if eps < 0:
        raise PauliError("merge epsilon must be non-negative")
    items = [
        (-abs(c), _label(n, x, z), c, x, z)
        for (x, z), c in merged.items()
        if c != 0.0 and abs(c) >= eps
    ]
    items.sort()
    return PauliSum(n, tuple(PauliTerm(c, PauliString(n, x, z)) for _, _, c, x, z in items))


def coeff_norm_sq(h: PauliSum) -> float:
    """Sum of squared coefficients, i.e. ``||H||_F^2 / 2**n``."""
    return math.fsum(t.coeff * t.coeff for t in h.terms)


def is_canonical(h: PauliSum, eps: float = MERGE_EPS) -> bool:
    return canonicalize(h, eps) == h
