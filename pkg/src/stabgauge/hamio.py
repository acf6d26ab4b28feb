"""Line-oriented Hamiltonian files and the built-in example models.

One term per line, ``<coefficient> <Pauli letters>``; blank lines and lines
starting with ``#`` are ignored. Example::

    # H2, intermediate region
    1 IZ
    -1 ZI
    2 XX
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .chsh import CHSH, game_to_hamiltonian
from .pauli import PauliError, PauliString, PauliSum, parse_pauli

MODEL_KINDS = ("ising", "chsh", "h2_bound", "h2_asym", "h2_mid")

_REAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")

H2_MODELS = {
    "h2_bound": [(2.0, "IZ"), (-2.0, "ZI")],
    "h2_asym": [(2.0, "XX")],
    "h2_mid": [(1.0, "IZ"), (-1.0, "ZI"), (2.0, "XX")],
}


class HamiltonianParseError(PauliError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def parse_hamiltonian(text: str) -> PauliSum:
    terms = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise HamiltonianParseError(f"expected '<coefficient> <paulis>', got {line!r}", lineno)
        coeff_tok, paulis = parts
        if not _REAL_RE.match(coeff_tok):
            raise HamiltonianParseError(f"malformed coefficient {coeff_tok!r}", lineno)
        coeff = float(coeff_tok)
        if not math.isfinite(coeff):
            raise HamiltonianParseError(f"non-finite coefficient {coeff_tok!r}", lineno)
        try:
            s = parse_pauli(paulis)
        except PauliError as exc:
            raise HamiltonianParseError(str(exc), lineno) from None
        if n is None:
            n = s.n
        elif s.n != n:
            raise HamiltonianParseError(
                f"string {paulis!r} has {s.n} qubits, earlier terms have {n}", lineno
            )
        terms.append((coeff, s))
    if n is None:
        raise HamiltonianParseError("no terms found")
    return PauliSum.from_terms(n, terms)


def serialize_hamiltonian(h: PauliSum) -> str:
    """Canonical order, 17 significant digits; ``parse_hamiltonian`` inverts it."""
    return "".join(f"{t.coeff:.17g} {t.string.label}\n" for t in h.terms)


def read_hamiltonian(path) -> PauliSum:
    with open(path, encoding="utf-8") as fh:
        return parse_hamiltonian(fh.read())


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    n: int = 2
    edges: tuple[tuple[int, int], ...] | None = None
    J: float = 0.0
    g_x: float = 1.0
    g_z: float = 1.0

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}; choose from {MODEL_KINDS}")
        if self.kind == "ising":
            if self.n < 1:
                raise ValueError("ising model needs n >= 1")
            for i, j in self.ising_edges():
                if not (1 <= i <= self.n and 1 <= j <= self.n) or i == j:
                    raise ValueError(f"invalid edge ({i}, {j}) for n={self.n}")

    def ising_edges(self) -> tuple[tuple[int, int], ...]:
        if self.edges is not None:
            return self.edges
        return tuple((i, i + 1) for i in range(1, self.n))

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.kind == "ising":
            d.update(n=self.n, edges=[list(e) for e in self.ising_edges()], J=self.J, g_x=self.g_x, g_z=self.g_z)
        return d


def ising(n: int, J: float, g_x: float, g_z: float, edges=None) -> PauliSum:
    """sum_{(i,j)} J Z_i Z_j + sum_i (g_x X_i + g_z Z_i); open chain by default."""
    return build_model(ModelSpec("ising", n=n, edges=edges, J=J, g_x=g_x, g_z=g_z))


def build_model(spec: ModelSpec) -> PauliSum:
    if spec.kind == "chsh":
        return game_to_hamiltonian(CHSH)
    if spec.kind in H2_MODELS:
        return PauliSum.from_labels(H2_MODELS[spec.kind])
    n = spec.n
    terms = []
    for i, j in spec.ising_edges():
        zz = PauliString(n, 0, (1 << (i - 1)) | (1 << (j - 1)))
        terms.append((spec.J, zz))
    for i in range(1, n + 1):
        terms.append((spec.g_x, PauliString.single(n, i, "X")))
        terms.append((spec.g_z, PauliString.single(n, i, "Z")))
    return PauliSum.from_terms(n, terms)
