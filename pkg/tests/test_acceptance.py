"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line to the terminal (capture disabled) and
then asserts. Run ``python3 tests/test_acceptance.py`` for the lines alone.
"""
import math
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from stabgauge.chsh import CHSH, QuantumStrategy, classical_bias, game_to_hamiltonian, quantum_bias, winning_probability
from stabgauge.exact import ground_energy, projector_energy, spectrum
from stabgauge.gauge import rotate_frame
from stabgauge.hamio import ising
from stabgauge.optimizer import OptimizerConfig, optimize
from stabgauge.pauli import PauliSum, coeff_norm_sq
from stabgauge.sequential import sweep
from stabgauge.stabilizer import gauged_energy, greedy_select, stabilizer_energy

SQRT2 = math.sqrt(2.0)
PI4 = math.pi / 4
N_RANDOM = 200


def _random_hamiltonian(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 4))
    k = int(rng.integers(1, 9))
    pairs = [(float(rng.normal()), "".join(rng.choice(list("IXYZ"), n))) for _ in range(k)]
    return PauliSum.from_terms(n, pairs)


def _random_angles(seed, n):
    rng = np.random.default_rng(10_000 + seed)
    return tuple(float(a) for a in rng.uniform(0, 2 * math.pi, n))


def close(a, b, tol):
    return abs(a - b) <= tol


def check(number, title, results, capsys=None):
    """results: list of (name, bool). Prints one line and asserts all passed."""
    failed = [name for name, ok in results if not ok]
    line = f"{'PASS' if not failed else 'FAIL'} criterion {number}: {title}"
    if failed:
        line += " [failed: " + ", ".join(failed) + "]"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    assert not failed, line


H0 = PauliSum.from_labels([(-1, "XX"), (-1, "XZ"), (-1, "ZX"), (1, "ZZ")])
H2_BOUND = PauliSum.from_labels([(2, "IZ"), (-2, "ZI")])
H2_ASYM = PauliSum.from_labels([(2, "XX")])
H2_MID = PauliSum.from_labels([(1, "IZ"), (-1, "ZI"), (2, "XX")])


def criterion_1():
    beta_c = classical_bias(CHSH)
    beta_q = quantum_bias(CHSH, QuantumStrategy.standard())
    return [
        ("classical_bias == 1/2", beta_c == Fraction(1, 2)),
        ("classical win 3/4", close(winning_probability(beta_c), 0.75, 1e-12)),
        ("quantum win 1/2+sqrt2/4", close(winning_probability(beta_q), 0.5 + SQRT2 / 4, 1e-12)),
        ("quantum_bias sqrt2/2", close(beta_q, SQRT2 / 2, 1e-12)),
    ]


def criterion_2():
    h = game_to_hamiltonian(CHSH)
    return [
        ("hamiltonian", h.as_dict() == {"XX": -1, "XZ": -1, "ZX": -1, "ZZ": 1}),
        ("plain energy -2", gauged_energy(h, (0.0, 0.0))[0] == -2),
        ("gauged (0, pi/4) -2sqrt2", close(gauged_energy(h, (0.0, PI4))[0], -2 * SQRT2, 1e-9)),
        ("exact -2sqrt2", close(ground_energy(h), -2 * SQRT2, 1e-9)),
    ]


def criterion_3():
    out = []
    for n in range(1, 7):
        h = ising(n, J=0.0, g_x=1.0, g_z=1.0)
        out.append((f"N={n} plain", close(stabilizer_energy(h, greedy_select(h)), -n, 1e-12)))
        out.append((f"N={n} gauged", close(gauged_energy(h, (PI4,) * n)[0], -SQRT2 * n, 1e-9)))
        out.append((f"N={n} exact", close(ground_energy(h), -SQRT2 * n, 1e-9)))
    return out


def criterion_4():
    s = greedy_select(H2_BOUND)
    e = stabilizer_energy(H2_BOUND, s)
    return [
        ("generators {-IZ,+ZI}", sorted(s.labels()) == ["+ZI", "-IZ"]),
        ("energy -4", e == -4),
        ("equals exact", close(e, ground_energy(H2_BOUND), 1e-9)),
    ]


def criterion_5():
    s = greedy_select(H2_ASYM)
    e = stabilizer_energy(H2_ASYM, s)
    return [
        ("generators {-XX}", s.labels() == ["-XX"]),
        ("energy -2", e == -2),
        ("equals exact", close(e, ground_energy(H2_ASYM), 1e-9)),
    ]


def criterion_6():
    tr = sweep(H2_MID, "fixed_pi4", (1, 2))
    snap = tr.reduced_hamiltonians[0]
    want = {"I": -1 / SQRT2, "Z": 1.0, "X": SQRT2}
    got = snap.as_dict()
    snap_ok = set(got) == set(want) and all(close(got[k], want[k], 1e-12) for k in want)
    res = optimize(H2_MID, OptimizerConfig(seed=7))
    return [
        ("plain greedy -2", stabilizer_energy(H2_MID, greedy_select(H2_MID)) == -2),
        ("sweep -1-sqrt2", close(tr.final_energy, -1 - SQRT2, 1e-9)),
        ("sweep snapshot", snap_ok),
        ("optimize -2.5", close(res.energy, -2.5, 1e-6)),
        ("exact -2sqrt2", close(ground_energy(H2_MID), -2 * SQRT2, 1e-9)),
    ]


def criterion_7():
    # reduced optimizer budget keeps 200 cases inside the suite's time budget;
    # restart 0 starts at zero angles so (e) does not depend on the budget
    cfg_for = lambda k: OptimizerConfig(restarts=2, max_sweeps=10, seed=k)
    bad = {"a": [], "b": [], "c": [], "d": [], "e": []}
    for k in range(N_RANDOM):
        h = _random_hamiltonian(k)
        g = _random_angles(k, h.n)
        exact = ground_energy(h)
        plain_set = greedy_select(h)
        plain = stabilizer_energy(h, plain_set)
        e_g, s_g, rotated = gauged_energy(h, g)

        if not (close(plain, projector_energy(h, plain_set), 1e-9)
                and close(e_g, projector_energy(rotated, s_g), 1e-9)):
            bad["a"].append(k)

        res = optimize(h, cfg_for(k))
        reported = [plain, e_g, res.energy]
        reported += [sweep(h, mode).final_energy for mode in ("fixed_pi4", "analytic")]
        if min(reported) < exact - 1e-9:
            bad["b"].append(k)

        if not close(coeff_norm_sq(rotated), coeff_norm_sq(h), 1e-9):
            bad["c"].append(k)

        if np.max(np.abs(np.sort(spectrum(rotated)) - np.sort(spectrum(h)))) > 1e-9:
            bad["d"].append(k)

        if res.energy > plain + 1e-10:
            bad["e"].append(k)
    return [(f"({key}) seeds {v[:5]}", not v) for key, v in bad.items()]


CLI_RUNS = [
    ["optimize", "--model", "h2_mid", "--seed", "7"],
    ["optimize", "--model", "ising", "--n", "3", "--J", "0.5", "--seed", "3", "--restarts", "3"],
    ["sweep", "--model", "h2_mid", "--mode", "analytic"],
    ["gauge", "--model", "chsh", "--angles", "0,pi/4"],
    ["stab", "--model", "h2_bound"],
    ["chsh"],
]


def criterion_8():
    out = []
    for argv in CLI_RUNS:
        cmd = [sys.executable, "-m", "stabgauge", *argv]
        runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(3)]
        ok = all(r.returncode == 0 for r in runs) and len({r.stdout for r in runs}) == 1 and runs[0].stdout
        out.append((" ".join(argv), bool(ok)))
    return out


CRITERIA = [
    (1, "CHSH game values", criterion_1),
    (2, "CHSH Hamiltonian chain", criterion_2),
    (3, "Ising extremal case N=1..6", criterion_3),
    (4, "H2 bound region", criterion_4),
    (5, "H2 asymptotic region", criterion_5),
    (6, "H2 intermediate region", criterion_6),
    (7, f"property suite on {N_RANDOM} random Hamiltonians", criterion_7),
    (8, "CLI determinism", criterion_8),
]


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(number, title, fn, capsys):
    check(number, title, fn(), capsys)


if __name__ == "__main__":
    failures = 0
    for number, title, fn in CRITERIA:
        try:
            check(number, title, fn())
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)
