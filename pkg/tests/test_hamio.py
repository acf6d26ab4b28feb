import pytest
from hypothesis import given
from hypothesis import strategies as st

from stabgauge.hamio import (
    HamiltonianParseError,
    ModelSpec,
    build_model,
    ising,
    parse_hamiltonian,
    read_hamiltonian,
    serialize_hamiltonian,
)
from stabgauge.pauli import PauliSum


def test_parse_h2_bound(h2_bound):
    h = parse_hamiltonian("2 IZ\n-2 ZI")
    assert h == h2_bound and h.n == 2


def test_parse_h2_mid(h2_mid):
    assert parse_hamiltonian("1 IZ\n-1 ZI\n2 XX\n") == h2_mid


def test_comments_and_blank_lines():
    h = parse_hamiltonian("# comment\n\n1.0 X\n")
    assert h.n == 1 and h.as_dict() == {"X": 1.0}


def test_exponent_and_sign_literals():
    h = parse_hamiltonian("+1.5e-1 XY\n-.25 ZZ\n")
    assert h.as_dict() == {"XY": 0.15, "ZZ": -0.25}


@pytest.mark.parametrize(
    "text,line",
    [
        ("1 XX\n2 X\n", 2),
        ("abc XX\n", 1),
        ("1 XQ\n", 1),
        ("# only a comment\n", None),
        ("1 XX\n\npi/4 ZZ\n", 3),
        ("1\n", 1),
        ("nan XX\n", 1),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(HamiltonianParseError) as exc:
        parse_hamiltonian(text)
    assert exc.value.line == line


def test_read_file(tmp_path, h2_mid):
    path = tmp_path / "h.txt"
    path.write_text("1 IZ\n-1 ZI\n2 XX\n", encoding="utf-8")
    assert read_hamiltonian(path) == h2_mid


terms_strategy = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.tuples(
            st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False),
            st.text("IXYZ", min_size=n, max_size=n),
        ),
        min_size=1,
        max_size=12,
    )
)


@given(terms_strategy)
def test_serialize_round_trip(pairs):
    h = PauliSum.from_labels(pairs)
    if not h.terms:
        return
    assert parse_hamiltonian(serialize_hamiltonian(h)) == h


def test_serialize_format(h2_mid):
    assert serialize_hamiltonian(h2_mid) == "2 XX\n1 IZ\n-1 ZI\n"


def test_ising_extremal():
    h = build_model(ModelSpec("ising", n=2, edges=((1, 2),), J=0.0, g_x=1.0, g_z=1.0))
    assert h.as_dict() == {"XI": 1, "ZI": 1, "IX": 1, "IZ": 1}


def test_ising_with_coupling():
    h = ising(3, J=0.5, g_x=0.2, g_z=-0.1)
    assert h.coefficient("ZZI") == 0.5 and h.coefficient("IZZ") == 0.5
    assert h.coefficient("IXI") == 0.2 and h.coefficient("IIZ") == -0.1
    assert len(h) == 8


def test_h2_models():
    assert build_model(ModelSpec("h2_mid")).as_dict() == {"IZ": 1, "ZI": -1, "XX": 2}
    assert build_model(ModelSpec("h2_asym")).as_dict() == {"XX": 2}
    assert build_model(ModelSpec("h2_bound")).as_dict() == {"IZ": 2, "ZI": -2}
    assert build_model(ModelSpec("chsh")).as_dict() == {"XX": -1, "XZ": -1, "ZX": -1, "ZZ": 1}


@pytest.mark.parametrize("edges", [((1, 4),), ((0, 1),), ((2, 2),)])
def test_invalid_edges(edges):
    with pytest.raises(ValueError):
        ModelSpec("ising", n=3, edges=edges)


def test_unknown_kind():
    with pytest.raises(ValueError):
        ModelSpec("heisenberg")
