"""Dense simulation oracle: matrices, distributions, brute-force clocks."""

import numpy as np
import pytest

from lscompile.board import Board
from lscompile.oracle import (
    MAX_ORACLE_QUBITS,
    brute_force_optimum,
    circuit_distribution,
    circuit_unitary,
    distributions_match,
    equivalent_up_to_phase,
    gate_matrix,
    outcome_distribution,
    program_unitary,
    rotation_matrix,
    word_matrix,
)
from lscompile.pauli import PauliWord, measurement, rotation
from lscompile.transpiler import Gate, GateCircuit, PbcProgram

W = PauliWord.from_string

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def test_word_matrix_single_qubit():
    assert np.allclose(word_matrix(W("X")), SX)
    assert np.allclose(word_matrix(W("Y")), SY)
    assert np.allclose(word_matrix(W("Z")), SZ)
    assert np.allclose(word_matrix(W("I")), np.eye(2))


def test_word_matrix_qubit_zero_is_leftmost_factor():
    assert np.allclose(word_matrix(W("XI")), np.kron(SX, np.eye(2)))
    assert np.allclose(word_matrix(W("IZ")), np.kron(np.eye(2), SZ))


def test_rotation_matrix_quarter_turn():
    u = rotation_matrix(rotation(W("Z"), 2))
    assert np.allclose(u, (np.eye(2) - 1j * SZ) / np.sqrt(2))


def test_rotation_matrix_is_exponential():
    op = rotation(W("XZ"), 3)
    theta = 3 * np.pi / 8
    m = word_matrix(W("XZ"))
    expected = np.cos(theta) * np.eye(4) - 1j * np.sin(theta) * m
    assert np.allclose(rotation_matrix(op), expected)


def test_program_unitary_composes_hadamard():
    ops = (rotation(W("Z"), 2), rotation(W("X"), 2), rotation(W("Z"), 2))
    u = program_unitary(PbcProgram(1, ops))
    assert equivalent_up_to_phase(u, gate_matrix(Gate("h", (0,)), 1))


def test_equivalent_up_to_phase():
    h = gate_matrix(Gate("h", (0,)), 1)
    assert equivalent_up_to_phase(h, np.exp(0.7j) * h)
    assert not equivalent_up_to_phase(h, gate_matrix(Gate("x", (0,)), 1))


def test_circuit_unitary_matches_gate_product():
    circ = GateCircuit(2)
    circ.add("h", 0)
    circ.add("cx", 0, 1)
    u = circuit_unitary(circ)
    cx = gate_matrix(Gate("cx", (0, 1)), 2)
    h0 = gate_matrix(Gate("h", (0,)), 2)
    assert np.allclose(u, cx @ h0)


def test_outcome_distribution_deterministic():
    prog = PbcProgram(1, (measurement(W("Z")),))
    assert outcome_distribution(prog) == {(1,): pytest.approx(1.0)}


def test_bell_state_distribution():
    circ = GateCircuit(2)
    circ.add("h", 0)
    circ.add("cx", 0, 1)
    dist = circuit_distribution(circ)
    assert set(dist) == {(1, 1), (-1, -1)}
    assert dist[(1, 1)] == pytest.approx(0.5)
    assert dist[(-1, -1)] == pytest.approx(0.5)


def test_negative_sign_measurement_flips_outcome():
    prog = PbcProgram(1, (measurement(W("Z"), -1),))
    assert outcome_distribution(prog) == {(-1,): pytest.approx(1.0)}


def test_distributions_match_tolerance():
    a = {(1,): 0.5, (-1,): 0.5}
    b = {(1,): 0.5 + 1e-12, (-1,): 0.5 - 1e-12}
    c = {(1,): 0.6, (-1,): 0.4}
    assert distributions_match(a, b)
    assert not distributions_match(a, c)


def test_qubit_cap_enforced():
    big = PbcProgram(MAX_ORACLE_QUBITS + 1,
                     (measurement(PauliWord.identity(MAX_ORACLE_QUBITS + 1)),))
    with pytest.raises(Exception):
        program_unitary(big)


def test_brute_force_single_measurement():
    board = Board(3, 3)
    board.init_patch(0, (0, 0), "h")
    board.init_patch(1, (0, 2), "h")
    board.place_ancilla((2, 1), "h")
    board.set_port((2, 0))
    prog = PbcProgram(2, (measurement(W("ZZ")),))
    assert brute_force_optimum(prog, board) == 1


def test_brute_force_never_beats_known_golden():
    """The exhaustive search is a lower bound on any legal schedule."""
    from lscompile.board import builtin_layout
    from lscompile.scheduler import schedule_loose
    from lscompile.transpiler import parse_pbc

    prog = parse_pbc("M ZZZ", 3)
    board = builtin_layout("compact", 3)
    loose = schedule_loose(prog, board).total_clocks
    assert brute_force_optimum(prog, board) <= loose
