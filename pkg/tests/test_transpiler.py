"""Gate-level lowering into Pauli rotation programs."""

import pytest

from lscompile.oracle import (
    circuit_distribution,
    circuit_unitary,
    distributions_match,
    equivalent_up_to_phase,
    outcome_distribution,
    program_unitary,
)
from lscompile.pauli import PauliWord, rotation
from lscompile.transpiler import (
    CircuitParseError,
    Gate,
    GateCircuit,
    PbcProgram,
    SUPPORTED_GATES,
    UnsupportedGateError,
    absorb_cliffords,
    decompose_gate,
    format_pbc,
    parse_pbc,
    parse_qasm,
    transpile,
)
from lscompile import bench

W = PauliWord.from_string


def op_triples(program):
    return [(op.kind[0], op.word.to_string(), op.angle_num) for op in program.ops]


class TestDecomposeGate:
    def test_known_tables(self):
        table = {
            "t": [("Z", 1)],
            "tdg": [("Z", 15)],
            "s": [("Z", 2)],
            "sdg": [("Z", 14)],
            "h": [("Z", 2), ("X", 2), ("Z", 2)],
            "x": [("X", 4)],
            "y": [("Y", 4)],
            "z": [("Z", 4)],
        }
        for name, expected in table.items():
            ops = decompose_gate(Gate(name, (0,)), 1)
            assert [(o.word.to_string(), o.angle_num) for o in ops] == expected

    def test_cx(self):
        ops = decompose_gate(Gate("cx", (0, 1)), 2)
        assert [(o.word.to_string(), o.angle_num) for o in ops] == [
            ("ZX", 2), ("IX", 14), ("ZI", 14)]

    def test_measure(self):
        ops = decompose_gate(Gate("measure", (1,)), 2)
        assert len(ops) == 1
        assert ops[0].is_measurement()
        assert ops[0].word.to_string() == "IZ"

    @pytest.mark.parametrize("name", [g for g in SUPPORTED_GATES
                                      if g not in ("cx", "measure")])
    def test_single_qubit_unitaries_match_oracle(self, name):
        from lscompile.oracle import gate_matrix
        ops = decompose_gate(Gate(name, (0,)), 1)
        u = program_unitary(PbcProgram(1, tuple(ops)))
        assert equivalent_up_to_phase(u, gate_matrix(Gate(name, (0,)), 1))

    def test_cx_unitary_matches_oracle(self):
        from lscompile.oracle import gate_matrix
        ops = decompose_gate(Gate("cx", (1, 0)), 3)
        u = program_unitary(PbcProgram(3, tuple(ops)))
        assert equivalent_up_to_phase(u, gate_matrix(Gate("cx", (1, 0)), 3))


class TestAbsorbCliffords:
    def test_worked_example(self):
        """A quarter turn ahead of an X eighth turn folds into a Y eighth
        turn, leaving only the rotation and the final readout."""
        prog = parse_pbc("pi/4 Z\npi/8 X\nM Z")
        out = absorb_cliffords(prog)
        assert op_triples(out) == [("r", "Y", 15), ("m", "Z", 0)]
        assert distributions_match(outcome_distribution(out),
                                   outcome_distribution(prog))

    def test_output_only_eighths_and_measurements(self):
        for seed in range(8):
            circ = bench.random_circuit(3, 15, seed=seed)
            prog = transpile(circ)
            assert all(op.is_eighth() or op.is_measurement()
                       for op in prog.ops)

    def test_quarter_before_commuting_measurement_disappears(self):
        prog = parse_pbc("pi/4 Z\nM Z")
        out = absorb_cliffords(prog)
        assert op_triples(out) == [("m", "Z", 0)]


class TestTranspile:
    def test_empty_circuit_gets_default_readout(self):
        prog = transpile(GateCircuit(2))
        assert op_triples(prog) == [("m", "ZI", 0), ("m", "IZ", 0)]

    def test_explicit_measure_not_duplicated(self):
        circ = GateCircuit(1)
        circ.add("h", 0)
        circ.add("measure", 0)
        prog = transpile(circ)
        assert sum(1 for op in prog.ops if op.is_measurement()) == 1

    def test_distribution_preserved(self):
        for seed in (11, 23, 37):
            circ = bench.random_circuit(3, 12, seed=seed)
            prog = transpile(circ)
            assert distributions_match(outcome_distribution(prog),
                                       circuit_distribution(circ), tol=1e-9)

    def test_unsupported_gate_rejected(self):
        circ = GateCircuit(3)
        with pytest.raises(UnsupportedGateError):
            circ.add("ccx", 0, 1, 2)


class TestTextFormats:
    def test_pbc_round_trip(self):
        text = "pi/8 ZZ\n-pi/4 XI\nM IZ\n"
        prog = parse_pbc(text)
        rendered = format_pbc(prog)
        assert rendered.startswith("# 2 qubits, 3 operators\n")
        assert rendered.endswith(text)
        assert parse_pbc(rendered) == prog
        assert prog.n == 2

    def test_pbc_infers_width_from_first_line(self):
        prog = parse_pbc("pi/8 XYZ")
        assert prog.n == 3

    def test_pbc_width_mismatch(self):
        with pytest.raises(Exception):
            parse_pbc("pi/8 ZZ\npi/8 ZZZ")

    def test_qasm_small_program(self):
        circ = parse_qasm(
            'OPENQASM 2.0;\n'
            'include "qelib1.inc";\n'
            'qreg q[2];\n'
            'creg c[2];\n'
            'h q[0];\n'
            'cx q[0],q[1];\n'
            'measure q[0] -> c[0];\n'
            'measure q[1] -> c[1];\n')
        assert circ.n == 2
        assert [g.name for g in circ.gates] == ["h", "cx", "measure", "measure"]
        assert circ.gates[1].qubits == (0, 1)

    def test_qasm_rejects_unknown_gate(self):
        with pytest.raises((UnsupportedGateError, CircuitParseError)):
            parse_qasm('OPENQASM 2.0;\nqreg q[3];\nccx q[0],q[1],q[2];\n')

    def test_qasm_rejects_bad_syntax(self):
        with pytest.raises(CircuitParseError):
            parse_qasm('OPENQASM 2.0;\nqreg q[2];\nh q[0\n')

    def test_qasm_full_circle_through_oracle(self):
        text = ('OPENQASM 2.0;\nqreg q[2];\n'
                't q[0];\nh q[1];\ncx q[1],q[0];\n')
        circ = parse_qasm(text)
        prog = transpile(circ)
        assert distributions_match(outcome_distribution(prog),
                                   circuit_distribution(circ))
