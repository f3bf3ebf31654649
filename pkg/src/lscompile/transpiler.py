"""Lowering of Clifford+T gate circuits to Pauli-product-rotation programs.

Every gate becomes a short list of Pauli rotations; +/- pi/4 and pi/2
rotations are then commuted rightward through the rest of the program and
deleted at the measurement boundary, leaving only +/- pi/8 rotations and
(possibly transformed) measurements.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .pauli import (
    MEASUREMENT,
    ROTATION,
    PauliOp,
    PauliParseError,
    PauliWord,
    conjugate_past,
    flip_past_pauli,
    measurement,
    rotation,
)

SUPPORTED_GATES = ("h", "s", "sdg", "t", "tdg", "x", "y", "z", "cx", "measure")

_ONE_QUBIT = {"h", "s", "sdg", "t", "tdg", "x", "y", "z", "measure"}


class UnsupportedGateError(ValueError):
    """Gate outside the fixed Clifford+T set."""


class CircuitParseError(ValueError):
    """Malformed circuit text."""


@dataclass(frozen=True)
class Gate:
    name: str
    qubits: tuple

    def __post_init__(self):
        if self.name not in SUPPORTED_GATES:
            raise UnsupportedGateError(f"unsupported gate {self.name!r}")
        if self.name == "cx":
            if len(self.qubits) != 2 or self.qubits[0] == self.qubits[1]:
                raise CircuitParseError("cx needs two distinct qubits")
        elif len(self.qubits) != 1:
            raise CircuitParseError(f"{self.name} takes one qubit")


@dataclass
class GateCircuit:
    n: int
    gates: list = field(default_factory=list)

    def add(self, name: str, *qubits: int) -> "GateCircuit":
        for q in qubits:
            if not 0 <= q < self.n:
                raise CircuitParseError(f"qubit {q} out of range for n={self.n}")
        self.gates.append(Gate(name, tuple(qubits)))
        return self

    def t_count(self) -> int:
        return sum(1 for g in self.gates if g.name in ("t", "tdg"))


@dataclass
class PbcProgram:
    """Ordered Pauli operators; rotations first in pipeline output, then measurements."""

    n: int
    ops: list = field(default_factory=list)

    def copy(self) -> "PbcProgram":
        return PbcProgram(self.n, list(self.ops))

    def rotations(self) -> list:
        return [op for op in self.ops if op.kind == ROTATION]

    def measurements(self) -> list:
        return [op for op in self.ops if op.kind == MEASUREMENT]


def _letter(n: int, q: int, letter: str) -> PauliWord:
    return PauliWord.from_letters(n, {q: letter})


def decompose_gate(gate: Gate, n: int) -> list:
    """Standard Pauli-rotation decompositions for the supported gate set."""
    name = gate.name
    if name == "measure":
        return [measurement(_letter(n, gate.qubits[0], "Z"))]
    if name == "cx":
        c, t = gate.qubits
        zc_xt = PauliWord.from_letters(n, {c: "Z", t: "X"})
        return [
            rotation(zc_xt, 2),
            rotation(_letter(n, t, "X"), 14),
            rotation(_letter(n, c, "Z"), 14),
        ]
    q = gate.qubits[0]
    if name == "h":
        z = _letter(n, q, "Z")
        x = _letter(n, q, "X")
        return [rotation(z, 2), rotation(x, 2), rotation(z, 2)]
    if name == "s":
        return [rotation(_letter(n, q, "Z"), 2)]
    if name == "sdg":
        return [rotation(_letter(n, q, "Z"), 14)]
    if name == "t":
        return [rotation(_letter(n, q, "Z"), 1)]
    if name == "tdg":
        return [rotation(_letter(n, q, "Z"), 15)]
    if name == "x":
        return [rotation(_letter(n, q, "X"), 4)]
    if name == "y":
        return [rotation(_letter(n, q, "Y"), 4)]
    if name == "z":
        return [rotation(_letter(n, q, "Z"), 4)]
    raise UnsupportedGateError(f"unsupported gate {name!r}")


def absorb_cliffords(program: PbcProgram) -> PbcProgram:
    """Push +/- pi/4 and pi/2 rotations rightward and drop them at the boundary.

    Right-to-left scan: each Clifford conjugates everything after it and is
    deleted; pi/2 rotations only flip signs of later anticommuting operators.
    Idempotent, and total on valid programs.
    """
    tail: list = []
    for op in reversed(program.ops):
        if op.kind == ROTATION and op.is_trivial():
            continue
        if op.is_clifford_quarter():
            tail = [conjugate_past(op, t) for t in tail]
        elif op.is_pauli_half():
            tail = [flip_past_pauli(op.word, t) for t in tail]
        else:
            tail.insert(0, op)
    return PbcProgram(program.n, tail)


def transpile(circuit: GateCircuit) -> PbcProgram:
    """Gate decomposition followed by Clifford absorption.

    Measurements must form the final layer; if the circuit has none, a
    Z measurement is appended on every qubit so absorption has a boundary.
    """
    seen_measure = False
    for g in circuit.gates:
        if g.name == "measure":
            seen_measure = True
        elif seen_measure:
            raise CircuitParseError("gates after measurement are not supported")
    ops: list = []
    for g in circuit.gates:
        ops.extend(decompose_gate(g, circuit.n))
    if not seen_measure:
        for q in range(circuit.n):
            ops.append(measurement(_letter(circuit.n, q, "Z")))
    return absorb_cliffords(PbcProgram(circuit.n, ops))


# --- native PBC text format ---------------------------------------------

def parse_pbc(text: str, n: int | None = None) -> PbcProgram:
    """One operator per line, `#` comments and blank lines ignored."""
    from .pauli import parse_op

    ops = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            op = parse_op(line)
        except PauliParseError as e:
            raise PauliParseError(f"line {lineno}: {e}") from None
        if n is None:
            n = op.n
        elif op.n != n:
            raise PauliParseError(f"line {lineno}: word length {op.n} != {n}")
        ops.append(op)
    if n is None:
        raise PauliParseError("empty program and no qubit count given")
    return PbcProgram(n, ops)


def format_pbc(program: PbcProgram) -> str:
    from .pauli import format_op

    lines = [f"# {program.n} qubits, {len(program.ops)} operators"]
    lines.extend(format_op(op) for op in program.ops)
    return "\n".join(lines) + "\n"


# --- OpenQASM 2.0 subset -------------------------------------------------

_QASM_GATE_RE = re.compile(
    r"^(h|s|sdg|t|tdg|x|y|z)\s+(\w+)\[(\d+)\]$")
_QASM_CX_RE = re.compile(
    r"^cx\s+(\w+)\[(\d+)\]\s*,\s*(\w+)\[(\d+)\]$")
_QASM_MEASURE_RE = re.compile(
    r"^measure\s+(\w+)\[(\d+)\]\s*->\s*\w+\[(\d+)\]$")
_QASM_QREG_RE = re.compile(r"^qreg\s+(\w+)\[(\d+)\]$")
_QASM_CREG_RE = re.compile(r"^creg\s+(\w+)\[(\d+)\]$")


def parse_qasm(text: str) -> GateCircuit:
    """Parse the supported OpenQASM 2.0 subset; anything else is rejected."""
    qreg_name = None
    circ: GateCircuit | None = None
    body = text.replace("\n", " ")
    statements = [s.strip() for s in body.split(";") if s.strip()]
    for stmt in statements:
        if stmt.startswith("OPENQASM") or stmt.startswith("include"):
            continue
        if stmt.startswith("//"):
            continue
        if stmt.startswith("if"):
            raise CircuitParseError("classically controlled gates are not supported")
        if stmt.startswith("barrier"):
            raise CircuitParseError("barrier is not supported")
        m = _QASM_QREG_RE.match(stmt)
        if m:
            if qreg_name is not None:
                raise CircuitParseError("only one qreg is supported")
            qreg_name = m.group(1)
            circ = GateCircuit(int(m.group(2)))
            continue
        if _QASM_CREG_RE.match(stmt):
            continue
        if circ is None:
            raise CircuitParseError(f"statement before qreg: {stmt!r}")
        m = _QASM_GATE_RE.match(stmt)
        if m:
            if m.group(2) != qreg_name:
                raise CircuitParseError(f"unknown register {m.group(2)!r}")
            circ.add(m.group(1), int(m.group(3)))
            continue
        m = _QASM_CX_RE.match(stmt)
        if m:
            if m.group(1) != qreg_name or m.group(3) != qreg_name:
                raise CircuitParseError("unknown register in cx")
            circ.add("cx", int(m.group(2)), int(m.group(4)))
            continue
        m = _QASM_MEASURE_RE.match(stmt)
        if m:
            if m.group(1) != qreg_name:
                raise CircuitParseError("unknown register in measure")
            circ.add("measure", int(m.group(2)))
            continue
        raise CircuitParseError(f"unsupported statement: {stmt!r}")
    if circ is None:
        raise CircuitParseError("no qreg declaration found")
    return circ
