"""Removal of Y letters that a patch layout cannot serve directly.

A board access map says which Pauli letters each qubit's patch exposes.
When an operator carries a Y on a qubit without combined X/Z access, the
operator is rewritten: every Y index is split into one or two index
groups, each group g contributing a conjugating pair of Z^g quarter
rotations around a Y-free core.  Group choice looks for neighbors in the
dependency structure whose conjugators cancel, and a follow-up merge pass
collapses the cancellations.  The naive variant used as a baseline always
splits at the first Y index and skips the merge pass.
"""

from __future__ import annotations

from .pauli import (
    MEASUREMENT,
    PauliOp,
    PauliWord,
    PhasedPauli,
    ROTATION,
    commutes,
    flip_past_pauli,
    measurement,
    multiply,
    rotation,
)
from .pdag import PDag, build_pdag
from .transpiler import PbcProgram

Y_STRATEGIES = ("o3ls", "naive", "off")

_FULL_ACCESS = frozenset({"X", "Y", "Z"})


def _z_group_word(n: int, group) -> PauliWord:
    z = 0
    for q in group:
        z |= 1 << q
    return PauliWord(n, 0, z)


def _y_indices(op: PauliOp) -> tuple:
    w = op.word
    return tuple(q for q in w.support() if w.letter(q) == "Y")


def decompose_op(op: PauliOp, b1, b2=()) -> list:
    """Rewrite one Y-bearing operator as conjugator pairs around a core.

    Emitted order: Z^{b1} at -pi/4, Z^{b2} at -pi/4, core, Z^{b1} at
    +pi/4, Z^{b2} at +pi/4.  The core keeps the original word with Y
    turned into X on b1 and b2; its sign is fixed by conjugating the core
    word through the quarter rotations and checking it lands back on the
    original word.
    """
    n = op.word.n
    groups = [tuple(sorted(b1))]
    if b2:
        groups.append(tuple(sorted(b2)))
    ymask = 0
    for g in groups:
        for q in g:
            if op.word.letter(q) != "Y":
                raise ValueError(f"qubit {q} carries no Y letter")
            ymask |= 1 << q
    core_word = PauliWord(n, op.word.x, op.word.z & ~ymask)

    # conjugate the core by the rotation pairs, innermost group first;
    # each anticommuting quarter turn maps V to -i * Z^g * V
    img = PhasedPauli(core_word, 0)
    for g in reversed(groups):
        gw = _z_group_word(n, g)
        if commutes(gw, img.word):
            raise ValueError(f"group {g} must anticommute at its turn")
        img = multiply(PhasedPauli(gw, 3), img)
    if img.word != op.word or not img.is_hermitian():
        raise AssertionError("Y decomposition failed to reproduce the word")
    s = img.sign()

    if op.kind == ROTATION:
        core = rotation(core_word, (s * op.angle_num) % 16)
    else:
        core = measurement(core_word, s * op.sign)
    left = [rotation(_z_group_word(n, g), 14) for g in groups]
    right = [rotation(_z_group_word(n, g), 2) for g in groups]
    return left + [core] + right


def choose_bipartition(y_indices, node_id: int, program: PbcProgram,
                       dag: PDag, emitted_groups: dict):
    """Pick an odd/odd split of an even Y index set.

    Candidate groups come from dependency neighbors: predecessor pure-Z
    quarter rotations with odd support inside the Y set, groups already
    emitted for decomposed predecessors, and odd Y overlaps with
    successors.  The split maximizing the number of such neighbor matches
    wins; ties prefer the smaller then lexicographically first group.
    """
    yset = frozenset(y_indices)
    node = dag.nodes[node_id]
    n = program.n

    cands = set()
    for pid in node.preds:
        pop = program.ops[pid]
        if pop.is_clifford_quarter() and pop.word.x == 0:
            supp = frozenset(pop.word.support())
            if supp and supp < yset and len(supp) % 2 == 1:
                cands.add(supp)
        for g in emitted_groups.get(pid, ()):
            gf = frozenset(g)
            if gf < yset and len(gf) % 2 == 1:
                cands.add(gf)
    for sid in node.succs:
        sw = program.ops[sid].word
        ov = frozenset(q for q in yset if sw.letter(q) == "Y")
        if ov and ov < yset and len(ov) % 2 == 1:
            cands.add(ov)
    cands.add(frozenset({min(yset)}))

    def group_score(g: frozenset) -> int:
        gw = _z_group_word(n, sorted(g))
        sc = 0
        for pid in node.preds:
            pop = program.ops[pid]
            if pop.is_clifford_quarter() and pop.word == gw:
                sc += 1
            if any(frozenset(eg) == g for eg in emitted_groups.get(pid, ())):
                sc += 1
        for sid in node.succs:
            sw = program.ops[sid].word
            sy = frozenset(q for q in sw.support() if sw.letter(q) == "Y")
            if g <= sy and (g == sy or len(sy - g) % 2 == 1):
                sc += 1
        return sc

    def rank(g: frozenset):
        return (-(group_score(g) + group_score(yset - g)),
                len(g), tuple(sorted(g)))

    best = min(cands, key=rank)
    return tuple(sorted(best)), tuple(sorted(yset - best))


def y_synthesize(program: PbcProgram, access=None, dag: PDag | None = None
                 ) -> PbcProgram:
    """Decompose Y-bearing operators blocked by the access map, then merge.

    An operator is rewritten when any of its Y qubits lacks Y access; all
    its Y indices are decomposed together.  Odd Y counts use one group,
    even counts an odd/odd bipartition chosen against the dependency
    neighborhood.  A merge pass afterwards cancels adjacent conjugators.
    """
    if dag is None:
        dag = build_pdag(program)
    out = []
    emitted: dict[int, list] = {}
    for idx, op in enumerate(program.ops):
        ys = _y_indices(op)
        if not ys or all("Y" in _lookup(access, q) for q in ys):
            out.append(op)
            continue
        if len(ys) % 2 == 1:
            b1, b2 = ys, ()
        else:
            b1, b2 = choose_bipartition(ys, idx, program, dag, emitted)
        emitted[idx] = [b1] + ([b2] if b2 else [])
        out.extend(decompose_op(op, b1, b2))
    return pauli_synthesis(PbcProgram(program.n, tuple(out)))


def naive_y_decompose(program: PbcProgram) -> PbcProgram:
    """Baseline rewrite: always decompose, fixed first-vs-rest split, no
    merge pass afterwards."""
    out = []
    for op in program.ops:
        ys = _y_indices(op)
        if not ys:
            out.append(op)
            continue
        if len(ys) % 2 == 1:
            b1, b2 = ys, ()
        else:
            b1, b2 = (ys[0],), tuple(ys[1:])
        out.extend(decompose_op(op, b1, b2))
    return PbcProgram(program.n, tuple(out))


def apply_y_strategy(program: PbcProgram, strategy: str, access=None
                     ) -> PbcProgram:
    if strategy == "o3ls":
        return y_synthesize(program, access)
    if strategy == "naive":
        return naive_y_decompose(program)
    if strategy == "off":
        return program
    raise ValueError(f"unknown Y strategy {strategy!r}")


def _lookup(access, q: int):
    if access is None:
        return _FULL_ACCESS
    return access.get(q, _FULL_ACCESS)


# --- merge / cancellation pass --------------------------------------------

def pauli_synthesis(program: PbcProgram) -> PbcProgram:
    """Merge same-word rotation pairs separated only by disjoint-support
    operators, to a fixpoint.

    Merged angles are taken mod 2*pi; a zero or pi result deletes the
    pair, a half-pi result is folded into later operators as a Pauli
    frame flip when a measurement still follows (otherwise the explicit
    rotation stays).  Measurements are never merge partners and block
    merges across overlapping support.
    """
    ops = [op for op in program.ops
           if not (op.kind == ROTATION and op.is_trivial())]
    changed = True
    while changed:
        ops, changed = _merge_once(ops)
        if changed:
            ops = [op for op in ops
                   if not (op.kind == ROTATION and op.is_trivial())]
    return PbcProgram(program.n, tuple(ops))


def _merge_once(ops):
    for i, a in enumerate(ops):
        if a.kind != ROTATION:
            continue
        for j in range(i + 1, len(ops)):
            b = ops[j]
            if b.kind == ROTATION and b.word == a.word:
                k = (a.angle_num + b.angle_num) % 16
                rest = ops[:i] + ops[i + 1:j] + ops[j + 1:]
                if k in (0, 8):
                    return rest, True
                if k in (4, 12) and any(t.kind == MEASUREMENT
                                        for t in rest[i:]):
                    tail = [flip_past_pauli(a.word, t) for t in rest[i:]]
                    return rest[:i] + tail, True
                merged = rotation(a.word, k)
                return ops[:i] + [merged] + ops[i + 1:j] + ops[j + 1:], True
            if a.word.overlaps(b.word):
                break
    return ops, False
