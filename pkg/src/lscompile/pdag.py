"""Dependency DAG over Pauli operators: the compiler IR.

Edges follow the last-writer rule: operator j depends on operator i when
some qubit is in both supports and no operator between them touches that
qubit.  In-degree-0 nodes form the executable frontier.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .pauli import PauliOp, format_op
from .transpiler import PbcProgram


class EmptyDagError(LookupError):
    """pop_executable on an empty dag."""


@dataclass
class PDagNode:
    id: int
    op: PauliOp
    index: int                 # original sequence position
    preds: set = field(default_factory=set)
    succs: set = field(default_factory=set)

    def is_measurement(self) -> bool:
        return self.op.is_measurement()


class PDag:
    def __init__(self, n: int):
        self.n = n
        self.nodes: dict[int, PDagNode] = {}
        self._indeg: dict[int, int] = {}
        self._frontier_heap: list = []   # (index, id), may hold stale entries

    def __len__(self) -> int:
        return len(self.nodes)

    def __bool__(self) -> bool:
        return bool(self.nodes)

    def add_node(self, node: PDagNode) -> None:
        self.nodes[node.id] = node
        self._indeg[node.id] = len(node.preds)
        if not node.preds:
            heapq.heappush(self._frontier_heap, (node.index, node.id))

    def frontier(self) -> list:
        """Executable node ids, lowest original index first."""
        ids = [nid for nid, d in self._indeg.items() if d == 0 and nid in self.nodes]
        ids.sort(key=lambda nid: self.nodes[nid].index)
        return ids

    def pop_executable(self) -> PDagNode:
        """Remove and return the frontier node with the lowest original index."""
        while self._frontier_heap:
            _, nid = heapq.heappop(self._frontier_heap)
            if nid in self.nodes and self._indeg[nid] == 0:
                return self._remove(nid)
        raise EmptyDagError("dag is empty")

    def pop_node(self, nid: int) -> PDagNode:
        """Remove a specific frontier node."""
        if nid not in self.nodes:
            raise EmptyDagError(f"node {nid} not present")
        if self._indeg[nid] != 0:
            raise ValueError(f"node {nid} is not executable")
        return self._remove(nid)

    def _remove(self, nid: int) -> PDagNode:
        node = self.nodes.pop(nid)
        del self._indeg[nid]
        for s in node.succs:
            if s in self.nodes:
                self._indeg[s] -= 1
                if self._indeg[s] == 0:
                    heapq.heappush(self._frontier_heap, (self.nodes[s].index, s))
        return node

    def edges(self) -> list:
        return sorted((i, j) for i, n in self.nodes.items() for j in n.succs
                      if j in self.nodes)


def build_pdag(program: PbcProgram) -> PDag:
    """O(n * l) construction with a per-qubit last-writer pointer."""
    dag = PDag(program.n)
    last_writer: dict[int, int] = {}
    nodes = []
    for idx, op in enumerate(program.ops):
        node = PDagNode(id=idx, op=op, index=idx)
        for q in op.word.support():
            if q in last_writer:
                p = last_writer[q]
                if p != idx:
                    node.preds.add(p)
                    nodes[p].succs.add(idx)
            last_writer[q] = idx
        nodes.append(node)
    for node in nodes:
        dag.add_node(node)
    return dag


def rotation_demand(dag: PDag) -> dict:
    """Per-qubit count of letter changes along that qubit's access sequence.

    Consecutive operators touching a qubit with different letters force a
    boundary-type change; Y counts as its own combined-access state, so
    entering and leaving it each cost one.
    """
    per_qubit: dict[int, list] = {}
    for node in sorted(dag.nodes.values(), key=lambda nd: nd.index):
        w = node.op.word
        for q in w.support():
            per_qubit.setdefault(q, []).append(w.letter(q))
    demand = {q: 0 for q in range(dag.n)}
    for q, seq in per_qubit.items():
        demand[q] = sum(1 for a, b in zip(seq, seq[1:]) if a != b)
    return demand


def to_dot(dag: PDag) -> str:
    """DOT export for debugging."""
    lines = ["digraph pdag {", "  rankdir=TB;"]
    for nid in sorted(dag.nodes):
        node = dag.nodes[nid]
        shape = "box" if node.is_measurement() else "ellipse"
        label = f"{node.index}: {format_op(node.op)}"
        lines.append(f'  n{nid} [label="{label}", shape={shape}];')
    for i, j in dag.edges():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
