"""Surface-code tile board: typed patch edges, patch operations, bus routing.

Tiles form an N x M grid.  Each data patch occupies one tile in steady
state and carries an orientation: "h" puts Z-edges on E/W and X-edges on
N/S, "v" the opposite.  The ancilla patch sits at a fixed tile with the
same orientation rule.  A designated routing tile acts as the magic-state
port.  Connectivity is judged strictly: the board is connected when one
single routing component touches an exposed edge of every data patch and
both typed edges of the ancilla.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

ORIENT_H = "h"   # Z on E/W, X on N/S
ORIENT_V = "v"   # Z on N/S, X on E/W

# fixed scan order for neighbors and rotation helpers
_DIRS = (("N", (-1, 0)), ("E", (0, 1)), ("S", (1, 0)), ("W", (0, -1)))

OP_COSTS = {"init": 0, "expand": 1, "shrink": 0, "move": 1, "rotate": 3,
            "measure": 1}


class IllegalOpError(ValueError):
    """Patch operation precondition violated."""


class NoPathError(RuntimeError):
    """A required edge is unexposed or unreachable through routing space."""


class LayoutParseError(ValueError):
    """Malformed layout text."""


def edge_type(orient: str, direction: str) -> str:
    if orient == ORIENT_H:
        return "Z" if direction in ("E", "W") else "X"
    return "Z" if direction in ("N", "S") else "X"


@dataclass
class Patch:
    qubit: int                  # -1 for the ancilla patch
    tiles: tuple                # singleton except mid-deformation
    orient: str

    @property
    def tile(self):
        return self.tiles[0]


class Board:
    def __init__(self, rows: int, cols: int):
        if rows < 1 or cols < 1:
            raise ValueError("board dimensions must be positive")
        self.rows = rows
        self.cols = cols
        self.patches: dict[int, Patch] = {}
        self.ancilla: Patch | None = None
        self.port: tuple | None = None
        self._occ: dict[tuple, int] = {}   # tile -> qubit id (-1 = ancilla)

    # --- basic geometry ---------------------------------------------------

    def in_bounds(self, tile) -> bool:
        r, c = tile
        return 0 <= r < self.rows and 0 <= c < self.cols

    def occupant(self, tile):
        return self._occ.get(tile)

    def is_routing(self, tile) -> bool:
        """Empty in-bounds tile; the magic port stays routing."""
        return self.in_bounds(tile) and tile not in self._occ

    def neighbors(self, tile):
        r, c = tile
        for _, (dr, dc) in _DIRS:
            t = (r + dr, c + dc)
            if self.in_bounds(t):
                yield t

    def tile_count(self) -> int:
        return self.rows * self.cols

    def copy(self) -> "Board":
        b = Board(self.rows, self.cols)
        b.patches = {q: Patch(p.qubit, p.tiles, p.orient)
                     for q, p in self.patches.items()}
        if self.ancilla is not None:
            b.ancilla = Patch(-1, self.ancilla.tiles, self.ancilla.orient)
        b.port = self.port
        b._occ = dict(self._occ)
        return b

    def key(self):
        """Canonical hashable snapshot of the mutable state."""
        return (tuple(sorted((q, p.tiles, p.orient)
                             for q, p in self.patches.items())),
                (self.ancilla.tiles, self.ancilla.orient)
                if self.ancilla else None)

    # --- placement --------------------------------------------------------

    def _claim(self, tile, qid):
        if not self.in_bounds(tile):
            raise IllegalOpError(f"tile {tile} out of bounds")
        if tile in self._occ:
            raise IllegalOpError(f"tile {tile} already occupied")
        if tile == self.port:
            raise IllegalOpError("magic port tile must stay routing")
        self._occ[tile] = qid

    def init_patch(self, qid: int, tile, orient: str, state: str = "|0>") -> None:
        """Create a fresh patch; zero clock cost."""
        if qid in self.patches:
            raise IllegalOpError(f"patch {qid} already exists")
        if orient not in (ORIENT_H, ORIENT_V):
            raise IllegalOpError(f"bad orientation {orient!r}")
        if state not in ("|0>", "|+>"):
            raise IllegalOpError(f"bad init state {state!r}")
        self._claim(tile, qid)
        self.patches[qid] = Patch(qid, (tile,), orient)

    def place_ancilla(self, tile, orient: str) -> None:
        if self.ancilla is not None:
            raise IllegalOpError("ancilla already placed")
        self._claim(tile, -1)
        self.ancilla = Patch(-1, (tile,), orient)

    def set_port(self, tile) -> None:
        if not self.is_routing(tile):
            raise IllegalOpError(f"port tile {tile} must be routing")
        self.port = tile

    def remove_patch(self, qid: int) -> None:
        p = self.patches.pop(qid)
        for t in p.tiles:
            del self._occ[t]

    # --- patch operations -------------------------------------------------

    def expand_patch(self, qid: int, new_tiles) -> frozenset:
        """Grow a patch into adjacent empty routing tiles; cost 1."""
        p = self.patches[qid]
        new_tiles = tuple(new_tiles)
        if not new_tiles:
            raise IllegalOpError("expand needs at least one tile")
        grown = set(p.tiles)
        pending = list(new_tiles)
        # each new tile must attach to the (growing) patch
        while pending:
            for i, t in enumerate(pending):
                if not self.is_routing(t):
                    raise IllegalOpError(f"expand target {t} not free routing")
                if any(nb in grown for nb in self.neighbors(t)):
                    grown.add(t)
                    pending.pop(i)
                    break
            else:
                raise IllegalOpError("expand tiles not contiguous with patch")
        for t in new_tiles:
            self._claim(t, qid)
        self.patches[qid] = Patch(qid, p.tiles + new_tiles, p.orient)
        return frozenset(grown)

    def shrink_patch(self, qid: int, keep) -> frozenset:
        """Retract a patch to one of its tiles; cost 0."""
        p = self.patches[qid]
        if keep not in p.tiles:
            raise IllegalOpError(f"keep tile {keep} not part of patch {qid}")
        footprint = frozenset(p.tiles)
        for t in p.tiles:
            if t != keep:
                del self._occ[t]
        self.patches[qid] = Patch(qid, (keep,), p.orient)
        return footprint

    def move_patch(self, qid: int, dest) -> frozenset:
        """Expand-and-shrink composite along a free corridor; cost 1.

        Returns the swept tile set (source, corridor, destination).
        """
        p = self.patches[qid]
        if len(p.tiles) != 1:
            raise IllegalOpError("move requires a single-tile patch")
        src = p.tile
        if dest == self.port:
            raise IllegalOpError("magic port tile must stay routing")
        if not self.is_routing(dest):
            raise IllegalOpError(f"move destination {dest} not free routing")
        path = self._corridor(src, dest)
        if path is None:
            raise IllegalOpError(f"no free corridor from {src} to {dest}")
        del self._occ[src]
        self._occ[dest] = qid
        self.patches[qid] = Patch(qid, (dest,), p.orient)
        return frozenset([src] + path)

    def _corridor(self, src, dest):
        """Shortest routing path from src to dest (src excluded), or None."""
        if dest in self.neighbors(src):
            return [dest]
        prev = {src: None}
        queue = deque([src])
        while queue:
            cur = queue.popleft()
            for nb in self.neighbors(cur):
                if nb in prev or not self.is_routing(nb):
                    continue
                prev[nb] = cur
                if nb == dest:
                    path = [nb]
                    while prev[path[-1]] != src:
                        path.append(prev[path[-1]])
                    return list(reversed(path))
                queue.append(nb)
        return None

    def rotation_helper(self, qid: int):
        """First free routing neighbor in N,E,S,W order, or None."""
        p = self.patches[qid]
        if len(p.tiles) != 1:
            return None
        r, c = p.tile
        for _, (dr, dc) in _DIRS:
            t = (r + dr, c + dc)
            if self.is_routing(t):
                return t
        return None

    def rotate_patch(self, qid: int, helper=None) -> frozenset:
        """Swap the patch's X/Z boundary labels; cost 3 (three sub-slices).

        Needs one adjacent free routing tile which is occupied for the
        whole operation.  Returns the footprint {patch tile, helper tile}.
        """
        p = self.patches[qid]
        if len(p.tiles) != 1:
            raise IllegalOpError("rotate requires a single-tile patch")
        if helper is None:
            helper = self.rotation_helper(qid)
            if helper is None:
                raise IllegalOpError(f"no free routing tile adjacent to patch {qid}")
        else:
            if helper not in self.neighbors(p.tile) or not self.is_routing(helper):
                raise IllegalOpError(f"helper tile {helper} not free routing neighbor")
        flipped = ORIENT_V if p.orient == ORIENT_H else ORIENT_H
        self.patches[qid] = Patch(qid, p.tiles, flipped)
        return frozenset([p.tile, helper])

    # --- edges and exposure -----------------------------------------------

    def _boundary(self, patch: Patch):
        """Yield (tile, direction, edge type, outside tile) for real boundaries."""
        tiles = set(patch.tiles)
        for (r, c) in patch.tiles:
            for d, (dr, dc) in _DIRS:
                out = (r + dr, c + dc)
                if out in tiles:
                    continue
                yield (r, c), d, edge_type(patch.orient, d), out

    def touch_tiles(self, qid: int, typ: str) -> list:
        """Routing tiles adjacent across boundaries of the given type."""
        p = self.patches[qid]
        out = sorted({out for _, _, t, out in self._boundary(p)
                      if t == typ and self.is_routing(out)})
        return out

    def all_touch_tiles(self, qid: int) -> list:
        p = self.patches[qid]
        return sorted({out for _, _, _, out in self._boundary(p)
                       if self.is_routing(out)})

    def exposed_types(self, qid: int) -> set:
        p = self.patches[qid]
        return {t for _, _, t, out in self._boundary(p) if self.is_routing(out)}

    def exposure_edge_count(self, qid: int) -> int:
        """Boundary-edge incidences adjacent to routing (density term)."""
        p = self.patches[qid]
        return sum(1 for _, _, _, out in self._boundary(p) if self.is_routing(out))

    def ancilla_touch(self, typ: str) -> list:
        if self.ancilla is None:
            return []
        return sorted({out for _, _, t, out in self._boundary(self.ancilla)
                       if t == typ and self.is_routing(out)})

    # --- connectivity -----------------------------------------------------

    def routing_components(self) -> list:
        seen = set()
        comps = []
        for r in range(self.rows):
            for c in range(self.cols):
                t = (r, c)
                if t in seen or not self.is_routing(t):
                    continue
                comp = set()
                queue = deque([t])
                seen.add(t)
                while queue:
                    cur = queue.popleft()
                    comp.add(cur)
                    for nb in self.neighbors(cur):
                        if nb not in seen and self.is_routing(nb):
                            seen.add(nb)
                            queue.append(nb)
                comps.append(comp)
        return comps

    def a_component(self):
        """The single routing component realizing strict connectivity, or None.

        The component must touch the ancilla's X-edge and Z-edge and at
        least one exposed edge of every data patch.
        """
        if self.ancilla is None:
            return None
        ax = set(self.ancilla_touch("X"))
        az = set(self.ancilla_touch("Z"))
        if not ax or not az:
            return None
        for comp in self.routing_components():
            if not (comp & ax) or not (comp & az):
                continue
            if all(any(t in comp for t in self.all_touch_tiles(q))
                   for q in self.patches):
                return comp
        return None

    def check_connectivity(self) -> bool:
        return self.a_component() is not None


# --- bus routing ----------------------------------------------------------

def bus_patches(board: Board, required, include_port: bool = False) -> frozenset:
    """Connected routing-tile set touching every required (patch, edge type)
    boundary plus the ancilla's X and Z edges (and the magic port if asked).

    Built by sequential shortest-path search with already-selected tiles at
    zero cost, a standard Steiner-tree heuristic.  Deterministic.
    """
    terminals = []
    for qid, typ in required:
        opts = board.touch_tiles(qid, typ)
        if not opts:
            raise NoPathError(f"patch {qid} has no exposed {typ}-edge")
        terminals.append(opts)
    for typ in ("X", "Z"):
        opts = board.ancilla_touch(typ)
        if not opts:
            raise NoPathError(f"ancilla has no exposed {typ}-edge")
        terminals.append(opts)
    if include_port:
        if board.port is None:
            raise NoPathError("board has no magic port")
        if not board.is_routing(board.port):
            raise NoPathError("magic port tile is blocked")
        terminals.append([board.port])

    tree: set = set()
    comp = board.a_component()
    for opts in terminals:
        if tree & set(opts):
            continue
        if not tree:
            # seed inside the main routing component, else any option
            inside = [t for t in opts if comp is not None and t in comp]
            tree.add(min(inside) if inside else min(opts))
            continue
        dist, prev = _bfs_from(board, tree)
        best = None
        for t in sorted(opts):
            if t in dist and (best is None or dist[t] < dist[best]):
                best = t
        if best is None:
            raise NoPathError(f"no routing path to terminal options {opts}")
        cur = best
        while cur is not None and cur not in tree:
            tree.add(cur)
            cur = prev[cur]
    return frozenset(tree)


def _bfs_from(board: Board, sources):
    """BFS over routing tiles from a source set; deterministic parents."""
    dist = {}
    prev = {}
    queue = deque()
    for s in sorted(sources):
        dist[s] = 0
        prev[s] = None
        queue.append(s)
    while queue:
        cur = queue.popleft()
        for nb in board.neighbors(cur):
            if nb in dist or not board.is_routing(nb):
                continue
            dist[nb] = dist[cur] + 1
            prev[nb] = cur
            queue.append(nb)
    return dist, prev


# --- builtin layouts ------------------------------------------------------

def builtin_layout(style: str, n: int) -> Board:
    if n < 1:
        raise ValueError("need at least one qubit")
    if style == "compact":
        return _compact_layout(n)
    if style == "standard":
        return _standard_layout(n)
    if style == "sparse":
        return _sparse_layout(n)
    raise ValueError(f"unknown layout style {style!r}")


def _compact_layout(n: int) -> Board:
    """Two data rows of adjacent patch pairs with one routing row between.

    Pair p of qubits (2p, 2p+1) goes to the top row at column block 3*(p//2)
    when p is even, else to the bottom row at block 3*((p+1)//2); the
    ancilla sits at (2, 2) and the magic port at (2, 0).
    """
    cols = 3
    spots = []
    for q in range(n):
        p, off = divmod(q, 2)
        if p % 2 == 0:
            tile = (0, 3 * (p // 2) + off)
        else:
            tile = (2, 3 * ((p + 1) // 2) + off)
        spots.append(tile)
        cols = max(cols, tile[1] + 1)
    b = Board(3, cols)
    b.place_ancilla((2, 2), ORIENT_H)
    for q, tile in enumerate(spots):
        b.init_patch(q, tile, ORIENT_H)
    b.set_port((2, 0))
    return b


def _standard_layout(n: int) -> Board:
    """Routing border ring with packed data rows on odd rows."""
    k = 1
    while k * k < n:
        k += 1
    rows_of_data = (n + k - 1) // k
    h = 2 * rows_of_data + 1
    w = k + 2
    b = Board(h, w)
    b.place_ancilla((h - 1, 0), ORIENT_H)
    q = 0
    for i in range(rows_of_data):
        for j in range(k):
            if q >= n:
                break
            b.init_patch(q, (2 * i + 1, j + 1), ORIENT_H)
            q += 1
    b.set_port((h - 1, w - 1))
    return b


def _sparse_layout(n: int) -> Board:
    """Patches on every other tile so both edge types stay exposed."""
    k = 1
    while k * k < n:
        k += 1
    rows_of_data = (n + k - 1) // k
    # a single data row would leave the tile beside the ancilla stranded
    h = max(3, 2 * rows_of_data)
    w = 2 * k
    b = Board(h, w)
    b.place_ancilla((h - 1, w - 1), ORIENT_H)
    q = 0
    for i in range(rows_of_data):
        for j in range(k):
            if q >= n:
                break
            b.init_patch(q, (2 * i, 2 * j), ORIENT_H)
            q += 1
    b.set_port((h - 1, 0))
    return b


def irregular_demo() -> Board:
    """Hand-shaped six-qubit demo board used in the docs and golden tests."""
    b = Board(3, 5)
    b.place_ancilla((2, 3), ORIENT_V)
    b.init_patch(0, (0, 0), ORIENT_H)
    b.init_patch(1, (0, 1), ORIENT_V)
    b.init_patch(2, (0, 2), ORIENT_V)
    b.init_patch(5, (0, 3), ORIENT_V)
    b.init_patch(3, (2, 1), ORIENT_V)
    b.init_patch(4, (2, 2), ORIENT_V)
    b.set_port((2, 0))
    return b


# --- layout text format ---------------------------------------------------

def format_layout(board: Board) -> str:
    """Grid text: '.' routing, 'Q<n><o>' patch, 'A<o>' ancilla, 'M' port."""
    cells = [["." for _ in range(board.cols)] for _ in range(board.rows)]
    if board.port is not None:
        r, c = board.port
        cells[r][c] = "M"
    if board.ancilla is not None:
        for (r, c) in board.ancilla.tiles:
            cells[r][c] = f"A{board.ancilla.orient}"
    for q, p in sorted(board.patches.items()):
        for (r, c) in p.tiles:
            cells[r][c] = f"Q{q}{p.orient}"
    return "\n".join(" ".join(row) for row in cells) + "\n"


def parse_layout(text: str) -> Board:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise LayoutParseError("empty layout")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise LayoutParseError("ragged layout rows")
    b = Board(len(rows), width)
    port = None
    patch_tiles: dict[int, list] = {}
    patch_orient: dict[int, str] = {}
    anc_tiles, anc_orient = [], None
    for r, row in enumerate(rows):
        for c, tok in enumerate(row):
            if tok == ".":
                continue
            if tok == "M":
                if port is not None:
                    raise LayoutParseError("multiple port tiles")
                port = (r, c)
            elif tok.startswith("A"):
                if tok[1:] not in (ORIENT_H, ORIENT_V):
                    raise LayoutParseError(f"bad ancilla token {tok!r}")
                anc_tiles.append((r, c))
                anc_orient = tok[1:]
            elif tok.startswith("Q"):
                body = tok[1:]
                if len(body) < 2 or body[-1] not in (ORIENT_H, ORIENT_V):
                    raise LayoutParseError(f"bad patch token {tok!r}")
                try:
                    q = int(body[:-1])
                except ValueError:
                    raise LayoutParseError(f"bad patch token {tok!r}") from None
                patch_tiles.setdefault(q, []).append((r, c))
                if patch_orient.get(q, body[-1]) != body[-1]:
                    raise LayoutParseError(f"patch {q} has mixed orientations")
                patch_orient[q] = body[-1]
            else:
                raise LayoutParseError(f"unknown tile token {tok!r}")
    if anc_tiles:
        if len(anc_tiles) != 1:
            raise LayoutParseError("ancilla must occupy one tile")
        b.place_ancilla(anc_tiles[0], anc_orient)
    for q in sorted(patch_tiles):
        tiles = patch_tiles[q]
        if len(tiles) != 1:
            raise LayoutParseError(f"patch {q} must occupy one tile")
        b.init_patch(q, tiles[0], patch_orient[q])
    if port is not None:
        b.set_port(port)
    return b
