"""Board geometry, positions, jumps, and symmetry groups.

A position is a plain int used as a bit set: bit i set means a peg in hole
i.  Holes are numbered row-major, top to bottom then left to right, and the
bare int is the position's code everywhere: in level files, JSON, and test
fixtures.  Nothing here mutates; a Board is built once per process by
make_board() and shared.

english33 and french37 are the cross-shaped boards on the square lattice,
square36 is the full 6x6 grid, and hex37 is the side-4 hexagon on the
triangular lattice in axial (q, r) coordinates (r is the row, q runs along
it).  Square-lattice boards carry the 8-element dihedral group of the
square, the hexagon the 12-element one.  Mirrors are tagged with a family:
orthogonal means the axis runs along a jump direction, diagonal means it
runs between two of them.  The families are not interchangeable when
classifying position symmetry, so the tags are part of the contract.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

BOARD_IDS = ("english33", "french37", "square36", "hex37")

_HOLE_COUNTS = {"english33": 33, "french37": 37, "square36": 36, "hex37": 37}

_SQUARE_DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1))
_HEX_DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


class IllegalJumpError(ValueError):
    """A jump that is not playable in the given position."""


class GridParseError(ValueError):
    """ASCII text that does not describe a position on the board."""


@dataclass(frozen=True)
class SymmetryType:
    """Symmetry of a position: type number (1 = full symmetry) and
    stabilizer size.  Positions with no symmetry beyond the identity get
    None instead of a SymmetryType."""

    type_id: int
    order: int


def _cross_holes(extra=()):
    holes = [
        (x, y)
        for y in range(7)
        for x in range(7)
        if 2 <= x <= 4 or 2 <= y <= 4
    ]
    holes.extend(extra)
    holes.sort(key=lambda c: (c[1], c[0]))
    return holes


def _square_holes(size):
    return [(x, y) for y in range(size) for x in range(size)]


def _hexagon_holes(radius):
    return [
        (q, r)
        for r in range(-radius, radius + 1)
        for q in range(max(-radius, -radius - r), min(radius, radius - r) + 1)
    ]


def _square_maps(m):
    # Dihedral group of the square, identity first.  m is the largest
    # coordinate, so (x, y) -> (m - y, x) is the quarter turn.
    return (
        ("identity", lambda x, y: (x, y)),
        ("rotation:90", lambda x, y: (m - y, x)),
        ("rotation:180", lambda x, y: (m - x, m - y)),
        ("rotation:270", lambda x, y: (y, m - x)),
        ("mirror:orthogonal:h", lambda x, y: (x, m - y)),
        ("mirror:orthogonal:v", lambda x, y: (m - x, y)),
        ("mirror:diagonal:main", lambda x, y: (y, x)),
        ("mirror:diagonal:anti", lambda x, y: (m - y, m - x)),
    )


def _hex_maps():
    # Dihedral group of the hexagon in axial (q, r).  Mirrors whose axis
    # runs along a lattice direction negate-and-swap two cube axes
    # (orthogonal family, contains the horizontal mirror through the middle
    # row); plain swaps put the axis between lattice directions (diagonal
    # family, contains the vertical mirror).
    return (
        ("identity", lambda q, r: (q, r)),
        ("rotation:60", lambda q, r: (-r, q + r)),
        ("rotation:120", lambda q, r: (-q - r, q)),
        ("rotation:180", lambda q, r: (-q, -r)),
        ("rotation:240", lambda q, r: (r, -q - r)),
        ("rotation:300", lambda q, r: (q + r, -q)),
        ("mirror:orthogonal:h", lambda q, r: (q + r, -r)),
        ("mirror:orthogonal:ne", lambda q, r: (-r, -q)),
        ("mirror:orthogonal:nw", lambda q, r: (-q, q + r)),
        ("mirror:diagonal:v", lambda q, r: (-q - r, r)),
        ("mirror:diagonal:ne", lambda q, r: (r, q)),
        ("mirror:diagonal:nw", lambda q, r: (q, -q - r)),
    )


class Board:
    """Immutable board: holes, jumps, symmetry group, ASCII layout.

    Use make_board(board_id); do not construct directly in normal code.
    Positions are plain ints over this board's hole numbering.
    """

    def __init__(self, board_id):
        if board_id == "english33":
            holes = _cross_holes()
            maps, dirs, centre = _square_maps(6), _SQUARE_DIRS, (3, 3)
        elif board_id == "french37":
            holes = _cross_holes(((1, 1), (5, 1), (1, 5), (5, 5)))
            maps, dirs, centre = _square_maps(6), _SQUARE_DIRS, (3, 3)
        elif board_id == "square36":
            holes = _square_holes(6)
            maps, dirs, centre = _square_maps(5), _SQUARE_DIRS, None
        elif board_id == "hex37":
            holes = _hexagon_holes(3)
            maps, dirs, centre = _hex_maps(), _HEX_DIRS, (0, 0)
        else:
            raise ValueError(f"unknown board id: {board_id!r}")

        self.board_id = board_id
        self.hexagonal = board_id == "hex37"
        self.holes = tuple(holes)
        self.n_holes = len(holes)
        self.index = {c: i for i, c in enumerate(holes)}
        self.centre = None if centre is None else self.index[centre]
        self.full_mask = (1 << self.n_holes) - 1
        assert self.n_holes == _HOLE_COUNTS[board_id]
        assert len(self.index) == self.n_holes

        # Jumps in a fixed order: holes row-major, directions as listed.
        jumps = []
        for f, (x, y) in enumerate(self.holes):
            for dx, dy in dirs:
                over = self.index.get((x + dx, y + dy))
                to = self.index.get((x + 2 * dx, y + 2 * dy))
                if over is not None and to is not None:
                    jumps.append((f, over, to))
        self.jumps = tuple(jumps)
        self.n_jumps = len(jumps)
        self._jump_index = {j: k for k, j in enumerate(jumps)}
        self._fo_bits = tuple((1 << f) | (1 << o) for f, o, _ in jumps)
        self._fot_bits = tuple(fo | (1 << t) for fo, (_, _, t) in zip(self._fo_bits, jumps))

        # Symmetry group as hole permutations, identity first.
        self.group_kinds = tuple(kind for kind, _ in maps)
        perms = []
        for _, fn in maps:
            img = [self.index[fn(*c)] for c in self.holes]
            perms.append(tuple(img))
        self.group_perms = tuple(perms)
        self.group_order = len(perms)
        self._validate_group()

        # How each group element permutes the jump list; used to map
        # solutions between a position and its canonical form.
        jperm = []
        for p in self.group_perms:
            jperm.append(tuple(self._jump_index[(p[f], p[o], p[t])] for f, o, t in jumps))
        self.jump_perms = tuple(jperm)

        self._build_tables()

        # numpy views of the jump masks for vectorized sweeps.
        self.jump_fo = np.array(self._fo_bits, dtype=np.int64)
        self.jump_fot = np.array(self._fot_bits, dtype=np.int64)
        self.jump_t = np.array([1 << t for _, _, t in jumps], dtype=np.int64)

        # ASCII layout: one grid cell per hole.
        if self.hexagonal:
            self._rows, self._cols = 7, 13
            self._cells = tuple((r + 3, 2 * q + r + 6) for q, r in self.holes)
        else:
            m = max(x for x, _ in self.holes) + 1
            self._rows = self._cols = m
            self._cells = tuple((y, x) for x, y in self.holes)
        self._cell_index = {c: i for i, c in enumerate(self._cells)}
        assert len(self._cell_index) == self.n_holes

    def _validate_group(self):
        perms = self.group_perms
        assert perms[0] == tuple(range(self.n_holes))
        assert len(set(perms)) == self.group_order
        bag = set(perms)
        for a in perms:
            assert sorted(a) == list(range(self.n_holes))
            for b in perms:
                assert tuple(b[i] for i in a) in bag
        jumpset = set(self.jumps)
        for p in perms:
            assert {(p[f], p[o], p[t]) for f, o, t in self.jumps} == jumpset
        if self.centre is not None:
            assert all(p[self.centre] == self.centre for p in perms)

    def _build_tables(self):
        # Byte tables: transformed = OR over bytes b of table[g][b][byte b
        # of pos].  Kept both as numpy (vector sweeps) and nested lists
        # (scalar transforms without numpy overhead).
        nb = (self.n_holes + 7) // 8
        tables = np.zeros((self.group_order, nb, 256), dtype=np.int64)
        for g, perm in enumerate(self.group_perms):
            for b in range(nb):
                for v in range(256):
                    acc = 0
                    for j in range(8):
                        i = 8 * b + j
                        if v >> j & 1 and i < self.n_holes:
                            acc |= 1 << perm[i]
                    tables[g, b, v] = acc
        self.byte_tables = tables
        self._n_bytes = nb
        self._tables_py = [[list(map(int, row)) for row in tables[g]] for g in range(self.group_order)]

    def _check(self, pos):
        if not isinstance(pos, int):
            raise TypeError(f"position must be an int, got {type(pos).__name__}")
        if pos < 0 or pos > self.full_mask:
            raise ValueError(f"position {pos:#x} is out of range for {self.board_id}")

    # -- positions ---------------------------------------------------------

    def position_from_holes(self, coords):
        """Position with a peg at each coordinate in coords."""
        pos = 0
        for c in coords:
            i = self.index.get(tuple(c))
            if i is None:
                raise ValueError(f"no hole at {tuple(c)!r} on {self.board_id}")
            pos |= 1 << i
        return pos

    def holes_from_position(self, pos):
        """Coordinates of the pegs in pos, row-major."""
        self._check(pos)
        return tuple(self.holes[i] for i in range(self.n_holes) if pos >> i & 1)

    def complement(self, pos):
        """Pegs become holes and holes become pegs."""
        self._check(pos)
        return pos ^ self.full_mask

    # -- jumps -------------------------------------------------------------

    def legal_jumps(self, pos):
        """Jumps playable in pos, as (from, over, to) hole index triples."""
        self._check(pos)
        return tuple(
            self.jumps[k]
            for k, (fo, fot) in enumerate(zip(self._fo_bits, self._fot_bits))
            if pos & fot == fo
        )

    def apply_jump(self, pos, jump):
        """Play one jump; raises IllegalJumpError if it is not playable."""
        self._check(pos)
        k = self._jump_index.get(tuple(jump))
        if k is None:
            raise IllegalJumpError(f"{tuple(jump)!r} is not a jump on {self.board_id}")
        fo, fot = self._fo_bits[k], self._fot_bits[k]
        if pos & fot != fo:
            raise IllegalJumpError(f"jump {tuple(jump)!r} is blocked in this position")
        return pos ^ fot

    # -- symmetry ----------------------------------------------------------

    def transform(self, pos, g):
        """Image of pos under group element g (an index into group_perms)."""
        self._check(pos)
        t = self._tables_py[g]
        out = 0
        for b in range(self._n_bytes):
            out |= t[b][(pos >> (8 * b)) & 0xFF]
        return out

    def mincode(self, pos):
        """Canonical code: the smallest transform of pos."""
        self._check(pos)
        best = pos
        for g in range(1, self.group_order):
            t = self._tables_py[g]
            out = 0
            for b in range(self._n_bytes):
                out |= t[b][(pos >> (8 * b)) & 0xFF]
            if out < best:
                best = out
        return best

    def stabilizer(self, pos):
        """Indices of the group elements that fix pos."""
        self._check(pos)
        return tuple(g for g in range(self.group_order) if self.transform(pos, g) == pos)

    def symmetry_type(self, pos):
        """Classify the symmetry of pos; None when only the identity fixes it.

        Square-lattice types: 1 full group, 2 quarter-turn, 3 both diagonal
        mirrors, 4 both orthogonal mirrors, 5 half-turn only, 6 one diagonal
        mirror, 7 one orthogonal mirror.  Hexagon types: 1 full group,
        2 sixth-turn, 3 third-turn plus diagonal mirrors, 4 third-turn plus
        orthogonal mirrors, 5 half-turn plus one mirror of each family,
        6 third-turn only, 7 half-turn only, 8 one diagonal mirror, 9 one
        orthogonal mirror.
        """
        return self.classify_stabilizer(self.stabilizer(pos))

    def classify_stabilizer(self, elements):
        """SymmetryType for a stabilizer given as group element indices."""
        kinds = [self.group_kinds[g] for g in elements]
        order = len(kinds)
        if order == 1:
            return None
        diagonal = any(k.startswith("mirror:diagonal") for k in kinds)
        if not self.hexagonal:
            if order == 8:
                t = 1
            elif order == 4:
                if "rotation:90" in kinds:
                    t = 2
                else:
                    t = 3 if diagonal else 4
            else:
                if "rotation:180" in kinds:
                    t = 5
                else:
                    t = 6 if diagonal else 7
        else:
            if order == 12:
                t = 1
            elif order == 6:
                if "rotation:60" in kinds:
                    t = 2
                else:
                    t = 3 if diagonal else 4
            elif order == 4:
                t = 5
            elif order == 3:
                t = 6
            else:
                if "rotation:180" in kinds:
                    t = 7
                else:
                    t = 8 if diagonal else 9
        return SymmetryType(t, order)

    # -- ASCII -------------------------------------------------------------

    def render(self, pos):
        """Draw pos: 'o' peg, '.' empty hole, spaces elsewhere."""
        self._check(pos)
        grid = [[" "] * self._cols for _ in range(self._rows)]
        for i, (row, col) in enumerate(self._cells):
            grid[row][col] = "o" if pos >> i & 1 else "."
        return "\n".join("".join(row).rstrip() for row in grid)

    def parse(self, text):
        """Inverse of render; raises GridParseError on anything off-grid."""
        lines = text.splitlines()
        while lines and not lines[0].strip():
            lines.pop(0)
        while lines and not lines[-1].strip():
            lines.pop()
        if len(lines) != self._rows:
            raise GridParseError(
                f"expected {self._rows} rows for {self.board_id}, got {len(lines)}"
            )
        for r, line in enumerate(lines):
            for c, ch in enumerate(line):
                if ch == " ":
                    continue
                if ch not in ".o":
                    raise GridParseError(f"bad character {ch!r} at row {r}, column {c}")
                if (r, c) not in self._cell_index:
                    raise GridParseError(f"no hole at row {r}, column {c}")
        pos = 0
        for i, (row, col) in enumerate(self._cells):
            line = lines[row]
            ch = line[col] if col < len(line) else " "
            if ch == "o":
                pos |= 1 << i
            elif ch != ".":
                raise GridParseError(f"hole at row {row}, column {col} is missing")
        return pos

    # -- export ------------------------------------------------------------

    def descriptor(self):
        """JSON-ready description used by the HTTP service and the player."""
        return {
            "id": self.board_id,
            "n_holes": self.n_holes,
            "lattice": "hex" if self.hexagonal else "square",
            "holes": [list(c) for c in self.holes],
            "centre": self.centre,
            "jumps": [list(j) for j in self.jumps],
            "group": [
                {"kind": kind, "perm": list(perm)}
                for kind, perm in zip(self.group_kinds, self.group_perms)
            ],
            "display": {
                "rows": self._rows,
                "cols": self._cols,
                "cells": [list(c) for c in self._cells],
            },
        }

    def __repr__(self):
        return f"Board({self.board_id!r})"


@functools.lru_cache(maxsize=None)
def make_board(board_id):
    """The shared Board instance for board_id (one of BOARD_IDS)."""
    return Board(board_id)
