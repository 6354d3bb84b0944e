"""Position classes from the diagonal three-colorings.

Square-lattice boards get two labelings, (x + y) mod 3 (labels 0..2) and
(x - y) mod 3 (labels 3..5); the hexagon gets the single labeling
(q - r) mod 3.  A jump always removes one peg from each of two labels of a
labeling and adds one to the third, so the parity of any sum of two label
counts within a labeling never changes.  The class vector collects those
parities, (N1+N2, N0+N2, N0+N1, N4+N5, N3+N5, N3+N4) mod 2 on the square
lattice and the first three entries on the hexagon, and is therefore
invariant under play.

Vectors reachable from actual positions form 16 classes on the
square-lattice boards and 4 on the hexagon.  The named ones: EMPTY is the
all-zero vector (the empty board), A is the class that solitaire is
normally played in (the full board with one peg removed at a class-A hole),
B and C are the other classes containing one-peg positions.  The board's
symmetry group permutes one-peg classes, so on square-lattice boards B and
C each name a family of four sibling vectors and named_class reports the
family name; on the hexagon every reachable vector has its own name and B
and C are mirror images of each other.  Everything else is OTHER and
contains no one-peg positions at all.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .boards import make_board

_SQUARE_DEFS = {
    "A": (0, 1, 1, 0, 1, 1),
    "B": (1, 1, 0, 1, 1, 0),
    "C": (0, 1, 1, 1, 0, 1),
}


@dataclass(frozen=True)
class NamedClass:
    """A position's class: family name and the exact invariant vector."""

    name: str
    vector: tuple


class _Tables:
    def __init__(self, board_id):
        board = make_board(board_id)
        self.board = board

        # Bit mask per label; square-lattice holes carry one label from
        # each labeling, hexagon holes a single one.
        if board.hexagonal:
            per_hole = [((q - r) % 3,) for q, r in board.holes]
            n_labels = 3
        else:
            per_hole = [((x + y) % 3, 3 + (x - y) % 3) for x, y in board.holes]
            n_labels = 6
        masks = [0] * n_labels
        for i, labs in enumerate(per_hole):
            for k in labs:
                masks[k] |= 1 << i
        self.label_masks = tuple(masks)
        self.n_labels = n_labels

        # Each group element permutes the labels (it maps diagonals to
        # diagonals), which is also how it permutes class-vector entries.
        sigma = []
        for g in range(board.group_order):
            row = []
            for k in range(n_labels):
                img = board.transform(masks[k], g)
                row.append(masks.index(img))
            assert sorted(row) == list(range(n_labels))
            sigma.append(tuple(row))
        self.sigma = tuple(sigma)
        self.sigma_inv = tuple(
            tuple(row.index(j) for j in range(n_labels)) for row in sigma
        )

        one_peg = [self._vector(1 << i) for i in range(board.n_holes)]
        self.one_peg_vectors = tuple(one_peg)

        # Reachable vectors: the XOR closure of the one-peg vectors.
        reach = {(0,) * n_labels}
        frontier = list(reach)
        while frontier:
            v = frontier.pop()
            for w in one_peg:
                u = tuple(a ^ b for a, b in zip(v, w))
                if u not in reach:
                    reach.add(u)
                    frontier.append(u)
        self.reachable = frozenset(reach)
        assert len(reach) == (4 if board.hexagonal else 16)

        if board.hexagonal:
            a = self._vector(1 << board.centre)
            b = self._vector(1 << board.index[(1, 0)])
            (c,) = {v for v in one_peg} - {a, b}
            fams = {"A": frozenset([a]), "B": frozenset([b]), "C": frozenset([c])}
        elif board_id == "square36":
            a = self._vector(board.position_from_holes([(2, 2), (3, 2), (2, 3), (3, 3)]))
            rest = {v for v in one_peg} - {a}
            orbits = []
            while rest:
                orb = self._orbit(next(iter(rest)))
                orbits.append(orb)
                rest -= orb
            assert len(orbits) == 2 and all(len(o) == 4 for o in orbits)
            fams = {"A": frozenset([a])}
            for orb in orbits:
                # One sibling's holes, not the whole family's: the family
                # pattern is group-invariant and says nothing about mirrors.
                v0 = min(orb)
                pattern = 0
                for i, v in enumerate(one_peg):
                    if v == v0:
                        pattern |= 1 << i
                kinds = [board.group_kinds[g] for g in board.stabilizer(pattern)]
                orth = any(k.startswith("mirror:orthogonal") for k in kinds)
                fams["B" if orth else "C"] = frozenset(orb)
            assert len(fams) == 3
        else:
            fams = {n: frozenset(self._orbit(v)) for n, v in _SQUARE_DEFS.items()}
            assert len(fams["A"]) == 1
        self.families = fams

        names = {(0,) * n_labels: "EMPTY"}
        for name, vecs in fams.items():
            for v in vecs:
                assert v not in names
                names[v] = name
        self.vector_names = names

        # One-peg classes are exactly the named non-EMPTY families.
        assert set(one_peg) == set(names) - {(0,) * n_labels}

    def _vector(self, pos):
        counts = [int.bit_count(pos & m) for m in self.label_masks]
        total036 = sum(counts[:3])
        v = [(total036 - c) & 1 for c in counts[:3]]
        if self.n_labels == 6:
            total3 = sum(counts[3:])
            v += [(total3 - c) & 1 for c in counts[3:]]
        return tuple(v)

    def _transform_vector(self, v, g):
        inv = self.sigma_inv[g]
        return tuple(v[inv[j]] for j in range(self.n_labels))

    def _orbit(self, v):
        return {self._transform_vector(v, g) for g in range(self.board.group_order)}


@functools.lru_cache(maxsize=None)
def _tables(board_id):
    return _Tables(board_id)


def label_masks(board):
    """Per-label hole masks, labels 0..5 (square lattice) or 0..2 (hexagon)."""
    return _tables(board.board_id).label_masks


def label_counts(board, pos):
    """Peg count per label."""
    board._check(pos)
    return tuple(int.bit_count(pos & m) for m in label_masks(board))


def class_vector(board, pos):
    """The play-invariant parity vector of pos."""
    board._check(pos)
    return _tables(board.board_id)._vector(pos)


def transform_vector(board, vector, g):
    """Class vector of the image of a position under group element g."""
    return _tables(board.board_id)._transform_vector(tuple(vector), g)


def named_class(board, pos):
    """Class of pos: one of A, B, C, EMPTY, OTHER plus the exact vector."""
    t = _tables(board.board_id)
    v = t._vector(pos)
    return NamedClass(t.vector_names.get(v, "OTHER"), v)


def class_families(board):
    """Mapping from class name to its set of sibling vectors."""
    return dict(_tables(board.board_id).families)


def reachable_vectors(board):
    """Every vector that some position on the board actually has."""
    return _tables(board.board_id).reachable


def finishing_holes(board, name):
    """Holes where a lone peg belongs to class `name`.

    These are the single-peg positions a game in that class can end in.
    EMPTY and OTHER contain no one-peg positions, so they are rejected.
    """
    t = _tables(board.board_id)
    fam = t.families.get(name)
    if fam is None:
        raise ValueError(f"class {name!r} has no finishing holes on {board.board_id}")
    return tuple(i for i, v in enumerate(t.one_peg_vectors) if v in fam)


def store_class_names(board, name):
    """Class names whose positions share one canonical level store.

    Canonical codes use the full symmetry group, and on the hexagon the
    mirror image of a B position is a C position, so those two classes
    always land in the same store.
    """
    if name not in ("A", "B", "C"):
        raise ValueError(f"no level store for class {name!r}")
    if board.hexagonal and name in ("B", "C"):
        return ("B", "C")
    return (name,)


def store_pattern(board, name):
    """Mask of every hole a store of class `name` may finish in."""
    mask = 0
    for n in store_class_names(board, name):
        for i in finishing_holes(board, n):
            mask |= 1 << i
    return mask
