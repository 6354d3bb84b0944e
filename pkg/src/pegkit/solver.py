"""Depth-first solvability oracle.

Plays forward from a position and reports whether it can be reduced to a
single peg on one of the target holes.  This is the slow-but-direct route:
it shares no code with the level-set machinery, so the two can be checked
against each other.

The hot loop is compiled with numba and memoizes through a fixed-size
open-addressing transposition table.  Table entries are exact (the full
code is stored, not a hash), collisions just evict, and only proven
results are ever stored, so a crowded table costs time, never correctness.
When the target holes are closed under the board's symmetry group the
search can canonicalize children, which collapses mirrored subtrees and is
the difference between minutes and hours on near-full boards.

Budgets count expanded nodes.  A search that runs out raises
SearchBudgetError rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from ._bits import mix64 as _mix64_array  # noqa: F401  (kept for parity with level code)

_PROBES = 32
_NO_BUDGET = 1 << 62

_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


class SearchBudgetError(RuntimeError):
    """The node budget ran out before the search proved anything."""


@dataclass(frozen=True)
class Solution:
    """A winning line: the jumps in play order and the last peg's hole."""

    jumps: tuple
    final_hole: int


@njit(cache=True)
def _mix(key):
    h = np.uint64(key)
    h ^= h >> np.uint64(30)
    h *= _M1
    h ^= h >> np.uint64(27)
    h *= _M2
    h ^= h >> np.uint64(31)
    return np.int64(h >> np.uint64(2))


@njit(cache=True)
def _tt_get(tt, key):
    mask = np.int64(tt.shape[0] - 1)
    idx = _mix(key) & mask
    for k in range(_PROBES):
        e = tt[(idx + k) & mask]
        if e == -1:
            return np.int64(-1)
        if (e >> 1) == key:
            return e & np.int64(1)
    return np.int64(-1)


@njit(cache=True)
def _tt_put(tt, key, val):
    mask = np.int64(tt.shape[0] - 1)
    idx = _mix(key) & mask
    for k in range(_PROBES):
        slot = (idx + k) & mask
        e = tt[slot]
        if e == -1 or (e >> 1) == key:
            tt[slot] = (key << 1) | val
            return
    tt[idx] = (key << 1) | val


@njit(cache=True)
def _mincode(pos, tables):
    ng, nb, _ = tables.shape
    best = pos
    for g in range(1, ng):
        acc = np.int64(0)
        for b in range(nb):
            acc |= tables[g, b, (pos >> np.int64(8 * b)) & np.int64(0xFF)]
        if acc < best:
            best = acc
    return best


@njit(cache=True)
def _search(root, root_pegs, fot, fo, pattern, tt, tables, canonical, budget):
    # 1 solvable, 0 proven unsolvable, 2 budget exhausted.
    m = fot.shape[0]
    spos = np.empty(root_pegs + 1, dtype=np.int64)
    sjmp = np.zeros(root_pegs + 1, dtype=np.int32)
    d = 0
    spos[0] = root
    nodes = budget
    while True:
        pos = spos[d]
        j = sjmp[d]
        while j < m and (pos & fot[j]) != fo[j]:
            j += 1
        if j == m:
            # Every child proven unsolvable: pos is too.
            _tt_put(tt, pos, np.int64(0))
            d -= 1
            if d < 0:
                return 0
            continue
        sjmp[d] = j + 1
        child = pos ^ fot[j]
        if canonical:
            child = _mincode(child, tables)
        if root_pegs - d - 1 == 1:
            if (child & pattern) == child:
                for k in range(d + 1):
                    _tt_put(tt, spos[k], np.int64(1))
                return 1
            continue
        v = _tt_get(tt, child)
        if v == 1:
            for k in range(d + 1):
                _tt_put(tt, spos[k], np.int64(1))
            return 1
        if v == 0:
            continue
        nodes -= 1
        if nodes < 0:
            return 2
        d += 1
        spos[d] = child
        sjmp[d] = 0


@njit(cache=True)
def _map_get(keys, vals, key):
    mask = np.int64(keys.shape[0] - 1)
    idx = _mix(key) & mask
    for k in range(_PROBES):
        slot = (idx + k) & mask
        e = keys[slot]
        if e == -1:
            return np.int64(-1)
        if e == key:
            return vals[slot]
    return np.int64(-1)


@njit(cache=True)
def _map_put(keys, vals, key, val):
    mask = np.int64(keys.shape[0] - 1)
    idx = _mix(key) & mask
    for k in range(_PROBES):
        slot = (idx + k) & mask
        e = keys[slot]
        if e == -1 or e == key:
            keys[slot] = key
            vals[slot] = val
            return
    keys[idx] = key
    vals[idx] = val


@njit(cache=True)
def _count(root, root_pegs, fot, fo, pattern, keys, vals, cap, budget):
    # Number of distinct winning jump sequences, saturated at cap;
    # -1 when the budget ran out.  Works on raw positions: canonicalizing
    # children would merge sequences that differ only by symmetry.
    m = fot.shape[0]
    spos = np.empty(root_pegs + 1, dtype=np.int64)
    sjmp = np.zeros(root_pegs + 1, dtype=np.int32)
    ssum = np.zeros(root_pegs + 1, dtype=np.int64)
    d = 0
    spos[0] = root
    nodes = budget
    while True:
        pos = spos[d]
        j = sjmp[d]
        while j < m and (pos & fot[j]) != fo[j]:
            j += 1
        if j == m:
            val = ssum[d]
            if val > cap:
                val = cap
            _map_put(keys, vals, pos, val)
            d -= 1
            if d < 0:
                return val
            ssum[d] += val
            if ssum[d] > cap:
                ssum[d] = cap
            continue
        sjmp[d] = j + 1
        child = pos ^ fot[j]
        if root_pegs - d - 1 == 1:
            if (child & pattern) == child:
                ssum[d] += 1
                if ssum[d] > cap:
                    ssum[d] = cap
            continue
        v = _map_get(keys, vals, child)
        if v >= 0:
            ssum[d] += v
            if ssum[d] > cap:
                ssum[d] = cap
            continue
        nodes -= 1
        if nodes < 0:
            return -1
        d += 1
        spos[d] = child
        sjmp[d] = 0
        ssum[d] = 0


class Solver:
    """Search oracle for one board and one set of target holes.

    target_holes is an iterable of hole indices the last peg may sit on;
    None means any hole.  The transposition table persists across queries,
    so keep one Solver around when asking many questions about the same
    target set.
    """

    def __init__(self, board, target_holes=None, tt_bits=22, canonical=None):
        self.board = board
        if target_holes is None:
            pattern = board.full_mask
        else:
            pattern = 0
            for h in target_holes:
                if not 0 <= h < board.n_holes:
                    raise ValueError(f"hole index {h} out of range")
                pattern |= 1 << h
        if pattern == 0:
            raise ValueError("target_holes must not be empty")
        self.pattern = pattern
        invariant = all(
            board.transform(pattern, g) == pattern for g in range(board.group_order)
        )
        if canonical is None:
            canonical = invariant
        elif canonical and not invariant:
            raise ValueError("canonical search needs symmetry-closed target holes")
        self.canonical = canonical
        self._tt = np.full(1 << tt_bits, -1, dtype=np.int64)
        self._memo_keys = None
        self._memo_vals = None

    def _run(self, pos, budget):
        pegs = pos.bit_count()
        if pegs == 0:
            return 0
        if pegs == 1:
            return 1 if pos & self.pattern == pos else 0
        root = self.board.mincode(pos) if self.canonical else pos
        return _search(
            np.int64(root),
            pegs,
            self.board.jump_fot,
            self.board.jump_fo,
            np.int64(self.pattern),
            self._tt,
            self.board.byte_tables,
            self.canonical,
            np.int64(budget if budget is not None else _NO_BUDGET),
        )

    def is_solvable(self, pos, budget=None):
        """Can pos be reduced to one peg on a target hole?"""
        self.board._check(pos)
        r = self._run(pos, budget)
        if r == 2:
            raise SearchBudgetError(f"gave up after {budget} nodes")
        return bool(r)

    def winning_jumps(self, pos, budget=None):
        """The legal jumps that keep the game winnable."""
        out = []
        for jump in self.board.legal_jumps(pos):
            if self.is_solvable(self.board.apply_jump(pos, jump), budget):
                out.append(jump)
        return tuple(out)

    def solve(self, pos, budget=None):
        """A winning line for pos, or None if there is none.

        Walks the warm transposition table: at each step takes the first
        legal jump whose child is still solvable.
        """
        if not self.is_solvable(pos, budget):
            return None
        jumps = []
        cur = pos
        while cur.bit_count() > 1:
            for jump in self.board.legal_jumps(cur):
                child = self.board.apply_jump(cur, jump)
                if self.is_solvable(child, budget):
                    jumps.append(jump)
                    cur = child
                    break
            else:
                raise AssertionError("solvable position with no winning jump")
        return Solution(tuple(jumps), cur.bit_length() - 1)

    def count_solutions(self, pos, cap=1 << 60, budget=None):
        """Distinct winning jump sequences from pos, saturated at cap."""
        self.board._check(pos)
        pegs = pos.bit_count()
        if pegs == 0:
            return 0
        if pegs == 1:
            return 1 if pos & self.pattern == pos else 0
        if self._memo_keys is None:
            self._memo_keys = np.empty(1 << 21, dtype=np.int64)
            self._memo_vals = np.empty(1 << 21, dtype=np.int64)
        # Counts depend on the cap they were clamped with, so the memo
        # cannot be reused across calls.
        self._memo_keys.fill(-1)
        r = _count(
            np.int64(pos),
            pegs,
            self.board.jump_fot,
            self.board.jump_fo,
            np.int64(self.pattern),
            self._memo_keys,
            self._memo_vals,
            np.int64(cap),
            np.int64(budget if budget is not None else _NO_BUDGET),
        )
        if r < 0:
            raise SearchBudgetError(f"gave up after {budget} nodes")
        return int(r)
