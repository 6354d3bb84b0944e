"""Censuses, complement pairs, and puzzle catalogs over level stores.

Everything here reads finished (or truncated) stores and aggregates:
which solvable positions are symmetric and of what type and class, which
of them pair up with their own complements, and which have a unique
winning jump.  The symmetric-position sweep enumerates third-turn
symmetric hexagon positions directly with the search oracle instead of a
store, since those reach peg counts no store run covers.

Counts are over canonical positions throughout.  On the hexagon the B and
C classes are mirror images, so census rows merge C into B; square-lattice
boards never need the merge because named_class already reports families.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from . import parity
from ._bits import chunks, mincode_codes, stabilizer_bits
from .boards import make_board
from .solver import SearchBudgetError, Solver

_CLASS_ID_NAMES = ("EMPTY", "A", "B", "C", "OTHER")


class CensusRuleError(RuntimeError):
    """A census cell contradicts the class/symmetry compatibility rule."""


@functools.lru_cache(maxsize=None)
def _class_id_lut(board_id):
    # Indexed by the label-count parities, which is what the vectorized
    # path can compute directly; each combination maps to a class vector
    # (pairwise sums within each labeling) and then to a name.
    board = make_board(board_id)
    masks = parity.label_masks(board)
    nl = len(masks)
    names = {(0,) * nl: "EMPTY"}
    for name, vectors in parity.class_families(board).items():
        for v in vectors:
            names[v] = name
    lut = np.empty(1 << nl, dtype=np.int8)
    for pidx in range(1 << nl):
        p = [(pidx >> k) & 1 for k in range(nl)]
        s1 = p[0] ^ p[1] ^ p[2]
        v = [s1 ^ p[0], s1 ^ p[1], s1 ^ p[2]]
        if nl == 6:
            s2 = p[3] ^ p[4] ^ p[5]
            v += [s2 ^ p[3], s2 ^ p[4], s2 ^ p[5]]
        lut[pidx] = _CLASS_ID_NAMES.index(names.get(tuple(v), "OTHER"))
    return masks, lut


def class_ids(board, codes):
    """Class of each code as an index into ("EMPTY","A","B","C","OTHER")."""
    masks, lut = _class_id_lut(board.board_id)
    idx = np.zeros(len(codes), dtype=np.int64)
    for k, m in enumerate(masks):
        idx |= (np.bitwise_count((codes & m).astype(np.uint64)).astype(np.int64) & 1) << k
    return lut[idx]


@dataclass
class Census:
    """Symmetric solvable positions of one store, bucketed by type and class."""

    board_id: str
    class_name: str
    counts: dict = field(default_factory=dict)
    members: dict = field(default_factory=dict)
    total: int = 0
    excluded: int = 0


def _stab_type(board, cache, bits):
    st = cache.get(bits)
    if st is None:
        st = board.classify_stabilizer([g for g in range(board.group_order) if bits >> g & 1])
        cache[bits] = st
    return st


def _embedded_duplicates(board, codes, n, exclude):
    """Which codes, restricted to the smaller board's holes, it already solves."""
    small = exclude.board
    common = [(i, small.index[c]) for i, c in enumerate(board.holes) if c in small.index]
    extra = board.full_mask
    for i, _ in common:
        extra ^= 1 << i
    dup = np.zeros(len(codes), dtype=bool)
    sel = (codes & extra) == 0
    if not sel.any():
        return dup
    sub = codes[sel]
    mapped = np.zeros(len(sub), dtype=np.int64)
    for i, j in common:
        mapped |= ((sub >> i) & 1) << j
    if n == 1:
        hit = (mapped & ~np.int64(exclude.pattern)) == 0
    else:
        level = exclude.codes(n)
        if len(level) == 0:
            return dup
        mc = mincode_codes(small, mapped)
        at = np.searchsorted(level, mc)
        at[at == len(level)] = len(level) - 1
        hit = level[at] == mc
    dup[sel] = hit
    return dup


def symmetry_census(store, exclude=None):
    """Count canonical symmetric positions per (type, class) over all levels.

    exclude drops positions that fit inside another board's holes and are
    already solvable there (pass that board's store); they are tallied in
    .excluded instead.
    """
    board = store.board
    census = Census(board.board_id, store.class_name)
    cache = {}
    buckets = {}
    for n, _ in store.level_sizes():
        for chunk in chunks(store.codes(n), 1 << 21):
            stab = stabilizer_bits(board, chunk)
            sym = stab > 1
            codes_s = chunk[sym]
            if len(codes_s) == 0:
                continue
            if exclude is not None:
                dup = _embedded_duplicates(board, codes_s, n, exclude)
                census.excluded += int(dup.sum())
                codes_s = codes_s[~dup]
                stab_s = stab[sym][~dup]
            else:
                stab_s = stab[sym]
            cids = class_ids(board, codes_s)
            if board.hexagonal:
                cids[cids == 3] = 2  # mirror classes share a census row
            for bits in np.unique(stab_s):
                st = _stab_type(board, cache, int(bits))
                m = stab_s == bits
                for cid in np.unique(cids[m]):
                    key = (st.type_id, _CLASS_ID_NAMES[cid])
                    arr = codes_s[m & (cids == cid)]
                    census.counts[key] = census.counts.get(key, 0) + len(arr)
                    buckets.setdefault(key, []).append(arr)
        store.drop_cache()
    census.members = {k: np.concatenate(v) for k, v in buckets.items()}
    census.total = sum(census.counts.values())
    return census


def check_symmetric_class_rule(store, census, *, sample=40, budget=5_000_000, seed=0):
    """Verify census cells against the class/symmetry compatibility rule.

    A position's stabilizer must fix its class vector, so non-A classes
    can only show up with the symmetries that permute their family back to
    itself: one mirror family on the square lattice (B with an orthogonal
    mirror, C with a diagonal one), the label-preserving subgroup on the
    hexagon.  A sample of members is also re-proved solvable with the
    search oracle.  Raises CensusRuleError on any violation.
    """
    board = store.board
    if board.hexagonal:
        allowed = {(t, "B") for t in (4, 6, 9)} | {(t, "C") for t in (4, 6, 9)}
    else:
        allowed = {(6, "C"), (7, "B")}
    for key, count in census.counts.items():
        type_id, cname = key
        if cname in ("EMPTY", "OTHER"):
            raise CensusRuleError(f"{board.board_id}: unsolvable class {cname} in census")
        if cname != "A" and key not in allowed:
            raise CensusRuleError(
                f"{board.board_id}: class {cname} cannot have symmetry type {type_id} "
                f"({count} positions claim to)"
            )
    rng = np.random.default_rng(seed)
    small = [c for arr in census.members.values() for c in arr[:200] if int(c).bit_count() <= 10]
    if small:
        pick = rng.choice(len(small), size=min(sample, len(small)), replace=False)
        oracle = Solver(board, [i for i in range(board.n_holes) if store.pattern >> i & 1])
        for k in pick:
            pos = int(small[k])
            if not oracle.is_solvable(pos, budget=budget):
                raise CensusRuleError(
                    f"{board.board_id}: census member {pos:#x} is not actually solvable"
                )
    return True


def complement_pairs(store, census):
    """Count member/complement pairs inside each census cell.

    The complement of a symmetric solvable position has the same stabilizer,
    and when it is itself a symmetric solvable census member the two form a
    pair (a game can play from one down to the other's footprint).  Pairs
    are unordered; a position never pairs with itself because the peg
    counts differ.
    """
    board = store.board
    out = {}
    for key, arr in census.members.items():
        cell = np.sort(arr)
        comp = mincode_codes(board, np.int64(board.full_mask) ^ cell)
        at = np.searchsorted(cell, comp)
        at[at == len(cell)] = len(cell) - 1
        hit = cell[at] == comp
        paired = int(hit.sum())
        assert paired % 2 == 0
        out[key] = paired // 2
    return out


@dataclass(frozen=True)
class UniqueJumpRow:
    """Per peg count: the unique-winning-jump positions with the most jumps."""

    n_pegs: int
    n_jumps: int
    count: int
    exemplars: tuple


def unique_jump_census(store, *, max_exemplars=None):
    """Rows for every peg count that has unique-winning-jump puzzles.

    For each level, looks at canonical positions whose winning jump (one
    keeping the game solvable) is unique, takes the ones with the most
    legal jumps, and reports how many there are with the smallest codes as
    exemplars (all of them by default).

    A puzzle needs at least one dead end, so positions whose only legal
    jump is the winner do not qualify; levels under 4 pegs are skipped as
    below puzzle size.
    """
    board = store.board
    fot = board.jump_fot
    fo = board.jump_fo
    rows = []
    for n, _ in store.level_sizes():
        if n < 4:
            continue
        prev = store.codes(n - 1)
        best = -1
        count = 0
        exemplars = []
        for chunk in chunks(store.codes(n), 1 << 21):
            legal = np.zeros(len(chunk), dtype=np.int32)
            winning = np.zeros(len(chunk), dtype=np.int32)
            for j in range(board.n_jumps):
                sel = (chunk & fot[j]) == fo[j]
                if not sel.any():
                    continue
                legal[sel] += 1
                kids = chunk[sel] ^ fot[j]
                mc = mincode_codes(board, kids)
                at = np.searchsorted(prev, mc)
                at[at == len(prev)] = len(prev) - 1
                win = prev[at] == mc
                winning[sel] += win
            uniq = (winning == 1) & (legal >= 2)
            if not uniq.any():
                continue
            lc = legal[uniq]
            top = int(lc.max())
            if top > best:
                best, count, exemplars = top, 0, []
            if top == best:
                hits = chunk[uniq][lc == best]
                count += len(hits)
                if max_exemplars is not None:
                    hits = hits[: max(0, max_exemplars - len(exemplars))]
                exemplars.extend(int(c) for c in hits)
        store.drop_cache()
        if best >= 0:
            rows.append(UniqueJumpRow(n, best, count, tuple(exemplars)))
    return rows


def sweep_third_turn(board_id="hex37", *, tt_bits=24, budget=None, progress=None):
    """Census of solvable third-turn symmetric hexagon positions.

    Enumerates every position that is a union of whole 120-degree rotation
    orbits (12 three-hole orbits plus the centre), canonicalizes, classifies
    the survivors, and asks the search oracle which are solvable down to one
    peg anywhere.  Unsolvable classes are skipped without search: a class
    with no one-peg members cannot finish.  Returns {(type, class): count}
    over canonical positions, with the hexagon's mirror-class merge applied.
    """
    board = make_board(board_id)
    rot = board.group_kinds.index("rotation:120")
    perm = board.group_perms[rot]
    seen = set()
    orbit_masks = []
    for i in range(board.n_holes):
        if i in seen:
            continue
        orb = {i, perm[i], perm[perm[i]]}
        seen |= orb
        mask = 0
        for k in orb:
            mask |= 1 << k
        orbit_masks.append(mask)
    orbit_masks.sort()

    reps = {}
    for bits in range(1 << len(orbit_masks)):
        pos = 0
        for k, m in enumerate(orbit_masks):
            if bits >> k & 1:
                pos |= m
        reps.setdefault(board.mincode(pos), None)
    solver = Solver(board, None, tt_bits=tt_bits)
    counts = {}
    solvable = 0
    for i, pos in enumerate(sorted(reps)):
        if pos == 0:
            continue
        name = parity.named_class(board, pos).name
        if name in ("EMPTY", "OTHER"):
            continue
        if not solver.is_solvable(pos, budget=budget):
            continue
        solvable += 1
        st = board.symmetry_type(pos)
        cname = "B" if name == "C" else name
        key = (st.type_id if st else None, cname)
        counts[key] = counts.get(key, 0) + 1
        if progress is not None and (i + 1) % 500 == 0:
            progress(i + 1, len(reps), solvable)
    return counts


def export_puzzles(store, *, rows=None, max_per_level=None, count_budget=20_000_000):
    """Puzzle records from the unique-winning-jump exemplars of a store.

    unique_solution reports whether the winning jump sequence is unique;
    None means the count gave up at count_budget nodes, never a guess.
    """
    board = store.board
    if rows is None:
        rows = unique_jump_census(store)
    counter = Solver(
        board,
        [i for i in range(board.n_holes) if store.pattern >> i & 1],
        canonical=False,
    )
    puzzles = []
    for row in rows:
        for code in row.exemplars[:max_per_level]:
            wins = store.winning_jumps(code)
            assert len(wins) == 1
            try:
                unique = counter.count_solutions(code, cap=2, budget=count_budget) == 1
            except SearchBudgetError:
                unique = None
            st = board.symmetry_type(code)
            puzzles.append(
                {
                    "board": board.board_id,
                    "class": store.class_name,
                    "code": int(code),
                    "pegs": [i for i in range(board.n_holes) if code >> i & 1],
                    "n_pegs": row.n_pegs,
                    "n_jumps": row.n_jumps,
                    "n_winning_jumps": 1,
                    "hint": list(wins[0]),
                    "symmetry_type": st.type_id if st else None,
                    "unique_solution": unique,
                    "source": "unique-jump-census",
                }
            )
    return puzzles
