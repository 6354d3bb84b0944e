"""Backward level sets on disk.

Level n of a store holds every canonical n-peg position that can be played
down to a single peg on one of the class's finishing holes.  Level 1 is
the seeds; level n+1 is generated from level n by reverse jumps (pick an
empty from/over pair in line with a peg, put two pegs down, take one up),
canonicalized and deduplicated.  A position with two or more pegs is then
solvable exactly when its canonical code appears in its peg-count level.

On disk a store is a directory <root>/<board>-<class>/ holding one
level_NN.pslv per level plus manifest.json with counts, checksums, and a
complete flag.  Level files are a 40-byte header followed by the codes as
ascending little-endian uint64, so they stream and binary-search well.

Expansion is chunked and can hash-partition children to spill files when
the in-flight arrays outgrow the memory budget; the result is identical
bytes either way, only the peak memory moves.  Runs are resumable: an
existing store is verified against its checksums and extended in place.

Class names follow the position classes.  On the hexagon the B and C
classes are mirror images and canonical codes mix them, so both names map
to the one B store.
"""

from __future__ import annotations

import hashlib
import json
import os
import shutil
import struct
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import parity
from ._bits import chunks, mincode_codes, mix64
from .boards import make_board

_MAGIC = b"PSLV"
_VERSION = 1
_HEADER = struct.Struct("<4sI16s4sIQ")


class StoreCorruptError(RuntimeError):
    """A level file or manifest does not match its checksums."""


class StoreTruncatedError(LookupError):
    """The store has no level for that many pegs and is not complete."""


def seeds(board, class_name):
    """Canonical one-peg codes that start a run for this class.

    Normally one seed per symmetry orbit of the class's finishing holes.
    On the cross-shaped boards class A gets the centre seed alone: the only
    jump into an edge finishing hole comes straight along the middle line,
    and reversing that last jump finishes on the centre instead, so every
    position of two or more pegs that can finish on an edge hole can
    already finish centrally.
    """
    pattern = parity.store_pattern(board, class_name)
    if class_name == "A" and board.board_id in ("english33", "french37"):
        return (1 << board.centre,)
    reps = {board.mincode(1 << i) for i in range(board.n_holes) if pattern >> i & 1}
    return tuple(sorted(reps))


def write_level(path, board_id, class_name, n, codes):
    """Write one level file atomically; codes must be sorted unique int64."""
    path = Path(path)
    tmp = path.with_suffix(".tmp")
    header = _HEADER.pack(
        _MAGIC,
        _VERSION,
        board_id.encode().ljust(16, b"\0"),
        class_name.encode().ljust(4, b"\0"),
        n,
        len(codes),
    )
    with open(tmp, "wb") as f:
        f.write(header)
        f.write(np.ascontiguousarray(codes, dtype=np.int64).astype("<u8").tobytes())
    os.replace(tmp, path)


def read_level(path):
    """Read one level file: (board_id, class_name, n, codes)."""
    with open(path, "rb") as f:
        raw = f.read(_HEADER.size)
        if len(raw) != _HEADER.size:
            raise StoreCorruptError(f"{path}: truncated header")
        magic, version, board_raw, class_raw, n, count = _HEADER.unpack(raw)
        if magic != _MAGIC or version != _VERSION:
            raise StoreCorruptError(f"{path}: bad magic or version")
        codes = np.fromfile(f, dtype="<u8", count=count)
    if len(codes) != count:
        raise StoreCorruptError(f"{path}: expected {count} codes, got {len(codes)}")
    return (
        board_raw.rstrip(b"\0").decode(),
        class_raw.rstrip(b"\0").decode(),
        n,
        codes.view(np.int64),
    )


def _sha256(path):
    h = hashlib.sha256()
    with open(path, "rb") as f:
        while True:
            block = f.read(1 << 20)
            if not block:
                break
            h.update(block)
    return h.hexdigest()


def _level_path(sdir, n):
    return sdir / f"level_{n:02d}.pslv"


class _Accumulator:
    """Collects child arrays, optionally spilling hash partitions to disk.

    Partitions are disjoint by construction, so the final result is the
    concatenation of per-partition uniques, sorted; flush timing cannot
    change it.
    """

    def __init__(self, partitions, budget, spill_dir):
        assert partitions >= 1 and partitions & (partitions - 1) == 0
        self.pbits = partitions.bit_length() - 1
        self.parts = [[] for _ in range(partitions)]
        self.runs = [0] * partitions
        self.pending = 0
        self.budget = budget
        self.spill_dir = Path(spill_dir)

    def add(self, kids):
        if self.pbits == 0:
            self.parts[0].append(kids)
        else:
            b = (mix64(kids) >> np.uint64(64 - self.pbits)).astype(np.int64)
            for k in range(len(self.parts)):
                sub = kids[b == k]
                if len(sub):
                    self.parts[k].append(sub)
        self.pending += kids.nbytes
        if self.pending > self.budget:
            self._flush()

    def _flush(self):
        self.spill_dir.mkdir(parents=True, exist_ok=True)
        for k, lst in enumerate(self.parts):
            if not lst:
                continue
            arr = np.unique(np.concatenate(lst)) if len(lst) > 1 else np.unique(lst[0])
            np.save(self.spill_dir / f"b{k:03d}-r{self.runs[k]:04d}.npy", arr)
            self.runs[k] += 1
            lst.clear()
        self.pending = 0

    def finish(self):
        pieces = []
        for k, lst in enumerate(self.parts):
            arrs = [
                np.load(self.spill_dir / f"b{k:03d}-r{i:04d}.npy")
                for i in range(self.runs[k])
            ]
            arrs.extend(lst)
            if arrs:
                pieces.append(np.unique(np.concatenate(arrs)) if len(arrs) > 1 else np.unique(arrs[0]))
        if self.spill_dir.exists():
            shutil.rmtree(self.spill_dir)
        if not pieces:
            return np.empty(0, dtype=np.int64)
        out = np.concatenate(pieces)
        out.sort()
        return out


def _expand_chunk(board, chunk):
    fot = board.jump_fot
    tbit = board.jump_t
    outs = []
    for j in range(board.n_jumps):
        sel = (chunk & fot[j]) == tbit[j]
        if sel.any():
            outs.append(chunk[sel] ^ fot[j])
    if not outs:
        return None
    return np.unique(mincode_codes(board, np.concatenate(outs)))


def expand(board, codes, *, partitions=1, memory_budget=1 << 30, chunk_size=1 << 20,
           threads=1, spill_dir=None):
    """All canonical parents of the given level, sorted unique."""
    acc = _Accumulator(partitions, memory_budget, spill_dir or Path("spill"))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for kids in pool.map(lambda c: _expand_chunk(board, c), chunks(codes, chunk_size)):
                if kids is not None:
                    acc.add(kids)
    else:
        for chunk in chunks(codes, chunk_size):
            kids = _expand_chunk(board, chunk)
            if kids is not None:
                acc.add(kids)
    return acc.finish()


def _write_manifest(sdir, manifest):
    tmp = sdir / "manifest.tmp"
    with open(tmp, "w") as f:
        json.dump(manifest, f, indent=1)
        f.write("\n")
    os.replace(tmp, sdir / "manifest.json")


def run(store_root, board_id, class_name, *, max_level=None, partitions=1,
        memory_budget=1 << 30, chunk_size=1 << 20, threads=1, progress=None):
    """Build or extend the level store; returns the manifest dict.

    Stops when a level expands to nothing (store complete) or when
    max_level is reached (store left resumable).  An existing store is
    checksum-verified before being extended; on mismatch the run refuses
    to continue rather than silently rebuild.
    """
    board = make_board(board_id)
    names = parity.store_class_names(board, class_name)
    sdir = Path(store_root) / f"{board_id}-{names[0]}"
    sdir.mkdir(parents=True, exist_ok=True)
    mpath = sdir / "manifest.json"

    if mpath.exists():
        with open(mpath) as f:
            manifest = json.load(f)
        if manifest["board"] != board_id or manifest["class"] != names[0]:
            raise StoreCorruptError(f"{sdir}: manifest is for a different store")
        for lv in manifest["levels"]:
            path = _level_path(sdir, lv["n"])
            if not path.exists() or _sha256(path) != lv["sha256"]:
                raise StoreCorruptError(f"{path}: checksum mismatch")
    else:
        seed_codes = np.array(seeds(board, class_name), dtype=np.int64)
        path = _level_path(sdir, 1)
        write_level(path, board_id, names[0], 1, seed_codes)
        manifest = {
            "version": _VERSION,
            "board": board_id,
            "class": names[0],
            "seed_holes": [
                [list(board.holes[int(c).bit_length() - 1])] for c in seed_codes
            ],
            "levels": [{"n": 1, "count": len(seed_codes), "sha256": _sha256(path)}],
            "complete": False,
        }
        _write_manifest(sdir, manifest)

    while not manifest["complete"]:
        last = manifest["levels"][-1]["n"]
        if max_level is not None and last >= max_level:
            break
        t0 = time.monotonic()
        _, _, n, codes = read_level(_level_path(sdir, last))
        assert n == last
        kids = expand(
            board,
            codes,
            partitions=partitions,
            memory_budget=memory_budget,
            chunk_size=chunk_size,
            threads=threads,
            spill_dir=sdir / f"spill_{last + 1:02d}",
        )
        if len(kids) == 0:
            manifest["complete"] = True
            _write_manifest(sdir, manifest)
            break
        path = _level_path(sdir, last + 1)
        write_level(path, board_id, names[0], last + 1, kids)
        manifest["levels"].append(
            {"n": last + 1, "count": len(kids), "sha256": _sha256(path)}
        )
        _write_manifest(sdir, manifest)
        if progress is not None:
            progress(last + 1, len(kids), time.monotonic() - t0)
    return manifest


class LevelStore:
    """Read side of a store: membership, solvability, winning jumps."""

    def __init__(self, store_root, board_id, class_name):
        self.board = make_board(board_id)
        names = parity.store_class_names(self.board, class_name)
        self.class_name = names[0]
        self.class_names = names
        self.dir = Path(store_root) / f"{board_id}-{names[0]}"
        mpath = self.dir / "manifest.json"
        if not mpath.exists():
            raise FileNotFoundError(f"no level store at {self.dir}")
        with open(mpath) as f:
            self.manifest = json.load(f)
        self.complete = self.manifest["complete"]
        self.max_level = self.manifest["levels"][-1]["n"]
        self.pattern = parity.store_pattern(self.board, class_name)
        self._cache = {}

    def level_sizes(self):
        return [(lv["n"], lv["count"]) for lv in self.manifest["levels"]]

    def codes(self, n):
        """Sorted canonical codes with n pegs; empty beyond a complete store."""
        if n in self._cache:
            return self._cache[n]
        if n < 1 or n > self.max_level:
            if n >= 1 and not self.complete:
                raise StoreTruncatedError(
                    f"{self.dir} stops at level {self.max_level}, wanted {n}"
                )
            return np.empty(0, dtype=np.int64)
        board_id, cname, m, codes = read_level(_level_path(self.dir, n))
        if (board_id, cname, m) != (self.board.board_id, self.class_name, n):
            raise StoreCorruptError(f"{_level_path(self.dir, n)}: header mismatch")
        self._cache[n] = codes
        return codes

    def drop_cache(self):
        self._cache.clear()

    def contains(self, pos):
        """Is the canonical form of pos stored?  (pos must not be empty.)"""
        n = pos.bit_count()
        level = self.codes(n)
        if len(level) == 0:
            return False
        code = self.board.mincode(pos)
        i = int(np.searchsorted(level, code))
        return i < len(level) and int(level[i]) == code

    def is_solvable(self, pos):
        """Can pos be played down to one peg on this class's finishing holes?

        One-peg positions are answered from the finishing pattern itself: a
        lone peg on a finishing hole is a finished game whether or not it
        is one of the run's seeds.
        """
        self.board._check(pos)
        n = pos.bit_count()
        if n == 0:
            return False
        if n == 1:
            return pos & self.pattern == pos
        return self.contains(pos)

    def winning_jumps(self, pos):
        """Legal jumps of pos whose child is still solvable."""
        out = []
        for jump in self.board.legal_jumps(pos):
            if self.is_solvable(self.board.apply_jump(pos, jump)):
                out.append(jump)
        return tuple(out)
