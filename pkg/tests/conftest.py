"""Shared fixtures: boards, seeded RNGs, and session-scoped level stores.

Level stores are expensive to build, so they live under one session root.
Point PEGKIT_TEST_STORE at a persistent directory to keep them across
pytest runs; complete stores found there are reused as-is.
"""

import os
from pathlib import Path

import pytest

from pegkit import BOARD_IDS, LevelStore, make_board, run

STORE_ENV = "PEGKIT_TEST_STORE"


@pytest.fixture(scope="session")
def store_root(tmp_path_factory):
    root = os.environ.get(STORE_ENV)
    if root:
        Path(root).mkdir(parents=True, exist_ok=True)
        return Path(root)
    return tmp_path_factory.mktemp("stores")


def ensure_store(root, board_id, class_name, **kwargs):
    """Open a complete store, building it first if needed."""
    try:
        store = LevelStore(root, board_id, class_name)
        if store.complete:
            return store
    except FileNotFoundError:
        pass
    kwargs.setdefault("partitions", 8)
    kwargs.setdefault("threads", min(4, os.cpu_count() or 1))
    run(root, board_id, class_name, **kwargs)
    return LevelStore(root, board_id, class_name)


@pytest.fixture(scope="session")
def english_a(store_root):
    return ensure_store(store_root, "english33", "A")


@pytest.fixture(scope="session")
def english_b(store_root):
    return ensure_store(store_root, "english33", "B")


@pytest.fixture(scope="session")
def english_c(store_root):
    return ensure_store(store_root, "english33", "C")


@pytest.fixture(scope="session")
def square_a(store_root):
    return ensure_store(store_root, "square36", "A")


@pytest.fixture(scope="session")
def french_a(store_root):
    return ensure_store(store_root, "french37", "A")


@pytest.fixture(params=BOARD_IDS)
def board(request):
    return make_board(request.param)


def random_position(rng, board, n_pegs):
    """Uniformly random position with n_pegs pegs."""
    idx = rng.sample(range(board.n_holes), n_pegs)
    pos = 0
    for i in idx:
        pos |= 1 << i
    return pos
