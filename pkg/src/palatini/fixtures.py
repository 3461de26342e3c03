"""Named webs used by the tests, the demos and the command line."""

from __future__ import annotations

import random
from typing import Dict, List

from .algebra import QQ
from .skew import PAIRS, SkewConst, builtin_pencils
from .web import Web, random_web

# Integer webs found by rejection sampling (rng seed 7) with the generators
# supported on the 2-forms of a fixed P^3 (alpha 2.1) or P^4 (alpha 2.4),
# so that every member is degenerate.
ALPHA21_CONSTRUCTED: List[Dict] = [
    {(0, 1): -1, (0, 2): -2, (0, 3): 0, (1, 2): 2, (1, 3): -3, (2, 3): -3},
    {(0, 1): 3, (0, 2): 1, (0, 3): -3, (1, 2): -1, (1, 3): 1, (2, 3): -3},
    {(0, 1): 1, (0, 2): -2, (0, 3): -3, (1, 2): -3, (1, 3): 0, (2, 3): 0},
    {(0, 1): -3, (0, 2): -2, (0, 3): -3, (1, 2): 1, (1, 3): 0, (2, 3): -3},
]
ALPHA24_CONSTRUCTED: List[Dict] = [
    {(0, 1): 3, (0, 2): 1, (0, 3): -3, (0, 4): -2, (1, 2): 2, (1, 3): 2, (1, 4): 1, (2, 3): -3, (2, 4): 1, (3, 4): 1},
    {(0, 1): 0, (0, 2): -3, (0, 3): -2, (0, 4): -3, (1, 2): 1, (1, 3): 3, (1, 4): -2, (2, 3): -1, (2, 4): 0, (3, 4): -2},
    {(0, 1): 1, (0, 2): -3, (0, 3): 1, (0, 4): -1, (1, 2): 1, (1, 3): 3, (1, 4): 2, (2, 3): -2, (2, 4): -3, (3, 4): 1},
    {(0, 1): 1, (0, 2): 2, (0, 3): -2, (0, 4): -1, (1, 2): -3, (1, 3): 1, (1, 4): 2, (2, 3): -3, (2, 4): 1, (3, 4): -3},
]

FIXTURE_NAMES = (
    "t1",
    "t4",
    "alpha1-canonical",
    "es2i",
    "es2ii",
    "three-planes-dependent",
    "three-planes-independent",
    "elliptic-cone",
    "alpha21-constructed",
    "alpha24-constructed",
    "random",
)

# seeds of the random webs the acceptance checks run on
RANDOM_SEEDS = (0, 1, 2)


def _from_entries(entries: Dict) -> SkewConst:
    return SkewConst(tuple(QQ(entries.get(ij, 0)) for ij in PAIRS))


def constructed_web(rows: List[Dict]) -> Web:
    return Web(*(_from_entries(r) for r in rows))


def truly_zero_web() -> Web:
    """Independent web whose 4x4 minors all vanish, so its centres fill P^5.

    The first three generators are the 2-forms on span(e0, e1, e2); at every
    x their rows of F are linearly dependent, so F never reaches rank 4.
    """
    unit = [{(0, 1): 1}, {(0, 2): 1}, {(1, 2): 1}, {(3, 4): 1}]
    return constructed_web(unit)


def fixture(name: str, seed: int = 0) -> Web:
    """The web with the given catalogue name; ``seed`` only affects 'random'."""
    if name == "random":
        return random_web(random.Random(seed))
    if name == "alpha21-constructed":
        return constructed_web(ALPHA21_CONSTRUCTED)
    if name == "alpha24-constructed":
        return constructed_web(ALPHA24_CONSTRUCTED)
    pencils = builtin_pencils()
    if name not in pencils:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    return Web.from_pencil(pencils[name])


def catalogue(seed: int = 0) -> Dict[str, Web]:
    return {name: fixture(name, seed) for name in FIXTURE_NAMES}


__all__ = [
    "FIXTURE_NAMES",
    "RANDOM_SEEDS",
    "ALPHA21_CONSTRUCTED",
    "ALPHA24_CONSTRUCTED",
    "constructed_web",
    "truly_zero_web",
    "fixture",
    "catalogue",
]
