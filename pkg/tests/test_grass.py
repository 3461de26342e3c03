import json
import random

import pytest

from palatini.algebra import GF, QQ
from palatini.grass import (
    PluckerLine,
    ProportionalPointsError,
    complex_contains_line,
    complex_type,
    line_from_points,
    plucker_relations,
    singular_space,
)
from palatini.skew import PAIRS, SkewConst, builtin_pencils

P = 31991
F = GF(P)


def e(i):
    return [int(k == i) for k in range(6)]


def test_line_through_basis_points():
    line = line_from_points(e(0), e(1))
    assert line.p[0] == 1 and not any(line.p[1:])


def test_swapping_points_gives_same_line():
    rng = random.Random(1)
    P1 = [rng.randint(-4, 4) for _ in range(6)]
    P2 = [rng.randint(-4, 4) for _ in range(6)]
    a, b = line_from_points(P1, P2), line_from_points(P2, P1)
    assert a == b and hash(a) == hash(b)


def test_proportional_points_rejected():
    with pytest.raises(ProportionalPointsError):
        line_from_points([1, 2, 3, 0, 0, 0], [2, 4, 6, 0, 0, 0])


def test_random_lines_satisfy_relations():
    rng = random.Random(2)
    for _ in range(50):
        line = line_from_points([F.random(rng) for _ in range(6)], [F.random(rng) for _ in range(6)])
        assert all(not r for r in plucker_relations(line.p))


def test_non_decomposable_coordinates_rejected():
    # e0^e1 + e2^e3 is not a line
    p = [0] * 15
    p[PAIRS.index((0, 1))] = 1
    p[PAIRS.index((2, 3))] = 1
    with pytest.raises(ValueError):
        PluckerLine(tuple(QQ(v) for v in p))


def test_spanning_points_reconstructed():
    line = line_from_points([1, 0, 2, 0, -1, 3], [0, 1, 1, 1, 0, 0])
    again = PluckerLine(line.p)
    assert again == line
    assert line_from_points(*again.points) == line


def test_lines_through_a_centre():
    rng = random.Random(3)
    # a rank-4 complex with centres e4, e5
    c = SkewConst.from_entries({(0, 1): 1, (2, 3): 1})
    for _ in range(20):
        R = [rng.randint(-5, 5) for _ in range(6)]
        centre = [0, 0, 0, 0, rng.randint(1, 3), rng.randint(-3, 3)]
        if any(R[:4]):
            assert complex_contains_line(c, line_from_points(centre, R))


def test_random_line_random_complex_mostly_not_contained():
    rng = random.Random(4)
    hits = 0
    for _ in range(100):
        c = SkewConst(tuple(F.random(rng) for _ in PAIRS))
        line = line_from_points([F.random(rng) for _ in range(6)], [F.random(rng) for _ in range(6)])
        hits += complex_contains_line(c, line)
    assert hits <= 1


def test_containment_matches_bilinear_form():
    rng = random.Random(5)
    for _ in range(30):
        c = SkewConst(tuple(QQ(rng.randint(-3, 3)) for _ in PAIRS))
        u = [QQ(rng.randint(-3, 3)) for _ in range(6)]
        v = [QQ(rng.randint(-3, 3)) for _ in range(6)]
        try:
            line = line_from_points(u, v)
        except ProportionalPointsError:
            continue
        assert complex_contains_line(c, line) == (c.bilinear(u, v) == 0)


def test_singular_spaces():
    rng = random.Random(6)
    generic = SkewConst(tuple(QQ(rng.randint(-5, 5)) for _ in PAIRS))
    assert singular_space(generic) == (6, [])
    assert complex_type(generic) == "general"
    alpha1 = builtin_pencils()["alpha1-canonical"].evaluate([1, 0, 0, 0])
    rank, ker = singular_space(alpha1)
    assert rank == 2 and len(ker) == 4
    assert complex_type(alpha1) == "special-second-type"
    t4 = builtin_pencils()["t4"].evaluate([0, 0, 0, 1])
    rank, ker = singular_space(t4)
    assert rank == 4 and len(ker) == 2


def test_rank4_kernel_lines_in_complex():
    rng = random.Random(7)
    t4 = builtin_pencils()["t4"].evaluate([0, 0, 0, 1])
    _, ker = singular_space(t4)
    for _ in range(20):
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        K = [a * u + b * v for u, v in zip(*ker)]
        R = [rng.randint(-5, 5) for _ in range(6)]
        if any(K):
            try:
                assert complex_contains_line(t4, line_from_points(K, R))
            except ProportionalPointsError:
                pass


def test_json_round_trip():
    line = line_from_points([1, QQ("1/2"), 0, 0, 0, 0], [0, 0, 1, 0, 0, 3])
    blob = json.loads(json.dumps(line.to_json()))
    assert len(blob["p"]) == 15
    assert PluckerLine.from_json(blob) == line
