import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palatini.algebra import GF, QQ, MultiPoly
from palatini.classify import (
    CASES,
    ClassificationAnomaly,
    RankError,
    alpha_subcase,
    case_family,
    classify,
    common_zeros,
    fiber_dimension_at,
    is_singular_point,
    projective_points,
    surface_singularity_probe,
    z_locus_status,
)
from palatini.fixtures import catalogue, fixture
from palatini.skew import PAIRS, SkewConst, SkewPencil
from palatini.web import Web, pencil_of, pfaffian_cubic, random_web

P = 31991


@pytest.fixture(scope="module")
def reports():
    cat = catalogue()
    return {name: classify(w) for name, w in cat.items() if name != "three-planes-dependent"}


def test_catalogue_verdicts(reports):
    expected = {
        "t1": ("β2", True),
        "t4": ("β1", True),
        "alpha1-canonical": ("α1", False),
        "es2i": ("β2", False),
        "es2ii": ("β2", False),
        "three-planes-independent": ("β2", False),
        "elliptic-cone": ("β2", True),
        "alpha21-constructed": ("α2.1", False),
        "alpha24-constructed": ("α2.4", False),
        "random": ("β1", True),
    }
    for name, (case, regular) in expected.items():
        r = reports[name]
        assert (r.case, r.regular) == (case, regular), name


def test_report_invariants(reports):
    for r in reports.values():
        assert r.case in CASES
        assert r.case.startswith("α") == r.pf_identically_zero
        assert r.regular == (r.case == "β1" or (r.case == "β2" and r.z_status == "finite"))


def test_alpha1_note(reports):
    assert "X = 3H, H: x5 = 0" in reports["alpha1-canonical"].notes


def test_z_status_values(reports):
    assert reports["es2i"].z_status == "positive-dimensional"
    assert reports["es2ii"].z_status == "positive-dimensional"
    assert reports["t4"].z_status == "empty"
    assert reports["random"].z_status == "empty"
    assert reports["t1"].z_status == "finite" and reports["t1"].z_degree == 1


def test_t4_probe(reports):
    probe = reports["t4"].surface_probe
    assert probe["exhaustive_counts"] == {"31": 1, "101": 1}
    assert probe["points"]["31"] == [[0, 0, 0, 1]]


def test_summary_and_json(reports):
    r = reports["es2i"]
    assert r.summary() == "case=β2 Z=positive-dimensional ρ-regular=false"
    blob = json.loads(json.dumps(r.to_json()))
    assert blob["case"] == "β2" and blob["evidence"]["seed"] == 0


def test_degenerate_web_rejected():
    from palatini.web import DegenerateWebError

    with pytest.raises(DegenerateWebError):
        classify(fixture("three-planes-dependent"))


def test_deterministic_given_seed():
    w = fixture("alpha24-constructed")
    a, b = classify(w, seed=1), classify(w, seed=1)
    assert a.to_json() == b.to_json()
    c = classify(w, seed=2)
    assert c.case == a.case and c.regular == a.regular


def test_fiber_dimensions():
    rng = random.Random(1)
    F = GF(P)
    w21, w24 = fixture("alpha21-constructed"), fixture("alpha24-constructed")
    for _ in range(10):
        q = [F.random(rng) for _ in range(4)]
        assert fiber_dimension_at(w21, q, P) == 3
        assert fiber_dimension_at(w24, q, P) == 0
    with pytest.raises(RankError):
        fiber_dimension_at(fixture("alpha1-canonical"), [1, 2, 3, 4], P)


def test_alpha_subcase_guard():
    with pytest.raises(ClassificationAnomaly):
        alpha_subcase(fixture("alpha1-canonical"), samples=4)


def test_alpha_subcase_labels():
    assert alpha_subcase(fixture("alpha21-constructed"), samples=6)[0] == "α2.1"
    label, g, ev = alpha_subcase(fixture("alpha24-constructed"), samples=6)
    assert (label, g) == ("α2.4", 0) and ev["samples"] == 12


def test_z_points_lie_on_cubic():
    w = fixture("es2i")
    z = z_locus_status(w)
    cubic = pfaffian_cubic(w)
    for p, pts in z.points.items():
        assert pts
        for q in pts:
            assert not cubic.reduce(p).evaluate(q)


def test_singularity_probe_fermat_and_random():
    x, y, z, t = MultiPoly.gens(4)
    fermat = x**3 + y**3 + z**3 + t**3
    assert surface_singularity_probe(fermat).singular_point_count == 0
    cubic = pfaffian_cubic(random_web(random.Random(0)))
    assert surface_singularity_probe(cubic).singular_point_count == 0
    with pytest.raises(ValueError):
        surface_singularity_probe(MultiPoly.zero(4))


def test_t4_candidate_exact():
    cubic = pfaffian_cubic(fixture("t4"))
    probe = surface_singularity_probe(cubic, candidates=[(0, 0, 0, 1), (1, 0, 0, 0)])
    assert probe.candidates[0]["singular"] is True
    assert probe.candidates[1]["singular"] is False
    assert is_singular_point(cubic, [0, 0, 0, 1])


def test_projective_point_count():
    assert projective_points(5).shape[0] == 5**3 + 5**2 + 5 + 1
    x, y, z, t = MultiPoly.gens(4)
    assert common_zeros([x, y], 7).shape[0] == 8  # a line has p + 1 points


def test_case_family_guard():
    x = MultiPoly.var(0, 4)
    with pytest.raises(ClassificationAnomaly):
        case_family(x**3, [MultiPoly.zero(4)] * 15)
    assert case_family(MultiPoly.zero(4), [MultiPoly.zero(4)] * 15) == "alpha1"
    assert case_family(MultiPoly.zero(4), [x**2] + [MultiPoly.zero(4)] * 14) == "alpha2"


# sparse supports make rank <= 2 pencils common, so both branches get exercised
support = st.lists(st.sampled_from(PAIRS), min_size=1, max_size=4, unique=True)
coeff = st.integers(-2, 2)


@st.composite
def fuzzed_pencils(draw):
    mats = []
    for _ in range(4):
        pairs = draw(support)
        mats.append(SkewConst.from_entries({ij: draw(coeff) for ij in pairs}))
    return SkewPencil(*mats)


@given(fuzzed_pencils())
@settings(max_examples=200)
def test_beta3_never_occurs(pencil):
    subs = pencil.sub_pfaffians4()
    pf = pencil.pfaffian()
    if not any(subs):
        assert pf.is_zero()
    assert case_family(pf, subs) in ("alpha1", "alpha2", "beta")
