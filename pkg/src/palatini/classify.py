"""Regularity classification of webs of linear complexes.

Decision tree:

* every member has rank <= 2 (all 15 sub-pfaffians vanish)  -> alpha1
* the pfaffian cubic vanishes identically                    -> alpha2.x,
  split by the generic dimension of the fibres of the singular-line map
* otherwise the cubic surface S exists; Z is the rank <= 2 locus
  (common zeros of the sub-pfaffian quadrics):
  Z empty -> beta1, Z nonempty -> beta2

The map sending a web to its degeneracy locus is regular exactly in case
beta1 and in case beta2 with Z finite.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from .algebra import DEFAULT_PRIMES, GF, QQ, MultiPoly, rank_kernel
from .skew import PAIRS
from .web import (
    MAX_RETRIES,
    GenericityError,
    Web,
    degeneracy_system,
    hilbert_function_of,
    pencil_of,
    random_point_on_cubic,
)

ALPHA_LABELS = {3: "α2.1", 2: "α2.2", 1: "α2.3", 0: "α2.4"}
CASES = ("α1", "α2.1", "α2.2", "α2.3", "α2.4", "β1", "β2")

DEFAULT_SAMPLES = 24
# exhaustive searches over P^3(F_p) for these small primes
PROBE_PRIMES = (31, 101)
EXHAUSTIVE_LIMIT = 101
THIRD_PRIME = 32003


class ClassificationAnomaly(RuntimeError):
    """Sampled data contradicts the symbolic case distinction."""


class RankError(ValueError):
    pass


# -- structural case split ------------------------------------------------


def case_family(pf: MultiPoly, sub_pfaffians: Sequence[MultiPoly]) -> str:
    """'alpha1', 'alpha2' or 'beta' from the symbolic pfaffians of a pencil.

    Expanding pf along the first row writes it through 4x4 sub-pfaffians, so
    vanishing of all of them forces pf = 0; a 'beta3' outcome is impossible.
    """
    if not any(sub_pfaffians):
        if pf:
            raise ClassificationAnomaly("all sub-pfaffians vanish but the pfaffian does not")
        return "alpha1"
    return "alpha2" if not pf else "beta"


# -- fibres of the singular-line map ---------------------------------------


def fiber_dimension_at(w: Web, q: Sequence, p: int) -> int:
    """Projective dimension of {members killing the singular line of M(q)}."""
    wp = w.reduce(p)
    r, kernel = pencil_of(wp).evaluate(q).rank_kernel()
    if r != 4:
        raise RankError(f"member at q has rank {r}, need 4")
    F = GF(p)
    rows = []
    for v in kernel:
        for i in range(6):
            rows.append([sum((M.entry(i, j) * v[j] for j in range(6)), F.zero) for M in wp.generators])
    return 3 - rank_kernel(rows, F)[0]


def alpha_subcase(w: Web, primes: Sequence[int] = DEFAULT_PRIMES, samples: int = DEFAULT_SAMPLES,
                  rng: random.Random | None = None):
    """Sub-case alpha2.x from the minimal sampled fibre dimension.

    Returns ``(label, generic_dimension, evidence)``.
    """
    rng = rng or random.Random(0)
    dims = []
    specials = []
    for p in primes:
        F = GF(p)
        found = 0
        attempts = 0
        while found < samples and attempts < samples * MAX_RETRIES:
            attempts += 1
            q = [F.random(rng) for _ in range(4)]
            if not any(q):
                continue
            try:
                d = fiber_dimension_at(w, q, p)
            except RankError:
                continue
            found += 1
            dims.append({"prime": p, "q": [int(v) for v in q], "fiber_dim": d})
    if not dims:
        raise ClassificationAnomaly("no member of rank 4 found, although the web is not of type alpha1")
    g = min(d["fiber_dim"] for d in dims)
    specials = [d for d in dims if d["fiber_dim"] > g]
    evidence = {
        "samples": len(dims),
        "fiber_dims": dict(Counter(d["fiber_dim"] for d in dims)),
        "special_fibers": specials[:8],
    }
    return ALPHA_LABELS[g], g, evidence


# -- the rank <= 2 locus Z -------------------------------------------------


@dataclass
class ZStatus:
    status: str  # "empty" | "finite" | "positive-dimensional"
    degree: Optional[int] = None
    hilbert: Dict[int, Dict[int, int]] = field(default_factory=dict)
    points: Dict[int, list] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "degree": self.degree,
            "hilbert": {str(p): {str(t): h for t, h in hs.items()} for p, hs in self.hilbert.items()},
            "points": {str(p): pts for p, pts in self.points.items()},
        }


def _status_from_hilbert(values: Dict[int, int]):
    ts = sorted(values)
    a, b, c = (values[t] for t in ts[-3:])
    if a == b == c:
        return ("empty", 0) if c == 0 else ("finite", c)
    if a < b < c and c - b >= b - a:
        return ("positive-dimensional", None)
    return None


def _z_status_mod_p(quadrics: Sequence[MultiPoly], p: int, t_max: int = 8, t_limit: int = 14):
    values = {t: hilbert_function_of(quadrics, t, p) for t in range(2, t_max + 1)}
    while True:
        verdict = _status_from_hilbert(values)
        if verdict is not None:
            return verdict, values
        t_max += 1
        if t_max > t_limit:
            raise ClassificationAnomaly(f"Hilbert function of Z did not stabilize over F_{p}: {values}")
        values[t_max] = hilbert_function_of(quadrics, t_max, p)


def z_locus_status(w: Web, primes: Sequence[int] = DEFAULT_PRIMES, search_prime: int | None = PROBE_PRIMES[0]) -> ZStatus:
    """Empty / finite / positive-dimensional status of the rank <= 2 locus of the web."""
    quadrics = pencil_of(w).sub_pfaffians4()
    verdicts = {}
    hilbert = {}
    for p in primes:
        verdicts[p], hilbert[p] = _z_status_mod_p(quadrics, p)
    if len(set(verdicts.values())) > 1:
        extra = THIRD_PRIME if THIRD_PRIME not in primes else 2147483647
        verdicts[extra], hilbert[extra] = _z_status_mod_p(quadrics, extra)
        winner, count = Counter(verdicts.values()).most_common(1)[0]
        if count < 2:
            raise ClassificationAnomaly(f"primes disagree on Z: {verdicts}")
    else:
        winner = next(iter(verdicts.values()))
    status, degree = winner
    z = ZStatus(status, degree, hilbert)
    if search_prime is not None and search_prime <= EXHAUSTIVE_LIMIT:
        pts = common_zeros(quadrics, search_prime)
        z.points[search_prime] = [list(map(int, row)) for row in pts[:16]]
    return z


# -- exhaustive evaluation over P^3(F_p) ----------------------------------


def projective_points(p: int, n: int = 4) -> np.ndarray:
    """Normalized representatives of P^{n-1}(F_p): first nonzero coordinate is 1."""
    blocks = []
    for lead in range(n):
        free = n - lead - 1
        grid = np.indices((p,) * free).reshape(free, -1).T if free else np.zeros((1, 0), dtype=np.int64)
        block = np.zeros((grid.shape[0], n), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1:] = grid
        blocks.append(block)
    return np.vstack(blocks)


def evaluate_mod_p(poly: MultiPoly, pts: np.ndarray, p: int) -> np.ndarray:
    out = np.zeros(pts.shape[0], dtype=np.int64)
    for e, c in poly.reduce(p).terms.items():
        term = np.full(pts.shape[0], int(c), dtype=np.int64)
        for i, k in enumerate(e):
            for _ in range(k):
                term = term * pts[:, i] % p
        out = (out + term) % p
    return out


def common_zeros(polys: Sequence[MultiPoly], p: int) -> np.ndarray:
    pts = projective_points(p, polys[0].nvars)
    for f in polys:
        if f:
            pts = pts[evaluate_mod_p(f, pts, p) == 0]
    return pts


# -- singular points of the cubic -----------------------------------------


@dataclass
class SingularityProbe:
    counts: Dict[int, int]
    points: Dict[int, list]
    sampled: Dict[int, int]
    candidates: List[dict]

    @property
    def singular_point_count(self) -> Optional[int]:
        """Number of singular points if all exhaustive counts agree, else None."""
        values = set(self.counts.values())
        return values.pop() if len(values) == 1 else None

    def to_json(self) -> dict:
        return {
            "exhaustive_counts": {str(p): c for p, c in self.counts.items()},
            "points": {str(p): pts for p, pts in self.points.items()},
            "sampled_singular": {str(p): c for p, c in self.sampled.items()},
            "candidates": self.candidates,
        }


def is_singular_point(cubic: MultiPoly, point: Sequence) -> bool:
    F = cubic.field
    pt = [F(v) for v in point]
    return not cubic.evaluate(pt) and all(not d.evaluate(pt) for d in cubic.gradient())


def surface_singularity_probe(cubic: MultiPoly, primes: Sequence[int] = PROBE_PRIMES,
                              candidates: Sequence[Sequence] = (), samples: int = 16,
                              rng: random.Random | None = None) -> SingularityProbe:
    """Singular points of a cubic surface: exhaustive for small p, sampled for large p."""
    if not cubic:
        raise ValueError("the cubic vanishes identically")
    rng = rng or random.Random(0)
    counts, points, sampled = {}, {}, {}
    polys = [cubic, *cubic.gradient()]
    for p in primes:
        if p <= EXHAUSTIVE_LIMIT:
            zeros = common_zeros(polys, p)
            counts[p] = int(zeros.shape[0])
            points[p] = [list(map(int, row)) for row in zeros[:16]]
        else:
            cp = cubic.reduce(p)
            hits = 0
            for _ in range(samples):
                try:
                    q = random_point_on_cubic(cp, rng)
                except GenericityError:
                    continue
                hits += is_singular_point(cp, q)
            sampled[p] = hits
    checked = []
    for cand in candidates:
        checked.append({
            "point": [str(QQ(v)) for v in cand],
            "on_surface": not cubic.evaluate(cand),
            "singular": is_singular_point(cubic, cand),
        })
    return SingularityProbe(counts, points, sampled, checked)


# -- alpha1 support note ---------------------------------------------------


def alpha1_hyperplane_note(w: Web) -> Optional[str]:
    """Describe X = mH for an alpha1 web, H the hyperplane spanned by all centres."""
    span_q = []
    for q in ([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1]):
        span_q.extend(pencil_of(w).evaluate(q).rank_kernel()[1])
    r, normal = rank_kernel(span_q, w.field)
    if r != 5:
        return None
    ell = MultiPoly.linear(normal[0], w.field)
    minors = [m for m in degeneracy_system(w).minors.values() if m]
    mult = _vanishing_order_along(minors, normal[0])
    return f"X = {mult}H, H: {ell.to_text()} = 0"


def _vanishing_order_along(polys: Sequence[MultiPoly], normal: Sequence) -> int:
    """Largest m such that every poly is divisible by ell^m, ell = normal . x."""
    F = polys[0].field
    n = polys[0].nvars
    # parametrize the hyperplane ell = 0 by its kernel basis
    _, basis = rank_kernel([list(normal)], F)
    gens = MultiPoly.gens(n - 1, F)
    images = [sum((b[i] * g for b, g in zip(basis, gens)), MultiPoly.zero(n - 1, F)) for i in range(n)]
    k = next(i for i, v in enumerate(normal) if v)
    order = 0
    layer = list(polys)
    while order < 4:
        if any(f.substitute(images) for f in layer):
            break
        order += 1
        # derivative transverse to the hyperplane
        layer = [f.partial(k) for f in layer]
    return order


# -- the report -------------------------------------------------------------


@dataclass
class ClassificationReport:
    case: str
    pf_identically_zero: bool
    regular: bool
    generic_fiber_dimension: Optional[int] = None
    z_status: Optional[str] = None
    z_degree: Optional[int] = None
    surface_probe: Optional[dict] = None
    notes: List[str] = field(default_factory=list)
    evidence: dict = field(default_factory=dict)

    def __post_init__(self):
        assert self.case in CASES, self.case
        assert self.case.startswith("α") == self.pf_identically_zero

    def summary(self) -> str:
        z = self.z_status or "n/a"
        return f"case={self.case} Z={z} ρ-regular={str(self.regular).lower()}"

    def to_json(self) -> dict:
        return asdict(self)


def classify(w: Web, primes: Sequence[int] = DEFAULT_PRIMES, samples: int = DEFAULT_SAMPLES,
             seed: int = 0, probe_primes: Sequence[int] = PROBE_PRIMES,
             candidates: Sequence[Sequence] = ()) -> ClassificationReport:
    w.require_independent()
    rng = random.Random(seed)
    pencil = pencil_of(w)
    pf = pencil.pfaffian()
    subs = pencil.sub_pfaffians4()
    family = case_family(pf, subs)
    evidence = {
        "seed": seed,
        "primes": list(primes),
        "pfaffian": pf.to_text(),
        "nonzero_sub_pfaffians": [list(PAIRS[k]) for k, s in enumerate(subs) if s],
    }
    if family == "alpha1":
        notes = ["every member has rank <= 2", "degeneracy locus has dimension > 3"]
        note = alpha1_hyperplane_note(w)
        if note:
            notes.append(note)
        return ClassificationReport("α1", True, False, notes=notes, evidence=evidence)
    if family == "alpha2":
        label, g, ev = alpha_subcase(w, primes, samples, rng)
        evidence["fibers"] = ev
        notes = ["every member is special", "degeneracy locus has dimension > 3"]
        if ev["special_fibers"]:
            notes.append(f"special fibres larger than the generic dimension {g} were sampled")
        return ClassificationReport(label, True, False, generic_fiber_dimension=g, notes=notes, evidence=evidence)

    z = z_locus_status(w, primes)
    evidence["Z"] = z.to_json()
    # rank <= 2 members lie on S
    for p, pts in z.points.items():
        cp = pf.reduce(p)
        for q in pts:
            if cp.evaluate(q):
                raise ClassificationAnomaly(f"point {q} of Z over F_{p} is off the cubic")
    probe = surface_singularity_probe(pf, probe_primes, candidates, rng=rng)
    if z.status == "empty":
        case, regular = "β1", True
    else:
        case, regular = "β2", z.status == "finite"
    notes = []
    if z.status == "finite":
        notes.append(f"X contains {z.degree} 3-space(s) as components")
        if z.degree > 4:
            notes.append("more than 4 points of rank <= 2: unexpected")
    elif z.status == "positive-dimensional":
        notes.append("a curve of rank <= 2 members: degeneracy locus has dimension > 3")
    return ClassificationReport(
        case, False, regular, z_status=z.status, z_degree=z.degree,
        surface_probe=probe.to_json(), notes=notes, evidence=evidence,
    )


__all__ = [
    "CASES",
    "ClassificationReport",
    "ClassificationAnomaly",
    "RankError",
    "ZStatus",
    "SingularityProbe",
    "case_family",
    "fiber_dimension_at",
    "alpha_subcase",
    "z_locus_status",
    "surface_singularity_probe",
    "is_singular_point",
    "projective_points",
    "evaluate_mod_p",
    "common_zeros",
    "alpha1_hyperplane_note",
    "classify",
]
