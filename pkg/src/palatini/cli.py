"""Command line front end.

Exit codes: 0 success, 1 a verification check failed, 2 bad input or a
degenerate web.  Every run echoes its configuration (including the seed)
so it can be replayed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from . import chern, schubert
from .algebra import DEFAULT_PRIMES, GF, DomainError, MultiPoly
from .classify import classify
from .fixtures import FIXTURE_NAMES, RANDOM_SEEDS, fixture
from .skew import PAIRS, det3, elliptic_cone_matrix, pfaffian6, t4_block, three_planes_forms
from .web import (
    HILBERT_WINDOW_START,
    DegenerateWebError,
    DegeneratePointError,
    GenericityError,
    Web,
    degeneracy_system,
    degree_from_hilbert,
    f_matrix,
    four_secant_check,
    hilbert_values,
    hilbert_values_groebner,
    pencil_of,
    random_generic_point,
    scroll_hilbert_polynomial,
    third_differences,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_BAD_INPUT = 0, 1, 2
WEB_NAMES = ("x", "y", "z", "t")


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    fixture: Optional[str] = None
    input: Optional[str] = None
    primes: List[int] = field(default_factory=lambda: list(DEFAULT_PRIMES))
    samples: int = 24
    seed: int = 0
    web_seed: int = 0
    format: str = "text"
    extra: Dict[str, object] = field(default_factory=dict)

    def to_json(self) -> dict:
        return asdict(self)


# -- input ------------------------------------------------------------------


def load_web(cfg: RunConfig) -> Web:
    if cfg.input:
        try:
            data = json.loads(Path(cfg.input).read_text())
            return Web.from_json(data)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read web from {cfg.input}: {exc}") from exc
    name = cfg.fixture or "random"
    try:
        return fixture(name, cfg.web_seed)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from exc


def parse_range(text: str) -> List[int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError as exc:
        raise InputError(f"expected a range like 4..7, got {text!r}") from exc
    if lo > hi:
        raise InputError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def parse_point(text: str) -> List[int]:
    try:
        q = [int(v) for v in text.replace(" ", "").split(",")]
    except ValueError as exc:
        raise InputError(f"point coordinates must be integers: {text!r}") from exc
    if len(q) != 6:
        raise InputError("a point of P^5 has 6 coordinates")
    return q


def _json_default(obj):
    if isinstance(obj, (Fraction,)) or hasattr(obj, "p"):
        return str(obj)
    if isinstance(obj, MultiPoly):
        return obj.to_text()
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    return str(obj)


def emit(cfg: RunConfig, payload: dict, text_lines: Sequence[str], out=None):
    out = out or sys.stdout
    if cfg.format == "json":
        json.dump({"config": cfg.to_json(), **payload}, out, ensure_ascii=False, indent=2, default=_json_default)
        out.write("\n")
    else:
        out.write(f"# config: {json.dumps(cfg.to_json(), default=_json_default)}\n")
        for line in text_lines:
            out.write(line + "\n")


# -- commands ---------------------------------------------------------------


def cmd_classify(cfg: RunConfig) -> int:
    w = load_web(cfg)
    report = classify(w, primes=cfg.primes, samples=cfg.samples, seed=cfg.seed)
    lines = [report.summary()] + [f"note: {n}" for n in report.notes]
    emit(cfg, {"report": report.to_json(), "summary": report.summary()}, lines)
    return EXIT_OK


def cmd_pfaffian(cfg: RunConfig) -> int:
    w = load_web(cfg)
    pf = pencil_of(w).pfaffian()
    text = pf.to_text(WEB_NAMES) if pf else "0"
    emit(cfg, {"pfaffian": text}, [f"pf = {text}"])
    return EXIT_OK


def cmd_minors(cfg: RunConfig) -> int:
    w = load_web(cfg)
    F = f_matrix(w)
    minors = degeneracy_system(w).minors
    rows = [[e.to_text() for e in row] for row in F]
    keyed = {f"{i}{j}": minors[(i, j)].to_text() if minors[(i, j)] else "0" for i, j in PAIRS}
    lines = ["F ="] + ["  [" + ", ".join(r) + "]" for r in rows]
    lines += [f"minor without columns {k}: {v}" for k, v in keyed.items()]
    emit(cfg, {"F": rows, "minors": keyed}, lines)
    return EXIT_OK


def cmd_hilbert(cfg: RunConfig) -> int:
    w = load_web(cfg)
    w.require_independent()
    ts = parse_range(str(cfg.extra.get("t", "4..7")))
    method = cfg.extra.get("method", "groebner")
    if method == "matrix" and min(ts) < 4:
        raise InputError("the matrix method needs t >= 4")
    sys_ = degeneracy_system(w)
    payload, lines = {"t": ts, "method": method, "results": []}, []
    for p in cfg.primes:
        vals = hilbert_values_groebner(sys_, ts, p) if method == "groebner" else hilbert_values(sys_, ts, p)
        row = [vals[t] for t in ts]
        entry = {"prime": p, "h": row, "polynomial": [str(scroll_hilbert_polynomial(t)) for t in ts]}
        lines.append(f"p={p}: " + " ".join(f"h({t})={v}" for t, v in zip(ts, row)))
        if len(ts) >= 4:
            entry["third_differences"] = third_differences(row)
            lines.append(f"p={p}: third differences {entry['third_differences']}")
        payload["results"].append(entry)
    emit(cfg, payload, lines)
    return EXIT_OK


def cmd_secant(cfg: RunConfig) -> int:
    w = load_web(cfg)
    w.require_independent()
    p = cfg.primes[0]
    if cfg.extra.get("point"):
        Q = parse_point(str(cfg.extra["point"]))
    else:
        Q = [int(v) for v in random_generic_point(w, p, random.Random(cfg.seed))]
    res = four_secant_check(w, Q, p)
    payload = {
        "point": [int(v) % p for v in Q],
        "prime": p,
        "line": [str(v) for v in res.line.p],
        "contained": res.contained,
        "length": res.length,
    }
    if res.contained:
        lines = [f"the C4 line through {payload['point']} lies in X (F_{p})"]
    else:
        lines = [f"C4 line through {payload['point']} over F_{p}: 4-secant length {res.length}"]
    emit(cfg, payload, lines)
    return EXIT_OK


def cmd_schubert(cfg: RunConfig) -> int:
    k = int(cfg.extra.get("power", 4))
    c = schubert.sigma1_power(k)
    text = schubert.format_cycle(c)
    emit(
        cfg,
        {"power": k, "cycle": {f"{a},{b}": v for (a, b), v in c.items()}, "text": text, "order": schubert.order(c)},
        [f"σ₁^{k} = {text}"],
    )
    return EXIT_OK


def cmd_chern(cfg: RunConfig) -> int:
    t = chern.PALATINI
    payload = {
        "summands": [str(s) for s in chern.chi_normal_summands(t)],
        "chi_normal": str(chern.chi_normal(t)),
        "hilbert_coefficients": [str(c) for c in chern.hilbert_coefficients(t)],
        "c2H": str(chern.rr_coefficients(t)),
        "degree": chern.degree(t),
    }
    emit(cfg, payload, chern.derivation_text(t).splitlines())
    return EXIT_OK


# -- verification ledger ------------------------------------------------------


@dataclass
class Check:
    name: str
    anchor: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


def _t1_cubic() -> MultiPoly:
    x0, x1, x2, x3 = MultiPoly.gens(4)
    return x0 * x1**2 + x1 * x3**2 + x2**3


def _is_pm(a: MultiPoly, b: MultiPoly) -> bool:
    return bool(a) and (a == b or a == -b)


def _verify_checks(webs: Callable[[str], Web], cfg: RunConfig) -> List[Callable[[], tuple]]:
    rng = random.Random(cfg.seed)

    def pf_t1():
        pf = pencil_of(webs("t1")).pfaffian()
        return _is_pm(pf, _t1_cubic()), pf.to_text()

    def pf_t4():
        pf = pencil_of(webs("t4")).pfaffian()
        return _is_pm(pf, det3(t4_block())), pf.to_text()

    def sigma4():
        c = schubert.sigma1_power(4)
        return c == {(4, 0): 1, (3, 1): 3, (2, 2): 2}, schubert.format_cycle(c)

    def order_one():
        return schubert.order(schubert.sigma1_power(4)) == 1, "coefficient of σ₄ is 1"

    def chi():
        s = chern.chi_normal_summands()
        ok = s == (Fraction(29, 3), Fraction(47, 2), Fraction(53, 6), Fraction(2)) and sum(s) == 44
        return ok, " + ".join(map(str, s)) + f" = {sum(s)}"

    def hilbert_poly():
        c = chern.hilbert_coefficients()
        ok = c == (Fraction(7, 6), Fraction(2), Fraction(11, 6), Fraction(1))
        c2h = chern.rr_coefficients(chern.PALATINI)
        return ok and c2h == 15 and chern.degree() == 7, f"coefficients {tuple(map(str, c))}, c2H={c2h}, degree 7"

    def dims():
        ok = chern.DIM_SKEW_PENCILS - chern.DIM_GL6 == 24 and chern.DIM_WEB_GRASSMANNIAN == 44
        return ok, "60 - 36 = 24, dim G(3,14) = 44"

    def window():
        w = webs("random")
        w.require_independent()
        sys_ = degeneracy_system(w)
        ts = list(range(HILBERT_WINDOW_START, HILBERT_WINDOW_START + 4))
        details, ok = [], True
        for p in cfg.primes:
            vals = hilbert_values(sys_, ts, p)
            row = [vals[t] for t in ts]
            ok &= row == [scroll_hilbert_polynomial(t) for t in ts] and degree_from_hilbert(row) == 7
            details.append(f"F_{p}: {row}")
        return ok, "; ".join(details)

    def secant():
        w = webs("random")
        p = cfg.primes[0]
        lengths = []
        for _ in range(20):
            Q = random_generic_point(w, p, rng)
            res = four_secant_check(w, Q, p)
            lengths.append(None if res.contained else res.length)
        return all(v == 4 for v in lengths), f"lengths over F_{p}: {sorted(set(lengths), key=str)}"

    def verdict(name, case, regular):
        def run():
            r = classify(webs(name), primes=cfg.primes, samples=cfg.samples, seed=cfg.seed)
            return r.case == case and r.regular == regular, r.summary()

        return run

    def planes():
        F, G, H = three_planes_forms()
        dep, ind = webs("three-planes-dependent"), webs("three-planes-independent")
        ok = dep.span_rank == 3 and ind.span_rank == 4
        ok &= _is_pm(pencil_of(dep).pfaffian(), F * G * H) and _is_pm(pencil_of(ind).pfaffian(), F * G * H)
        return ok, f"span ranks {dep.span_rank}, {ind.span_rank}"

    def cone():
        x, y, z, t, c = MultiPoly.gens(5)
        pf = pfaffian6(elliptic_cone_matrix(symbolic=True))
        return _is_pm(pf, y**2 * z - x * (x - z) * (x - c * z)), pf.to_text(("x", "y", "z", "t", "c"))

    return [
        ("pfaffian T1", "cubic x0x1^2 + x1x3^2 + x2^3 of the T1 web", pf_t1),
        ("pfaffian T4", "determinantal cubic of the T4 web", pf_t4),
        ("sigma1^4", "Pieri expansion σ₄+3σ₃₁+2σ₂₂", sigma4),
        ("order one", "C4 is a congruence of order one", order_one),
        ("chiN=44", "Riemann-Roch for the normal bundle", chi),
        ("hilbert polynomial", "7/6 t^3 + 2 t^2 + 11/6 t + 1, c2H = 15, degree 7", hilbert_poly),
        ("dimension count", "moduli of webs modulo GL(6)", dims),
        ("hilbert window", "Hilbert function of the minor ideal on a random web", window),
        ("4-secant length", "general C4 lines meet X in 4 points", secant),
        ("classify t4", "T4 web gives a smooth scroll over a singular cubic", verdict("t4", "β1", True)),
        ("classify alpha1", "every member of rank <= 2, X = 3H", verdict("alpha1-canonical", "α1", False)),
        ("classify es2i", "double-line cubic: Z contains a line", verdict("es2i", "β2", False)),
        ("classify es2ii", "quadric plus plane: Z contains a conic", verdict("es2ii", "β2", False)),
        ("classify alpha2.1", "every member kills a fixed line; generic fibre of dimension 3", verdict("alpha21-constructed", "α2.1", False)),
        ("classify alpha2.4", "generic fibre of dimension 0", verdict("alpha24-constructed", "α2.4", False)),
        ("three planes", "F G H from dependent and independent webs", planes),
        ("elliptic cone", "y^2 z - x(x - z)(x - c z) with c symbolic", cone),
    ]


def cmd_verify_paper(cfg: RunConfig) -> int:
    overrides: Dict[str, str] = dict(cfg.extra.get("override") or {})

    def webs(name: str) -> Web:
        if name in overrides:
            return Web.from_json(json.loads(Path(overrides[name]).read_text()))
        return fixture(name, RANDOM_SEEDS[0] if name == "random" else 0)

    results: List[Check] = []
    for name, anchor, fn in _verify_checks(webs, cfg):
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a broken fixture fails its own check only
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(Check(name, anchor, bool(ok), str(detail), round(time.perf_counter() - start, 3)))
    failed = [c.name for c in results if not c.passed]
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name:<18} {c.anchor}  [{c.detail}] {c.seconds}s" for c in results]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed" + (f"; failed: {', '.join(failed)}" if failed else ""))
    emit(cfg, {"checks": [asdict(c) for c in results], "failed": failed}, lines)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "verify-paper": cmd_verify_paper,
    "pfaffian": cmd_pfaffian,
    "minors": cmd_minors,
    "hilbert": cmd_hilbert,
    "secant": cmd_secant,
    "schubert": cmd_schubert,
    "chern": cmd_chern,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--fixture", choices=FIXTURE_NAMES, help="built-in web")
    src.add_argument("--input", help="web JSON file with keys A, B, C, D")
    common.add_argument("--prime", type=int, action="append", dest="primes", help="prime for modular work (repeatable)")
    common.add_argument("--samples", type=int, default=24)
    common.add_argument("--seed", type=int, default=0, help="seed for sampled evidence")
    common.add_argument("--web-seed", type=int, default=0, help="seed of the 'random' fixture")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="palatini", description="Webs of linear complexes and Palatini scrolls.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "hilbert":
            sp.add_argument("--t", default="4..7", help="range a..b")
            sp.add_argument("--method", choices=("groebner", "matrix"), default="groebner")
        elif name == "secant":
            sp.add_argument("--point", help="six comma-separated integers; random if omitted")
        elif name == "schubert":
            sp.add_argument("--power", type=int, default=4)
        elif name == "verify-paper":
            sp.add_argument("--override", action="append", default=[], metavar="NAME=PATH",
                            help="replace a fixture by a web JSON file")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    extra = {}
    for key in ("t", "method", "point", "power"):
        if getattr(args, key, None) is not None:
            extra[key] = getattr(args, key)
    if getattr(args, "override", None):
        pairs = {}
        for item in args.override:
            name, sep, path = item.partition("=")
            if not sep or name not in FIXTURE_NAMES:
                raise InputError(f"bad override {item!r}; expected NAME=PATH with a fixture name")
            pairs[name] = path
        extra["override"] = pairs
    primes = args.primes or list(DEFAULT_PRIMES)
    for p in primes:
        GF(p)  # validates
    return RunConfig(
        command=args.command,
        fixture=args.fixture,
        input=args.input,
        primes=primes,
        samples=args.samples,
        seed=args.seed,
        web_seed=args.web_seed,
        format=args.format,
        extra=extra,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except (InputError, DegenerateWebError, DegeneratePointError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except GenericityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


__all__ = ["RunConfig", "main", "build_parser", "COMMANDS", "EXIT_OK", "EXIT_CHECK_FAILED", "EXIT_BAD_INPUT"]
