"""Command-line front end: JSON reports, CSV traces, enumeration tables.

Exit codes: 0 success, 1 domain error (inadmissible label, degenerate
angle, bad curve domain), 2 parse error or malformed flags, 3 breach of
an internal invariant (e.g. the double-point methods disagree).  Output
is deterministic: fixed key order, floats printed with at most twelve
significant digits, no timestamps.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import catalog as catalog_mod
from . import invariants as inv
from .curves import classify_branches, integrate_profile
from .errors import (BranchError, DegenerateAngle, DomainError, InternalError,
                     InvalidLabel, OutOfRegime, ParityError, ParseError,
                     PunctureError, RangeError, ResidualError, SymplModuliError,
                     WrongExample, ZeroPair)
from .model_maps import (ModelMapParams, double_points_json, phi_double_points,
                         residual_tolerance)
from .moduli import Label2, OrderedLabel3, validate_label2, validate_label3
from .reeb import EndClass, classify_pair, solve_theta0

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3

_DOMAIN_ERRORS = (InvalidLabel, DomainError, DegenerateAngle, OutOfRegime,
                  BranchError, RangeError, ZeroPair, WrongExample,
                  PunctureError)
_INVARIANT_ERRORS = (InternalError, ParityError, ResidualError)


@dataclass(frozen=True)
class CliConfig:
    """Numeric knobs shared by the subcommands.

    The residual tolerance may be overridden by SYMPL_MODULI_TOL; all
    tolerances must be positive and the enumeration bound at least 1.
    """

    root_find_tol: float = 1e-12
    quad_tol: float = 1e-10
    residual_tol: float = 1e-9
    bound: int = 1
    out: str | None = None
    fmt: str = "json"

    def __post_init__(self):
        if min(self.root_find_tol, self.quad_tol, self.residual_tol) <= 0:
            raise ValueError("tolerances must be positive")
        if self.bound < 1:
            raise ValueError("bound must be >= 1")
        if self.fmt not in ("json", "csv"):
            raise ValueError("format is 'json' or 'csv'")

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "CliConfig":
        return cls(
            quad_tol=getattr(ns, "quad_tol", 1e-10),
            residual_tol=residual_tolerance(),
            bound=max(1, getattr(ns, "max_abs", 1)),
            out=getattr(ns, "out", None),
            fmt="csv" if getattr(ns, "cmd", "") == "trace" else "json",
        )


def _fmt(x: float) -> float:
    """Round-trip float capped at 12 significant digits."""
    return float(f"{x:.12g}")


def parse_pairs(text: str) -> list[tuple[int, int]]:
    """Parse semicolon-separated 'm,m'' integer pairs; whitespace ignored."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty pair in {text!r}")
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 2:
            raise ParseError(f"expected 'm,m'' but got {chunk!r}")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"non-integer entry in {chunk!r}") from exc
    if not 1 <= len(out) <= 3:
        raise ParseError(f"need 1, 2 or 3 pairs, got {len(out)}")
    return out


def _emit(payload: dict | list, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out_path:
        with open(out_path, "w") as fp:
            fp.write(text + "\n")
    else:
        print(text)


def _cmd_classify(ns: argparse.Namespace) -> int:
    pairs = parse_pairs(ns.pairs)
    if len(pairs) == 1:
        ok, why = classify_pair(*pairs[0])
        payload = {"pairs": [list(pairs[0])], "admissible": ok, "violations": why}
    elif len(pairs) == 2:
        ok, why = validate_label2(*pairs)
        payload = {"pairs": [list(p) for p in pairs], "admissible": ok,
                   "violations": why}
        if ok:
            payload["delta"] = Label2.make(*pairs).delta
    else:
        ok, orderings = validate_label3(pairs)
        payload = {"pairs": [list(p) for p in pairs], "admissible": ok,
                   "orderings": [[list(p) for p in o] for o in orderings]}
    _emit(payload, ns.out)
    return EXIT_OK if ok else EXIT_DOMAIN


def _label_from_ns(pairs: list[tuple[int, int]], ordering: int):
    if len(pairs) == 2:
        return Label2.make(*pairs)
    if len(pairs) == 3:
        return OrderedLabel3.make(pairs, which=ordering)
    raise ParseError("this command needs 2 or 3 pairs")


def _cmd_invariants(ns: argparse.Namespace) -> int:
    pairs = parse_pairs(ns.pairs)
    label = _label_from_ns(pairs, ns.ordering)
    report = inv.sphere_report(label)
    oracle = inv.double_points_bruteforce(label)
    payload = report.to_json(label)
    payload["m_C_oracle"] = oracle
    payload["translate_intersection_count"] = inv.translate_intersection_count(label)
    _emit(payload, ns.out)
    if oracle != report.m_c:
        print(f"invariant breach: m_C formula {report.m_c} != oracle {oracle}",
              file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def _cmd_trace(ns: argparse.Namespace) -> int:
    pairs = parse_pairs(ns.pair)
    if len(pairs) != 1:
        raise ParseError("--pair takes exactly one 'p,p'' pair")
    p, pp = pairs[0]
    ranges = classify_branches(p, pp)
    if not 0 <= ns.range < len(ranges):
        raise ParseError(
            f"range id {ns.range} invalid: ({p}, {pp}) has {len(ranges)} ranges")
    config = CliConfig.from_namespace(ns)
    trace = integrate_profile(p, pp, ns.range, s_anchor=ns.anchor,
                              n_samples=ns.samples, clip=ns.clip,
                              quad_tol=config.quad_tol)
    trace.write_csv(ns.out)
    rng = ranges[ns.range]
    s_vals = [row.s for row in trace.samples]
    summary = {
        "pair": [p, pp],
        "range": ns.range,
        "theta_endpoints": [_fmt(rng.lo), _fmt(rng.hi)],
        "endpoint_labels": [rng.lo_label, rng.hi_label],
        "samples": len(trace.samples),
        "s_min": _fmt(min(s_vals)),
        "s_max": _fmt(max(s_vals)),
        "csv": ns.out,
    }
    print(json.dumps(summary, indent=2))
    return EXIT_OK


def _cmd_enumerate(ns: argparse.Namespace) -> int:
    from .moduli import enumerate_labels
    labels = enumerate_labels(ns.max_abs, ns.ends)
    lines = []
    for label in labels:
        orderings = None
        if ns.ends == 3:
            orderings = label.orderings()
            label = OrderedLabel3.make([p.as_tuple() for p in label.pairs],
                                       which=0)
        report = inv.sphere_report(label)
        oracle = inv.double_points_bruteforce(label)
        payload = report.to_json(label)
        payload["m_C_oracle"] = oracle
        if orderings is not None:
            payload["orderings"] = [[list(p) for p in o] for o in orderings]
        if oracle != report.m_c:
            print(f"invariant breach on {payload['label']}", file=sys.stderr)
            return EXIT_INVARIANT
        lines.append(json.dumps(payload))
    text = "\n".join(lines)
    if ns.out:
        with open(ns.out, "w") as fp:
            fp.write(text + ("\n" if text else ""))
    else:
        print(text)
    return EXIT_OK


def _cmd_double_points(ns: argparse.Namespace) -> int:
    pairs = parse_pairs(ns.pairs)
    if len(pairs) != 2:
        raise ParseError("double-points needs exactly 2 pairs")
    label = Label2.make(*pairs)
    results: dict = {"label": label.to_json(), "delta": label.delta}
    m_formula = inv.double_points_formula(label)
    counts = {}
    if ns.method in ("formula", "all"):
        counts["formula"] = m_formula
    if ns.method in ("roots", "all"):
        counts["roots"] = inv.double_points_bruteforce(label)
    if ns.method in ("model", "all"):
        config = CliConfig.from_namespace(ns)
        params = ModelMapParams(label=label, r=ns.r)
        points = phi_double_points(params, tol=config.residual_tol)
        counts["model"] = len(points) // 2
        results["points"] = double_points_json(points)
        results["residual_tolerance"] = config.residual_tol
    results["m_C"] = counts
    _emit(results, ns.out)
    if len(set(counts.values())) > 1:
        print(f"invariant breach: methods disagree: {counts}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def _cmd_spectrum(ns: argparse.Namespace) -> int:
    if (ns.pair is None) == (ns.polar_m is None):
        raise ParseError("give exactly one of --pair or --polar-m")
    payload: dict
    if ns.polar_m is not None:
        spec = inv.l0_spectrum(inv.PolarSpectrumCase(m=ns.polar_m), ns.nmax)
        payload = {
            "case": "polar", "m": ns.polar_m,
            "spectrum": [[_fmt(ev), mult] for ev, mult in spec],
        }
    else:
        pairs = parse_pairs(ns.pair)
        if len(pairs) != 1:
            raise ParseError("--pair takes exactly one 'm,m'' pair")
        m, mp = pairs[0]
        end = EndClass(m, mp)
        reduced = end.reduced()
        ok, why = classify_pair(reduced.m, reduced.m_prime)
        if not ok:
            raise InvalidLabel(f"({m}, {mp}) is not admissible: {why}")
        theta0 = solve_theta0(reduced.m, reduced.m_prime)
        data = inv.asymptotic_constants(theta0, end)
        period = end.gcd * abs(reduced.m) if reduced.m != 0 else end.gcd
        spec = inv.l0_spectrum(
            inv.GenericSpectrumCase(zeta=data.zeta, period=period), ns.nmax)
        payload = {
            "case": "generic", "pair": [m, mp],
            "theta0": _fmt(theta0),
            "zeta": _fmt(data.zeta),
            "kappa": _fmt(data.kappa),
            "sigma0": None if data.sigma0 is None else _fmt(data.sigma0),
            "period": period,
            "spectrum": [[_fmt(ev), mult] for ev, mult in spec],
        }
    _emit(payload, ns.out)
    return EXIT_OK


def _cmd_catalog(ns: argparse.Namespace) -> int:
    payload = [entry.to_json() for entry in catalog_mod.catalog_entries()]
    _emit(payload, ns.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympl-moduli",
        description="Moduli data of invariant pseudoholomorphic subvarieties "
                    "in R x (S^1 x S^2): classification, indices, double "
                    "points, traces and spectra.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("classify", help="Admissibility of 1, 2 or 3 pairs.")
    c.add_argument("--pairs", required=True,
                   help="semicolon-separated integer pairs, e.g. \"2,1;1,2\"")
    c.add_argument("--out", help="write JSON here instead of stdout")
    c.set_defaults(func=_cmd_classify)

    i = sub.add_parser("invariants", help="Invariant report of a label.")
    i.add_argument("--pairs", required=True)
    i.add_argument("--ordering", type=int, default=0,
                   help="which valid ordering to use for 3-pair labels")
    i.add_argument("--out")
    i.set_defaults(func=_cmd_invariants)

    t = sub.add_parser("trace", help="CSV trace of a profile cylinder.")
    t.add_argument("--pair", required=True, help="one 'p,p'' pair, p > 0")
    t.add_argument("--range", type=int, required=True, help="theta range id")
    t.add_argument("--anchor", type=float, default=0.0,
                   help="value of s at the range midpoint")
    t.add_argument("--samples", type=int, default=1000)
    t.add_argument("--clip", type=float, default=1e-4,
                   help="distance to keep from the range endpoints")
    t.add_argument("--quad-tol", type=float, default=1e-10, dest="quad_tol",
                   help="absolute quadrature tolerance per subinterval")
    t.add_argument("--out", required=True, help="CSV output path")
    t.set_defaults(func=_cmd_trace)

    e = sub.add_parser("enumerate", help="Enumerate admissible labels.")
    e.add_argument("--max-abs", type=int, required=True, dest="max_abs")
    e.add_argument("--ends", type=int, choices=(2, 3), default=2)
    e.add_argument("--out")
    e.set_defaults(func=_cmd_enumerate)

    d = sub.add_parser("double-points",
                       help="Double points by formula, root count or model map.")
    d.add_argument("--pairs", required=True)
    d.add_argument("--method", choices=("formula", "roots", "model", "all"),
                   default="all")
    d.add_argument("--r", type=float, default=10.0, help="model-map scale")
    d.add_argument("--out")
    d.set_defaults(func=_cmd_double_points)

    s = sub.add_parser("spectrum", help="Asymptotic constants and spectrum.")
    s.add_argument("--pair", help="one 'm,m'' pair (generic orbit)")
    s.add_argument("--polar-m", type=int, dest="polar_m",
                   help="covering multiplicity of a polar orbit")
    s.add_argument("--nmax", type=int, default=5)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_spectrum)

    g = sub.add_parser("catalog", help="Dump the curve catalog as JSON.")
    g.add_argument("--out")
    g.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: Sequence[str] | None = None) -> None:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        code = ns.func(ns)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        code = EXIT_PARSE
    except _INVARIANT_ERRORS as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        code = EXIT_INVARIANT
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_DOMAIN
    except SymplModuliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_DOMAIN
    sys.exit(code)


if __name__ == "__main__":
    main()
