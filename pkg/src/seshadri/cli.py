"""Command-line front door.

Subcommands: wps, whs, jets, valuation, zariski, ruled, bounds, reproduce.
Global flags: --format json|csv, --seed, --m-max, --degree-cap.  All numbers
are emitted as exact strings ("p/q", "a+b*sqrt(D)"); nothing is rounded.
Exit codes: 0 success, 1 reproduction failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import random
import sys
from fractions import Fraction
from typing import Optional

from . import bounds, jets, surfaces, valuations, wps
from .exactmath import (
    ExactMatrix,
    QuadExt,
    WPolynomial,
    format_polynomial,
    format_scalar,
    is_negative_definite,
    parse_polynomial,
    parse_scalar,
)
from .reproduce import DEFAULT_SEED, run_reproduction

# -- serialization ------------------------------------------------------------


def to_jsonable(obj):
    """Canonical JSON-ready form: exact scalars as strings, dataclasses as
    field-ordered objects, +inf as "inf"."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf"
        raise TypeError("refusing to serialize a finite float: all arithmetic is exact")
    if isinstance(obj, (Fraction, QuadExt)):
        return format_scalar(obj)
    if isinstance(obj, WPolynomial):
        return format_polynomial(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _flatten(record: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            flat[name] = ";".join(str(v) for v in value)
        else:
            flat[name] = value
    return flat


def emit(fmt: str, payload) -> str:
    """Serialize a record (or list of records) as canonical JSON or exact CSV."""
    data = to_jsonable(payload)
    if fmt == "json":
        return json.dumps(data, separators=(",", ":"))
    if fmt == "csv":
        rows = data if isinstance(data, list) else [data]
        rows = [_flatten(r) if isinstance(r, dict) else {"value": r} for r in rows]
        header: list[str] = []
        for r in rows:
            header.extend(k for k in r if k not in header)
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return out.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def _parse_leaf(value):
    if isinstance(value, str):
        if value == "True":
            return True
        if value == "False":
            return False
        try:
            return parse_scalar(value)
        except ValueError:
            return value
    if isinstance(value, list):
        return [_parse_leaf(v) for v in value]
    if isinstance(value, dict):
        return {k: _parse_leaf(v) for k, v in value.items()}
    return value


def decode(fmt: str, text: str):
    """Parse emitted output back into exact values (inverse of emit on records
    whose leaves are scalars, booleans, and integers)."""
    if fmt == "json":
        return _parse_leaf(json.loads(text))
    if fmt == "csv":
        rows = list(csv.DictReader(io.StringIO(text)))
        return [{k: _parse_leaf(v) for k, v in row.items()} for row in rows]
    raise ValueError(f"unknown format {fmt!r}")


# -- shared argument helpers --------------------------------------------------


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(w) for w in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise ValueError(f"bad weight list {text!r}: {exc}") from None


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _read_json_arg(text: str):
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as handle:
            text = handle.read()
    return json.loads(text)


def _fraction_point(coords) -> tuple[Fraction, ...]:
    return tuple(Fraction(str(c)) for c in coords)


# -- subcommands --------------------------------------------------------------


def cmd_wps(args) -> tuple[object, int]:
    w = wps.WeightVector(_parse_weights(args.weights))
    record = {
        "weights": list(w.weights),
        "seshadri": wps.wps_seshadri(w),
        "volume": wps.wps_anticanonical_volume(w),
    }
    return record, 0


def cmd_whs(args) -> tuple[object, int]:
    spec = wps.WeightedHypersurfaceSpec(args.n, args.k, args.l, args.d)
    return wps.whs_record(spec), 0


def cmd_jets(args) -> tuple[object, int]:
    desc = _read_json_arg(args.system)
    nvars, degree = int(desc["n"]), int(desc["d"])
    constraints = []
    for c in desc.get("constraints", ()):
        if c.get("type") != "mult":
            raise ValueError(f"unknown constraint type {c.get('type')!r}")
        constraints.append((_fraction_point(c["point"]), int(c["order"])))
    m_max = int(desc.get("m_max", args.m_max))
    curve_bound = None
    if desc.get("curve_bound"):
        cb = desc["curve_bound"]
        curve_bound = jets.seshadri_upper_via_curve(
            Fraction(str(cb["pairing"])), int(cb["mult"]), bool(cb["meets_base_locus"])
        )

    def series(m: int) -> jets.LinearSystem:
        scaled = [jets.MultConstraint(point, m * order) for point, order in constraints]
        return jets.LinearSystem(nvars, m * degree, scaled)

    point_spec = desc.get("point", "random")
    if point_spec == "random":
        rng = random.Random(args.seed)
        estimate = max(
            (
                jets.moving_seshadri_lower(
                    series, jets.random_rational_point(rng, nvars), m_max, curve_bound
                )
                for _ in range(3)
            ),
            key=lambda e: e.lower,
        )
    else:
        estimate = jets.moving_seshadri_lower(
            series, _fraction_point(point_spec), m_max, curve_bound
        )
    record = {
        "s_values": list(estimate.s_values),
        "lower": estimate.lower,
        "upper": estimate.upper,
        "certified": estimate.certified_equal,
    }
    return record, 0


def cmd_valuation(args) -> tuple[object, int]:
    weights = _parse_weights(args.weights)
    twist = None
    if args.twist_e is not None:
        if args.twist_D != 2:
            raise ValueError("only sqrt(2) twists are supported")
        twist = valuations.Twist(args.twist_e)
    nu = valuations.MonomialValuation(weights, twist)
    names = ("s", "t", "u")[: len(weights)]
    if args.op in ("eval", "izumi"):
        if args.f is None:
            raise ValueError(f"--f is required for op {args.op!r}")
        f = parse_polynomial(args.f, names, D=2 if twist is not None else None)
        if args.op == "eval":
            return {
                "weights": list(weights),
                "twist": {"e": twist.e, "D": 2} if twist else None,
                "f": args.f,
                "value": valuations.valuation_eval(nu, f),
            }, 0
        check = valuations.izumi_check(nu, f)
        return {
            "weights": list(weights),
            "twist": {"e": twist.e, "D": 2} if twist else None,
            "f": args.f,
            "lower": check.lower,
            "value": check.value,
            "upper": check.upper,
            "holds": check.holds,
            "note": check.note,
        }, 0
    if args.op == "minmult":
        if args.k is None:
            raise ValueError("--k is required for op 'minmult'")
        query = valuations.ValuationIdealQuery(nu, args.k)
        min_mult, lam = valuations.ideal_min_multiplicity(query)
        return {
            "weights": list(weights),
            "k": args.k,
            "min_mult": min_mult,
            "lambda": lam,
        }, 0
    if args.op == "galois":
        if args.m is None or args.k is None:
            raise ValueError("--m and --k are required for op 'galois'")
        result = valuations.galois_min_mult(args.m, args.k, args.degree_cap)
        return {
            "m": args.m,
            "k": args.k,
            "min_mult": result.min_mult,
            "bound": result.bound,
            "witness": result.witness,
        }, 0
    raise ValueError(f"unknown valuation op {args.op!r}")


def _lattice_from_json(desc) -> surfaces.SurfaceLattice:
    generators = tuple(str(g) for g in desc["generators"])
    gram = ExactMatrix.from_rows(
        [[Fraction(str(x)) for x in row] for row in desc["gram"]]
    )
    curves = []
    for i, c in enumerate(desc["curves"]):
        curves.append(
            surfaces.CurveClass(
                name=str(c.get("name", f"C{i}")),
                coords=_fraction_point(c["coords"]),
                through_marked_point=bool(c.get("through", False)),
                mult=int(c.get("mult", 1)),
            )
        )
    return surfaces.SurfaceLattice(generators, gram, tuple(curves))


def cmd_zariski(args) -> tuple[object, int]:
    desc = _read_json_arg(args.description)
    lat = _lattice_from_json(desc)
    d_coords = desc["D"]["coords"] if isinstance(desc["D"], dict) else desc["D"]
    divisor = surfaces.DivisorClass(_fraction_point(d_coords))
    dec = surfaces.zariski_decomposition(lat, divisor)
    support_curves = [c for c in lat.curves if c.name in dec.support]
    negdef = True
    if support_curves:
        sub = ExactMatrix.from_rows(
            [
                [lat.pairing(a.divisor, b.divisor) for b in support_curves]
                for a in support_curves
            ]
        )
        negdef = is_negative_definite(sub)
    record = {
        "P": list(dec.positive.coords),
        "N": list(dec.negative.coords),
        "support": list(dec.support),
        "coefficients": list(dec.coefficients),
        "checks": {
            "nef": all(lat.pairing(dec.positive, c.divisor) >= 0 for c in lat.curves),
            "orthogonal": lat.pairing(dec.positive, dec.negative) == 0,
            "negdef": negdef,
        },
        "assumed_complete_curve_list": True,
    }
    return record, 0


def _ruled_record(g: int, d: int) -> dict:
    model = surfaces.ruled_surface_model(g, d)
    dec, ses = model.decomposition, model.seshadri
    return {
        "g": g,
        "d": d,
        "minus_K": list(model.minus_k.coords),
        "P": list(dec.positive.coords),
        "N": list(dec.negative.coords),
        "epsilon_m": model.epsilon_m,
        "certified": ses.certified,
        "volume": ses.self_intersection,
    }


def cmd_ruled(args) -> tuple[object, int]:
    if args.sweep:
        rows = []
        for g in range(args.g_max + 1):
            for d in range(1, args.d_max + 1):
                if d <= 2 * g - 2 or (g == 0 and d < 2):
                    continue
                rows.append(_ruled_record(g, d))
        return rows, 0
    if args.g is None or args.d is None:
        raise ValueError("either --sweep or both --g and --d are required")
    return _ruled_record(args.g, args.d), 0


def cmd_bounds(args) -> tuple[object, int]:
    eps = _parse_fraction(args.eps)
    result = bounds.best_volume_bound(args.n, eps)
    record = {
        "n": args.n,
        "eps": eps,
        "M": result.M,
        "a": result.a,
        "b": result.b,
        "c": result.c,
        "attained": result.attained,
        "oracle_checked": bounds.grid_confirms_best(args.n, eps, args.oracle_resolution),
        "conjectured_optimal_comparison": bounds.conjectured_optimal_comparison(args.n, eps),
    }
    return record, 0


def cmd_reproduce(args) -> tuple[object, int]:
    report = run_reproduction(args.filter, args.seed)
    payload = {
        "cases_run": report.cases_run,
        "passes": report.passes,
        "failures": [
            {"id": r.id, "expected": _safe_display(r.expected), "actual": _safe_display(r.actual)}
            for r in report.failures
        ],
        "results": [{"id": r.id, "passed": r.passed} for r in report.results],
    }
    print(
        f"reproduce: {report.passes}/{report.cases_run} cases passed "
        f"in {report.wall_time_seconds:.2f}s",
        file=sys.stderr,
    )
    return payload, (0 if report.ok else 1)


def _safe_display(value) -> str:
    try:
        return emit("json", value)
    except TypeError:
        return repr(value)


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seshadri",
        description="Exact computations of Seshadri constants, jet separation, "
        "valuation-ideal invariants, Zariski decompositions, and volume bounds.",
        epilog="All output is exact: rationals are printed as p/q. "
        "Runs are deterministic for a fixed --seed.",
    )
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="seed for random-point sampling (default %(default)s)",
    )
    parser.add_argument(
        "--m-max", type=int, default=3, help="largest multiple for jet series (default 3)"
    )
    parser.add_argument(
        "--degree-cap",
        type=int,
        default=None,
        help="weighted-degree cap for the galois brute force (default 4mk)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wps", help="weighted projective space invariants")
    p.add_argument("--weights", required=True, help="comma-separated, e.g. 1,1,2")
    p.set_defaults(handler=cmd_wps)

    p = sub.add_parser("whs", help="weighted hypersurface bound and volume")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=cmd_whs)

    p = sub.add_parser("jets", help="jet separation of a constrained linear system")
    p.add_argument(
        "system",
        help='JSON (or @file): {"n":2,"d":3,"constraints":[{"type":"mult",'
        '"point":[0,0],"order":1}],"point":[...]|"random","m_max":3}',
    )
    p.set_defaults(handler=cmd_jets)

    p = sub.add_parser("valuation", help="monomial/twisted valuation computations")
    p.add_argument("--weights", required=True, help="comma-separated, e.g. 1,2")
    p.add_argument("--twist-e", type=int, default=None, help="twist exponent e in t-sqrt(D)*s^e")
    p.add_argument("--twist-D", type=int, default=2, help="twist discriminant (only 2)")
    p.add_argument("--op", choices=("eval", "izumi", "minmult", "galois"), required=True)
    p.add_argument("--f", help="polynomial in s,t,u; sqrt(2) allowed when twisted")
    p.add_argument("--k", type=int, default=None, help="ideal level")
    p.add_argument("--m", type=int, default=None, help="twist parameter m")
    p.set_defaults(handler=cmd_valuation)

    p = sub.add_parser("zariski", help="Zariski decomposition on a declared lattice")
    p.add_argument(
        "description",
        help='JSON (or @file): {"generators":["E","F"],"gram":[[-10,1],[1,0]],'
        '"curves":[{"name":"E","coords":[1,0],"through":false,"mult":1},...],'
        '"D":{"coords":[2,8]}}',
    )
    p.set_defaults(handler=cmd_zariski)

    p = sub.add_parser("ruled", help="ruled-surface model P(O+O(-D)) over a genus-g curve")
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--sweep", action="store_true", help="emit a (g,d) sweep")
    p.add_argument("--g-max", type=int, default=2)
    p.add_argument("--d-max", type=int, default=12)
    p.set_defaults(handler=cmd_ruled)

    p = sub.add_parser("bounds", help="volume bound M(n, eps)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", required=True, help="rational, e.g. 1 or 1/2")
    p.add_argument("--oracle-resolution", type=int, default=256)
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("reproduce", help="re-derive the frozen example table")
    p.add_argument("--filter", default=None, help="only run case ids with this prefix")
    p.set_defaults(handler=cmd_reproduce)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.handler(args)
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = emit(args.format, payload)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
