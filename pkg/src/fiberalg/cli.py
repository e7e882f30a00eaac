"""Command line front end.

Four subcommands cover the library surface: ``decompose`` prints the
sector components of one element, ``verify`` runs the seeded identity
sweeps, ``boost`` shows a decomposition before and after a hyperbolic
transformation, and ``trajectory`` integrates the free-particle action.

Reports are emitted as one JSON document per invocation (``--format
csv`` and ``--format pretty`` flatten the same payload).  Output is
byte-deterministic for a fixed invocation including the seed.  Exit
codes: 0 success, 1 property or tolerance failure, 2 usage error.

Signatures are written as '+'/'-' strings ('++' is the fiber algebra).
Because a leading '-' reads as a flag, signatures that start with a
minus can be written with the 'm'/'p' aliases (for example ``m+``) or
after a ``--`` separator.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .algebra import AlgebraElement, Signature
from .fiber import (
    EUCLIDEAN_FIBER_SIGNATURE,
    EUCLIDEAN_TANGENT_SIGNATURE,
    FIBER_SIGNATURE,
    TANGENT_SIGNATURE,
    boost_element,
    classify_causal,
    decompose_c2,
    decompose_d2,
    decompose_euclidean,
    factorize,
    trajectory_action,
    transform,
)
from .verify import run_verification

__all__ = ["main", "build_parser", "entry"]

SCHEMA_VERSION = "1"
DEFAULT_SAMPLES = 10000
DEFAULT_SEED = 0
DEFAULT_TOL = 1e-10
TRAJECTORY_GATE = 1e-9


def _signature_arg(text: str) -> Signature:
    try:
        return Signature.from_string(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv", "pretty"), default="json", help="output format"
    )
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="PRNG seed for sweeps")
    common.add_argument("--tol", type=float, default=None, help="tolerance override")
    common.add_argument("--samples", type=int, default=None, help="sample count for sweeps")

    parser = argparse.ArgumentParser(
        prog="fiberalg",
        description="Decompose squared group-algebra elements into tangent, momentum, "
        "and action-flow components, and verify the identities they satisfy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="decompose one element")
    p.add_argument("signature", type=_signature_arg, help="signature string, e.g. ++")
    p.add_argument("coeffs", nargs="*", type=float, help="coefficients in subset-bitmask order")
    p.add_argument("--labels", action="store_true", help="print the basis order and exit")

    p = sub.add_parser("verify", parents=[common], help="run the identity sweeps")
    p.add_argument("signature", type=_signature_arg)
    p.add_argument("samples_pos", nargs="?", type=int, metavar="samples")
    p.add_argument("seed_pos", nargs="?", type=int, metavar="seed")
    p.add_argument("tol_pos", nargs="?", type=float, metavar="tol")

    p = sub.add_parser("boost", parents=[common], help="decompose before and after a boost")
    p.add_argument("signature", type=_signature_arg)
    p.add_argument("values", nargs="+", type=float, help="coefficients followed by the rapidity")

    p = sub.add_parser("trajectory", parents=[common], help="integrate the free-particle action")
    p.add_argument("mass", type=float)
    p.add_argument("rapidity", type=float)
    p.add_argument("span", type=float)
    p.add_argument("steps", type=int)
    return parser


def _tangent_dict(t) -> dict:
    return {"dt_dlambda": t.dt, "dq_dlambda": t.dq, "ds_dlambda": t.ds}


def _momentum_dict(m) -> dict:
    return {"H": m.H, "p": m.p, "m": m.m}


def _cross_dict(c) -> dict:
    return {
        "c_plus_1": c.c_plus_1,
        "c_plus_e1": c.c_plus_e1,
        "c_minus_1": c.c_minus_1,
        "c_minus_e12": c.c_minus_e12,
    }


def _fiber_dict(dec, tol: float, coeffs: list[float]) -> dict:
    x0 = coeffs[0]
    minimal = abs(coeffs[0] * coeffs[3] - coeffs[1] * coeffs[2]) <= tol * sum(c * c for c in coeffs)
    payload = {
        "tangent": _tangent_dict(dec.tangent),
        "momentum": _momentum_dict(dec.momentum),
        "cross": _cross_dict(dec.cross),
        "dS_dlambda": dec.action_rate,
        "residual": dec.min_action_residual,
        "minimal": minimal,
        "causal_class": classify_causal(dec.tangent, tol).value,
    }
    if minimal and x0 != 0:
        factorization = factorize_payload(coeffs)
        payload["factorization"] = factorization
    else:
        payload["factorization"] = None
    return payload


def factorize_payload(coeffs: list[float]) -> dict:
    element = AlgebraElement(FIBER_SIGNATURE, coeffs)
    factorization = factorize(element)
    return {
        "scale": factorization.scale,
        "factor_e1": [float(c) for c in factorization.first.coeffs],
        "factor_e2": [float(c) for c in factorization.second.coeffs],
    }


def _euclidean_plane_dict(components) -> dict:
    return {
        "p_plus_1": components.p_plus_1,
        "p_plus_e": components.p_plus_e,
        "p_minus": components.p_minus,
    }


def _euclidean_fiber_dict(dec) -> dict:
    def sector(s) -> dict:
        return {"invariant": s.invariant, "vec_1": s.vec_1, "vec_e1": s.vec_e1}

    return {
        "tangent": sector(dec.tangent),
        "momentum": sector(dec.momentum),
        "cross": {
            "invariant_1": dec.cross_invariant_1,
            "invariant_e12": dec.cross_invariant_e12,
            "vec_1": dec.cross_vec_1,
            "vec_e1": dec.cross_vec_e1,
        },
    }


def _decompose_payload(signature: Signature, coeffs: list[float], tol: float) -> dict:
    element = AlgebraElement(signature, coeffs)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "decompose",
        "signature": str(signature),
        "coefficients": coeffs,
        "tolerance": tol,
    }
    if signature == TANGENT_SIGNATURE:
        triple = decompose_c2(element)
        payload["tangent"] = _tangent_dict(triple)
        payload["causal_class"] = classify_causal(triple, tol).value
    elif signature == FIBER_SIGNATURE:
        payload.update(_fiber_dict(decompose_d2(element), tol, coeffs))
    elif signature == EUCLIDEAN_TANGENT_SIGNATURE:
        payload["components"] = _euclidean_plane_dict(decompose_euclidean(element))
    elif signature == EUCLIDEAN_FIBER_SIGNATURE:
        payload["components"] = _euclidean_fiber_dict(decompose_euclidean(element))
    else:
        raise ValueError(
            f"decomposition is defined for signatures +, ++, -, -+; got {signature}"
        )
    return payload


def _cmd_decompose(args, parser) -> tuple[dict, int]:
    signature = args.signature
    if args.labels:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "labels",
            "signature": str(signature),
            "basis": list(signature.basis_labels()),
        }
        return payload, 0
    if len(args.coeffs) != signature.dim:
        parser.error(
            f"signature {signature} needs {signature.dim} coefficients, got {len(args.coeffs)}"
        )
    tol = args.tol if args.tol is not None else DEFAULT_TOL
    try:
        payload = _decompose_payload(signature, list(args.coeffs), tol)
    except ValueError as exc:
        parser.error(str(exc))
    return payload, 0


def _cmd_verify(args, parser) -> tuple[dict, int]:
    samples = args.samples_pos if args.samples_pos is not None else args.samples
    seed = args.seed_pos if args.seed_pos is not None else args.seed
    tol = args.tol_pos if args.tol_pos is not None else args.tol
    samples = samples if samples is not None else DEFAULT_SAMPLES
    tol = tol if tol is not None else DEFAULT_TOL
    if samples < 1:
        parser.error(f"samples must be at least 1, got {samples}")
    report = run_verification(args.signature, samples, seed, tol)
    payload = {"schema_version": SCHEMA_VERSION, "command": "verify"}
    payload.update(report.to_dict())
    return payload, 0 if report.passed else 1


def _cmd_boost(args, parser) -> tuple[dict, int]:
    signature = args.signature
    if len(args.values) != signature.dim + 1:
        parser.error(
            f"boost with signature {signature} needs {signature.dim} coefficients "
            f"plus a rapidity, got {len(args.values)} values"
        )
    coeffs = list(args.values[:-1])
    rapidity = args.values[-1]
    tol = args.tol if args.tol is not None else DEFAULT_TOL
    if signature not in (TANGENT_SIGNATURE, FIBER_SIGNATURE):
        parser.error(f"boost requires signature + or ++, got {signature}")
    element = AlgebraElement(signature, coeffs)
    boosted = transform(element, boost_element(signature, rapidity))
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "boost",
        "signature": str(signature),
        "rapidity": rapidity,
        "before": _decompose_payload(signature, coeffs, tol),
        "after": _decompose_payload(signature, [float(c) for c in boosted.coeffs], tol),
    }
    ch, sh = math.cosh(2 * rapidity), math.sinh(2 * rapidity)
    before, after = payload["before"], payload["after"]
    if signature == TANGENT_SIGNATURE:
        t0, t1 = before["tangent"], after["tangent"]
        payload["residuals"] = {
            "ds_dlambda": abs(t1["ds_dlambda"] - t0["ds_dlambda"]),
            "matrix_dt": abs(t1["dt_dlambda"] - (ch * t0["dt_dlambda"] + sh * t0["dq_dlambda"])),
            "matrix_dq": abs(t1["dq_dlambda"] - (sh * t0["dt_dlambda"] + ch * t0["dq_dlambda"])),
        }
    else:
        t0, t1 = before["tangent"], after["tangent"]
        m0, m1 = before["momentum"], after["momentum"]
        c0, c1 = before["cross"], after["cross"]
        payload["residuals"] = {
            "ds_dlambda": abs(t1["ds_dlambda"] - t0["ds_dlambda"]),
            "m": abs(m1["m"] - m0["m"]),
            "dS_dlambda": abs(after["dS_dlambda"] - before["dS_dlambda"]),
            "c_minus_1": abs(c1["c_minus_1"] - c0["c_minus_1"]),
            "c_minus_e12": abs(c1["c_minus_e12"] - c0["c_minus_e12"]),
            "matrix_dt": abs(t1["dt_dlambda"] - (ch * t0["dt_dlambda"] + sh * t0["dq_dlambda"])),
            "matrix_dq": abs(t1["dq_dlambda"] - (sh * t0["dt_dlambda"] + ch * t0["dq_dlambda"])),
            "matrix_H": abs(m1["H"] - (ch * m0["H"] + sh * m0["p"])),
            "matrix_p": abs(m1["p"] - (sh * m0["H"] + ch * m0["p"])),
        }
    return payload, 0


def _cmd_trajectory(args, parser) -> tuple[dict, int]:
    if args.mass <= 0:
        parser.error(f"mass must be positive, got {args.mass}")
    if args.span <= 0:
        parser.error(f"span must be positive, got {args.span}")
    if args.steps < 1:
        parser.error(f"steps must be at least 1, got {args.steps}")
    record = trajectory_action(args.mass, args.rapidity, args.span, args.steps)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "trajectory",
        "mass": args.mass,
        "rapidity": args.rapidity,
        "span": args.span,
        "steps": args.steps,
        "numeric_S": record.numeric_S,
        "analytic_S": record.analytic_S,
        "error": record.error,
    }
    return payload, 0 if record.error <= TRAJECTORY_GATE else 1


def _flatten(payload: dict, prefix: str = "") -> list[tuple[str, str]]:
    rows = []
    for key, value in payload.items():
        path = f"{prefix}{key}"
        if isinstance(value, dict):
            rows.extend(_flatten(value, f"{path}."))
        elif isinstance(value, list):
            if value and isinstance(value[0], dict):
                for i, item in enumerate(value):
                    rows.extend(_flatten(item, f"{path}[{i}]."))
            else:
                rows.append((path, json.dumps(value)))
        elif isinstance(value, str):
            rows.append((path, value))
        else:
            rows.append((path, json.dumps(value)))
    return rows


def _render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    rows = _flatten(payload)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["field", "value"])
        writer.writerows(rows)
        return buffer.getvalue()
    width = max(len(key) for key, _ in rows)
    return "".join(f"{key.ljust(width)}  {value}\n" for key, value in rows)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "decompose": _cmd_decompose,
        "verify": _cmd_verify,
        "boost": _cmd_boost,
        "trajectory": _cmd_trajectory,
    }
    payload, code = handlers[args.command](args, parser)
    sys.stdout.write(_render(payload, args.format))
    return code


def entry() -> None:
    raise SystemExit(main())
