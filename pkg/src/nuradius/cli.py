"""Command-line front end.

Exit codes: 0 success, 1 I/O or parse error, 2 space validation failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import lp as lpmod
from .errors import NuRadiusError
from .fixtures import OPERATOR_SPACES, fixture_operator, fixtures
from .operators import OperatorMatrix, numerical_radius, operator_norm
from .orthogonality import is_operator_orthogonal, is_w_orthogonal, lambda_profile_min
from .smoothness import classify
from .space import BUILTIN_SPACES, DEFAULT_TOLERANCE, PolyhedralSpace, builtin_space, validate

SUBCOMMANDS = ("validate", "norm", "wnorm", "attain", "ortho", "smooth", "lp", "fixtures")
OPERATOR_ARITY = {"validate": 0, "norm": 1, "wnorm": 1, "attain": 1, "smooth": 1, "ortho": 2}
DEFAULT_SEED = 20240101


class InputError(Exception):
    pass


def _read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _field(d, key: str, path: str, required=True):
    if not isinstance(d, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    if key not in d:
        if required:
            raise InputError(f"{path}: missing field '{key}'")
        return None
    return d[key]


def _matrix(value, key: str, path: str) -> np.ndarray:
    try:
        M = np.array(value, dtype=float)
    except (TypeError, ValueError):
        raise InputError(f"{path}: field '{key}' must be a rectangular array of numbers") from None
    if M.ndim != 2:
        raise InputError(f"{path}: field '{key}' must be a list of rows")
    return M


def load_space_arg(source: str, tolerance: float | None = None) -> PolyhedralSpace:
    """Built-in name or JSON file; ``tolerance`` overrides the file's value."""
    if source in BUILTIN_SPACES:
        return builtin_space(source, tolerance or DEFAULT_TOLERANCE)
    d = _read_json(source)
    V = _matrix(_field(d, "vertices", source), "vertices", source)
    F = _field(d, "facets", source, required=False)
    if F is not None:
        F = _matrix(F, "facets", source)
    dim = _field(d, "dim", source, required=False)
    if dim is not None and V.shape[1] != dim:
        raise InputError(f"DimensionMismatch: {source}: field 'dim' is {dim} but vertices have length {V.shape[1]}")
    if tolerance is None:
        tolerance = float(d.get("tolerance", DEFAULT_TOLERANCE))
    try:
        return PolyhedralSpace.from_vertices(
            V, F, tolerance, symmetric=bool(d.get("symmetric", False)), name=d.get("name"),
            vertex_labels=d.get("vertex_labels"), facet_labels=d.get("facet_labels"))
    except NuRadiusError as exc:
        raise InputError(f"{type(exc).__name__}: {source}: {exc}") from None


def load_operator_arg(source: str, space: PolyhedralSpace) -> OperatorMatrix:
    if source.startswith("fixture:"):
        name = source.split(":", 1)[1]
        if name not in OPERATOR_SPACES:
            raise InputError(f"unknown fixture operator {name!r}")
        M = fixture_operator(name).entries
    else:
        M = _matrix(_field(_read_json(source), "matrix", source), "matrix", source)
    if M.shape != (space.dim, space.dim):
        raise InputError(f"DimensionMismatch: operator {source} has shape {M.shape}, space dimension is {space.dim}")
    return OperatorMatrix(space, M)


def _tolerance_override(args) -> float | None:
    if args.tolerance is not None:
        return args.tolerance
    env = os.environ.get("NURADIUS_TOLERANCE")
    if env:
        try:
            return float(env)
        except ValueError:
            raise InputError(f"NURADIUS_TOLERANCE={env!r} is not a number") from None
    return None


def _emit(obj, fmt: str, text: str, out):
    if fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _report_text(rep, space) -> str:
    name = "operator norm" if rep.kind == "operator_norm" else "numerical radius"
    lines = [f"{name}: {rep.value:.12g}"]
    for w in rep.witnesses:
        lab = space.vertex_label(w.vertex)
        if w.facet is not None:
            lab = f"({lab}, {space.facet_label(w.facet)})"
        lines.append(f"  {lab:<16} {w.signed_value:+.12g}")
    lines.append(f"  sign classes: {len(rep.sign_classes)}")
    lines.append(f"  runner-up: {'-' if rep.runner_up is None else f'{rep.runner_up:.12g}'}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nuradius",
        description="Numerical radius, orthogonality and smoothness of operators on polyhedral spaces.")
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd in SUBCOMMANDS:
        p = sub.add_parser(cmd)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--tolerance", type=float, default=None)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--samples", type=int, default=2000)
        if cmd in OPERATOR_ARITY:
            p.add_argument("--space", required=True, help="built-in name or JSON file")
            p.add_argument("--op", action="append", default=[], help="operator JSON file or fixture:<name>")
        if cmd == "ortho":
            p.add_argument("--norm-kind", choices=("w", "operator"), default="w")
        if cmd == "lp":
            p.add_argument("--p", type=float, required=True)
            p.add_argument("--dim", type=int, required=True)
            p.add_argument("--matrix", help="operator JSON file")
            p.add_argument("--vector", help="JSON list, for --mode support")
            p.add_argument("--mode", choices=("support", "recover", "estimate"), default="support")
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args, out, err)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except NuRadiusError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    except KeyError as exc:
        err.write(f"error: {exc.args[0]}\n")
        return 1


def _dispatch(args, out, err) -> int:
    override = _tolerance_override(args)
    if override is not None and override <= 0:
        raise InputError("tolerance must be positive")
    tol = override if override is not None else DEFAULT_TOLERANCE
    cmd = args.command

    if cmd == "fixtures":
        items = []
        for fx in fixtures(tol):
            d = {"name": fx.name, "kind": fx.kind, "space": fx.space.name}
            if fx.operator is not None:
                d["matrix"] = fx.operator.entries.tolist()
            else:
                d.update(fx.space.to_dict())
            items.append(d)
        text = "\n".join(f"{d['kind']:<9} {d['name']:<16} on {d['space']}" for d in items)
        _emit(items, args.format, text, out)
        return 0

    if cmd == "lp":
        return _lp(args, tol, out)

    space = load_space_arg(args.space, override)
    want = OPERATOR_ARITY[cmd]
    if len(args.op) != want:
        raise InputError(f"{cmd} requires {want} operator(s) via --op, got {len(args.op)}")
    report = validate(space)
    if cmd == "validate":
        _emit(report.to_dict(), args.format, report.summary(), out)
        return 0 if report.valid else 2
    if not report.valid:
        err.write("error: space failed validation\n" + report.summary() + "\n")
        return 2

    ops = [load_operator_arg(src, space) for src in args.op]

    if cmd in ("norm", "wnorm"):
        rep = operator_norm(ops[0]) if cmd == "norm" else numerical_radius(ops[0])
        _emit(rep.to_dict(space), args.format, _report_text(rep, space), out)
    elif cmd == "attain":
        op, w = operator_norm(ops[0]), numerical_radius(ops[0])
        _emit({"operator_norm": op.to_dict(space), "numerical_radius": w.to_dict(space)},
              args.format, _report_text(op, space) + "\n" + _report_text(w, space), out)
    elif cmd == "smooth":
        rep = classify(ops[0])
        _emit(rep.to_dict(space), args.format, rep.table(space), out)
    elif cmd == "ortho":
        T, A = ops
        if args.norm_kind == "w":
            orth, cert = is_w_orthogonal(T, A)
        else:
            orth, cert = is_operator_orthogonal(T, A), None
        if A.is_zero():
            lam, val = 0.0, (numerical_radius(T) if args.norm_kind == "w" else operator_norm(T)).value
        else:
            lam, val = lambda_profile_min(T, A, args.norm_kind)
        d = {"orthogonal": orth, "norm_kind": args.norm_kind}
        if cert is not None:
            d["certificate"] = cert.to_dict()
        d["min_profile"] = {"lambda": lam, "value": val}
        text = (f"orthogonal ({args.norm_kind}): {orth}\n"
                f"min over lambda: {val:.12g} at lambda = {lam:.12g}")
        if cert is not None:
            text += "\ncertificate: " + ", ".join(
                f"{t:.6g}*({space.vertex_label(p.vertex_index)}, {space.facet_label(p.facet_index)})"
                for p, t in zip(cert.pairs, cert.weights))
        _emit(d, args.format, text, out)
    return 0


def _lp(args, tol, out) -> int:
    space = lpmod.LpSpace(args.dim, args.p, tol)
    if args.mode == "support":
        if args.vector is None:
            raise InputError("--mode support requires --vector")
        try:
            x = np.array(json.loads(args.vector), dtype=float)
        except (json.JSONDecodeError, TypeError, ValueError):
            raise InputError("--vector must be a JSON list of numbers") from None
        f = lpmod.lp_support_functional(space, x)
        d = {"p": args.p, "vector": x.tolist(), "functional": f.tolist(), "pairing": float(f @ x),
             "dual_norm": space.dual_norm(f)}
        _emit(d, args.format, f"x* = {f.tolist()}  (x*(x) = {f @ x:.12g})", out)
        return 0

    if args.matrix is None:
        raise InputError(f"--mode {args.mode} requires --matrix")
    M = _matrix(_field(_read_json(args.matrix), "matrix", args.matrix), "matrix", args.matrix)
    if M.shape != (args.dim, args.dim):
        raise InputError(f"DimensionMismatch: matrix has shape {M.shape}, --dim is {args.dim}")
    if args.mode == "recover":
        R = lpmod.recover_entries(space, lpmod.make_oracle(space, M))
        err = float(np.max(np.abs(R - M)))
        _emit({"p": args.p, "recovered": R.tolist(), "max_abs_error": err}, args.format,
              f"recovered matrix (max abs error {err:.3g}):\n{np.array2string(R, precision=12)}", out)
    else:
        est = lpmod.lp_numerical_radius_estimate(space, M, args.samples, args.seed)
        _emit({"p": args.p, "estimate": est, "heuristic": True, "lower_bound": True,
               "samples": args.samples, "seed": args.seed}, args.format,
              f"numerical radius >= {est:.12g} (heuristic lower bound, {args.samples} samples)", out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
