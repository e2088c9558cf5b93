"""Command line front end: kernel tables, field transforms, self-checks.

    conformal-heat kernel --dim 2 --z 0.5,0 --in points.csv
    conformal-heat apply  --exponent 0,0,0,0,0.5,0 --in field.csv --out out.csv
    conformal-heat verify --suite sl2 --format json

Exit codes: 0 success, 1 failed verification, 2 invalid mathematical
regime, 3 unreadable input.  Numeric output is deterministic: identical
configuration and input produce identical bytes, floats carry 17
significant digits.  The CONFORMAL_HEAT_TOL environment variable overrides
the default series tolerance of 1e-10.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from dataclasses import dataclass, field as dc_field

from .errors import (
    ConformalHeatError,
    DomainError,
    FieldFormatError,
    GridAlignmentError,
    InvalidRegimeError,
)
from .fields_io import format_float, read_field_file, read_points, write_factored, write_grid2d
from .kernels import KernelQuery, as_time, closed_form_1d, closed_form_2d, closed_form_4d, full_kernel_series
from .spectral_calculus import G0Exponent, apply_exp_g0, apply_exp_g0_grid, apply_scaling_direct
from .spherical import GridField2D
from .verify import SUITES, run_suites

_DEFAULT_TOL = 1e-10


@dataclass
class RunConfig:
    dim: int = 2
    z: complex | None = None
    exponent: G0Exponent | None = None
    t: float | None = None
    s_min: float = -16.0
    s_max: float = 16.0
    n: int = 2048
    n_phi: int = 256
    tol: float = _DEFAULT_TOL
    closed_form: bool = False
    suite: str | None = None
    fmt: str = "csv"
    in_path: str | None = None
    out_path: str | None = None
    r_list: list[float] = dc_field(default_factory=list)
    rp_list: list[float] = dc_field(default_factory=list)
    t_list: list[float] = dc_field(default_factory=list)


def _parse_floats(text: str, count: int, what: str) -> list[float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise FieldFormatError(f"{what}: expected {count} comma-separated numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise FieldFormatError(f"{what}: {exc}") from exc


def _parse_float_list(text: str, what: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise FieldFormatError(f"{what}: {exc}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conformal-heat", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--dim", type=int, default=2, help="ambient dimension N >= 1")
        p.add_argument("--grid", help="smin,smax,n[,nphi]")
        p.add_argument("--tol", type=float, help="series tolerance (default 1e-10, env CONFORMAL_HEAT_TOL)")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"), default=None)
        p.add_argument("--in", dest="in_path", help="input file")
        p.add_argument("--out", dest="out_path", help="output file (default stdout)")

    k = sub.add_parser("kernel", help="tabulate semigroup kernels")
    common(k)
    k.add_argument("--z", required=True, help="complex time, re,im")
    k.add_argument("--closed-form", action="store_true", help="use the N in {1,2,4} closed forms")
    k.add_argument("--r", help="comma list of r values (with --rp/--t builds a product grid)")
    k.add_argument("--rp", help="comma list of r' values")
    k.add_argument("--t", help="comma list of cos-angle values")

    a = sub.add_parser("apply", help="apply an exponential to a field file")
    common(a)
    a.add_argument("--exponent", help="z1re,z1im,z2re,z2im,z3re,z3im")
    a.add_argument("--t", type=float, help="apply the dilation for this t instead")

    v = sub.add_parser("verify", help="run self-check suites")
    common(v)
    v.add_argument("--suite", choices=sorted(SUITES), help="run one suite (default: all)")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    cfg.dim = args.dim
    if cfg.dim < 1:
        raise DomainError(f"dim must be >= 1, got {cfg.dim}")
    env_tol = os.environ.get("CONFORMAL_HEAT_TOL")
    if args.tol is not None:
        cfg.tol = args.tol
    elif env_tol is not None:
        try:
            cfg.tol = float(env_tol)
        except ValueError as exc:
            raise FieldFormatError(f"CONFORMAL_HEAT_TOL: {exc}") from exc
    if cfg.tol <= 0:
        raise DomainError("tolerance must be positive")
    if args.grid:
        parts = _parse_float_list(args.grid, "--grid")
        if len(parts) not in (3, 4):
            raise FieldFormatError("--grid needs smin,smax,n[,nphi]")
        cfg.s_min, cfg.s_max, cfg.n = parts[0], parts[1], int(parts[2])
        if len(parts) == 4:
            cfg.n_phi = int(parts[3])
    if args.fmt:
        cfg.fmt = args.fmt
    cfg.in_path = args.in_path
    cfg.out_path = args.out_path

    if args.command == "kernel":
        re_z, im_z = _parse_floats(args.z, 2, "--z")
        cfg.z = complex(re_z, im_z)
        cfg.closed_form = args.closed_form
        if args.r:
            cfg.r_list = _parse_float_list(args.r, "--r")
        if args.rp:
            cfg.rp_list = _parse_float_list(args.rp, "--rp")
        if args.t:
            cfg.t_list = _parse_float_list(args.t, "--t")
    elif args.command == "apply":
        if (args.exponent is None) == (args.t is None):
            raise FieldFormatError("apply needs exactly one of --exponent or --t")
        if args.exponent is not None:
            v = _parse_floats(args.exponent, 6, "--exponent")
            cfg.exponent = G0Exponent(complex(v[0], v[1]), complex(v[2], v[3]), complex(v[4], v[5]))
        cfg.t = args.t
        if cfg.in_path is None:
            raise FieldFormatError("apply needs --in FIELD_FILE")
    elif args.command == "verify":
        cfg.suite = args.suite
        cfg.fmt = args.fmt or "json"
    return cfg


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out_path:
        with open(cfg.out_path, "w") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)


def _kernel_value(cfg: RunConfig, r: float, rp: float, t: float) -> complex:
    if cfg.closed_form:
        if cfg.dim == 1:
            if abs(t) != 1.0:
                raise DomainError("N = 1 admits only t = +1 or t = -1")
            return closed_form_1d(r, t * rp, cfg.z)
        if cfg.dim == 2:
            return closed_form_2d(r, rp, cfg.z, t=t, tol=cfg.tol)
        if cfg.dim == 4:
            return closed_form_4d(r, rp, t, cfg.z, tol=cfg.tol)
        raise DomainError(f"closed forms exist for N in {{1, 2, 4}}, not N = {cfg.dim}")
    if cfg.dim == 1 and abs(t) != 1.0:
        raise DomainError("N = 1 admits only t = +1 or t = -1")
    return full_kernel_series(KernelQuery(cfg.dim, as_time(cfg.z), r, rp, t, cfg.tol))


def cmd_kernel(cfg: RunConfig) -> int:
    if cfg.in_path is not None:
        points = read_points(cfg.in_path)
    else:
        if not (cfg.r_list and cfg.rp_list and cfg.t_list):
            raise FieldFormatError("kernel needs --in POINTS or all of --r, --rp, --t")
        points = [(r, rp, t) for r in cfg.r_list for rp in cfg.rp_list for t in cfg.t_list]
    rows = [(r, rp, t, _kernel_value(cfg, r, rp, t)) for r, rp, t in points]
    if cfg.fmt == "json":
        payload = {
            "dim": cfg.dim,
            "z": [cfg.z.real, cfg.z.imag],
            "closed_form": cfg.closed_form,
            "rows": [
                {"r": r, "r_prime": rp, "t": t, "re_k": k.real, "im_k": k.imag}
                for r, rp, t, k in rows
            ],
        }
        _emit(cfg, json.dumps(payload, indent=2) + "\n")
    else:
        buf = ["r,r_prime,t,re_k,im_k"]
        for r, rp, t, k in rows:
            buf.append(",".join(format_float(x) for x in (r, rp, t, k.real, k.imag)))
        _emit(cfg, "\n".join(buf) + "\n")
    return 0


def _config_echo(cfg: RunConfig) -> dict:
    echo: dict = {"dim": cfg.dim, "tol": cfg.tol}
    if cfg.exponent is not None:
        e = cfg.exponent
        echo["exponent"] = [e.z1.real, e.z1.imag, e.z2.real, e.z2.imag, e.z3.real, e.z3.imag]
    if cfg.t is not None:
        echo["t"] = cfg.t
    return echo


def cmd_apply(cfg: RunConfig) -> int:
    data = read_field_file(cfg.in_path)
    if isinstance(data, GridField2D):
        if cfg.t is not None:
            result = apply_scaling_direct(cfg.t, data)
        else:
            result = apply_exp_g0_grid(cfg.exponent, data)
        out = io.StringIO()
        write_grid2d(out, result, _config_echo(cfg))
    else:
        if cfg.t is not None:
            result = [apply_scaling_direct(cfg.t, f) for f in data]
        else:
            result = [apply_exp_g0(cfg.exponent, f) for f in data]
        out = io.StringIO()
        write_factored(out, result, _config_echo(cfg))
    _emit(cfg, out.getvalue())
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    names = [cfg.suite] if cfg.suite else None
    results = run_suites(names, shape=(cfg.s_min, cfg.s_max, cfg.n))
    all_passed = all(c.passed for c in results)
    if cfg.fmt == "csv":
        buf = ["suite,check,defect,tol,passed"]
        for c in results:
            buf.append(
                f"{c.suite},{c.name!r},{format_float(c.defect)},{format_float(c.tol)},{int(c.passed)}"
            )
        _emit(cfg, "\n".join(buf) + "\n")
    else:
        suites: dict = {}
        for c in results:
            entry = suites.setdefault(c.suite, {"passed": True, "checks": []})
            entry["checks"].append(
                {"name": c.name, "defect": c.defect, "tol": c.tol, "passed": c.passed}
            )
            entry["passed"] = entry["passed"] and c.passed
        payload = {"passed": all_passed, "suites": suites}
        _emit(cfg, json.dumps(payload, indent=2) + "\n")
    return 0 if all_passed else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        if args.command == "kernel":
            return cmd_kernel(cfg)
        if args.command == "apply":
            return cmd_apply(cfg)
        return cmd_verify(cfg)
    except (FieldFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidRegimeError, GridAlignmentError, DomainError, ConformalHeatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
