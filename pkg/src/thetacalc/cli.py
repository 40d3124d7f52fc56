"""Command-line frontend.

Every computation is exposed as a subcommand with deterministic output in
json (default), markdown or csv form.  Computed integers are serialized
as decimal strings so arbitrary precision survives JSON; echoed inputs
stay plain numbers.  Exit codes: 0 success, 1 internal exactness failure,
2 domain error, 3 term-budget refusal, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import mpmath

from . import elliptic_k3 as ek
from . import mukai as mk
from . import power_duality as pdl
from . import verlinde as vl
from .errors import ArithmeticBugError, DomainError, TermBudgetError

ENV_TERM_BUDGET = "THETACALC_TERM_BUDGET"
FORMATS = ("json", "markdown", "csv")


@dataclass
class CliConfig:
    output_format: str = "json"
    term_budget: int = vl.DEFAULT_TERM_BUDGET
    lattice_preset: str = "k3_elliptic"
    precision: int = 30
    extra_presets: dict = field(default_factory=dict)

    def lattice(self) -> mk.NSLattice:
        return mk.lattice_preset(self.lattice_preset, self.extra_presets)


class _UsageError(Exception):
    def __init__(self, parser: argparse.ArgumentParser, message: str):
        super().__init__(message)
        self.parser = parser
        self.message = message


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(self, message)


def _s(value: int) -> str:
    return str(int(value))


def _frac(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _resolve_config(args) -> CliConfig:
    cfg = CliConfig()
    if getattr(args, "config", None):
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise DomainError(f"cannot read config file: {exc}")
        for key in ("output_format", "term_budget", "lattice_preset", "precision"):
            if key in data:
                setattr(cfg, key, data[key])
        for name, gram in data.get("lattice_presets", {}).items():
            cfg.extra_presets[name] = mk.NSLattice(
                tuple(tuple(row) for row in gram), name=name
            )
    env_budget = os.environ.get(ENV_TERM_BUDGET)
    if env_budget is not None:
        try:
            cfg.term_budget = int(env_budget)
        except ValueError:
            raise DomainError(f"{ENV_TERM_BUDGET} must be an integer, got {env_budget!r}")
    if getattr(args, "format", None):
        cfg.output_format = args.format
    if getattr(args, "term_budget", None) is not None:
        cfg.term_budget = args.term_budget
    if getattr(args, "lattice", None):
        cfg.lattice_preset = args.lattice
    if getattr(args, "precision", None) is not None:
        cfg.precision = args.precision
    if cfg.output_format not in FORMATS:
        raise DomainError(f"unknown output format {cfg.output_format!r}")
    return cfg


def _parse_vector(spec: str, lattice: mk.NSLattice) -> mk.MukaiVector:
    parts = spec.split(":")
    if len(parts) != 3:
        raise DomainError(f"vector spec must look like 'rank:c1,c2:point', got {spec!r}")
    try:
        rank = int(parts[0])
        coords = tuple(int(c) for c in parts[1].split(","))
        point = int(parts[2])
    except ValueError:
        raise DomainError(f"non-integer entry in vector spec {spec!r}")
    return mk.MukaiVector(rank, mk.NSClass(lattice, coords), point)


def _parse_class(spec: str, lattice: mk.NSLattice) -> mk.NSClass:
    try:
        coords = tuple(int(c) for c in spec.split(","))
    except ValueError:
        raise DomainError(f"non-integer entry in class spec {spec!r}")
    return mk.NSClass(lattice, coords)


def _vector_dict(v: mk.MukaiVector) -> dict:
    return {"rank": _s(v.rank), "c1": [_s(c) for c in v.c1.coords], "point": _s(v.point)}


def _cmd_verlinde(args, cfg: CliConfig) -> dict:
    query = vl.VerlindeQuery(args.r, args.k, args.g)
    out = {"r": args.r, "k": args.k, "g": args.g}
    out["value"] = _s(vl.verlinde_number(query, term_budget=cfg.term_budget))
    if args.modified:
        out["modified_value"] = _s(vl.modified_verlinde(query, term_budget=cfg.term_budget))
    if args.check_symmetry:
        report = vl.check_rank_level_symmetry(query, term_budget=cfg.term_budget)
        out["partner_value"] = _s(report.partner_value)
        out["symmetry_holds"] = report.symmetry_holds
    if args.float_oracle:
        out["float_value"] = mpmath.nstr(vl.float_oracle(query, cfg.precision), 15)
    out["formula"] = "verlinde_number"
    return out


def _cmd_mukai(args, cfg: CliConfig) -> dict:
    lattice = cfg.lattice()
    out = {"preset": lattice.name, "v": args.v}
    v = _parse_vector(args.v, lattice)
    op = args.mukai_op
    if op == "fm":
        transformed = mk.fm_transform(v)
        out["transform"] = _vector_dict(transformed)
        out["pairing_preserved"] = mk.mukai_pairing(transformed, transformed) == mk.mukai_pairing(v, v)
        out["formula"] = "fourier_mukai_cohomological"
        return out
    out["w"] = args.w
    w = _parse_vector(args.w, lattice)
    if op == "pair":
        out["pairing"] = _s(mk.mukai_pairing(v, w))
        out["chi_tensor"] = _s(mk.chi_tensor(v, w))
        out["formula"] = "mukai_pairing"
    elif op == "chi-k3":
        out["d_v"] = _s(mk.dv(v))
        out["d_w"] = _s(mk.dv(w))
        out["value"] = _s(mk.chi_k3(v, w))
        out["formula"] = "chi_k3_binomial"
    elif op == "chi-abelian":
        variant = mk.ABELIAN_VARIANTS[args.variant]
        out["variant"] = variant
        out["value"] = _s(mk.chi_abelian(v, w, variant))
        if variant == "kummer":
            out["c1_proportional"] = mk.c1_proportional(v, w)
        out["formula"] = {
            "albanese_plus": "chi_albanese_det",
            "albanese_minus": "chi_albanese_fm_det",
            "kummer": "chi_kummer",
        }[variant]
    else:  # conjecture
        H = _parse_class(args.H, lattice)
        out["H"] = args.H
        verdict = mk.check_conjecture(
            v,
            w,
            H,
            v_c1_effective=args.v_effective,
            w_c1_effective=args.w_effective,
        )
        out["orthogonal"] = verdict.orthogonal
        out["v_primitive"] = verdict.v_primitive
        out["w_primitive"] = verdict.w_primitive
        out["v_positive"] = verdict.v_positive
        out["w_positive"] = verdict.w_positive
        out["slope_condition"] = verdict.slope_condition
        out["applicable"] = verdict.applicable
        out["formula"] = "strange_duality_hypotheses"
    return out


def _cmd_duality(args, cfg: CliConfig) -> dict:
    op = args.duality_op
    if op == "wedge":
        matrix = pdl.wedge_duality_matrix(args.n, args.k)
        out = {
            "n": args.n,
            "k": args.k,
            "size": _s(matrix.size),
            "index_order": "colex",
            "determinant": _s(matrix.determinant()),
            "entries": [[i, j, s] for i, j, s in zip(range(matrix.size), matrix.row_to_col, matrix.signs)],
        }
        if args.export:
            Path(args.export).write_text(
                json.dumps(matrix.to_json_dict(), separators=(",", ":")) + "\n"
            )
            out["exported"] = args.export
        out["formula"] = "wedge_complement_pairing"
        return out
    if op == "sym":
        matrix = pdl.sym_duality_matrix(args.wdim, args.n)
        return {
            "w_dim": args.wdim,
            "n": args.n,
            "size": _s(matrix.size),
            "monomials": [list(alpha) for alpha in matrix.monomials],
            "diagonal": [_s(d) for d in matrix.diagonal],
            "full_rank": matrix.full_rank,
            "formula": "symmetric_power_pairing",
        }
    # theta-vanishes
    try:
        data = json.loads(Path(args.points).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read points file: {exc}")
    try:
        z_config = pdl.PointConfig.from_json_dict({"model": data["model"], "points": data["Z"]})
        w_config = pdl.PointConfig.from_json_dict({"model": data["model"], "points": data["W"]})
    except (KeyError, ValueError, TypeError) as exc:
        raise DomainError(f"malformed points file: {exc}")
    model = z_config.section_model
    z_points = list(z_config.points)
    w_points = list(w_config.points)
    vanishes = pdl.theta_vanishes(z_points, w_points, model)
    n = len(model)
    k = len(z_points)
    rows = pdl.evaluation_matrix(z_points + w_points, model)
    determinant = pdl.det_exact(rows)
    alpha = pdl.wedge_coefficients(rows[:k], n, k)
    beta = pdl.wedge_coefficients(rows[k:], n, n - k)
    pairing = pdl.pair_wedge(n, k, alpha, beta)
    return {
        "model": [list(e) for e in model],
        "Z": [[_frac(x), _frac(y)] for x, y in z_points],
        "W": [[_frac(x), _frac(y)] for x, y in w_points],
        "vanishes": vanishes,
        "determinant": _frac(determinant),
        "pairing": _frac(pairing),
        "formula": "theta_divisor_membership",
    }


def _cmd_elliptic(args, cfg: CliConfig) -> dict:
    op = args.elliptic_op
    if op == "normalize":
        vector, twists = ek.normalize_vector(args.r, args.k, args.p)
        return {
            "r": args.r,
            "k": args.k,
            "p": args.p,
            "twists": _s(twists),
            "a": _s(vector.a),
            "vector": _vector_dict(vector.vector),
            "formula": "fiber_twist_normalization",
        }
    out = {"r": args.r, "s": args.s, "a": args.a, "b": args.b}
    if op == "nu":
        result = ek.compute_nu(args.r, args.s, args.a, args.b)
        out["nu"] = _s(result.nu)
        out["divisible"] = result.divisible
        out["nu_strong"] = result.nu_strong
        out["chi_pair"] = _s(ek.chi_pair(args.r, args.s, args.a, args.b))
        out["formula"] = "fiber_twist_exponent"
    elif op == "theta-class":
        theta = ek.theta_bundle_class(args.r, args.s, args.a, args.b)
        out["nu"] = _s(ek.compute_nu(args.r, args.s, args.a, args.b).nu)
        out["L"] = {"sigma": _s(theta.L.coords[0]), "fiber": _s(theta.L.coords[1])}
        out["m_exponent"] = _s(theta.m_exponent)
        out["chi_L"] = _s(theta.chi)
        out["hilb_points"] = _s(theta.hilb_points)
        out["formula"] = "theta_line_bundle_class"
    else:  # dims
        theta = ek.theta_bundle_class(args.r, args.s, args.a, args.b)
        dims = ek.strange_duality_dims(args.r, args.s, args.a, args.b)
        out["chi_L"] = _s(theta.chi)
        out["dim_a"] = _s(dims.dim_a)
        out["dim_b"] = _s(dims.dim_b)
        out["equal"] = dims.equal
        out["corollary_applies"] = dims.corollary_applies
        out["formula"] = "strange_duality_dimensions"
    return out


def _build_parser() -> _Parser:
    parser = _Parser(prog="thetacalc", description=__doc__)
    parser.add_argument("--format", choices=FORMATS, help="output format (default json)")
    parser.add_argument("--config", help="path to a JSON config file")
    parser.add_argument("--term-budget", type=int, help="maximum subset count for the rank-level sum")
    parser.add_argument("--lattice", help="lattice preset name (default k3_elliptic)")
    parser.add_argument("--precision", type=int, help="decimal digits for the float oracle")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verlinde", help="rank-level theta section counts")
    p.add_argument("r", type=int)
    p.add_argument("k", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--modified", action="store_true")
    p.add_argument("--check-symmetry", action="store_true")
    p.add_argument("--float-oracle", action="store_true")
    p.set_defaults(handler=_cmd_verlinde)

    p = sub.add_parser("mukai", help="Mukai vector pairings and Euler characteristics")
    msub = p.add_subparsers(dest="mukai_op", required=True)
    for name in ("pair", "chi-k3", "chi-abelian", "fm", "conjecture"):
        mp = msub.add_parser(name)
        mp.add_argument("--v", required=True, help="vector as rank:c1,c2:point")
        if name != "fm":
            mp.add_argument("--w", required=True, help="vector as rank:c1,c2:point")
        if name == "chi-abelian":
            mp.add_argument(
                "--variant",
                choices=("s2", "s3", "s4", "albanese_plus", "albanese_minus", "kummer"),
                default="s2",
            )
        if name == "conjecture":
            mp.add_argument("--H", required=True, help="polarization class as c1,c2")
            mp.add_argument("--v-effective", action="store_true")
            mp.add_argument("--w-effective", action="store_true")
        mp.set_defaults(handler=_cmd_mukai)

    p = sub.add_parser("duality", help="exterior/symmetric power pairing matrices")
    dsub = p.add_subparsers(dest="duality_op", required=True)
    dp = dsub.add_parser("wedge")
    dp.add_argument("n", type=int)
    dp.add_argument("k", type=int)
    dp.add_argument("--export", help="write the sparse matrix to this JSON file")
    dp.set_defaults(handler=_cmd_duality)
    dp = dsub.add_parser("sym")
    dp.add_argument("wdim", type=int)
    dp.add_argument("n", type=int)
    dp.set_defaults(handler=_cmd_duality)
    dp = dsub.add_parser("theta-vanishes")
    dp.add_argument("--points", required=True, help="JSON file {model, Z, W}")
    dp.set_defaults(handler=_cmd_duality)

    p = sub.add_parser("elliptic", help="elliptic-surface theta bookkeeping")
    esub = p.add_subparsers(dest="elliptic_op", required=True)
    ep = esub.add_parser("normalize")
    ep.add_argument("r", type=int)
    ep.add_argument("k", type=int)
    ep.add_argument("p", type=int)
    ep.set_defaults(handler=_cmd_elliptic)
    for name in ("nu", "theta-class", "dims"):
        ep = esub.add_parser(name)
        ep.add_argument("r", type=int)
        ep.add_argument("s", type=int)
        ep.add_argument("a", type=int)
        ep.add_argument("b", type=int)
        ep.set_defaults(handler=_cmd_elliptic)

    return parser


def _render(out: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out, separators=(",", ":"))
    cells = [
        (key, value if isinstance(value, str) else json.dumps(value, separators=(",", ":")))
        for key, value in out.items()
    ]
    if fmt == "markdown":
        lines = ["| key | value |", "| --- | --- |"]
        lines += [f"| {key} | {value} |" for key, value in cells]
        return "\n".join(lines)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["key", "value"])
    writer.writerows(cells)
    return buffer.getvalue().rstrip("\n")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc.parser.format_usage(), end="", file=sys.stderr)
        print(f"error: {exc.message}", file=sys.stderr)
        return 64
    try:
        cfg = _resolve_config(args)
        out = args.handler(args, cfg)
    except TermBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ArithmeticBugError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_render(out, cfg.output_format))
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
