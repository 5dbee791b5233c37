"""Command line front end.

    toricpairs fan validate FILE
    toricpairs fan info FILE
    toricpairs fan enumerate --rays N --gamma-bound G [--format table|json|csv]
    toricpairs pair classify FILE [--format table|json|csv]
    toricpairs verify t1|t2|t3|volumes [--r-max R] [--rays LIST] [--gamma-bound G]
    toricpairs draw FILE [--coeffs a0,a1,...] --out FIG.svg

Exit status: 0 success / PASS, 1 domain failure (invalid fan, FAIL,
non-ample divisor), 2 I/O or parse failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import classify, divisor, fan as fanmod, polytope, svg
from .lattice import LatticeOverflowError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2

FORMATS = ("table", "json", "csv")


class InputError(Exception):
    """Unreadable or malformed input file."""


@dataclass
class RunConfig:
    command: str
    input_path: Optional[Path] = None
    output_format: str = "table"
    r_max: int = 20
    rays: list[int] = field(default_factory=lambda: [5, 6, 7])
    gamma_bound: Optional[int] = None
    svg_path: Optional[Path] = None
    coeffs: Optional[list[int]] = None
    samples: int = 1000
    seed: int = 0
    n_max: int = 6

    def __post_init__(self):
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown format {self.output_format!r}")
        if self.r_max < 1 or self.samples < 1 or self.n_max < 3:
            raise ValueError("numeric options must be positive")
        if any(n < 3 for n in self.rays):
            raise ValueError("ray counts must be at least 3")
        if self.gamma_bound is not None and self.gamma_bound < 0:
            raise ValueError("--gamma-bound must be non-negative")


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def load_fan(path: Path) -> fanmod.CompleteSmoothFan:
    """Read a fan document. FanError propagates; everything else is InputError."""
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}")
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: malformed JSON ({e.msg} at line {e.lineno})")
    try:
        return fanmod.fan_from_document(doc)
    except (KeyError, TypeError) as e:
        raise InputError(f"{path}: {e.args[0] if e.args else e}")


def _matrix_lines(m) -> list[str]:
    width = max(len(str(v)) for row in m for v in row)
    return ["  [" + " ".join(str(v).rjust(width) for v in row) + "]" for row in m]


def fan_summary(f: fanmod.CompleteSmoothFan) -> list[str]:
    return [
        f"rays: {' '.join(repr(u) for u in f.rays)}",
        f"n: {f.n}",
        f"gammas: {list(f.gammas)}",
        f"picard_rank: {fanmod.picard_rank(f)}",
        "intersection_matrix:",
        *_matrix_lines(divisor.intersection_matrix(f)),
    ]


def cmd_fan_validate(cfg: RunConfig, out) -> int:
    f = load_fan(cfg.input_path)
    out.write("valid\n" + "\n".join(fan_summary(f)) + "\n")
    return EXIT_OK


def cmd_fan_info(cfg: RunConfig, out) -> int:
    f = load_fan(cfg.input_path)
    anti = divisor.canonical_divisor(f)
    verdict = divisor.is_ample(-anti)
    lines = fan_summary(f) + [
        f"canonical_key: {list(fanmod.canonical_key(f))}",
        f"self_intersections: {[-g for g in f.gammas]}",
        f"gamma_sum: {sum(f.gammas)} (3n-12 = {3 * f.n - 12})",
        f"anticanonical_kleiman: {list(verdict.kleiman)}",
        f"del_pezzo: {'yes' if verdict.ample else 'no'}",
    ]
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig, out) -> int:
    n = cfg.rays[0]
    keys = fanmod.enumerate_fans(n, cfg.gamma_bound)
    if cfg.output_format == "json":
        out.write(_dumps({"rays": n, "bound": cfg.gamma_bound, "fans": [list(k) for k in keys]}))
    elif cfg.output_format == "csv":
        out.write(_csv(["gammas"], [[" ".join(map(str, k))] for k in keys]))
    else:
        for k in keys:
            out.write("(" + ",".join(map(str, k)) + ")\n")
    return EXIT_OK


def cmd_pair_classify(cfg: RunConfig, out) -> int:
    f = load_fan(cfg.input_path)
    records = classify.classify_pairs(f)
    if cfg.output_format == "json":
        out.write(_dumps(classify.classification_document(f, records)))
    elif cfg.output_format == "csv":
        out.write(_csv(classify.CSV_HEADER, classify.classification_rows(f, records)))
    else:
        ample = sum(r.ample for r in records)
        out.write(f"fan {list(fanmod.canonical_key(f))}, {len(records)} pairs, {ample} ample\n")
        out.write(f"{'':2}{'D':<16}{'kleiman':<28}witness\n")
        for r in records:
            mark = "*" if r.ample else " "
            d = "{" + ",".join(map(str, r.delta.sorted())) + "}"
            w = "-" if r.witness is None else str(r.witness)
            out.write(f"{mark:2}{d:<16}{str(list(r.kleiman_vector)):<28}{w}\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out) -> int:
    which = cfg.command.split()[-1]
    if which == "t1":
        bound = 6 if cfg.gamma_bound is None else cfg.gamma_bound
        report = classify.verify_theorem_1(cfg.rays, bound)
    elif which == "t2":
        report = classify.verify_theorem_2()
    elif which == "t3":
        report = classify.verify_theorem_3(cfg.r_max)
    else:
        bound = 3 if cfg.gamma_bound is None else cfg.gamma_bound
        report = classify.verify_volumes(cfg.samples, cfg.n_max, bound, seed=cfg.seed)
    if cfg.output_format == "json":
        out.write(_dumps(report.to_document()))
    else:
        out.write("\n".join(report.summary_lines()) + "\n")
    return EXIT_OK if report.passed else EXIT_DOMAIN


def cmd_draw(cfg: RunConfig, out) -> int:
    f = load_fan(cfg.input_path)
    P = None
    if cfg.coeffs is not None:
        P = polytope.polytope_of(divisor.divisor(f, cfg.coeffs))
    text = svg.render(f, P)
    try:
        Path(cfg.svg_path).write_text(text)
    except OSError as e:
        raise InputError(f"cannot write {cfg.svg_path}: {e.strerror or e}")
    out.write(f"wrote {cfg.svg_path}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricpairs", description="Log smooth toric del Pezzo pairs.")
    sub = p.add_subparsers(dest="group", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=FORMATS, default="table")

    fan_p = sub.add_parser("fan", help="fan files and enumeration")
    fan_sub = fan_p.add_subparsers(dest="action", required=True)
    for name in ("validate", "info"):
        sp = fan_sub.add_parser(name)
        sp.add_argument("file", type=Path)
    sp = fan_sub.add_parser("enumerate")
    sp.add_argument("--rays", type=int, required=True)
    sp.add_argument("--gamma-bound", type=int, required=True)
    fmt(sp)

    pair_p = sub.add_parser("pair", help="classify pairs (X, D)")
    pair_sub = pair_p.add_subparsers(dest="action", required=True)
    sp = pair_sub.add_parser("classify")
    sp.add_argument("file", type=Path)
    fmt(sp)

    sp = sub.add_parser("verify", help="run a theorem suite")
    sp.add_argument("action", choices=("t1", "t2", "t3", "volumes"))
    sp.add_argument("--r-max", type=int, default=20)
    sp.add_argument("--rays", type=_int_list, default=[5, 6, 7])
    sp.add_argument("--gamma-bound", type=int)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("table", "json"), default="table")

    sp = sub.add_parser("draw", help="write an SVG of the fan and optional polygon")
    sp.add_argument("file", type=Path)
    sp.add_argument("--coeffs", type=_int_list)
    sp.add_argument("--out", type=Path, required=True)
    return p


def config_from_args(args) -> RunConfig:
    group = args.group
    action = getattr(args, "action", None)
    command = f"{group} {action}" if action else group
    kw = dict(command=command, output_format=getattr(args, "format", "table"))
    if hasattr(args, "file"):
        kw["input_path"] = args.file
    if group == "fan" and action == "enumerate":
        kw.update(rays=[args.rays], gamma_bound=args.gamma_bound)
    if group == "verify":
        kw.update(r_max=args.r_max, rays=args.rays, gamma_bound=args.gamma_bound,
                  samples=args.samples, n_max=args.n_max, seed=args.seed)
    if group == "draw":
        kw.update(svg_path=args.out, coeffs=args.coeffs)
    return RunConfig(**kw)


COMMANDS = {
    "fan validate": cmd_fan_validate,
    "fan info": cmd_fan_info,
    "fan enumerate": cmd_enumerate,
    "pair classify": cmd_pair_classify,
    "verify t1": cmd_verify,
    "verify t2": cmd_verify,
    "verify t3": cmd_verify,
    "verify volumes": cmd_verify,
    "draw": cmd_draw,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = config_from_args(args)
    except ValueError as e:
        err.write(f"error: {e}\n")
        return EXIT_IO
    try:
        return COMMANDS[cfg.command](cfg, out)
    except InputError as e:
        err.write(f"error: {e}\n")
        return EXIT_IO
    except fanmod.FanError as e:
        out.write(f"invalid fan: {e}\n")
        return EXIT_DOMAIN
    except polytope.NotAmpleError as e:
        err.write(f"error: {e}\n")
        return EXIT_DOMAIN
    except (divisor.DivisorError, LatticeOverflowError) as e:
        err.write(f"error: {e}\n")
        return EXIT_DOMAIN
    except ValueError as e:
        err.write(f"error: {e}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
