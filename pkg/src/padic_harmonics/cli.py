"""Batch command-line front end.

One subcommand per computation family; every run validates its flags
before computing, emits a single report (plain, csv or json) on stdout,
and is deterministic for a fixed argument list.  Exit codes: 0 success,
2 usage or validation error (single-line diagnostic on stderr), 1
internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .balls import Ball, ball_coefficients, ball_indicator, verify_partition
from .characters import CharIndex, enumerate_chars
from .dirac import DiracOperator
from .errors import InvalidPrime
from .harmonic import (
    EXACT_CAP_DEFAULT,
    LevelFunction,
    coefficient_rows,
    dft,
    fft,
    synthesize,
)
from .padic import is_prime, parse_padic
from . import __version__


class UsageError(Exception):
    """Bad flag value; message names the offending flag."""


@dataclass
class RunConfig:
    p: int
    precision: int
    level: int | None
    s: float
    t: float | None
    fmt: str
    exact: bool
    exact_cap: int

    def validate(self):
        if not is_prime(self.p):
            raise UsageError(f"--p must be a prime number, got {self.p}")
        if self.precision < 1:
            raise UsageError(f"--precision must be >= 1, got {self.precision}")
        if self.level is not None and self.level < 0:
            raise UsageError(f"--level must be >= 0, got {self.level}")
        if not self.s > 0:
            raise UsageError(f"--s must be > 0, got {self.s}")
        if self.t is not None and not self.t > 0:
            raise UsageError(f"--t must be > 0, got {self.t}")
        if self.exact_cap < 1:
            raise UsageError(f"--exact-cap must be >= 1, got {self.exact_cap}")


def _fmt_value(v) -> str:
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def emit(rows: list[dict], fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        obj = dict(extra or {})
        obj["rows"] = rows
        return json.dumps(obj) + "\n"
    if fmt == "csv":
        if not rows:
            return "\n"
        header = list(rows[0].keys())
        lines = [",".join(header)]
        for r in rows:
            lines.append(",".join(_fmt_value(r[k]) for k in header))
        return "\n".join(lines) + "\n"
    # plain
    lines = []
    for k, v in (extra or {}).items():
        lines.append(f"{k}: {_fmt_value(v)}")
    if rows:
        header = list(rows[0].keys())
        widths = [
            max(len(h), *(len(_fmt_value(r[h])) for r in rows)) for h in header
        ]
        lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for r in rows:
            lines.append(
                "  ".join(_fmt_value(r[h]).ljust(w) for h, w in zip(header, widths))
            )
    return "\n".join(lines) + "\n"


def _parse_values(text: str, exact: bool) -> list:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if exact:
            out.append(Fraction(piece))
        else:
            out.append(complex(piece))
    return out


def _level_function(cfg: RunConfig, args) -> LevelFunction:
    if args.level is None:
        raise UsageError("--level is required for fourier commands")
    if args.values is not None:
        values = _parse_values(args.values, cfg.exact)
    elif args.random_seed is not None:
        import numpy as np

        rng = np.random.default_rng(args.random_seed)
        q = cfg.p**args.level
        z = rng.standard_normal(q) + 1j * rng.standard_normal(q)
        if cfg.exact:
            raise UsageError("--exact cannot be combined with --random-seed")
        values = [complex(v) for v in z]
    else:
        raise UsageError("--values (or --random-seed) is required")
    return LevelFunction(cfg.p, args.level, tuple(values))


def cmd_padic(cfg: RunConfig, args) -> str:
    operands = [parse_padic(t, cfg.p, cfg.precision) for t in args.operands]
    op = args.op
    need = {"add": 2, "mul": 2, "invert": 1, "valuation": 1, "abs": 1,
            "project": 1, "monna": 1}[op]
    if len(operands) != need:
        raise UsageError(f"padic {op} takes {need} operand(s), got {len(operands)}")
    if op in ("add", "mul"):
        x = operands[0] + operands[1] if op == "add" else operands[0] * operands[1]
        rows = [{"op": op, "result": str(x), "value": x.value()}]
    elif op == "invert":
        x = operands[0].invert()
        rows = [{"op": op, "result": str(x), "value": x.value()}]
    elif op == "valuation":
        v = operands[0].valuation()
        rows = [{"op": op, "valuation": str(v), "abs": str(operands[0].abs_p())}]
    elif op == "abs":
        rows = [{"op": op, "abs": str(operands[0].abs_p())}]
    elif op == "project":
        if cfg.level is None:
            raise UsageError("--level is required for padic project")
        rows = [{"op": op, "level": cfg.level, "residue": operands[0].project(cfg.level)}]
    else:  # monna
        m = operands[0].monna()
        rows = [{"op": op, "monna": str(m), "decimal": float(m)}]
    return emit(rows, cfg.fmt)


def cmd_chars(cfg: RunConfig, args) -> str:
    if args.action == "enumerate":
        level = cfg.level if cfg.level is not None else 3
        rows = [{"m": c.m, "n": c.n} for c in enumerate_chars(cfg.p, level)]
        return emit(rows, cfg.fmt, {"p": cfg.p, "level": level})
    # eval
    c = CharIndex(cfg.p, args.m, args.n)
    ph = c(args.at)
    z = ph.to_complex()
    rows = [{"m": c.m, "n": c.n, "at": args.at, "phase": str(ph), "re": z.real, "im": z.imag}]
    return emit(rows, cfg.fmt)


def cmd_fourier(cfg: RunConfig, args) -> str:
    f = _level_function(cfg, args)
    if args.action == "dft":
        rows = coefficient_rows(dft(f, exact_cap=cfg.exact_cap))
    elif args.action == "fft":
        rows = coefficient_rows(fft(f, exact_cap=cfg.exact_cap))
    else:  # roundtrip
        coeffs = fft(f, exact_cap=cfg.exact_cap)
        g = synthesize(coeffs, f.level, exact_cap=cfg.exact_cap)
        err = max(abs(a - b) for a, b in zip(f.as_array(), g.as_array()))
        row = {"level": f.level, "max_abs_error": float(err)}
        if f.is_exact and g.is_exact:
            row["exact_equal"] = all(a == b for a, b in zip(f.values, g.values))
        rows = [row]
    return emit(rows, cfg.fmt, {"p": cfg.p, "level": f.level})


def cmd_ball(cfg: RunConfig, args) -> str:
    if args.action == "partition":
        report = verify_partition(cfg.p, args.r, cfg.level)
        rows = [
            {
                "balls": report.ball_count,
                "interval_length": str(report.interval_length),
                "covers_once": report.covers_once,
                "tiles_unit_interval": report.tiles_unit_interval,
                "total_length": str(report.total_length),
                "ok": report.ok,
            }
        ]
        return emit(rows, cfg.fmt, {"p": cfg.p, "r": args.r})
    b = Ball(cfg.p, args.x, args.r)
    if args.action == "indicator":
        level = cfg.level if cfg.level is not None else b.r
        f = ball_indicator(b, level, exact=cfg.exact)
        rows = [
            {"residue": x, "value": int(v) if cfg.exact else v.real}
            for x, v in enumerate(f.values)
        ]
        return emit(rows, cfg.fmt, {"ball": str(b), "level": level})
    # coefficients
    rows = coefficient_rows(ball_coefficients(b, exact=cfg.exact))
    return emit(rows, cfg.fmt, {"ball": str(b)})


def cmd_zeta(cfg: RunConfig, args) -> str:
    d = DiracOperator(cfg.p, cfg.s)
    report = d.trace(args.levels, t=cfg.t)
    rows = []
    for r in report.rows:
        f = r.as_floats()
        rows.append(
            {
                "level": r.level,
                "count": r.count,
                "term": f["term"],
                "partial_sum": f["partial_sum"],
                "tail_bound": "" if f["tail_bound"] is None else f["tail_bound"],
            }
        )
    return emit(rows, cfg.fmt, {"p": cfg.p, "s": cfg.s, "t": report.t})


def cmd_commutator(cfg: RunConfig, args) -> str:
    c = CharIndex(cfg.p, args.m, args.n)
    level = cfg.level if cfg.level is not None else c.level + 1
    d = DiracOperator(cfg.p, cfg.s)
    report = d.commutator(c, level)
    rows = [
        {"column": str(cp), "target": str(c + cp), "delta": d.eigenvalue(c + cp) - d.eigenvalue(cp)}
        for cp in report.columns
    ]
    extra = {
        "c": str(c),
        "L": level,
        "columns": [str(cp) for cp in report.columns],
        "rank": report.rank,
        "norm": report.norm,
    }
    if cfg.fmt != "json":
        extra["columns"] = " ".join(extra["columns"])
    return emit(rows, cfg.fmt, extra)


def cmd_equivariance(cfg: RunConfig, args) -> str:
    d = DiracOperator(cfg.p, cfg.s)
    level = cfg.level if cfg.level is not None else 3
    dev = d.equivariance_defect(args.y, level)
    rows = [{"y": args.y, "level": level, "s": cfg.s, "deviation": dev}]
    return emit(rows, cfg.fmt)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2, help="prime modulus base")
    common.add_argument("--precision", type=int, default=8, help="digit precision N")
    common.add_argument("--level", type=int, default=None, help="truncation level L")
    common.add_argument("--s", type=float, default=1.0, help="summability parameter")
    common.add_argument("--t", type=float, default=None, help="trace exponent (default: s)")
    common.add_argument(
        "--format", choices=("plain", "csv", "json"), default="plain", dest="fmt"
    )
    common.add_argument("--exact", action="store_true", help="exact cyclotomic scalars")
    common.add_argument(
        "--exact-cap", type=int, default=EXACT_CAP_DEFAULT, help="max points in exact mode"
    )

    parser = argparse.ArgumentParser(
        prog="padic-harmonics",
        description="harmonic analysis, ball expansions and Dirac spectra over Z_p",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("padic", parents=[common], help="digit arithmetic in Z_p")
    sp.add_argument("op", choices=("add", "mul", "invert", "valuation", "abs", "project", "monna"))
    sp.add_argument("operands", nargs="*", help="p=.. N=.. digits=.. | int:<k> | rat:<a>/<b>")

    sp = sub.add_parser("chars", parents=[common], help="dual group of Z_p")
    sp.add_argument("action", choices=("enumerate", "eval"))
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--at", type=int, default=1, help="evaluation point")

    sp = sub.add_parser("fourier", parents=[common], help="transforms on Z/p^LZ")
    sp.add_argument("action", choices=("dft", "fft", "roundtrip"))
    sp.add_argument("--values", type=str, default=None, help="comma-separated values")
    sp.add_argument("--random-seed", type=int, default=None, help="random input seed")

    sp = sub.add_parser("ball", parents=[common], help="ball indicators and expansions")
    sp.add_argument("action", choices=("indicator", "coefficients", "partition"))
    sp.add_argument("--x", type=int, default=0, help="base residue")
    sp.add_argument("--r", type=int, default=1, help="radius exponent")

    sp = sub.add_parser("zeta", parents=[common], help="trace partial sums by level")
    sp.add_argument("--levels", type=int, default=20, help="max level of the sweep")

    sp = sub.add_parser("commutator", parents=[common], help="[D, multiplication] report")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("equivariance", parents=[common], help="[D, translation] deviation")
    sp.add_argument("--y", type=int, default=1, help="translation amount")

    return parser


_COMMANDS = {
    "padic": cmd_padic,
    "chars": cmd_chars,
    "fourier": cmd_fourier,
    "ball": cmd_ball,
    "zeta": cmd_zeta,
    "commutator": cmd_commutator,
    "equivariance": cmd_equivariance,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    cfg = RunConfig(
        p=args.p,
        precision=args.precision,
        level=args.level,
        s=args.s,
        t=args.t,
        fmt=args.fmt,
        exact=args.exact,
        exact_cap=args.exact_cap,
    )
    try:
        cfg.validate()
        if args.command == "zeta" and args.levels < 0:
            raise UsageError(f"--levels must be >= 0, got {args.levels}")
        out = _COMMANDS[args.command](cfg, args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (InvalidPrime, ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # pragma: no cover - defensive
        print(f"internal error: {e}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
