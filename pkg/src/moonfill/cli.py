"""Command-line entry point: ``moonfill <command> ...``.

Every command builds a :class:`RunReport`.  By default a short text summary is
printed; ``--json`` prints the whole report instead.  Exit status is 0 when
every check passed, 1 when a check failed and 2 on bad input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import bijections as bj
from . import io
from .errors import MoonError
from .fillings import (
    Filling,
    distribution,
    enumerate_fillings,
    mixed_pair,
    ne_count,
    se_count,
    se_ne_distribution,
)
from .fixtures import DEFAULT_SEED, Instance
from .kasraoui import psi, psi_inv
from .polyomino import classify_columns, column_order, h_vector
from .verify import THEOREMS, build_instances, run_suite

STAT_NAMES = {"alpha": "top", "beta": "bottom", "gamma": "left", "delta": "right"}
MAPS = ("psi", "psi-inv", "phi-alpha", "theta", "Theta", "rho", "phi-gamma", "xi", "Sigma", "h", "lambda")


@dataclass
class RunReport:
    command: list[str]
    inputs: dict[str, str] = field(default_factory=dict)
    payload: dict[str, Any] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> str:
        data = {
            "command": self.command,
            "inputs": self.inputs,
            "payload": self.payload,
            "checks": self.checks,
            "passed": self.passed,
            "wall_time": round(self.wall_time, 6),
        }
        return json.dumps(data, sort_keys=True, indent=2)


class _Inputs:
    """Reads input files and records their digests."""

    def __init__(self, report: RunReport):
        self.report = report

    def text(self, path: str, label: str) -> str:
        data = Path(path).read_bytes()
        self.report.inputs[label] = hashlib.sha256(data).hexdigest()
        return data.decode()

    def shape(self, path: str, label: str = "shape"):
        return io.parse_shape(self.text(path, label))

    def filling(self, path: str, shape, label: str = "filling") -> Filling:
        return io.parse_filling(self.text(path, label), shape)


def _ints(text: str | None) -> tuple[int, ...]:
    return io.parse_int_list(text or "")


def _shape_payload(M) -> dict:
    return {"rows": [[r.left, r.right] for r in M.rows], "n": M.n, "m": M.m}


# -- commands ------------------------------------------------------------------------


def cmd_validate(args, report: RunReport, inp: _Inputs) -> str:
    M = inp.shape(args.shape)
    cls = classify_columns(M)
    report.payload.update(
        _shape_payload(M),
        k=cls.k,
        left_part=sorted(cls.left_part),
        right_part=sorted(cls.right_part),
        order=list(column_order(M)),
        column_lengths=list(M.column_lengths),
    )
    report.checks["valid moon polyomino"] = True
    return (f"n={M.n} m={M.m} k={cls.k}\n"
            f"L={sorted(cls.left_part)} R={sorted(cls.right_part)}\n"
            f"order={list(column_order(M))}")


def cmd_enumerate(args, report: RunReport, inp: _Inputs) -> str:
    M = inp.shape(args.shape)
    e, s = _ints(args.e), _ints(args.s)
    h = h_vector(M, e, s)
    report.payload.update(shape=_shape_payload(M), e=list(e), s=list(s), h=list(h))
    if args.list:
        fills = list(enumerate_fillings(M, e, s))
        report.payload["fillings"] = [[list(c) for c in sorted(F.ones)] for F in fills]
        report.payload["count"] = len(fills)
        return "\n".join(" ".join(f"{i},{j}" for i, j in sorted(F.ones)) for F in fills)
    count = sum(1 for _ in enumerate_fillings(M, e, s))
    report.payload["count"] = count
    return str(count)


def _subset_arg(args) -> frozenset[int]:
    return frozenset(_ints(args.subset))


def cmd_stats(args, report: RunReport, inp: _Inputs) -> str:
    M = inp.shape(args.shape)
    F = inp.filling(args.filling, M)
    report.payload.update(e=list(F.e), s=list(F.s), statistic=args.stat)
    if args.stat == "ne":
        value = ne_count(F)
    elif args.stat == "se":
        value = se_count(F)
    else:
        A = _subset_arg(args)
        value, rest = mixed_pair(F, STAT_NAMES[args.stat], A)
        report.payload.update(subset=sorted(A), complement_value=rest)
        report.payload["value"] = value
        return f"{args.stat}({sorted(A)}) = {value}\n{args.stat}(complement) = {rest}"
    report.payload["value"] = value
    return f"{args.stat} = {value}"


def cmd_dist(args, report: RunReport, inp: _Inputs) -> str:
    M = inp.shape(args.shape)
    e, s = _ints(args.e), _ints(args.s)
    if args.stat == "se-ne":
        poly = se_ne_distribution(M, e, s)
    else:
        A = _subset_arg(args)
        poly = distribution(M, e, s, STAT_NAMES[args.stat], A)
        report.payload["subset"] = sorted(A)
    report.payload.update(statistic=args.stat, e=list(e), s=list(s), terms=poly.to_records())
    if args.format == "json":
        return json.dumps(poly.to_records(), sort_keys=True)
    return poly.to_text()


def cmd_verify(args, report: RunReport, inp: _Inputs) -> str:
    extra = []
    if args.shape:
        M = inp.shape(args.shape)
        if args.e is None or args.s is None:
            raise MoonError("--shape needs --e and --s")
        e, s = _ints(args.e), _ints(args.s)
        h_vector(M, e, s)
        extra.append(Instance(M, e, s))
    instances = build_instances(args.seed, args.random, defaults=not args.no_defaults, extra=extra,
                                max_rows=args.max_rows, max_cols=args.max_cols)
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    lines = []
    results = []
    for th in theorems:
        res = run_suite(th, instances, args.seed)
        results.append(res.to_dict())
        for c in res.checks:
            report.checks[f"{th}: {c.name}"] = c.passed
            lines.append(f"{'PASS' if c.passed else 'FAIL'} {th}: {c.name} ({c.cases} cases)")
            if not c.passed:
                lines.append("  counterexample: " + json.dumps(c.counterexample, sort_keys=True))
    report.payload.update(seed=args.seed, random=args.random, instances=len(instances), suites=results)
    lines.append(f"seed {args.seed}")
    return "\n".join(lines)


def _write(args, text: str) -> str:
    if args.output:
        Path(args.output).write_text(text)
    return text.rstrip("\n")


def cmd_bijection(args, report: RunReport, inp: _Inputs) -> str:
    M = inp.shape(args.shape)
    name = args.map
    if name == "psi-inv":
        e, cs = io.parse_compositions(inp.text(args.input, "input"))
        s = io.column_sums_from_compositions(cs)
        F = psi_inv(M, e, s, cs)
        report.payload.update(map=name, image=[list(c) for c in sorted(F.ones)])
        return _write(args, io.format_filling(F))
    F = inp.filling(args.input, M, "input")
    A = _subset_arg(args)
    if name == "psi":
        cs = psi(F)
        report.payload.update(map=name, compositions=[list(c) for c in cs])
        return _write(args, io.format_compositions(cs, F.e))
    if name == "phi-alpha":
        G, stat = bj.phi_alpha(F), ("top", {1})
    elif name == "theta":
        G, stat = bj.theta_r(F, _need(args.index, "--index")), None
    elif name == "Theta":
        G, stat = bj.Theta_alpha(F, A), ("top", A)
    elif name == "rho":
        G, stat = bj.rho(F), ("left", {1})
    elif name == "phi-gamma":
        G, stat = bj.phi_gamma(F), ("left", {1})
    elif name == "xi":
        G, stat = bj.xi_c(F, _need(args.index, "--index")), None
    elif name == "Sigma":
        G, stat = bj.Sigma_gamma(F, A), ("left", A)
    elif name == "h":
        G, stat = bj.h_transport(F), None
        report.payload["target_shape"] = _shape_payload(G.shape)
        report.checks["(se, ne) preserved"] = (se_count(F), ne_count(F)) == (se_count(G), ne_count(G))
    elif name == "lambda":
        if not args.target:
            raise MoonError("--map lambda needs --target")
        target = inp.shape(args.target, "target")
        G, stat = bj.lambda_alpha(F, A, target), None
        report.checks["row-mixed pair preserved"] = mixed_pair(F, "top", A) == mixed_pair(G, "top", A)
    else:
        raise MoonError(f"unknown map {name!r}")
    if stat is not None:
        which, B = stat
        report.checks["pair carried to (se, ne)"] = mixed_pair(F, which, B) == (se_count(G), ne_count(G))
    report.payload.update(map=name, subset=sorted(A), image=[list(c) for c in sorted(G.ones)])
    return _write(args, io.format_filling(G))


def _need(value, flag: str):
    if value is None:
        raise MoonError(f"this map needs {flag}")
    return value


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="moonfill", description="Fillings of moon polyominoes and mixed statistics.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the full JSON report")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="check a shape file and show its column data")
    v.add_argument("shape")
    v.set_defaults(func=cmd_validate)

    en = sub.add_parser("enumerate", parents=[common], help="count or list the fillings with given sums")
    en.add_argument("shape")
    en.add_argument("--e", required=True, help="row sums, e.g. 1,1,0,1")
    en.add_argument("--s", required=True, help="column sums")
    mode = en.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the count (default)")
    mode.add_argument("--list", action="store_true", help="list every filling by its 1-cells")
    en.set_defaults(func=cmd_enumerate)

    st = sub.add_parser("stats", parents=[common], help="statistics of one filling")
    st.add_argument("shape")
    st.add_argument("filling")
    st.add_argument("--stat", choices=("ne", "se", *STAT_NAMES), default="ne")
    st.add_argument("--subset", default="", help="row or column indices, e.g. 2,4")
    st.set_defaults(func=cmd_stats)

    d = sub.add_parser("dist", parents=[common], help="generating polynomial of a statistic pair")
    d.add_argument("shape")
    d.add_argument("--e", required=True)
    d.add_argument("--s", required=True)
    d.add_argument("--stat", choices=("se-ne", *STAT_NAMES), default="se-ne")
    d.add_argument("--subset", default="")
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.set_defaults(func=cmd_dist)

    ve = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ve.add_argument("--theorem", choices=(*THEOREMS, "all"), required=True)
    ve.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ve.add_argument("--random", type=int, default=0, metavar="N", help="add N seeded random instances")
    ve.add_argument("--max-rows", type=int, default=5)
    ve.add_argument("--max-cols", type=int, default=5)
    ve.add_argument("--no-defaults", action="store_true", help="skip the built-in instances")
    ve.add_argument("--shape", help="also verify this shape (needs --e and --s)")
    ve.add_argument("--e")
    ve.add_argument("--s")
    ve.set_defaults(func=cmd_verify)

    b = sub.add_parser("bijection", parents=[common], help="apply one map to a filling")
    b.add_argument("--map", choices=MAPS, required=True)
    b.add_argument("shape")
    b.add_argument("input", help="filling file (composition file for psi-inv)")
    b.add_argument("--subset", default="", help="row subset for Theta/lambda, column subset for Sigma")
    b.add_argument("--index", type=int, help="row for theta, column for xi")
    b.add_argument("--target", help="target shape file for lambda")
    b.add_argument("--output", help="write the image here")
    b.set_defaults(func=cmd_bijection)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    report = RunReport(command=["moonfill", *argv])
    start = time.perf_counter()
    try:
        text = args.func(args, report, _Inputs(report))
    except (MoonError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.wall_time = time.perf_counter() - start
    print(report.to_json() if args.json else text)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
