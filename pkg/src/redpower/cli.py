"""Command-line front end: ``redpower {group,graph,invariants,verify,catalog}``.

Exit status: 0 success, 1 theorem-check failure, 2 usage or input error.
Every option can also be set through an environment variable (see ``--help``);
command-line flags take precedence.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import graph_core as gc
from .group_core import (DEFAULT_MAX_ORDER, FiniteGroup, GroupError, build_group,
                         from_cayley_table, is_abelian, is_cyclic, is_nilpotent, order_profile)
from .invariants import Caps, compute_report
from .powergraph import POWER, REDUCED, GraphVariant, build
from .theorems import UnknownCheck, default_catalog, run_suite

ENV_PREFIX = "REDPOWER_"
FORMATS = ("dot", "json", "csv", "table")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    max_order: int = 32
    caps: Caps = field(default_factory=Caps)
    parallel: int = 1
    fmt: str | None = None
    output: str | None = None

    def __post_init__(self):
        if self.max_order < 2:
            raise UsageError("max-order must be >= 2")
        if self.parallel < 1:
            raise UsageError("parallel must be >= 1")
        if self.fmt is not None and self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name, default)


def _env_int(name: str, default: int) -> int:
    raw = _env(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# argument parsing

_ENV_HELP = """environment:
  REDPOWER_MAX_ORDER, REDPOWER_SOLVER_CAP, REDPOWER_HAMILTONIAN_CAP,
  REDPOWER_PERFECT_CAP, REDPOWER_PARALLEL, REDPOWER_FORMAT, REDPOWER_OUTPUT
  supply defaults for the matching flags; flags win.

exit status: 0 ok, 1 theorem-check failure, 2 usage or input error"""


def _add_common(p: argparse.ArgumentParser, formats=FORMATS):
    p.add_argument("--format", choices=formats, default=None, help="output format")
    p.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")


def _add_caps(p: argparse.ArgumentParser):
    p.add_argument("--solver-cap", type=int, default=None,
                   help="max vertices for clique/colouring/independence/connectivity")
    p.add_argument("--hamiltonian-cap", type=int, default=None, help="max vertices for Hamiltonicity")
    p.add_argument("--perfect-cap", type=int, default=None, help="max vertices for perfectness")


def _add_variant(p: argparse.ArgumentParser):
    fam = p.add_mutually_exclusive_group()
    fam.add_argument("--reduced", dest="family", action="store_const", const=REDUCED,
                     help="reduced power graph (default)")
    fam.add_argument("--power", dest="family", action="store_const", const=POWER,
                     help="power graph")
    p.add_argument("--directed", action="store_true", help="directed variant")
    p.add_argument("--proper", action="store_true", help="drop the identity")
    p.set_defaults(family=REDUCED)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redpower", description="Power graphs and reduced power graphs of finite groups.",
        epilog=_ENV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--seedless", action="store_true",
                        help="assert deterministic output (no code path uses unseeded randomness)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="describe a group")
    p.add_argument("group", help="spec such as Z6, D8, Q8, SD16, E2^3, Z2xZ4, or a Cayley-table file")
    p.add_argument("--max-order", type=int, default=None)
    _add_common(p, ("json", "csv", "table"))

    p = sub.add_parser("graph", help="build and export a (reduced) power graph")
    p.add_argument("group")
    p.add_argument("--max-order", type=int, default=None)
    _add_variant(p)
    _add_common(p, ("dot", "json", "csv"))

    p = sub.add_parser("invariants", help="compute an invariant report")
    p.add_argument("group")
    p.add_argument("--max-order", type=int, default=None)
    _add_variant(p)
    _add_caps(p)
    _add_common(p, ("json", "table"))

    p = sub.add_parser("verify", help="run theorem checks over the catalog")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--only", default=None, help="comma-separated check ids, e.g. T6,T7")
    p.add_argument("--table-file", action="append", default=[],
                   help="extra Cayley-table file to add to the catalog (repeatable)")
    p.add_argument("--parallel", type=int, default=None, help="worker processes")
    p.add_argument("--verbose", "-v", action="store_true", help="show skip reasons and notes")
    _add_caps(p)
    _add_common(p, ("json", "table"))

    p = sub.add_parser("catalog", help="list the catalog groups")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--table-file", action="append", default=[])
    _add_common(p, ("json", "table"))
    return parser


def config_from(args: argparse.Namespace) -> CliConfig:
    def pick(attr, env, default):
        v = getattr(args, attr, None)
        return v if v is not None else _env_int(env, default)

    defaults = Caps()
    caps_kw = dict(solver_cap=pick("solver_cap", "SOLVER_CAP", defaults.solver_cap),
                   hamiltonian_cap=pick("hamiltonian_cap", "HAMILTONIAN_CAP", defaults.hamiltonian_cap),
                   perfect_cap=pick("perfect_cap", "PERFECT_CAP", defaults.perfect_cap))
    try:
        caps = Caps(**caps_kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    default_order = 32 if args.command in ("verify", "catalog") else DEFAULT_MAX_ORDER
    return CliConfig(max_order=pick("max_order", "MAX_ORDER", default_order), caps=caps,
                     parallel=pick("parallel", "PARALLEL", 1),
                     fmt=args.format or _env("FORMAT"),
                     output=args.output or _env("OUTPUT"))


# ---------------------------------------------------------------------------
# commands

def load_group(spec: str, max_order: int) -> FiniteGroup:
    path = Path(spec)
    if path.is_file():
        return from_cayley_table(path.read_text(), max_order=max_order, label=path.stem)
    return build_group(spec, max_order=max_order)


def _variant(args) -> GraphVariant:
    return GraphVariant(args.family, directed=args.directed, proper=args.proper)


def cmd_group(args, cfg: CliConfig) -> tuple[str, int]:
    g = load_group(args.group, cfg.max_order)
    fmt = cfg.fmt or "table"
    if fmt == "csv":
        return g.to_csv(), EXIT_OK
    prof = order_profile(g)
    info = {"label": g.label, "order": g.order, "element_orders": list(prof.pi_e),
            "omega_max": prof.omega_max, "abelian": is_abelian(g), "cyclic": is_cyclic(g),
            "nilpotent": is_nilpotent(g)}
    if fmt == "json":
        return json.dumps({**info, **g.to_json()}, indent=2) + "\n", EXIT_OK
    lines = [f"{k}: {v}" for k, v in info.items()]
    width = max(len(g.name(x)) for x in range(g.order))
    lines.append("table:")
    for row in g.table:
        lines.append("  " + " ".join(g.name(x).rjust(width) for x in row))
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_graph(args, cfg: CliConfig) -> tuple[str, int]:
    g = load_group(args.group, cfg.max_order)
    variant = _variant(args)
    graph = build(g, variant)
    fmt = cfg.fmt or "json"
    if fmt == "table":
        raise UsageError("graph supports --format dot, json or csv")
    if fmt == "dot":
        return gc.to_dot(graph, f"{variant.symbol}({g.label})"), EXIT_OK
    if fmt == "csv":
        return gc.to_csv(graph), EXIT_OK
    return json.dumps(gc.to_json(graph)) + "\n", EXIT_OK


def cmd_invariants(args, cfg: CliConfig) -> tuple[str, int]:
    if args.directed:
        raise UsageError("invariants are defined on undirected graphs; drop --directed")
    g = load_group(args.group, cfg.max_order)
    variant = _variant(args)
    rep = compute_report(build(g, variant), cfg.caps, labels=True)
    fmt = cfg.fmt or "json"
    if fmt == "json":
        return json.dumps({"group": g.label, "graph": variant.symbol, **rep.to_dict()}, indent=2) + "\n", EXIT_OK
    if fmt != "table":
        raise UsageError("invariants supports --format json or table")
    doc = rep.to_dict()
    notes = doc.pop("method_notes")
    lines = [f"{variant.symbol}({g.label})"]
    for k, v in doc.items():
        tag = notes.get(k, "")
        lines.append(f"  {k:<22} {v}" + (f"  [{tag}]" if tag and tag != "exact" else ""))
    return "\n".join(lines) + "\n", EXIT_OK


def _catalog(args, cfg: CliConfig):
    return default_catalog(cfg.max_order, args.table_file)


def cmd_verify(args, cfg: CliConfig) -> tuple[str, int]:
    only = args.only.split(",") if args.only else None
    try:
        rep = run_suite(_catalog(args, cfg), only, cfg.caps, cfg.parallel)
    except UnknownCheck as exc:
        raise UsageError(exc.args[0]) from None
    fmt = cfg.fmt or "table"
    text = rep.to_json(indent=2) + "\n" if fmt == "json" else rep.to_table(args.verbose) + "\n"
    return text, EXIT_OK if rep.ok else EXIT_FAIL


def cmd_catalog(args, cfg: CliConfig) -> tuple[str, int]:
    cat = _catalog(args, cfg)
    if (cfg.fmt or "table") == "json":
        return json.dumps([{"label": g.label, "order": g.order} for g in cat], indent=2) + "\n", EXIT_OK
    return "\n".join(f"{g.order:>4}  {g.label}" for g in cat) + "\n", EXIT_OK


COMMANDS = {"group": cmd_group, "graph": cmd_graph, "invariants": cmd_invariants,
            "verify": cmd_verify, "catalog": cmd_catalog}


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = config_from(args)
        text, status = COMMANDS[args.command](args, cfg)
    except (UsageError, GroupError, ValueError, OSError) as exc:
        print(f"redpower: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
