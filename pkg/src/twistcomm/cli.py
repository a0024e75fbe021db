"""Command-line surface.

Exit statuses: 0 success; on file loading, 1 = validation failure and
2 = syntax failure; during command execution, 1 = unresolved name,
2 = budget or size cap exceeded, 3 = validation failure.
`verify-paper` exits 0 exactly when every statement passes.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import groups as groups_mod
from .actions import Action, semidirect_product
from .commutators import (
    CommutatorResult,
    cooperator,
    difference_commutator,
    extension_cospan,
    huq_commutator,
    relative_commutator,
    twisted_commutator,
)
from .errors import (
    SearchBudgetExceeded,
    SizeCapExceeded,
    TwistcommError,
    WorkspaceSyntaxError,
    WorkspaceValidationError,
)
from .groups import FiniteGroup, is_normal
from .homs import Cospan, Homomorphism
from .verify import run_all
from .workspace import Workspace, catalog, parse
from .xmod import PrecrossedCandidate, analyze, census, census_summary

EXIT_OK = 0
EXIT_UNRESOLVED = 1
EXIT_BUDGET = 2
EXIT_VALIDATION = 3


class CliError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        super().__init__(message)


def _load_workspace(paths: list[str]) -> Workspace:
    ws = catalog()
    for path in paths:
        try:
            with open(path, encoding="utf-8") as fh:
                parse(fh.read(), into=ws)
        except WorkspaceSyntaxError as exc:
            raise CliError(2, f"{path}: {exc}")
        except WorkspaceValidationError as exc:
            raise CliError(1, f"{path}: {exc}")
        except OSError as exc:
            raise CliError(2, f"{path}: {exc}")
    return ws


def _get(ws: Workspace, kind: str, name: str):
    table = {"group": ws.groups, "hom": ws.homs, "action": ws.actions}[kind]
    if name not in table:
        raise CliError(EXIT_UNRESOLVED, f"unresolved {kind} name {name!r}")
    return table[name]


def _print_group(g: FiniteGroup, out) -> None:
    out.write(f"group {g.label} {g.order}\n")
    for row in g.mul:
        out.write(" ".join(str(int(v)) for v in row) + "\n")


def _print_hom(h: Homomorphism, name: str, out) -> None:
    out.write(f"hom {name} {h.source.label} {h.target.label}\n")
    out.write(" ".join(str(int(v)) for v in h.map) + "\n")


def _print_action(a: Action, name: str, out) -> None:
    out.write(f"action {name} {a.actor.label} {a.acted.label}\n")
    for row in a.table:
        out.write(" ".join(str(int(v)) for v in row) + "\n")


def _cmd_show(args, ws: Workspace, out) -> int:
    name = args.name
    if name in ws.groups:
        _print_group(ws.groups[name], out)
    elif name in ws.homs:
        _print_hom(ws.homs[name], name, out)
    elif name in ws.actions:
        _print_action(ws.actions[name], name, out)
    else:
        raise CliError(EXIT_UNRESOLVED, f"unresolved name {name!r}")
    return EXIT_OK


def _cmd_semidirect(args, ws: Workspace, out) -> int:
    xi = _get(ws, "action", args.action)
    ext = semidirect_product(xi)
    if args.format == "tsv":
        out.write(f"total\t{ext.total.label}\t{ext.total.order}\n")
        out.write("k\t" + " ".join(str(int(v)) for v in ext.k.map) + "\n")
        out.write("d\t" + " ".join(str(int(v)) for v in ext.d.map) + "\n")
        out.write("e\t" + " ".join(str(int(v)) for v in ext.e.map) + "\n")
    else:
        _print_group(ext.total, out)
        _print_hom(ext.k, "k", out)
        _print_hom(ext.d, "d", out)
        _print_hom(ext.e, "e", out)
    return EXIT_OK


def _commutator_result(args, ws: Workspace) -> CommutatorResult:
    kind = args.kind
    f = _get(ws, "hom", args.f)
    g = _get(ws, "hom", args.g)
    if kind == "huq":
        return huq_commutator(f, g)
    if kind == "difference":
        return difference_commutator(f, g)
    if kind == "twisted":
        if not args.action:
            raise CliError(EXIT_UNRESOLVED, "--kind twisted needs --action")
        return twisted_commutator(_get(ws, "action", args.action), f, g)
    if not (args.left and args.right):
        raise CliError(EXIT_UNRESOLVED, "--kind relative needs --left and --right")
    cospan = Cospan(_get(ws, "hom", args.left), _get(ws, "hom", args.right))
    return relative_commutator(cospan, f, g)


def _cmd_commutator(args, ws: Workspace, out) -> int:
    result = _commutator_result(args, ws)
    value = result.value
    normal = is_normal(value)
    elements = " ".join(str(v) for v in value.elements)
    if args.format == "tsv":
        out.write(f"{args.kind}\t{value.order}\t{'yes' if normal else 'no'}\t{elements}\n")
    else:
        out.write(f"kind: {args.kind}\n")
        out.write(f"order: {value.order}{' (trivial)' if value.is_trivial() else ''}\n")
        out.write(f"normal: {'yes' if normal else 'no'}\n")
        out.write(f"elements: {elements}\n")
    return EXIT_OK


def _cmd_cooperator(args, ws: Workspace, out) -> int:
    f = _get(ws, "hom", args.f)
    g = _get(ws, "hom", args.g)
    if args.action:
        cospan = extension_cospan(semidirect_product(_get(ws, "action", args.action)))
    elif args.left and args.right:
        cospan = Cospan(_get(ws, "hom", args.left), _get(ws, "hom", args.right))
    else:
        from .commutators import product_cospan

        cospan = product_cospan(f.source, g.source)
    phi = cooperator(cospan, f, g)
    if phi is None:
        out.write("none\n")
    elif args.format == "tsv":
        out.write("cooperator\t" + " ".join(str(int(v)) for v in phi.map) + "\n")
    else:
        _print_hom(phi, "cooperator", out)
    return EXIT_OK


def _cmd_check(args, ws: Workspace, out) -> int:
    cand = PrecrossedCandidate(
        _get(ws, "hom", args.boundary), _get(ws, "action", args.action)
    )
    report = analyze(cand)
    if args.what == "pcm":
        verdict = report.pcm
    elif args.what == "pff":
        verdict = report.pff
    else:
        verdict = report.is_crossed
    if args.format == "tsv":
        out.write(
            f"{args.what}\t{'yes' if verdict else 'no'}\t"
            f"{'yes' if report.pcm else 'no'}\t{'yes' if report.pff else 'no'}\t"
            f"{report.classification}\n"
        )
    else:
        out.write(f"pcm: {'yes' if report.pcm else 'no'}\n")
        out.write(f"pff: {'yes' if report.pff else 'no'}\n")
        out.write(f"precrossed: {'yes' if report.is_precrossed else 'no'}\n")
        out.write(f"crossed: {'yes' if report.is_crossed else 'no'}\n")
        out.write(f"class: {report.classification}\n")
    return EXIT_OK


def _cmd_census(args, ws: Workspace, out) -> int:
    x_grp = _get(ws, "group", args.x)
    b_grp = _get(ws, "group", args.b)
    entries = census(x_grp, b_grp)
    total, pre, crossed = census_summary(entries)
    if args.format == "tsv":
        for i, (cand, report) in enumerate(entries):
            out.write(
                f"{i}\t{' '.join(str(int(v)) for v in cand.boundary.map)}\t"
                f"{'yes' if report.pcm else 'no'}\t{'yes' if report.pff else 'no'}\t"
                f"{'yes' if report.is_crossed else 'no'}\t{report.classification}\n"
            )
        out.write(f"summary\t{total}\t{pre}\t{crossed}\n")
    else:
        for i, (cand, report) in enumerate(entries):
            out.write(
                f"[{i}] boundary={list(map(int, cand.boundary.map))} "
                f"pcm={'yes' if report.pcm else 'no'} "
                f"pff={'yes' if report.pff else 'no'} "
                f"crossed={'yes' if report.is_crossed else 'no'} "
                f"class={report.classification}\n"
            )
        out.write(f"candidates: {total}, precrossed: {pre}, crossed: {crossed}\n")
    return EXIT_OK


def _graph_from_args(args, ws: Workspace):
    from .graphs import ReflexiveGraph, graph_of_precrossed

    if args.boundary and args.action:
        cand = PrecrossedCandidate(
            _get(ws, "hom", args.boundary), _get(ws, "action", args.action)
        )
        return graph_of_precrossed(cand)
    if args.d and args.c and args.e:
        return ReflexiveGraph(
            _get(ws, "hom", args.d), _get(ws, "hom", args.c), _get(ws, "hom", args.e)
        )
    raise CliError(
        EXIT_UNRESOLVED, "graph commands need --boundary/--action or --d/--c/--e"
    )


def _cmd_graph(args, ws: Workspace, out) -> int:
    from .graphs import is_connected, is_multiplicative, is_star_multiplicative, pi0

    graph = _graph_from_args(args, ws)
    query = args.query
    if query == "pi0":
        quotient_grp = pi0(graph)
        if args.format == "tsv":
            out.write(f"pi0\t{quotient_grp.order}\n")
        else:
            _print_group(quotient_grp, out)
    else:
        value = {
            "connected": is_connected,
            "star-mult": is_star_multiplicative,
            "mult": is_multiplicative,
        }[query](graph)
        if args.format == "tsv":
            out.write(f"{query}\t{'yes' if value else 'no'}\n")
        else:
            out.write(f"{query}: {'yes' if value else 'no'}\n")
    return EXIT_OK


def _cmd_verify(args, ws: Workspace, out) -> int:
    results = run_all(max_order=args.max_order, jobs=args.jobs)
    failures = 0
    for res in results:
        if args.format == "tsv":
            out.write(
                f"{res.statement}\t{res.instances}\t{res.failures}\t{res.millis}\n"
            )
        else:
            status = "PASS" if res.passed else "FAIL"
            out.write(
                f"{status} {res.statement} "
                f"({res.instances} instances, {res.failures} failures, "
                f"{res.millis} ms)\n"
            )
            for note in res.notes:
                out.write(f"  ! {note}\n")
        failures += res.failures + (0 if res.instances else 1)
    return EXIT_OK if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistcomm",
        description=(
            "Commutators relative to a cospan, group actions and split "
            "extensions, and crossed-module checks over finite groups."
        ),
    )
    parser.add_argument(
        "--load",
        action="append",
        default=[],
        metavar="FILE",
        help="workspace file to load on top of the catalog (repeatable)",
    )
    parser.add_argument(
        "--format", choices=("text", "tsv"), default="text", help="output format"
    )
    parser.add_argument(
        "--size-cap",
        type=int,
        default=None,
        help="cap on constructed group orders (overrides TWISTCOMM_SIZE_CAP)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", help="print a named object")
    p.add_argument("name")

    p = sub.add_parser("semidirect", help="build the split extension of an action")
    p.add_argument("action")

    p = sub.add_parser("commutator", help="compute a commutator subgroup")
    p.add_argument("--kind", choices=("huq", "twisted", "difference", "relative"), required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--action", help="action name (twisted)")
    p.add_argument("--left", help="left cospan leg (relative)")
    p.add_argument("--right", help="right cospan leg (relative)")

    p = sub.add_parser("cooperator", help="compute a cooperator, or report none")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--action", help="use the extension cospan of this action")
    p.add_argument("--left", help="left cospan leg")
    p.add_argument("--right", help="right cospan leg")

    p = sub.add_parser("check", help="precrossed / crossed module checks")
    p.add_argument("what", choices=("pcm", "pff", "xmod"))
    p.add_argument("--boundary", required=True)
    p.add_argument("--action", required=True)

    p = sub.add_parser("census", help="analyze all (boundary, action) couples")
    p.add_argument("--x", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("graph", help="reflexive-graph queries")
    p.add_argument("query", choices=("pi0", "connected", "star-mult", "mult"))
    p.add_argument("--boundary")
    p.add_argument("--action")
    p.add_argument("--d")
    p.add_argument("--c")
    p.add_argument("--e")

    p = sub.add_parser("verify-paper", help="run the full verification suite")
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        help="worker threads (default: available parallelism)",
    )
    return parser


_HANDLERS = {
    "show": _cmd_show,
    "semidirect": _cmd_semidirect,
    "commutator": _cmd_commutator,
    "cooperator": _cmd_cooperator,
    "check": _cmd_check,
    "census": _cmd_census,
    "graph": _cmd_graph,
    "verify-paper": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    cap = args.size_cap
    if cap is None and os.environ.get("TWISTCOMM_SIZE_CAP"):
        try:
            cap = int(os.environ["TWISTCOMM_SIZE_CAP"])
        except ValueError:
            print("invalid TWISTCOMM_SIZE_CAP", file=sys.stderr)
            return EXIT_VALIDATION
    if cap is not None:
        groups_mod.DEFAULT_SIZE_CAP = cap

    try:
        ws = _load_workspace(args.load)
        return _HANDLERS[args.command](args, ws, sys.stdout)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.status
    except (SizeCapExceeded, SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TwistcommError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
