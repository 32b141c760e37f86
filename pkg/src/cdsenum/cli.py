"""``cdsenum`` command line.

Vertex ids are 1-based on the wire and 0-based inside the library. Solution
lines and generated files go to stdout; the run report goes to stderr, as
text or (``--json``) as one JSON object tagged ``"schema":
"cdsenum.report/1"``.

Exit codes: 0 success, 1 verification failure, 2 bad input or parameters,
3 disconnected graph, 4 resource cap or search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from . import kernels
from .analysis import MODES, WeightError, WeightSet, check_catalog, catalog_max, optimize_weights
from .engine import SearchStats, iter_minimal_cds
from .formats import FormatError, format_dimacs, parse_cnf, parse_dimacs, parse_hypergraph
from .generators import Formula, gen_base_gt, gen_gtk, gen_hs_split, gen_random_degenerate, gen_sat_gadget
from .graph import DisconnectedGraphError, GraphError
from .oracle import ExtensionUndecided, OracleCapExceeded, enumerate_bruteforce, find_extension

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_DISCONNECTED = 3
EXIT_RESOURCE = 4

SCHEMA = "cdsenum.report/1"


@dataclass
class RunReport:
    command: str
    input: str | None = None
    params: dict = field(default_factory=dict)
    count: int | None = None
    elapsed: float = 0.0
    nodes: int | None = None
    rule_counts: dict = field(default_factory=dict)
    solutions: list | None = None
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        d = {
            "schema": SCHEMA,
            "command": self.command,
            "input": self.input,
            "params": self.params,
            "count": self.count,
            "elapsed": round(self.elapsed, 6),
            "nodes": self.nodes,
            "rule_counts": self.rule_counts,
        }
        if self.solutions is not None:
            d["solutions"] = self.solutions
        d.update(self.extra)
        return d

    def as_text(self) -> str:
        lines = [f"command: {self.command}"]
        if self.input is not None:
            lines.append(f"input: {self.input}")
        for k, v in self.params.items():
            lines.append(f"{k}: {v}")
        for k, v in self.extra.items():
            lines.append(f"{k}: {v}")
        if self.count is not None:
            lines.append(f"count: {self.count}")
        if self.nodes is not None:
            lines.append(f"nodes: {self.nodes}")
        if self.rule_counts:
            lines.append("rules: " + " ".join(f"{r}={c}" for r, c in self.rule_counts.items()))
        lines.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit_report(report: RunReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.as_dict(), sort_keys=False), file=sys.stderr)
    else:
        print(report.as_text(), file=sys.stderr)


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_INPUT) from exc


def _load_graph(path: str):
    try:
        return parse_dimacs(_read_text(path))
    except (FormatError, GraphError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from exc


def _wire(sol) -> str:
    return " ".join(str(v + 1) for v in sol)


def _solve(g, engine: str, stats: SearchStats, sink) -> int:
    if engine == "bruteforce":
        sols = enumerate_bruteforce(g)
        for s in sols:
            sink(s)
        return len(sols)
    count = 0
    for s in iter_minimal_cds(g, stats=stats):
        sink(s)
        count += 1
    return count


def cmd_enumerate(args, listing: bool) -> int:
    g, _ = _load_graph(args.file)
    stats = SearchStats()
    out = []
    started = time.perf_counter()
    count = _solve(g, args.engine, stats, out.append if listing else (lambda s: None))
    elapsed = time.perf_counter() - started
    if listing:
        out.sort()
        sys.stdout.write("".join(_wire(s) + "\n" for s in out))
    report = RunReport(
        command="enumerate" if listing else "count",
        input=args.file,
        params={"engine": args.engine, "n": g.n, "m": g.m, "backend": kernels.BACKEND},
        count=count,
        elapsed=elapsed,
        nodes=stats.nodes if args.engine == "branching" else None,
        rule_counts=dict(sorted(stats.rules.items())) if args.engine == "branching" else {},
        solutions=[[v + 1 for v in s] for s in out] if listing and args.json else None,
    )
    _emit_report(report, args.json)
    return EXIT_OK


def cmd_extend(args) -> int:
    g, file_u = _load_graph(args.file)
    if args.u is not None:
        u = [x - 1 for x in args.u]
    else:
        u = list(file_u or ())
    for v in u:
        if not 0 <= v < g.n:
            raise CliError(f"U vertex {v + 1} out of range 1..{g.n}", EXIT_INPUT)
    started = time.perf_counter()
    answer = "unknown"
    witness = None
    code = EXIT_OK
    try:
        witness = find_extension(g, u, args.budget, method=args.method)
        answer = "yes" if witness is not None else "no"
    except ExtensionUndecided:
        code = EXIT_RESOURCE
    elapsed = time.perf_counter() - started
    print(answer)
    if witness is not None:
        print(_wire(witness))
    report = RunReport(
        command="extend",
        input=args.file,
        params={"u": [v + 1 for v in sorted(u)], "budget": args.budget, "method": args.method},
        elapsed=elapsed,
        extra={"answer": answer, "witness": None if witness is None else [v + 1 for v in witness]},
    )
    _emit_report(report, args.json)
    return code


def cmd_generate(args) -> int:
    fam = args.family
    u = None
    comments = []
    try:
        if fam == "gt":
            g = gen_base_gt(args.t, clique_x=not args.no_clique)
            comments.append(f"G_t base graph t={args.t} clique_x={not args.no_clique}")
        elif fam == "gtk":
            g, hub = gen_gtk(args.t, args.k)
            comments.append(f"G_t^k t={args.t} k={args.k} hub={hub + 1}")
        elif fam == "sat":
            nvars, clauses = parse_cnf(_read_text(args.cnf))
            g, u = gen_sat_gadget(Formula.from_clauses(nvars, clauses))
            comments.append(f"extension gadget for {args.cnf}: {nvars} variables, {len(clauses)} clauses")
        elif fam == "hssplit":
            ground, sets = parse_hypergraph(_read_text(args.hypergraph))
            hs_u = [x for x in (args.u or [])]
            g, u = gen_hs_split(ground, sets, hs_u)
            comments.append(f"split graph for {args.hypergraph}: ground {ground}, {len(sets)} sets")
        else:
            g = gen_random_degenerate(args.n, args.d, args.seed)
            comments.append(f"random degenerate n={args.n} d={args.d} seed={args.seed}")
    except (GraphError, ValueError) as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    text = format_dimacs(g, u, comments)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    report = RunReport(command="generate", params={"family": fam, "n": g.n, "m": g.m})
    _emit_report(report, args.json)
    return EXIT_OK


def _format_table(rows) -> str:
    head = ("rule", "vector", "number", "bound", "ok")
    body = []
    for r in rows:
        vec = "(" + ", ".join(f"{x:.6f}" for x in r.vector.decreases) + ")"
        bound = f"{r.note} {r.bound:.4f}" if r.bound is not None else "-"
        body.append((r.label, vec, f"{r.number:.7f}", bound, "pass" if r.ok else "FAIL"))
    widths = [max(len(x[i]) for x in [head] + body) for i in range(5)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return "\n".join(fmt.format(*line) for line in [head] + body) + "\n"


def cmd_analyze(args) -> int:
    mode = args.mode
    defaults = {"2deg": (0.106, 1.0, 0.106), "general": (0.110901, 0.984405, 0.143516)}[mode]
    a = args.alpha if args.alpha is not None else defaults[0]
    b = args.beta if args.beta is not None else defaults[1]
    d = args.delta if args.delta is not None else defaults[2]
    if mode == "2deg" and b != 1.0:
        raise CliError("the 2deg catalog fixes beta = 1", EXIT_INPUT)
    started = time.perf_counter()
    try:
        w = WeightSet(a, b, d).validate()
    except WeightError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    extra: dict[str, Any] = {}
    if args.optimize:
        w, value = optimize_weights(mode)
        extra["optimum"] = {"alpha": w.alpha, "beta": w.beta, "delta": w.delta, "value": value}
    rows = check_catalog(mode, w)
    worst, label = catalog_max(mode, w)
    sys.stdout.write(_format_table(rows))
    sys.stdout.write(f"max {worst:.7f} ({label}) at alpha={w.alpha:.6f} beta={w.beta:.6f} delta={w.delta:.6f}\n")
    extra.update({
        "max": worst,
        "argmax": label,
        "all_pass": all(r.ok for r in rows),
        "rows": [
            {"label": r.label, "vector": list(r.vector.decreases), "number": r.number,
             "bound": r.bound, "ok": r.ok}
            for r in rows
        ],
    })
    report = RunReport(
        command="analyze",
        params={"mode": mode, "alpha": w.alpha, "beta": w.beta, "delta": w.delta,
                "optimize": bool(args.optimize)},
        elapsed=time.perf_counter() - started,
        extra=extra if args.json else {"max": f"{worst:.7f}", "all_pass": extra["all_pass"]},
    )
    _emit_report(report, args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_checks

    started = time.perf_counter()
    results = run_checks()
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
    failed = [name for name, ok, _ in results if not ok]
    report = RunReport(
        command="verify",
        elapsed=time.perf_counter() - started,
        count=len(results),
        extra={"failed": failed},
    )
    _emit_report(report, args.json)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cdsenum", description="Enumerate minimal connected dominating sets.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured report on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    for name, helptext in (("enumerate", "list every minimal CDS"), ("count", "count minimal CDS")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("file", help="DIMACS edge file ('-' for stdin)")
        sp.add_argument("--engine", choices=("branching", "bruteforce"), default="branching")

    sp = sub.add_parser("extend", parents=[common], help="is there a minimal CDS containing U?")
    sp.add_argument("file")
    sp.add_argument("--u", type=int, nargs="*", help="1-based ids; defaults to the file's 'c U' line")
    sp.add_argument("--budget", type=int, default=2_000_000, help="search-node budget")
    sp.add_argument("--method", choices=("auto", "branching", "bruteforce"), default="auto")

    sp = sub.add_parser("generate", parents=[common], help="write a graph family in DIMACS format")
    fam = sp.add_subparsers(dest="family", required=True)
    g = fam.add_parser("gt", parents=[common])
    g.add_argument("--t", type=int, required=True)
    g.add_argument("--no-clique", action="store_true", help="leave X independent")
    g = fam.add_parser("gtk", parents=[common])
    g.add_argument("--t", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g = fam.add_parser("sat", parents=[common])
    g.add_argument("cnf", help="DIMACS cnf file")
    g = fam.add_parser("hssplit", parents=[common])
    g.add_argument("hypergraph", help="hypergraph file ('h <ground> <m>' header)")
    g.add_argument("--u", type=int, nargs="*", help="0-based element ids recorded as U")
    g = fam.add_parser("random", parents=[common])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    for gp in fam.choices.values():
        gp.add_argument("-o", "--output", help="output path (default stdout)")

    sp = sub.add_parser("analyze", parents=[common], help="branching-vector table and weight search")
    sp.add_argument("--mode", choices=MODES, default="general")
    sp.add_argument("--alpha", type=float)
    sp.add_argument("--beta", type=float)
    sp.add_argument("--delta", type=float)
    sp.add_argument("--optimize", action="store_true")

    sub.add_parser("verify", parents=[common], help="quick self-check of the main claims")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("enumerate", "count"):
            return cmd_enumerate(args, listing=args.command == "enumerate")
        if args.command == "extend":
            return cmd_extend(args)
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "analyze":
            return cmd_analyze(args)
        return cmd_verify(args)
    except CliError as exc:
        print(f"cdsenum: {exc}", file=sys.stderr)
        return exc.code
    except DisconnectedGraphError as exc:
        print(f"cdsenum: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except OracleCapExceeded as exc:
        print(f"cdsenum: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except GraphError as exc:
        print(f"cdsenum: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
