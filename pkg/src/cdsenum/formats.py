"""Text formats: DIMACS edge graphs, DIMACS cnf formulas, and a small
hypergraph format (``h <ground> <m>`` followed by one hyperedge per line).

Ids are 1-based on the wire for the DIMACS formats and 0-based in memory.
The hypergraph format is 0-based throughout.
"""
from __future__ import annotations

from typing import Iterable, TextIO

from .graph import Graph


class FormatError(ValueError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line:
            yield lineno, line


def parse_dimacs(text: str) -> tuple[Graph, tuple[int, ...] | None]:
    """Parse a DIMACS edge file. Returns the graph and, if present, the
    0-based vertex set from a ``c U ...`` comment line."""
    n = m = None
    edges = []
    u_set = None
    for lineno, line in _lines(text):
        parts = line.split()
        tag = parts[0]
        if tag == "c":
            if len(parts) >= 2 and parts[1] == "U":
                try:
                    u_set = tuple(int(x) - 1 for x in parts[2:])
                except ValueError as exc:
                    raise FormatError(f"line {lineno}: bad U list") from exc
            continue
        if tag == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: non-integer size") from exc
            if n < 0 or m < 0:
                raise FormatError(f"line {lineno}: negative size")
            continue
        if tag == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError as exc:
                raise FormatError(f"line {lineno}: non-integer vertex") from exc
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise FormatError(f"line {lineno}: self-loop")
            edges.append((u, v))
            continue
        raise FormatError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise FormatError("missing problem line")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    g = Graph(n, edges)
    if u_set is not None and any(not 0 <= v < n for v in u_set):
        raise FormatError("U vertex out of range")
    return g, u_set


def read_dimacs(path) -> tuple[Graph, tuple[int, ...] | None]:
    with open(path) as fh:
        return parse_dimacs(fh.read())


def format_dimacs(g: Graph, u: Iterable[int] | None = None, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    if u is not None:
        out.append("c U " + " ".join(str(v + 1) for v in sorted(u)))
    out.append(f"p edge {g.n} {g.m}")
    out.extend(f"e {a + 1} {b + 1}" for a, b in g.edges)
    return "\n".join(out) + "\n"


def write_dimacs(g: Graph, fh: TextIO, u=None, comments=()) -> None:
    fh.write(format_dimacs(g, u, comments))


def parse_cnf(text: str) -> tuple[int, list[list[int]]]:
    """DIMACS cnf: ``p cnf <n> <m>``, clauses as signed ints terminated by 0."""
    nvars = nclauses = None
    clauses: list[list[int]] = []
    cur: list[int] = []
    for lineno, line in _lines(text):
        if line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"line {lineno}: expected 'p cnf <n> <m>'")
            try:
                nvars, nclauses = int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: non-integer size") from exc
            continue
        if nvars is None:
            raise FormatError(f"line {lineno}: clause before problem line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError as exc:
                raise FormatError(f"line {lineno}: bad literal {tok!r}") from exc
            if lit == 0:
                clauses.append(cur)
                cur = []
            else:
                if abs(lit) > nvars:
                    raise FormatError(f"line {lineno}: variable {abs(lit)} > {nvars}")
                cur.append(lit)
    if nvars is None:
        raise FormatError("missing problem line")
    if cur:
        clauses.append(cur)
    if len(clauses) != nclauses:
        raise FormatError(f"header announces {nclauses} clauses, found {len(clauses)}")
    return nvars, clauses


def format_cnf(nvars: int, clauses: Iterable[Iterable[int]]) -> str:
    clauses = [list(c) for c in clauses]
    lines = [f"p cnf {nvars} {len(clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in clauses]
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> tuple[int, list[tuple[int, ...]]]:
    rows = [(lineno, line) for lineno, line in _lines(text) if not line.startswith("c")]
    if not rows:
        raise FormatError("empty hypergraph file")
    lineno, head = rows[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != "h":
        raise FormatError(f"line {lineno}: expected 'h <ground> <m>'")
    try:
        ground, m = int(parts[1]), int(parts[2])
    except ValueError as exc:
        raise FormatError(f"line {lineno}: non-integer size") from exc
    sets = []
    for lineno, line in rows[1:]:
        try:
            members = tuple(sorted({int(x) for x in line.split()}))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: bad element") from exc
        if any(not 0 <= x < ground for x in members):
            raise FormatError(f"line {lineno}: element out of range 0..{ground - 1}")
        sets.append(members)
    if len(sets) != m:
        raise FormatError(f"header announces {m} sets, found {len(sets)}")
    return ground, sets


def format_hypergraph(ground: int, sets: Iterable[Iterable[int]]) -> str:
    sets = [sorted(s) for s in sets]
    lines = [f"h {ground} {len(sets)}"] + [" ".join(map(str, s)) for s in sets]
    return "\n".join(lines) + "\n"
