"""Graph families: lower-bound constructions, hardness gadgets and random
d-degenerate graphs.

Vertex-id layouts (0-based):

``gen_base_gt(t)``
    ``X = 0..t-1``, ``Y = t..2t-1``, apex ``z = 2t``.
``gen_gtk(t, k)``
    copy ``j`` occupies ``j*(2t+1) .. (j+1)*(2t+1)-1`` with the base layout
    inside the block; the hub is the last vertex ``k*(2t+1)``.
``gen_sat_gadget(f)``
    variable ``i`` (0-based) owns ``5i .. 5i+4`` as ``w, v, v_bar, y, y_bar``;
    clause ``j`` owns ``5n+3j .. 5n+3j+2`` as ``a, b, c``; the root ``s`` is
    the last vertex ``5n+3m``. ``U`` is the set of ``w`` vertices.
``gen_hs_split(ground, sets)``
    elements ``0..ground-1`` (a clique), then one vertex per set.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError


def gen_base_gt(t: int, clique_x: bool = True) -> Graph:
    if t < 2:
        raise GraphError(f"t must be >= 2, got {t}")
    edges = [(i, t + j) for i in range(t) for j in range(t) if i != j]
    edges += [(t + j, 2 * t) for j in range(t)]
    if clique_x:
        edges += [(i, j) for i in range(t) for j in range(i + 1, t)]
    return Graph(2 * t + 1, edges)


def gen_gtk(t: int, k: int) -> tuple[Graph, int]:
    """``k`` clique-free copies of the base graph joined through a hub that
    sees every ``X`` vertex. Returns ``(graph, hub)``."""
    if t < 2 or k < 1:
        raise GraphError(f"need t >= 2 and k >= 1, got t={t}, k={k}")
    base = gen_base_gt(t, clique_x=False)
    size = 2 * t + 1
    hub = k * size
    edges = []
    for j in range(k):
        off = j * size
        edges += [(u + off, v + off) for u, v in base.edges]
        edges += [(off + i, hub) for i in range(t)]
    return Graph(hub + 1, edges), hub


def gt_count(t: int) -> int:
    """Closed-form number of minimal CDS of the base graph meeting ``X``."""
    return (t ** 3 + t ** 2) // 2 - t


@dataclass(frozen=True)
class Formula:
    nvars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("formula needs at least one variable")
        for c in self.clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have three literal slots")
            for lit in c:
                if lit == 0 or abs(lit) > self.nvars:
                    raise ValueError(f"literal {lit} out of range 1..{self.nvars}")

    @classmethod
    def from_clauses(cls, nvars: int, clauses: Iterable[Sequence[int]]) -> "Formula":
        """Accept clauses of 1..3 literals; short ones are padded by
        repeating their first literal."""
        out = []
        for c in clauses:
            c = list(c)
            if not 1 <= len(c) <= 3:
                raise ValueError(f"clause {c} must have 1 to 3 literals")
            out.append(tuple(c + [c[0]] * (3 - len(c))))
        return cls(nvars, tuple(out))

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(
            any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses
        )

    def satisfiable(self) -> bool:
        """Exhaustive check over all assignments."""
        n = self.nvars
        for bitsv in range(1 << n):
            if self.satisfied_by([bool(bitsv >> i & 1) for i in range(n)]):
                return True
        return False


def gen_sat_gadget(f: Formula) -> tuple[Graph, tuple[int, ...]]:
    n, m = f.nvars, len(f.clauses)
    s = 5 * n + 3 * m

    def lit_vertex(lit: int) -> int:
        i = abs(lit) - 1
        return 5 * i + (1 if lit > 0 else 2)

    edges = set()
    for i in range(n):
        w, v, vb, y, yb = range(5 * i, 5 * i + 5)
        edges |= {(v, s), (vb, s), (v, vb), (v, y), (vb, yb), (w, y), (w, yb)}
    for j, (l1, l2, l3) in enumerate(f.clauses):
        a, b, c = 5 * n + 3 * j, 5 * n + 3 * j + 1, 5 * n + 3 * j + 2
        edges |= {(b, a), (a, c), (a, lit_vertex(l3))}
        edges |= {(b, lit_vertex(l)) for l in {l1, l2}}
    g = Graph(s + 1, edges)
    return g, tuple(5 * i for i in range(n))


def gen_hs_split(ground: int, sets: Sequence[Iterable[int]], u: Iterable[int] = ()) -> tuple[Graph, tuple[int, ...]]:
    sets = [tuple(sorted(set(x))) for x in sets]
    if ground < 1:
        raise ValueError("ground set must be nonempty")
    for x in sets:
        if not x:
            raise ValueError("empty hyperedge cannot be hit")
        if any(not 0 <= e < ground for e in x):
            raise ValueError(f"hyperedge {x} leaves the ground set 0..{ground - 1}")
    u = tuple(sorted(set(u)))
    if any(not 0 <= e < ground for e in u):
        raise ValueError("U must be a subset of the ground set")
    edges = [(i, j) for i in range(ground) for j in range(i + 1, ground)]
    for k, x in enumerate(sets):
        edges += [(e, ground + k) for e in x]
    return Graph(ground + len(sets), edges), u


def gen_random_degenerate(n: int, d: int, seed) -> Graph:
    """Vertex ``i`` links to ``min(d, i)`` distinct earlier vertices; the
    result is connected and at most ``d``-degenerate."""
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    rng = random.Random(seed)
    edges = []
    for i in range(1, n):
        for j in rng.sample(range(i), min(d, i)):
            edges.append((j, i))
    return Graph(n, edges)


def random_3cnf(nvars: int, nclauses: int, rng: random.Random) -> Formula:
    clauses = []
    for _ in range(nclauses):
        clauses.append(tuple(rng.choice((1, -1)) * rng.randint(1, nvars) for _ in range(3)))
    return Formula(nvars, tuple(clauses))


def random_hypergraph(ground: int, nsets: int, rng: random.Random) -> list[tuple[int, ...]]:
    """Random nonempty hyperedges over ``0..ground-1``."""
    out = []
    for _ in range(nsets):
        size = rng.randint(1, ground)
        out.append(tuple(sorted(rng.sample(range(ground), size))))
    return out
