"""Branch-and-reduce enumeration of inclusion-minimal connected dominating sets.

A search-tree node is an :class:`Instance`: every vertex carries one of five
statuses (undecided/undominated, undecided/dominated, discarded/undominated,
discarded/dominated, in-solution), a working graph ``G'`` holds the edges
still relevant among undecided and discarded-undominated vertices, and the
solution part is tracked as its connected components.

:func:`next_step` inspects an instance and returns the first applicable rule
in a fixed priority order; :func:`expand` applies it. Rule ids:

====  =====================================================================
B1    dominated undecided ``x`` with a discarded-undominated neighbour
B2    dominated undecided ``x`` touching two solution components
B3    dominated ``x`` -> undominated ``y`` -> discarded-undominated ``z``
B4    adjacent dominated ``x, y`` owned by different solution components
R1    adjacent dominated ``x, y`` owned by the same component: drop ``xy``
R2    isolated vertex: discard if dominated, else prune
R3    adjacent discarded-undominated ``x, y``: drop ``xy``
R4    undominated undecided ``x`` with no undecided neighbour: prune
R5    undominated ``x`` with a single undecided neighbour ``y``: take ``y``
B5    undominated undecided ``u`` with exactly two undecided neighbours
B6    discarded-undominated ``u`` with exactly two undecided neighbours
B7    dominated ``u`` with one undominated neighbour ``v``
B8    dominated ``u`` of degree two whose neighbours share another neighbour
B9    dominated ``u`` of degree two, one neighbour has one outside neighbour
B10   dominated ``u`` of degree two, both neighbours have >= 2 outside
B12   catch-all on any dominated undecided vertex
====  =====================================================================

Each branching partitions the minimal solutions consistent with the
instance, so every solution is reached by exactly one leaf. The fifth branch
of B10 records a *commitment* (at least one listed vertex must join the
solution) to keep it disjoint from the fourth.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .graph import (
    Graph,
    bits,
    connected_mask,
    from_mask,
    is_minimal_cds_mask,
    require_connected,
    to_mask,
)

RULE_ORDER = (
    "B1", "B2", "B3", "B4", "R1", "R2", "R3", "R4", "R5",
    "B5", "B6", "B7", "B8", "B9", "B10", "B12",
)
SET_ONE = frozenset({"B1", "B2", "B3", "B4", "R1", "R2", "R3", "R5"})
SET_TWO = frozenset({"R4", "B5", "B6"})
SET_THREE = frozenset({"B7", "B8", "B9", "B10"})


class Status(enum.IntEnum):
    UNDECIDED_UNDOMINATED = 0
    UNDECIDED_DOMINATED = 1
    OUT_UNDOMINATED = 2
    OUT_DOMINATED = 3
    IN_SOLUTION = 4


class EngineError(AssertionError):
    """Internal consistency violation inside the search."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


class Instance:
    """One search-tree node. Vertex sets are bitmasks over the base graph."""

    __slots__ = ("g", "vn", "vd", "on", "od", "s", "wadj", "comps", "commits",
                 "required", "dead")

    def __init__(self, g: Graph):
        self.g = g
        self.vn = g.full_mask
        self.vd = self.on = self.od = self.s = 0
        self.wadj = list(g.adj_masks)
        self.comps: tuple[int, ...] = ()
        self.commits: tuple[int, ...] = ()
        self.required = 0
        self.dead = False

    def copy(self) -> "Instance":
        c = Instance.__new__(Instance)
        c.g = self.g
        c.vn, c.vd, c.on, c.od, c.s = self.vn, self.vd, self.on, self.od, self.s
        c.wadj = self.wadj[:]
        c.comps = self.comps
        c.commits = self.commits
        c.required = self.required
        c.dead = self.dead
        return c

    @property
    def c(self) -> int:
        return len(self.comps)

    @property
    def undecided(self) -> int:
        return self.vn | self.vd

    def status(self, v: int) -> Status:
        b = 1 << v
        if self.vn & b:
            return Status.UNDECIDED_UNDOMINATED
        if self.vd & b:
            return Status.UNDECIDED_DOMINATED
        if self.on & b:
            return Status.OUT_UNDOMINATED
        if self.od & b:
            return Status.OUT_DOMINATED
        return Status.IN_SOLUTION

    def solution(self) -> tuple[int, ...]:
        return from_mask(self.s)

    def working_edges(self) -> set[tuple[int, int]]:
        return {(u, v) for u in range(self.g.n) for v in bits(self.wadj[u]) if u < v}

    def component_of(self, v: int) -> list[int]:
        """Solution components adjacent to ``v`` in the base graph."""
        nb = self.g.adj_masks[v]
        return [c for c in self.comps if c & nb]

    # -- mutations (used by expand; never on a shared instance) ----------

    def _detach(self, v: int) -> None:
        nb = self.wadj[v]
        if nb:
            clear = ~(1 << v)
            wadj = self.wadj
            for w in bits(nb):
                wadj[w] &= clear
            wadj[v] = 0

    def delete_edge(self, x: int, y: int) -> None:
        if not self.wadj[x] >> y & 1:
            raise EngineError(f"edge {x}-{y} not in working graph")
        self.wadj[x] &= ~(1 << y)
        self.wadj[y] &= ~(1 << x)

    def put_in_solution(self, v: int) -> None:
        b = 1 << v
        if not (self.vn | self.vd) & b:
            raise EngineError(f"vertex {v} is not undecided ({self.status(v).name})")
        self.vn &= ~b
        self.vd &= ~b
        self.s |= b
        self._detach(v)
        nb = self.g.adj_masks[v]
        newly = nb & self.vn
        self.vn ^= newly
        self.vd |= newly
        covered = nb & self.on
        if covered:
            self.on ^= covered
            self.od |= covered
            for w in bits(covered):
                self._detach(w)
        merged = b
        keep = []
        for comp in self.comps:
            if comp & nb:
                merged |= comp
            else:
                keep.append(comp)
        keep.append(merged)
        self.comps = tuple(keep)

    def put_out(self, v: int, *, expect_dominated: bool = False) -> None:
        b = 1 << v
        if self.vd & b:
            self.vd ^= b
            self.od |= b
            self._detach(v)
        elif self.vn & b:
            if expect_dominated:
                raise EngineError(f"vertex {v} expected dominated")
            self.vn ^= b
            self.on |= b
        else:
            raise EngineError(f"vertex {v} is not undecided ({self.status(v).name})")

    def settle(self) -> None:
        """Drop satisfied commitments and flag the node dead if one became
        unsatisfiable."""
        if not self.commits:
            return
        alive = self.vn | self.vd
        out = []
        for m in self.commits:
            if m & self.s:
                continue
            m &= alive
            if not m:
                self.dead = True
            out.append(m)
        self.commits = tuple(out)

    def __repr__(self) -> str:
        f = from_mask
        return (f"Instance(Vn={f(self.vn)}, Vd={f(self.vd)}, On={f(self.on)}, "
                f"Od={f(self.od)}, S={f(self.s)}, c={self.c})")


@dataclass(frozen=True)
class Mutation:
    """One child of a rule: vertices put into the solution (applied first),
    vertices discarded with a known-dominated assertion, plain discards
    (status resolved after the solution additions), deleted working edges
    and an optional commitment mask."""

    to_s: tuple[int, ...] = ()
    to_od: tuple[int, ...] = ()
    to_o: tuple[int, ...] = ()
    delete: tuple[tuple[int, int], ...] = ()
    commit: int = 0


LEAF = "leaf"
PRUNE = "prune"
REDUCE = "reduce"
BRANCH = "branch"


@dataclass(frozen=True)
class Decision:
    kind: str
    rule: str
    children: tuple[Mutation, ...] = ()


def _branch(rule: str, *children: Mutation) -> Decision:
    return Decision(BRANCH, rule, children)


def _reduce(rule: str, mut: Mutation) -> Decision:
    return Decision(REDUCE, rule, (mut,))


def initial_branches(g: Graph) -> tuple[list[tuple[int, ...]], list[Instance]]:
    """Singleton solutions and the root instances.

    Root ``i`` discards ``0..i-1`` and puts ``i`` into the solution. Roots
    whose solution vertex alone dominates the graph are skipped: their only
    minimal solution is the singleton, already returned.
    """
    require_connected(g)
    full = g.full_mask
    adj = g.adj_masks
    universal = [v for v in range(g.n) if (adj[v] | 1 << v) == full]
    singles = [(v,) for v in universal]
    roots = []
    for i in range(g.n):
        if (adj[i] | 1 << i) == full:
            continue
        inst = Instance(g)
        before = (1 << i) - 1
        inst.vn &= ~before
        inst.on = before
        inst.put_in_solution(i)
        # wadj still has edges to the discarded prefix; those that became
        # dominated were detached by put_in_solution
        roots.append(inst)
    return singles, roots


def _choose_pair(inst: Instance, pair: int) -> tuple[int, int]:
    # undominated vertex first when exactly one of the two is dominated
    a = _low(pair)
    b = _low(pair & (pair - 1))
    if inst.vd >> a & 1 and not inst.vd >> b & 1:
        return b, a
    return a, b


def next_step(inst: Instance) -> Decision:
    """First applicable rule, or Leaf / Prune."""
    if inst.dead:
        return Decision(PRUNE, "commit")
    if inst.required & (inst.on | inst.od):
        return Decision(PRUNE, "required")
    vn, vd, on = inst.vn, inst.vd, inst.on
    vp = vn | vd
    wadj = inst.wadj
    adj = inst.g.adj_masks
    comps = inst.comps

    # B1
    for x in bits(vd):
        if wadj[x] & on:
            return _branch("B1", Mutation(to_o=(x,)), Mutation(to_s=(x,)))
    # B2
    owner = {}
    for x in bits(vd):
        touching = [c for c in comps if c & adj[x]]
        if len(touching) >= 2:
            return _branch("B2", Mutation(to_o=(x,)), Mutation(to_s=(x,)))
        if len(touching) != 1:
            raise EngineError(f"dominated vertex {x} has no solution neighbour")
        owner[x] = touching[0]
    # B3
    for x in bits(vd):
        for y in bits(wadj[x] & vn):
            if wadj[y] & on:
                return _branch(
                    "B3",
                    Mutation(to_o=(x,)),
                    Mutation(to_s=(x,), to_od=(y,)),
                    Mutation(to_s=(x, y)),
                )
    # B4
    for x in bits(vd):
        for y in bits(wadj[x] & vd):
            if owner[x] != owner[y]:
                return _branch(
                    "B4",
                    Mutation(to_o=(x,)),
                    Mutation(to_s=(x,), to_od=(y,)),
                    Mutation(to_s=(x, y)),
                )
    # R1
    for x in bits(vd):
        ys = wadj[x] & vd
        if ys:
            return _reduce("R1", Mutation(delete=((x, _low(ys)),)))
    # R2
    for x in bits(vp | on):
        if not wadj[x]:
            if vd >> x & 1:
                return _reduce("R2", Mutation(to_o=(x,)))
            return Decision(PRUNE, "R2")
    # R3
    for x in bits(on):
        ys = wadj[x] & on
        if ys:
            return _reduce("R3", Mutation(delete=((x, _low(ys)),)))
    # R4
    for x in bits(vn):
        if not wadj[x] & vp:
            return Decision(PRUNE, "R4")
    # R5
    for x in bits(vn | on):
        nv = wadj[x] & vp
        if nv and not nv & (nv - 1):
            return _reduce("R5", Mutation(to_s=(_low(nv),)))
    # B5
    for u in bits(vn):
        nv = wadj[u] & vp
        if not wadj[u] & on and _popcount(nv) == 2:
            v1, v2 = _choose_pair(inst, nv)
            return _branch(
                "B5",
                Mutation(to_s=(v1,), to_od=(u,)),
                Mutation(to_s=(v2,), to_od=(u,), to_o=(v1,)),
                Mutation(to_s=(u, v1)),
                Mutation(to_s=(u, v2), to_od=(v1,)),
            )
    # B6
    for u in bits(on):
        nv = wadj[u] & vp
        if _popcount(nv) == 2:
            v1, v2 = _choose_pair(inst, nv)
            return _branch("B6", Mutation(to_s=(v1,)), Mutation(to_s=(v2,), to_o=(v1,)))
    # B7
    for u in bits(vd):
        nvn = wadj[u] & vn
        if nvn and not nvn & (nvn - 1):
            v = _low(nvn)
            if not wadj[v] & on:
                rest = from_mask(wadj[v] & vp & ~(1 << u))
                return _branch(
                    "B7",
                    Mutation(to_o=(u,)),
                    Mutation(to_s=(u,), to_od=(v,), to_o=rest),
                    Mutation(to_s=(u, v)),
                )
    # B8
    for u in bits(vd):
        nv = wadj[u] & vp
        if not wadj[u] & on and _popcount(nv) == 2:
            v1 = _low(nv)
            v2 = _low(nv & (nv - 1))
            common = wadj[v1] & wadj[v2] & vp & ~(1 << u)
            if common:
                y = _low(common)
                return _branch(
                    "B8",
                    Mutation(to_o=(u,)),
                    Mutation(to_s=(u, v1)),
                    Mutation(to_s=(u, v2), to_od=(v1,)),
                    Mutation(to_s=(u,), to_od=(v1, v2), to_o=(y,)),
                )
    # B9 / B10 share the shape of u's neighbourhood
    shaped = []
    for u in bits(vd):
        nvn = wadj[u] & vn
        if _popcount(nvn) == 2 and not wadj[u] & (vd | on):
            a = _low(nvn)
            b = _low(nvn & (nvn - 1))
            out_a = wadj[a] & vp & ~(1 << u | 1 << b)
            out_b = wadj[b] & vp & ~(1 << u | 1 << a)
            shaped.append((u, a, b, out_a, out_b))
    for u, a, b, out_a, out_b in shaped:
        if _popcount(out_a) == 1:
            v1, v2, y, rest = a, b, _low(out_a), out_b
        elif _popcount(out_b) == 1:
            v1, v2, y, rest = b, a, _low(out_b), out_a
        else:
            continue
        if rest >> y & 1:
            raise EngineError("B9 with a common neighbour; B8 should have fired")
        return _branch(
            "B9",
            Mutation(to_o=(u,)),
            Mutation(to_s=(u, v1)),
            Mutation(to_s=(u, v2), to_od=(v1,)),
            Mutation(to_s=(u,), to_od=(v1, v2), to_o=(y,)),
            Mutation(to_s=(u, y), to_od=(v1, v2), to_o=from_mask(rest)),
        )
    for u, a, b, out_a, out_b in shaped:
        if _popcount(out_a) >= 2 and _popcount(out_b) >= 2:
            return _branch(
                "B10",
                Mutation(to_o=(u,)),
                Mutation(to_s=(u, a)),
                Mutation(to_s=(u, b), to_od=(a,)),
                Mutation(to_s=(u,), to_od=(a, b), to_o=from_mask(out_a)),
                Mutation(to_s=(u,), to_od=(a, b), to_o=from_mask(out_b), commit=out_a),
            )
    if not (vp | on):
        return Decision(LEAF, "leaf")
    if not vd:
        return Decision(PRUNE, "stuck")
    x = _low(vd)
    return _branch("B12", Mutation(to_o=(x,)), Mutation(to_s=(x,)))


def apply_mutation(inst: Instance, mut: Mutation) -> Instance:
    child = inst.copy()
    for v in mut.to_s:
        child.put_in_solution(v)
    for v in mut.to_od:
        child.put_out(v, expect_dominated=True)
    for v in mut.to_o:
        child.put_out(v)
    for x, y in mut.delete:
        child.delete_edge(x, y)
    if mut.commit:
        child.commits = child.commits + (mut.commit,)
    child.settle()
    return child


def expand(inst: Instance, d: Decision) -> list[Instance]:
    if d.kind in (LEAF, PRUNE):
        return []
    return [apply_mutation(inst, m) for m in d.children]


def leaf_emit(inst: Instance) -> tuple[int, ...] | None:
    """The solution at a leaf if it is a minimal CDS honouring every
    commitment, else ``None``."""
    s = inst.s
    if s & (s - 1) == 0:
        return None
    if inst.dead or any(not m & s for m in inst.commits):
        return None
    g = inst.g
    if not connected_mask(g, s) or not is_minimal_cds_mask(g, s):
        return None
    return from_mask(s)


# -- measure -----------------------------------------------------------------


def measure(inst: Instance, w) -> float:
    """Weighted size of an instance: undominated undecided vertices count 1,
    dominated undecided ``beta``, discarded undominated ``alpha`` and each
    solution component ``delta``."""
    w.validate()
    return (_popcount(inst.vn) + w.alpha * _popcount(inst.on)
            + w.beta * _popcount(inst.vd) + w.delta * inst.c)


MEASURE_EPS = 1e-9


def check_branch_decrease(parent: Instance, rule: str, children: list[Instance], w) -> bool:
    """Every child is smaller than the parent by at least the claimed amount
    for its position in the rule's branching vector."""
    from .analysis import claimed_decreases

    claimed = claimed_decreases(rule, w)
    if len(claimed) != len(children):
        raise EngineError(f"{rule}: {len(children)} children but vector {claimed}")
    mu = measure(parent, w)
    return all(mu - measure(ch, w) >= r - MEASURE_EPS for ch, r in zip(children, claimed))


# -- driver ------------------------------------------------------------------


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    solutions: int = 0
    max_depth: int = 0
    rules: Counter = field(default_factory=Counter)

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "leaves": self.leaves,
            "solutions": self.solutions,
            "max_depth": self.max_depth,
            "rules": {r: self.rules[r] for r in sorted(self.rules)},
        }


def iter_minimal_cds(
    g: Graph,
    *,
    required: Iterable[int] = (),
    stats: SearchStats | None = None,
    check_weights: Iterable = (),
    node_budget: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every minimal CDS of ``g`` exactly once (depth-first order).

    ``required`` restricts output to solutions containing those vertices and
    prunes subtrees that already discarded one of them. ``check_weights``
    enables the per-branch measure assertions. ``node_budget`` bounds the
    number of visited search-tree nodes.
    """
    singles, roots = initial_branches(g)
    req = to_mask(required)
    stats = stats if stats is not None else SearchStats()
    weights = tuple(check_weights)
    for sol in singles:
        if req & ~to_mask(sol) == 0:
            stats.solutions += 1
            yield sol
    stack = []
    for inst in reversed(roots):
        inst.required = req
        stack.append((inst, 0))
    while stack:
        inst, depth = stack.pop()
        stats.nodes += 1
        if depth > stats.max_depth:
            stats.max_depth = depth
        if node_budget is not None and stats.nodes > node_budget:
            raise BudgetExceeded(f"search exceeded {node_budget} nodes")
        d = next_step(inst)
        stats.rules[d.rule] += 1
        if d.kind == LEAF:
            stats.leaves += 1
            sol = leaf_emit(inst)
            if sol is not None:
                stats.solutions += 1
                yield sol
            continue
        if d.kind == PRUNE:
            continue
        children = expand(inst, d)
        for w in weights:
            if not check_branch_decrease(inst, d.rule, children, w):
                raise EngineError(f"measure decrease violated by {d.rule} at {inst!r}")
        for ch in reversed(children):
            stack.append((ch, depth + 1))


def enumerate_minimal_cds(
    g: Graph,
    sink: Callable[[tuple[int, ...]], object] | None = None,
    **kwargs,
) -> int:
    """Drive the search, handing each solution to ``sink``; returns the count."""
    count = 0
    for sol in iter_minimal_cds(g, **kwargs):
        count += 1
        if sink is not None:
            sink(sol)
    return count


def minimal_cds(g: Graph, **kwargs) -> list[tuple[int, ...]]:
    """All minimal CDS in canonical (lexicographic) order."""
    return sorted(iter_minimal_cds(g, **kwargs))
