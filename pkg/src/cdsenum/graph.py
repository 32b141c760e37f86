"""Simple undirected graphs over dense integer ids, plus the domination and
connectivity predicates used everywhere else.

Vertex sets are passed around as sorted tuples on the public surface and as
Python ``int`` bitmasks internally (bit ``v`` set means vertex ``v`` is a
member).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph input: bad vertex id, self-loop, disconnected graph, ..."""


class DisconnectedGraphError(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adjacency", "adj_masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.adj_masks: tuple[int, ...] = tuple(to_mask(s) for s in nbrs)
        self._edges = tuple(
            (u, v) for u in range(n) for v in self.adjacency[u] if u < v
        )

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_masks[u] >> v & 1)

    def closed_nbhd_mask(self, mask: int) -> int:
        out = mask
        for v in bits(mask):
            out |= self.adj_masks[v]
        return out

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @classmethod
    def from_networkx(cls, nxg) -> "Graph":
        """Relabel an arbitrary networkx graph to ``0..n-1`` (sorted node order)."""
        nodes = sorted(nxg.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in nxg.edges()))


def _as_mask(g: Graph, s) -> int:
    if isinstance(s, int):
        return s
    m = 0
    for v in s:
        g.check_vertex(v)
        m |= 1 << v
    return m


def neighbors_within(g: Graph, v: int, s: Iterable[int]) -> tuple[int, ...]:
    """``N(v) ∩ s`` as a sorted tuple."""
    g.check_vertex(v)
    return from_mask(g.adj_masks[v] & _as_mask(g, s))


def connected_mask(g: Graph, mask: int) -> bool:
    """True iff the induced subgraph on the nonempty set ``mask`` is connected."""
    reach = mask & -mask
    frontier = reach
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj_masks[v]
        grow &= mask & ~reach
        reach |= grow
        frontier = grow
    return reach == mask


def is_connected(g: Graph, s: Iterable[int] | None = None) -> bool:
    """Connectivity of ``G[s]``; ``s=None`` means the whole graph."""
    mask = g.full_mask if s is None else _as_mask(g, s)
    if mask == 0:
        if s is None:
            raise GraphError("connectivity of the empty graph is undefined")
        raise GraphError("connectivity of the empty set is undefined")
    return connected_mask(g, mask)


def require_connected(g: Graph) -> None:
    if g.n == 0 or not connected_mask(g, g.full_mask):
        raise DisconnectedGraphError(f"graph with n={g.n} is not connected")


def is_cds_mask(g: Graph, mask: int) -> bool:
    if mask == 0:
        return False
    return g.closed_nbhd_mask(mask) == g.full_mask and connected_mask(g, mask)


def is_minimal_cds_mask(g: Graph, mask: int) -> bool:
    if not is_cds_mask(g, mask):
        return False
    # a non-minimal CDS always has a single removable vertex (a leaf of a
    # spanning tree extending one of a smaller CDS)
    for v in bits(mask):
        if is_cds_mask(g, mask & ~(1 << v)):
            return False
    return True


def is_cds(g: Graph, s: Iterable[int]) -> bool:
    require_connected(g)
    mask = _as_mask(g, s)
    if mask == 0:
        raise GraphError("empty vertex set")
    return is_cds_mask(g, mask)


def is_minimal_cds(g: Graph, s: Iterable[int]) -> bool:
    require_connected(g)
    mask = _as_mask(g, s)
    if mask == 0:
        raise GraphError("empty vertex set")
    return is_minimal_cds_mask(g, mask)


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]
    degeneracy: int

    def later_degrees(self, g: Graph) -> list[int]:
        """Per position, the number of neighbours among later positions."""
        pos = {v: i for i, v in enumerate(self.order)}
        return [sum(1 for w in g.adjacency[v] if pos[w] > i) for i, v in enumerate(self.order)]


def degeneracy(g: Graph) -> EliminationOrdering:
    """Min-degree greedy elimination; ties go to the lowest id."""
    deg = [len(a) for a in g.adjacency]
    alive = [True] * g.n
    order = []
    d = 0
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if alive[v] and (best < 0 or deg[v] < deg[best]):
                best = v
        d = max(d, deg[best])
        alive[best] = False
        order.append(best)
        for w in g.adjacency[best]:
            if alive[w]:
                deg[w] -= 1
    return EliminationOrdering(tuple(order), d)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if color[w] < 0:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def canonical(sets: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Sort a family of vertex sets lexicographically by sorted member list."""
    return sorted(tuple(sorted(s)) for s in sets)
