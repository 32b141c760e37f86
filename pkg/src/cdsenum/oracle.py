"""Exhaustive reference answers for cross-checking the branching engine.

Everything here is exponential on purpose and guarded by explicit caps: an
oracle that silently truncates would be worse than none.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from . import kernels
from .graph import Graph, from_mask, require_connected, to_mask


class OracleCapExceeded(RuntimeError):
    """Input too large for exhaustive search."""


class ExtensionUndecided(RuntimeError):
    """The search budget ran out before the extension question was settled."""


DEFAULT_CAP = 24
HITTING_CAP = 20


def enumerate_bruteforce(g: Graph, max_n: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All minimal CDS of ``g`` by testing every vertex subset, in canonical
    order."""
    require_connected(g)
    if g.n > max_n:
        raise OracleCapExceeded(f"n={g.n} exceeds the brute-force cap {max_n}")
    return sorted(from_mask(m) for m in kernels.minimal_cds_masks(g.adj_masks, g.n))


def find_extension(
    g: Graph,
    u: Iterable[int],
    budget: int = 2_000_000,
    *,
    method: str = "auto",
) -> tuple[int, ...] | None:
    """A minimal CDS containing ``u`` or ``None`` if there is none.

    ``method='bruteforce'`` filters the exhaustive list, ``'branching'`` runs
    the engine restricted to supersets of ``u`` with ``budget`` search nodes;
    ``'auto'`` picks brute force for graphs up to 20 vertices.
    """
    from .engine import BudgetExceeded, iter_minimal_cds

    require_connected(g)
    u = tuple(sorted(set(u)))
    for v in u:
        g.check_vertex(v)
    if method == "auto":
        method = "bruteforce" if g.n <= 20 else "branching"
    if method == "bruteforce":
        need = to_mask(u)
        for m in kernels.minimal_cds_masks(g.adj_masks, g.n) if g.n <= DEFAULT_CAP else ():
            if m & need == need:
                return from_mask(m)
        if g.n > DEFAULT_CAP:
            raise OracleCapExceeded(f"n={g.n} exceeds the brute-force cap {DEFAULT_CAP}")
        return None
    if method != "branching":
        raise ValueError(f"unknown method {method!r}")
    try:
        for sol in iter_minimal_cds(g, required=u, node_budget=budget):
            return sol
    except BudgetExceeded as exc:
        raise ExtensionUndecided(str(exc)) from exc
    return None


def extension_exists(g: Graph, u: Iterable[int], budget: int = 2_000_000, *, method: str = "auto") -> bool:
    return find_extension(g, u, budget, method=method) is not None


def minimal_hitting_sets(
    ground: int,
    sets: Sequence[Iterable[int]],
    u: Iterable[int] = (),
) -> tuple[list[tuple[int, ...]], bool]:
    """Minimal hitting sets containing ``u`` and whether any exist."""
    if ground > HITTING_CAP:
        raise OracleCapExceeded(f"ground={ground} exceeds the cap {HITTING_CAP}")
    masks = []
    for x in sets:
        m = to_mask(x)
        if not m:
            raise ValueError("empty hyperedge cannot be hit")
        if m >> ground:
            raise ValueError(f"hyperedge {tuple(x)} leaves the ground set")
        masks.append(m)
    need = to_mask(u)
    found = sorted(
        from_mask(h) for h in kernels.minimal_hitting_masks(masks, ground) if h & need == need
    )
    return found, bool(found)
