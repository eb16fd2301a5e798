"""Three independent Tutte polynomial engines and a dispatcher.

* ``sum``    -- brute force over all spanning subgraphs;
* ``dc``     -- deletion-contraction, splitting into blocks at every level;
* ``cactus`` -- product of loop/bridge/cycle factors for cactus graphs.
"""
from __future__ import annotations

import enum
from collections import Counter

from .bipoly import BiPoly, cycle_poly, product
from .multigraph import MultiGraph, block_decompose, contract_edge, delete_edge, stats, subgraph

MAX_SUM_EDGES = 26
DEFAULT_DC_BUDGET = 2_000_000


class TutteMethod(str, enum.Enum):
    AUTO = "auto"
    CACTUS = "cactus"
    DC = "dc"
    SUM = "sum"


class MethodInapplicable(ValueError):
    """The requested engine cannot handle this graph."""


class ResourceLimitExceeded(RuntimeError):
    """A guard on work size tripped; no answer is produced."""


_X = BiPoly.x()
_Y = BiPoly.y()


def tutte_spanning_sum(g: MultiGraph, max_edges: int = MAX_SUM_EDGES) -> BiPoly:
    """Sum ``(x-1)**(r(G)-r(A)) * (y-1)**n(A)`` over every edge subset ``A``.

    Subsets are walked depth-first with a rollback union-find, and the result
    is tallied by ``(r(G)-r(A), n(A))`` before expanding.
    """
    m = len(g.edges)
    if m > max_edges:
        raise ResourceLimitExceeded(f"spanning-subgraph sum limited to {max_edges} edges, graph has {m}")
    ends = [(e.u, e.v) for e in g.edges]
    parent = list(range(g.vertex_count))
    size = [1] * g.vertex_count
    full_rank = stats(g).rank
    tally: Counter = Counter()

    def find(a: int) -> int:
        while parent[a] != a:
            a = parent[a]
        return a

    def walk(idx: int, rank: int, used: int) -> None:
        if idx == m:
            tally[(full_rank - rank, used - rank)] += 1
            return
        walk(idx + 1, rank, used)
        u, v = ends[idx]
        ru, rv = find(u), find(v)
        if ru == rv:
            walk(idx + 1, rank, used + 1)
            return
        if size[ru] > size[rv]:
            ru, rv = rv, ru
        parent[ru] = rv
        size[rv] += size[ru]
        walk(idx + 1, rank + 1, used + 1)
        size[rv] -= size[ru]
        parent[ru] = ru

    walk(0, 0, 0)
    xm1 = _X - 1
    ym1 = _Y - 1
    total = BiPoly()
    for (a, b), count in tally.items():
        total = total + (xm1 ** a) * (ym1 ** b) * count
    return total


def tutte_deletion_contraction(g: MultiGraph, budget: int = DEFAULT_DC_BUDGET) -> BiPoly:
    """Deletion-contraction with block splitting at every level.

    Loops give ``y``, bridges give ``x``; each remaining block is recursed on
    separately (the polynomial multiplies across cut vertices), always picking
    its lowest edge id.
    """
    calls = [0]

    def solve(h: MultiGraph) -> BiPoly:
        calls[0] += 1
        if calls[0] > budget:
            raise ResourceLimitExceeded(f"deletion-contraction exceeded {budget} calls")
        result = BiPoly.const(1)
        for block in block_decompose(h).blocks:
            if block.kind == "loop":
                result = result * _Y
            elif block.kind == "bridge":
                result = result * _X
            else:
                part = subgraph(h, block.edge_ids)
                e = part.edges[0].id
                result = result * (solve(delete_edge(part, e)) + solve(contract_edge(part, e)))
        return result

    return solve(g)


def tutte_cactus(g: MultiGraph) -> BiPoly:
    """Product over blocks of ``y`` (loop), ``x`` (bridge) and cycle polynomials."""
    decomposition = block_decompose(g)
    factors: Counter = Counter()
    for block in decomposition.blocks:
        if block.kind == "core":
            raise MethodInapplicable("graph is not a cactus: it has a non-cycle biconnected block")
        factors[block.length if block.kind != "bridge" else 0] += 1
    polys = [(_X if length == 0 else cycle_poly(length), count) for length, count in sorted(factors.items())]
    return product(polys)


def tutte(g: MultiGraph, method: TutteMethod | str = TutteMethod.AUTO) -> BiPoly:
    method = TutteMethod(method)
    if method is TutteMethod.SUM:
        return tutte_spanning_sum(g)
    if method is TutteMethod.DC:
        return tutte_deletion_contraction(g)
    if method is TutteMethod.CACTUS:
        return tutte_cactus(g)
    if block_decompose(g).is_cactus:
        return tutte_cactus(g)
    return tutte_deletion_contraction(g)
