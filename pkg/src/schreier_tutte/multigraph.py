"""Finite undirected multigraphs with loops and stable edge identities."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    label: str | None = None

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


class GraphStats(NamedTuple):
    k: int
    rank: int
    nullity: int


@dataclass(frozen=True)
class Block:
    """One block of a :class:`BlockDecomposition`.

    ``kind`` is one of ``"loop"``, ``"bridge"``, ``"cycle"``, ``"core"``;
    ``length`` is the cycle length for ``"cycle"`` blocks.
    """

    kind: str
    edge_ids: tuple[int, ...]
    vertices: tuple[int, ...]
    length: int = 0


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]

    @property
    def is_cactus(self) -> bool:
        return all(b.kind != "core" for b in self.blocks)

    def count(self, kind: str) -> int:
        return sum(1 for b in self.blocks if b.kind == kind)

    def cycle_spectrum(self) -> dict[int, int]:
        """``{length: number of cycle blocks}``."""
        return dict(sorted(Counter(b.length for b in self.blocks if b.kind == "cycle").items()))


@dataclass(frozen=True)
class MultiGraph:
    vertex_count: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("vertex count must be non-negative")
        seen = set()
        for e in self.edges:
            if not (0 <= e.u < self.vertex_count and 0 <= e.v < self.vertex_count):
                raise GraphError(f"edge {e.id} endpoint out of range [0, {self.vertex_count})")
            if e.id in seen:
                raise GraphError(f"duplicate edge id {e.id}")
            seen.add(e.id)
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise GraphError("one label per vertex required")

    def __len__(self) -> int:
        return len(self.edges)

    def edge(self, edge_id: int) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise GraphError(f"unknown edge id {edge_id}")

    @property
    def loop_count(self) -> int:
        return sum(1 for e in self.edges if e.is_loop)

    def degree(self, v: int) -> int:
        """Degree with each loop counted twice."""
        return sum((e.u == v) + (e.v == v) for e in self.edges)


def build(vertex_count: int, edges: Iterable[Sequence], labels: Sequence[str] | None = None) -> MultiGraph:
    """Build a graph from ``(u, v)`` or ``(u, v, label)`` tuples; ids follow input order."""
    out = []
    for i, e in enumerate(edges):
        u, v = int(e[0]), int(e[1])
        label = e[2] if len(e) > 2 else None
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u}, {v}) endpoint out of range [0, {vertex_count})")
        out.append(Edge(i, u, v, label))
    return MultiGraph(vertex_count, tuple(out), tuple(labels) if labels is not None else None)


def components(g: MultiGraph) -> list[int]:
    """Component index per vertex."""
    parent = list(range(g.vertex_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in g.edges:
        if not e.is_loop:
            ru, rv = find(e.u), find(e.v)
            if ru != rv:
                parent[ru] = rv
    roots: dict[int, int] = {}
    return [roots.setdefault(find(v), len(roots)) for v in range(g.vertex_count)]


def stats(g: MultiGraph) -> GraphStats:
    comp = components(g)
    k = len(set(comp))
    rank = g.vertex_count - k
    return GraphStats(k, rank, len(g.edges) - rank)


def is_connected(g: MultiGraph) -> bool:
    return g.vertex_count <= 1 or stats(g).k == 1


def delete_edge(g: MultiGraph, edge_id: int) -> MultiGraph:
    g.edge(edge_id)
    return MultiGraph(g.vertex_count, tuple(e for e in g.edges if e.id != edge_id), g.labels)


def add_edge(g: MultiGraph, u: int, v: int, label: str | None = None) -> MultiGraph:
    new_id = max((e.id for e in g.edges), default=-1) + 1
    return MultiGraph(g.vertex_count, g.edges + (Edge(new_id, u, v, label),), g.labels)


def contract_edge(g: MultiGraph, edge_id: int) -> MultiGraph:
    """Identify the endpoints of a non-loop edge and remove it.

    The higher-numbered endpoint merges into the lower one; vertices above it
    shift down by one. Parallel edges between the endpoints become loops.
    """
    target = g.edge(edge_id)
    if target.is_loop:
        raise GraphError(f"cannot contract loop {edge_id}")
    keep, gone = min(target.u, target.v), max(target.u, target.v)

    def relabel(w: int) -> int:
        if w == gone:
            w = keep
        return w - 1 if w > gone else w

    edges = tuple(Edge(e.id, relabel(e.u), relabel(e.v), e.label) for e in g.edges if e.id != edge_id)
    labels = None
    if g.labels is not None:
        labels = g.labels[:gone] + g.labels[gone + 1:]
    return MultiGraph(g.vertex_count - 1, edges, labels)


def strip_loops(g: MultiGraph) -> MultiGraph:
    return MultiGraph(g.vertex_count, tuple(e for e in g.edges if not e.is_loop), g.labels)


def subgraph(g: MultiGraph, edge_ids: Iterable[int]) -> MultiGraph:
    """Graph on the vertices touched by ``edge_ids``, relabelled compactly; edge ids are kept."""
    wanted = set(edge_ids)
    edges = [e for e in g.edges if e.id in wanted]
    verts = sorted({w for e in edges for w in (e.u, e.v)})
    index = {v: i for i, v in enumerate(verts)}
    return MultiGraph(len(verts), tuple(Edge(e.id, index[e.u], index[e.v], e.label) for e in edges))


def one_point_join(g: MultiGraph, h: MultiGraph, gv: int = 0, hv: int = 0) -> MultiGraph:
    """Identify vertex ``gv`` of ``g`` with vertex ``hv`` of ``h``."""

    def place(w: int) -> int:
        if w == hv:
            return gv
        return g.vertex_count + (w if w < hv else w - 1)

    edges = [(e.u, e.v) for e in g.edges] + [(place(e.u), place(e.v)) for e in h.edges]
    return build(g.vertex_count + h.vertex_count - 1, edges)


def block_decompose(g: MultiGraph) -> BlockDecomposition:
    """Split the edges into loops, bridges, cycles and other biconnected cores.

    Biconnected components come from an iterative Hopcroft-Tarjan search over
    edge ids; the tree edge used to enter a vertex is excluded by id, so a
    parallel pair is correctly seen as a 2-cycle.
    """
    blocks: list[Block] = []
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for e in g.edges:
        if e.is_loop:
            blocks.append(Block("loop", (e.id,), (e.u,), 1))
        else:
            adj[e.u].append((e.v, e.id))
            adj[e.v].append((e.u, e.id))

    disc = [-1] * g.vertex_count
    low = [0] * g.vertex_count
    ends = {e.id: (e.u, e.v) for e in g.edges}
    edge_stack: list[int] = []
    timer = 0
    found: list[list[int]] = []

    for root in range(g.vertex_count):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, entering edge id, neighbour iterator index)
        stack = [(root, -1, 0)]
        while stack:
            v, via, idx = stack[-1]
            nbrs = adj[v]
            if idx < len(nbrs):
                stack[-1] = (v, via, idx + 1)
                w, eid = nbrs[idx]
                if eid == via:
                    continue
                if disc[w] == -1:
                    edge_stack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append(eid)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= disc[parent]:
                        comp = []
                        while True:
                            eid = edge_stack.pop()
                            comp.append(eid)
                            if eid == via:
                                break
                        found.append(comp)

    for comp in found:
        comp.sort()
        verts = sorted({w for eid in comp for w in ends[eid]})
        if len(comp) == 1:
            blocks.append(Block("bridge", tuple(comp), tuple(verts)))
            continue
        deg = Counter(w for eid in comp for w in ends[eid])
        if len(comp) == len(verts) and all(d == 2 for d in deg.values()):
            blocks.append(Block("cycle", tuple(comp), tuple(verts), len(comp)))
        else:
            blocks.append(Block("core", tuple(comp), tuple(verts)))
    blocks.sort(key=lambda b: b.edge_ids[0])
    return BlockDecomposition(tuple(blocks))


def is_cactus(g: MultiGraph) -> bool:
    return block_decompose(g).is_cactus


# -- text formats --------------------------------------------------------------

def canonical_text(g: MultiGraph) -> str:
    """Vertex count, then sorted endpoint pairs (one line per edge, with multiplicity)."""
    pairs = sorted((min(e.u, e.v), max(e.u, e.v)) for e in g.edges)
    return f"{g.vertex_count}\n" + "".join(f"{u} {v}\n" for u, v in pairs)


def to_edge_list(g: MultiGraph) -> str:
    """``vertices N`` header then ``u v [label]`` per edge in id order."""
    lines = [f"vertices {g.vertex_count}"]
    for e in g.edges:
        lines.append(f"{e.u} {e.v}" + (f" {e.label}" if e.label else ""))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> MultiGraph:
    """Parse the edge-list format; the header may be ``vertices N`` or a bare ``N``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty graph text")
    head = lines[0].split()
    if len(head) == 2 and head[0] == "vertices":
        head = head[1:]
    if len(head) != 1 or not head[0].isdigit():
        raise GraphError(f"bad header line {lines[0]!r}; expected 'vertices N'")
    n = int(head[0])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) not in (2, 3) or not parts[0].isdigit() or not parts[1].isdigit():
            raise GraphError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1]), *parts[2:]))
    return build(n, edges)


def to_dot(g: MultiGraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        label = g.labels[v] if g.labels else str(v)
        out.append(f'  {v} [label="{label}"];')
    for e in g.edges:
        attr = f' [label="{e.label}"]' if e.label else ""
        out.append(f"  {e.u} -- {e.v}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"
