import random

import pytest

from schreier_tutte.multigraph import build


def random_cactus(rng: random.Random, max_edges: int = 16):
    """Grow a cactus by one-point joins of loops, bridges and cycles."""
    n, edges = 1, []
    target = rng.randint(1, max_edges)
    while len(edges) < target:
        anchor = rng.randrange(n)
        kind = rng.choice(["loop", "bridge", "cycle", "cycle"])
        room = max_edges - len(edges)
        if kind == "loop":
            edges.append((anchor, anchor))
        elif kind == "bridge" or room < 2:
            edges.append((anchor, n))
            n += 1
        else:
            m = rng.randint(2, min(5, room))
            ring = [anchor] + list(range(n, n + m - 1))
            n += m - 1
            edges += [(ring[i], ring[(i + 1) % m]) for i in range(m)]
    return build(n, edges)


def random_multigraph(rng: random.Random, vertices: int, edges: int, loops: bool = True):
    out = []
    for _ in range(edges):
        u = rng.randrange(vertices)
        v = rng.randrange(vertices) if loops else rng.choice([w for w in range(vertices) if w != u])
        out.append((u, v))
    return build(vertices, out)


def complete_graph(k: int):
    return build(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def cacti():
    r = random.Random(7)
    return [random_cactus(r) for _ in range(25)]
