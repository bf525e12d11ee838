"""Exhaustive generation of small simple graphs and the fixed test panels."""

from __future__ import annotations

from functools import lru_cache

from .multigraph import Multigraph, bouquet, complete, cycle, digon, path

MAX_GENERATED_VERTICES = 7


@lru_cache(maxsize=None)
def simple_graphs(n: int) -> tuple[Multigraph, ...]:
    """One canonical representative of every simple graph on ``n`` vertices.

    Built edge by edge: each class with ``k`` edges is extended by every
    missing edge and the results deduplicated by certificate.
    """
    if n > MAX_GENERATED_VERTICES:
        raise ValueError(f"generation is capped at {MAX_GENERATED_VERTICES} vertices")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    layer = {Multigraph(n).certificate(): Multigraph(n).canonical()[1]}
    found = list(layer.values())
    for _ in pairs:
        nxt: dict[bytes, Multigraph] = {}
        for g in layer.values():
            present = set(g.edges)
            for p in pairs:
                if p in present:
                    continue
                h = Multigraph(n, list(g.edges) + [p])
                cert, canon = h.canonical()
                if cert not in nxt:
                    nxt[cert] = canon
        layer = dict(sorted(nxt.items()))
        found.extend(layer.values())
    return tuple(Multigraph(g.n, g.edges) for g in found)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Multigraph, ...]:
    return tuple(g for g in simple_graphs(n) if g.num_components() == 1)


def connected_graphs_upto(max_n: int, min_n: int = 1) -> list[Multigraph]:
    out: list[Multigraph] = []
    for n in range(min_n, max_n + 1):
        out.extend(connected_graphs(n))
    return out


def multigraph_panel() -> list[Multigraph]:
    """Ten fixed multigraphs exercising loops, parallel edges and disconnection."""
    return [
        bouquet(1),
        bouquet(2),
        digon(),
        Multigraph(2, [(0, 1), (0, 1), (0, 1)]),                    # theta: triple edge
        Multigraph(2, [(0, 1), (0, 0), (1, 1)]),                    # K2 with a loop at each end
        Multigraph(3, [(0, 1), (0, 1), (1, 2), (0, 2)]),            # triangle with a doubled side
        Multigraph(3, [(0, 1), (1, 2), (1, 1), (2, 2), (2, 2)]),    # path with loops
        Multigraph(4, complete(4).edges + ((0, 0),)),               # K4 plus a loop
        Multigraph(5, [(0, 1), (1, 2), (2, 0), (3, 4), (3, 4)]),    # triangle + digon
        Multigraph(5, cycle(5).edges + ((0, 2), (0, 2), (3, 3))),   # C5, doubled chord, loop
    ]


def full_panel(max_n: int = 6) -> list[Multigraph]:
    return connected_graphs_upto(max_n) + multigraph_panel()


def triviality_panel() -> list[Multigraph]:
    return connected_graphs_upto(4) + [bouquet(1), bouquet(2), digon()]


def witness_panel() -> list[Multigraph]:
    return [path(4)] + connected_graphs_upto(5) + [digon(), Multigraph(3, [(0, 1), (0, 1), (1, 2)])]
