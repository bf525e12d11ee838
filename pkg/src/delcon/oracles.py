"""Brute-force subgraph enumerators.

These are the ground truth the recursions are checked against, so they stay
deliberately naive: edge subsets are enumerated over edge *instances* (parallel
edges give distinct subsets) and each candidate is tested directly.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Iterator

from .multigraph import Multigraph
from .poly import ZERO, Poly

CountMap = dict


def _subsets(m: int) -> Iterator[tuple[int, ...]]:
    for k in range(m + 1):
        yield from combinations(range(m), k)


def _shape(g: Multigraph, subset: Iterable[int]) -> tuple[dict[int, int], list[tuple[int, int]]]:
    """Degrees of the covered vertices and (vertices, edges) per component of
    the edge-induced subgraph."""
    deg: dict[int, int] = {}
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    chosen = [g.edges[i] for i in subset]
    for u, v in chosen:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    verts = Counter(find(w) for w in deg)
    edges = Counter(find(u) for u, _ in chosen)
    return deg, [(verts[root], edges[root]) for root in verts]


def count_hamiltonian(g: Multigraph) -> int:
    """Spanning cycles by backtracking over edge instances."""
    n = g.n
    if n == 0:
        return 0
    if n == 1:
        return sum(1 for u, v in g.edges if u == v)
    incident: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            incident[u].append((i, v))
            incident[v].append((i, u))
    visited = [False] * n
    visited[0] = True
    count = 0

    def extend(at: int, depth: int, used_first: int) -> None:
        nonlocal count
        for i, w in incident[at]:
            if depth == n and w == 0:
                if i != used_first:
                    count += 1
            elif not visited[w]:
                visited[w] = True
                extend(w, depth + 1, used_first if depth > 1 else i)
                visited[w] = False

    extend(0, 1, -1)
    # every cycle is found once per direction
    return count // 2


def two_factors_by_components(g: Multigraph) -> CountMap:
    """``{k: number of spanning 2-regular subgraphs with k components}``."""
    out: Counter = Counter()
    for subset in combinations(range(g.m), g.n):
        deg, comps = _shape(g, subset)
        if len(deg) == g.n and all(d == 2 for d in deg.values()):
            out[len(comps)] += 1
    return dict(out)


def cycle_systems(g: Multigraph) -> CountMap:
    """``{(k, l): subgraphs with k components, l edges, all covered degrees 2}``."""
    out: Counter = Counter()
    for subset in _subsets(g.m):
        deg, comps = _shape(g, subset)
        if all(d == 2 for d in deg.values()):
            out[(len(comps), len(subset))] += 1
    return dict(out)


def matchings(g: Multigraph) -> CountMap:
    out: Counter = Counter()
    for subset in _subsets(g.m):
        deg, _ = _shape(g, subset)
        if len(deg) == 2 * len(subset) and all(d == 1 for d in deg.values()):
            out[len(subset)] += 1
    return dict(out)


def spanning_functional_subgraphs(g: Multigraph) -> CountMap:
    """Spanning subgraphs in which every component has as many edges as vertices."""
    out: Counter = Counter()
    for subset in combinations(range(g.m), g.n):
        deg, comps = _shape(g, subset)
        if len(deg) == g.n and all(nv == ne for nv, ne in comps):
            out[len(comps)] += 1
    return dict(out)


def functional_subgraphs(g: Multigraph) -> CountMap:
    """``{(k, l): edge-induced subgraphs with k components, l edges, each
    component having at most as many edges as vertices}``."""
    out: Counter = Counter()
    for subset in _subsets(g.m):
        _, comps = _shape(g, subset)
        if all(ne <= nv for nv, ne in comps):
            out[(len(comps), len(subset))] += 1
    return dict(out)


def count_cycles(g: Multigraph) -> int:
    """c(G) by depth-first search: each cycle rooted at its least vertex."""
    total = sum(1 for u, v in g.edges if u == v)
    incident: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            incident[u].append((i, v))
            incident[v].append((i, u))
    closed = 0
    for root in range(g.n):
        on_path = {root}

        def walk(at: int, first: int, length: int) -> None:
            nonlocal closed
            for i, w in incident[at]:
                if w == root and length >= 1 and i != first:
                    closed += 1
                elif w > root and w not in on_path:
                    on_path.add(w)
                    walk(w, i if length == 0 else first, length + 1)
                    on_path.discard(w)

        walk(root, -1, 0)
    # digons and longer cycles are each traversed in both directions
    return total + closed // 2


def tutte_subset_expansion(g: Multigraph) -> Poly:
    """Tutte polynomial in x, y via the rank-nullity sum over edge subsets."""
    full_rank = g.n - g.num_components()
    tally: Counter = Counter()
    for subset in _subsets(g.m):
        h = Multigraph(g.n, [g.edges[i] for i in subset])
        rank = g.n - h.num_components()
        tally[(full_rank - rank, len(subset) - rank)] += 1
    xm1 = Poly.var("x") - 1
    ym1 = Poly.var("y") - 1
    out = ZERO
    for (i, j), c in tally.items():
        out = out + c * xm1 ** i * ym1 ** j
    return out
