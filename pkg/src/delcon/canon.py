"""Exact canonical labelling of small multigraphs.

Individualization-refinement search: colour refinement on (loop count,
neighbour colour, edge multiplicity), then branch on the first non-singleton
cell and keep the lexicographically least relabelled edge list. Automorphisms
discovered at equal leaves prune sibling branches in the same orbit.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .multigraph import Multigraph


def _rank(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(colors: list[int], nbrs: list[list[tuple[int, int]]]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted((colors[w], k) for w, k in nbrs[v])))
               for v in range(len(colors))]
        colors = _rank(sig)
        count = len(set(colors))
        if count == ncolors:
            return colors
        ncolors = count


def _orbit_rep(x: int, gens: list[list[int]], n: int) -> set[int]:
    seen = {x}
    stack = [x]
    while stack:
        a = stack.pop()
        for g in gens:
            b = g[a]
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return seen


def canonical_labeling(g: "Multigraph") -> list[int]:
    """Permutation ``perm`` (old vertex -> new vertex) such that relabelled
    isomorphic graphs produce identical sorted edge lists."""
    n = g.n
    if n == 0:
        return []
    mult: dict[tuple[int, int], int] = {}
    loops = [0] * n
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            mult[(u, v)] = mult.get((u, v), 0) + 1
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (u, v), k in mult.items():
        nbrs[u].append((v, k))
        nbrs[v].append((u, k))
    edges = g.edges

    def encode(colors: list[int]) -> tuple:
        return tuple(sorted((min(colors[a], colors[b]), max(colors[a], colors[b]))
                            for a, b in edges))

    deg = [sum(k for _, k in nbrs[v]) for v in range(n)]
    start = _refine(_rank([(loops[v], deg[v]) for v in range(n)]), nbrs)

    best: list = [None, None]  # encoding, labelling
    autos: list[list[int]] = []

    def search(colors: list[int], prefix: tuple[int, ...]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = c
                break
        if target is None:
            code = encode(colors)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, list(colors)
            elif code == best[0]:
                # colors^-1 followed by best gives an automorphism
                inv = [0] * n
                for v, c in enumerate(best[1]):
                    inv[c] = v
                autos.append([inv[colors[v]] for v in range(n)])
            return
        explored: list[int] = []
        for v in cells[target]:
            if explored:
                fixing = [a for a in autos if all(a[p] == p for p in prefix)]
                if fixing and any(v in _orbit_rep(w, fixing, n) for w in explored):
                    continue
            split = _rank([(c, 0 if w == v else 1) for w, c in enumerate(colors)])
            search(_refine(split, nbrs), prefix + (v,))
            explored.append(v)

    search(start, ())
    return best[1]
