"""Finite undirected multigraphs with loops and the reductions used by
deletion-contraction recursions.

Graphs are immutable. Vertices are ``0..n-1``; edges are stored as a tuple of
normalized ``(u, v)`` pairs with ``u <= v`` and an edge is addressed by its
index in that tuple (its :data:`EdgeId`). Each edge also carries an integer
*label* that survives reductions, which lets callers follow an original edge
through a chain of minors.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

EdgeId = int
VertexId = int


class GraphError(ValueError):
    """Invalid handle or malformed graph data."""


class Multigraph:
    __slots__ = ("n", "edges", "labels", "_canon")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence[int] | None = None):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            norm.append((u, v) if u <= v else (v, u))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        if labels is None:
            self.labels = tuple(range(len(norm)))
        else:
            if len(labels) != len(norm):
                raise GraphError("labels must match edges one-to-one")
            self.labels = tuple(labels)
        self._canon = None

    @classmethod
    def _trusted(cls, n: int, edges: tuple, labels: tuple) -> Multigraph:
        # edges already normalized and in range
        g = cls.__new__(cls)
        g.n, g.edges, g.labels, g._canon = n, edges, labels, None
        return g

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Multigraph({self.n}, {list(self.edges)})"

    def __eq__(self, other) -> bool:
        # labelled equality: same vertex count and same edge multiset
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and sorted(self.edges) == sorted(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.edges))))

    def _check_edge(self, e: EdgeId) -> None:
        if not isinstance(e, int) or not 0 <= e < len(self.edges):
            raise GraphError(f"invalid edge id {e!r} for a graph with {len(self.edges)} edges")

    def _check_vertex(self, v: VertexId) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range 0..{self.n - 1}")

    def is_loop(self, e: EdgeId) -> bool:
        self._check_edge(e)
        u, v = self.edges[e]
        return u == v

    def loops_only(self) -> bool:
        return all(u == v for u, v in self.edges)

    def loop_count_per_vertex(self) -> list[int]:
        counts = [0] * self.n
        for u, v in self.edges:
            if u == v:
                counts[u] += 1
        return counts

    def non_loop_edges(self) -> list[EdgeId]:
        return [i for i, (u, v) in enumerate(self.edges) if u != v]

    def degree(self, v: VertexId) -> int:
        """Degree of ``v``; a loop counts twice."""
        self._check_vertex(v)
        return sum((a == v) + (b == v) for a, b in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def multiplicities(self) -> Counter:
        return Counter(self.edges)

    # -- reductions ----------------------------------------------------

    def delete_edge(self, e: EdgeId) -> Multigraph:
        self._check_edge(e)
        return Multigraph._trusted(self.n, self.edges[:e] + self.edges[e + 1:],
                                   self.labels[:e] + self.labels[e + 1:])

    def contract_edge(self, e: EdgeId) -> Multigraph:
        """Merge the endpoints of the non-loop edge ``e``.

        The merged vertex takes the smaller index; indices above the larger
        endpoint shift down by one. Other parallel copies of ``e`` become loops.
        """
        if self.is_loop(e):
            raise GraphError("cannot contract a loop")
        u, v = self.edges[e]  # u < v

        def image(w: int) -> int:
            if w == v:
                return u
            return w - 1 if w > v else w

        edges = []
        labels = []
        for i, (a, b) in enumerate(self.edges):
            if i == e:
                continue
            a, b = image(a), image(b)
            edges.append((a, b) if a <= b else (b, a))
            labels.append(self.labels[i])
        return Multigraph._trusted(self.n - 1, tuple(edges), tuple(labels))

    def delete_vertices(self, vs: Iterable[VertexId]) -> Multigraph:
        drop = set(vs)
        for v in drop:
            self._check_vertex(v)
        index = {}
        for w in range(self.n):
            if w not in drop:
                index[w] = len(index)
        edges = []
        labels = []
        for (a, b), lab in zip(self.edges, self.labels):
            if a in drop or b in drop:
                continue
            edges.append((index[a], index[b]))
            labels.append(lab)
        return Multigraph._trusted(len(index), tuple(edges), tuple(labels))

    def delete_vertex(self, v: VertexId) -> Multigraph:
        return self.delete_vertices((v,))

    def minors(self, e: EdgeId) -> tuple[Multigraph, Multigraph, Multigraph, Multigraph, Multigraph]:
        """``(G-uv, G/uv, G-u, G-v, G-u-v)`` for the non-loop edge ``e = uv``."""
        if self.is_loop(e):
            raise GraphError("reductions need a non-loop edge")
        u, v = self.edges[e]
        return (self.delete_edge(e), self.contract_edge(e), self.delete_vertex(u),
                self.delete_vertex(v), self.delete_vertices((u, v)))

    # -- structure -----------------------------------------------------

    def component_vertex_sets(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups: dict[int, list[int]] = {}
        for w in range(self.n):
            groups.setdefault(find(w), []).append(w)
        return list(groups.values())

    def num_components(self) -> int:
        return len(self.component_vertex_sets())

    def components(self) -> list[Multigraph]:
        sets = self.component_vertex_sets()
        if len(sets) == 1:
            return [self]
        where = {}
        for ci, vs in enumerate(sets):
            for i, w in enumerate(vs):
                where[w] = (ci, i)
        parts: list[tuple[list, list]] = [([], []) for _ in sets]
        for (a, b), lab in zip(self.edges, self.labels):
            ci, ia = where[a]
            ib = where[b][1]
            parts[ci][0].append((ia, ib))
            parts[ci][1].append(lab)
        return [Multigraph._trusted(len(vs), tuple(es), tuple(ls)) for vs, (es, ls) in zip(sets, parts)]

    def relabel(self, perm: Sequence[int]) -> Multigraph:
        """Graph with vertex ``w`` renamed ``perm[w]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of the vertices")
        return Multigraph(self.n, [(perm[a], perm[b]) for a, b in self.edges], self.labels)

    def disjoint_union(self, other: Multigraph) -> Multigraph:
        off = self.n
        top = max(self.labels, default=-1) + 1
        return Multigraph(self.n + other.n,
                          list(self.edges) + [(a + off, b + off) for a, b in other.edges],
                          list(self.labels) + [lab + top for lab in other.labels])

    # -- canonical form ------------------------------------------------

    def canonical(self) -> tuple[bytes, Multigraph]:
        """``(certificate, canonically relabelled graph)``; cached per instance."""
        if self._canon is None:
            from .canon import canonical_labeling

            perm = canonical_labeling(self)
            g = self.relabel(perm)
            order = sorted(range(g.m), key=lambda i: g.edges[i])
            g = Multigraph(g.n, [g.edges[i] for i in order], [g.labels[i] for i in order])
            self._canon = (encode_certificate(g.n, g.edges), g)
        return self._canon

    def certificate(self) -> bytes:
        return self.canonical()[0]


def encode_certificate(n: int, edges: Sequence[tuple[int, int]]) -> bytes:
    body = ";".join(f"{a},{b}" for a, b in sorted(edges))
    return f"{n}|{body}".encode("ascii")


# -- functional spellings ----------------------------------------------

def delete_edge(g: Multigraph, e: EdgeId) -> Multigraph:
    return g.delete_edge(e)


def contract_edge(g: Multigraph, e: EdgeId) -> Multigraph:
    return g.contract_edge(e)


def delete_vertex(g: Multigraph, v: VertexId) -> Multigraph:
    return g.delete_vertex(v)


def components(g: Multigraph) -> list[Multigraph]:
    return [] if g.n == 0 else g.components()


def canonical_certificate(g: Multigraph) -> bytes:
    return g.certificate()


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    return g.n == h.n and g.m == h.m and g.certificate() == h.certificate()


# -- small named graphs ------------------------------------------------

EMPTY = Multigraph(0)


def bouquet(loops: int) -> Multigraph:
    """K_1^n: one vertex carrying ``loops`` loops."""
    return Multigraph(1, [(0, 0)] * loops)


def complete(n: int) -> Multigraph:
    return Multigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n: int) -> Multigraph:
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Multigraph:
    """C_n for n >= 1; C_1 is a loop and C_2 a digon."""
    if n == 1:
        return bouquet(1)
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Multigraph:
    return Multigraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def digon() -> Multigraph:
    return Multigraph(2, [(0, 1), (0, 1)])


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, outer + spokes + inner)
