"""Named polynomial invariants built on the generic engine, their
specializations, and the matrix lifts used for distinguishing experiments."""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from .engine import MemoTable, ReductionScheme, reduce
from .multigraph import GraphError, Multigraph
from .oracles import tutte_subset_expansion
from .poly import ONE, ZERO, Poly, r, s, t, x, y


class InvariantKind(str, Enum):
    H = "H"
    C = "C"
    M = "M"
    D = "D"
    J0 = "J0"
    J1 = "J1"


def _bouquet_cycle(n: int) -> Poly:
    return ONE + Poly.monomial(n, s=1, t=1)


SCHEMES: dict[InvariantKind, ReductionScheme] = {
    InvariantKind.H: ReductionScheme(ONE, ONE, -ONE, ZERO, lambda n: Poly.monomial(n, s=1), "H"),
    InvariantKind.C: ReductionScheme(ONE, t, -t, t, _bouquet_cycle, "C"),
    InvariantKind.M: ReductionScheme(ONE, ZERO, ZERO, r, lambda n: ONE, "M"),
    InvariantKind.D: ReductionScheme(ONE, t, -t, r, _bouquet_cycle, "D"),
    InvariantKind.J0: ReductionScheme(ONE, t, ZERO, r, lambda n: x * y ** n + Poly.monomial(n, s=1, t=1), "J0"),
    InvariantKind.J1: ReductionScheme(ONE, t, -t, r, lambda n: x * y ** n + Poly.monomial(n, s=1, t=1), "J1"),
}

_MEMOS: dict[InvariantKind, MemoTable] = {}


def memo_for(kind: InvariantKind) -> MemoTable:
    if kind not in _MEMOS:
        _MEMOS[kind] = MemoTable.from_env()
    return _MEMOS[kind]


def clear_memos() -> None:
    _MEMOS.clear()


def j_kind(lam: int) -> InvariantKind:
    if lam not in (0, 1):
        raise ValueError(f"lambda must satisfy lambda^2 = lambda, i.e. be 0 or 1; got {lam!r}")
    return InvariantKind.J1 if lam else InvariantKind.J0


def evaluate(g: Multigraph, kind: InvariantKind | str, memo: MemoTable | None = None,
             threads: int = 1) -> Poly:
    kind = InvariantKind(kind)
    return reduce(g, SCHEMES[kind], memo if memo is not None else memo_for(kind), threads=threads)


def hamiltonian_poly(g: Multigraph) -> Poly:
    return evaluate(g, InvariantKind.H)


def cycle_poly(g: Multigraph) -> Poly:
    return evaluate(g, InvariantKind.C)


def matching_poly(g: Multigraph) -> Poly:
    return evaluate(g, InvariantKind.M)


def merged_poly(g: Multigraph) -> Poly:
    return evaluate(g, InvariantKind.D)


def J_poly(g: Multigraph, lam: int) -> Poly:
    return evaluate(g, j_kind(lam))


def hamiltonian_count(g: Multigraph) -> int:
    """Number of Hamiltonian cycles, read off the s-linear coefficient of H."""
    return hamiltonian_poly(g).coeff((0, 1, 0, 0, 0))


# name -> (lambda, substitution) applied to J
SPECIALIZATIONS: dict[str, tuple[int, dict]] = {
    "H": (1, {"x": 0, "y": 1, "r": 0, "t": 1}),
    "C": (1, {"x": 1, "y": 1, "r": t}),
    "D": (1, {"x": 1, "y": 1}),
    "tutte": (0, {"r": 0, "s": 0, "t": 1}),
    "spanning-functional": (0, {"x": 0, "y": 1, "r": 0, "t": 1}),
    "functional": (0, {"x": 1, "y": 1, "r": s * t - t}),
    "people-choosing": (0, {"x": 0, "y": 1, "r": 0, "s": 2, "t": 1}),
}


def specialize(g: Multigraph, target: str) -> Poly:
    try:
        lam, assignment = SPECIALIZATIONS[target]
    except KeyError:
        raise ValueError(f"unknown specialization {target!r}; choose from {sorted(SPECIALIZATIONS)}") from None
    return J_poly(g, lam).substitute(assignment)


def people_choosing(g: Multigraph) -> int:
    """Ways for everyone to pick one acquaintance, weighted as J(G,0,1,0,0,2,1)."""
    return specialize(g, "people-choosing").constant_value()


def tutte_check(g: Multigraph) -> tuple[Poly, Poly, bool]:
    lhs = specialize(g, "tutte")
    tutte = tutte_subset_expansion(g).substitute({"x": x + 1})
    rhs = x ** g.num_components() * tutte
    return lhs, rhs, lhs == rhs


# -- matrix lifts -------------------------------------------------------

def _validate_matrix(mx: Sequence[Sequence[int]]) -> int:
    n = len(mx)
    for i, row in enumerate(mx):
        if len(row) != n:
            raise GraphError(f"matrix row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or v < 0:
                raise GraphError(f"matrix entry ({i}, {j}) = {v!r} is not a non-negative integer")
            if mx[j][i] != v:
                raise GraphError(f"matrix is not symmetric at ({i}, {j})")
    return n


def matrix_to_multigraph(mx: Sequence[Sequence[int]]) -> Multigraph:
    """Off-diagonal entry (i, j) gives that many ij-edges; diagonal entry
    (i, i) gives that many loops at i."""
    n = _validate_matrix(mx)
    edges = []
    for i in range(n):
        edges.extend([(i, i)] * mx[i][i])
        for j in range(i + 1, n):
            edges.extend([(i, j)] * mx[i][j])
    return Multigraph(n, edges)


def adjacency_matrix(g: Multigraph) -> list[list[int]]:
    mx = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        if u == v:
            mx[u][u] += 1
        else:
            mx[u][v] += 1
            mx[v][u] += 1
    return mx


def signless_laplacian(g: Multigraph) -> list[list[int]]:
    if not all(u != v for u, v in g.edges):
        raise GraphError("signless Laplacian lift is only defined for loopless graphs")
    mx = adjacency_matrix(g)
    for i, d in enumerate(g.degrees()):
        mx[i][i] = d
    return mx


def signless_laplacian_lift(g: Multigraph) -> Multigraph:
    return matrix_to_multigraph(signless_laplacian(g))
