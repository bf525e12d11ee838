"""Generic deletion-contraction evaluator.

A scheme ``(a, b, c, d, base)`` defines

    F(G) = a F(G-uv) + b F(G/uv) + c F(G-u) + c F(G-v) + d F(G-u-v)   (u != v)
    F(G1 + G2) = F(G1) F(G2)
    F(K_1^n) = base(n),  F(empty) = 1

The value is independent of the order in which edges are reduced exactly when
``bc + c^2 + d - ad = 0`` or F is trivial (``F(G) = F(K_1)^|V(G)|``).
"""

from __future__ import annotations

import itertools
import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .multigraph import Multigraph
from .poly import ONE, ZERO, Poly


class SchemeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ReductionScheme:
    a: Poly
    b: Poly
    c: Poly
    d: Poly
    base: Callable[[int], Poly]
    name: str = "custom"
    _bases: dict = field(default_factory=dict, repr=False)

    def base_value(self, n: int) -> Poly:
        if n not in self._bases:
            self._bases[n] = Poly.const(v) if isinstance(v := self.base(n), int) else v
        return self._bases[n]

    def condition(self) -> Poly:
        """``bc + c^2 + d - ad``; zero means order independence."""
        a, b, c, d = self.a, self.b, self.c, self.d
        return b * c + c * c + d - a * d


class MemoTable:
    """Certificate -> value cache with hit counters and an optional entry cap."""

    def __init__(self, max_entries: int | None = None):
        self.data: dict[Hashable, Poly] = {}
        self.max_entries = max_entries
        self.hits = 0
        self.misses = 0

    @classmethod
    def from_env(cls) -> MemoTable:
        mb = os.environ.get("DELCON_MEMO_MB")
        if not mb:
            return cls()
        # rough per-entry footprint of a certificate plus a small polynomial
        return cls(max_entries=max(1, int(float(mb) * 1024 * 1024 / 2048)))

    def get(self, key):
        val = self.data.get(key)
        if val is None:
            self.misses += 1
        else:
            self.hits += 1
        return val

    def put(self, key, value: Poly) -> None:
        if self.max_entries is None or len(self.data) < self.max_entries:
            self.data[key] = value

    def __len__(self) -> int:
        return len(self.data)

    @property
    def hit_rate(self) -> float:
        total = self.hits + self.misses
        return self.hits / total if total else 0.0


def _combine(scheme: ReductionScheme, g: Multigraph, e: int,
             evaluate: Callable[[Multigraph], Poly], pool: ThreadPoolExecutor | None = None) -> Poly:
    a, b, c, d = scheme.a, scheme.b, scheme.c, scheme.d
    del_e, con_e, del_u, del_v, del_uv = g.minors(e)
    jobs = []
    if a:
        jobs.append((a, (del_e,)))
    if b:
        jobs.append((b, (con_e,)))
    if c:
        jobs.append((c, (del_u, del_v)))
    if d:
        jobs.append((d, (del_uv,)))
    flat = [h for _, hs in jobs for h in hs]
    values = list(pool.map(evaluate, flat)) if pool is not None else [evaluate(h) for h in flat]
    total = ZERO
    i = 0
    for coef, hs in jobs:
        part = ZERO
        for _ in hs:
            part = part + values[i]
            i += 1
        total = total + coef * part
    return total


def _check_scheme(scheme: ReductionScheme, order_dependent: bool) -> None:
    if not order_dependent and scheme.condition():
        raise SchemeError(
            f"scheme {scheme.name!r} has nonzero condition {scheme.condition()}; "
            "pass order_dependent=True to evaluate it under the canonical edge order")


def reduce(g: Multigraph, scheme: ReductionScheme, memo: MemoTable | None = None, *,
           memoize: bool = True, order_dependent: bool = False, threads: int = 1) -> Poly:
    """Evaluate ``scheme`` on ``g``.

    The edge reduced at each step is the least non-loop edge of the canonical
    relabelling, so the result depends only on the isomorphism class of ``g``.
    """
    _check_scheme(scheme, order_dependent)
    if memoize and memo is None:
        memo = MemoTable()
    if not memoize:
        memo = None

    def connected(h: Multigraph) -> Poly:
        if h.loops_only():
            return scheme.base_value(h.m)
        cert, canon = h.canonical()
        if memo is not None:
            hit = memo.get(cert)
            if hit is not None:
                return hit
        e = next(i for i, (u, v) in enumerate(canon.edges) if u != v)
        val = _combine(scheme, canon, e, evaluate)
        if memo is not None:
            memo.put(cert, val)
        return val

    def evaluate(h: Multigraph) -> Poly:
        if h.n == 0:
            return ONE
        out = ONE
        for comp in h.components():
            out = out * connected(comp)
            if not out:
                break
        return out

    if threads > 1 and g.n and g.num_components() == 1 and not g.loops_only():
        canon = g.canonical()[1]
        e = next(i for i, (u, v) in enumerate(canon.edges) if u != v)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return _combine(scheme, canon, e, evaluate, pool)
    return evaluate(g)


def reduce_ordered(g: Multigraph, scheme: ReductionScheme, order: Sequence[int],
                   cache: dict | None = None) -> Poly:
    """Evaluate ``scheme`` reducing edges in the given order of edge labels.

    At every step the surviving non-loop edge whose label comes first in
    ``order`` is reduced. Works for any scheme, well-defined or not.

    A sub-evaluation depends only on the graph and the relative order of its
    non-loop edges, so ``cache`` may be shared between calls with different
    orders on the same scheme.
    """
    rank = {lab: i for i, lab in enumerate(order)}
    missing = [lab for lab in g.labels if lab not in rank]
    if missing:
        raise SchemeError(f"order omits edge labels {sorted(set(missing))}")
    if cache is None:
        cache = {}

    def connected(h: Multigraph) -> Poly:
        moving = sorted((rank[lab], i) for i, ((u, v), lab) in enumerate(zip(h.edges, h.labels)) if u != v)
        if not moving:
            return scheme.base_value(h.m)
        key = (h.n, tuple(h.edges[i] for _, i in moving),
               tuple(sorted(e for e in h.edges if e[0] == e[1])))
        val = cache.get(key)
        if val is None:
            val = _combine(scheme, h, moving[0][1], evaluate)
            cache[key] = val
        return val

    def evaluate(h: Multigraph) -> Poly:
        if h.n == 0:
            return ONE
        comps = h.components()
        out = connected(comps[0])
        for comp in comps[1:]:
            out = out * connected(comp)
        return out

    return evaluate(g)


@dataclass
class CommutativityWitness:
    graph: Multigraph
    order_a: tuple[int, ...]
    value_a: Poly
    order_b: tuple[int, ...]
    value_b: Poly


@dataclass
class WellDefinednessVerdict:
    condition: Poly
    condition_holds: bool
    trivial_suspected: bool
    witness: CommutativityWitness | None = None

    @property
    def well_defined(self) -> bool:
        return self.condition_holds or self.trivial_suspected


def _orders(labels: list[int], max_orders: int, rng: random.Random):
    if math.factorial(len(labels)) <= max_orders:
        yield from itertools.permutations(labels)
        return
    for _ in range(max_orders):
        perm = list(labels)
        rng.shuffle(perm)
        yield tuple(perm)


def commutativity_witness(scheme: ReductionScheme, g: Multigraph, max_orders: int = 720,
                          seed: int = 0) -> CommutativityWitness | None:
    """Two edge orders giving different values on ``g``, or ``None``.

    All orders of the non-loop edges are tried when there are at most
    ``max_orders`` of them; otherwise ``max_orders`` random orders are drawn.
    """
    moving = [lab for (u, v), lab in zip(g.edges, g.labels) if u != v]
    if len(moving) < 2:
        return None
    fixed = [lab for (u, v), lab in zip(g.edges, g.labels) if u == v]
    first = None
    cache: dict = {}
    for order in _orders(moving, max_orders, random.Random(seed)):
        order = tuple(order) + tuple(fixed)
        val = reduce_ordered(g, scheme, order, cache)
        if first is None:
            first = (order, val)
        elif val != first[1]:
            return CommutativityWitness(g, first[0], first[1], order, val)
    return None


def triviality_probe(scheme: ReductionScheme, panel: Sequence[Multigraph]) -> bool:
    """True iff ``F(G) == F(K_1)^|V(G)|`` on every panel graph."""
    if not panel:
        raise ValueError("triviality probe needs a nonempty panel")
    single = scheme.base_value(0)
    memo = MemoTable()
    return all(reduce(g, scheme, memo, order_dependent=True) == single ** g.n for g in panel)


def is_well_defined(scheme: ReductionScheme, probe_panel: Sequence[Multigraph] | None = None,
                    witness_graphs: Sequence[Multigraph] | None = None,
                    max_orders: int = 720, seed: int = 0) -> WellDefinednessVerdict:
    from .generate import triviality_panel, witness_panel

    cond = scheme.condition()
    trivial = triviality_probe(scheme, probe_panel or triviality_panel())
    if not cond:
        return WellDefinednessVerdict(cond, True, trivial)
    witness = None
    for g in witness_graphs or witness_panel():
        witness = commutativity_witness(scheme, g, max_orders, seed)
        if witness is not None:
            break
    return WellDefinednessVerdict(cond, False, trivial, witness)
