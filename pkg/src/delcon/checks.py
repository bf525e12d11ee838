"""Identity families pairing each invariant with its brute-force oracle."""

from __future__ import annotations

from typing import Callable

from . import oracles
from .invariants import (
    cycle_poly, hamiltonian_count, hamiltonian_poly, matching_poly, merged_poly, specialize,
    tutte_check,
)
from .multigraph import Multigraph
from .poly import Poly


def counts_as_poly(counts: dict, place: Callable[[tuple], tuple]) -> Poly:
    return Poly({place(k if isinstance(k, tuple) else (k,)): v for k, v in counts.items()})


def _s(k):
    return (0, k[0], 0, 0, 0)


def _st(k):
    return (0, k[0], k[1], 0, 0)


def _r(k):
    return (k[0], 0, 0, 0, 0)


def check_hamiltonian(g: Multigraph) -> str | None:
    poly = hamiltonian_poly(g)
    expected = counts_as_poly(oracles.two_factors_by_components(g), _s)
    if poly != expected:
        return f"H = {poly}, 2-factor oracle gives {expected}"
    h, brute = hamiltonian_count(g), oracles.count_hamiltonian(g)
    if h != brute:
        return f"h(G) = {h} from the recursion, backtracking gives {brute}"
    return None


def check_cycle(g: Multigraph) -> str | None:
    poly = cycle_poly(g)
    expected = counts_as_poly(oracles.cycle_systems(g), _st)
    if poly != expected:
        return f"C = {poly}, cycle-system oracle gives {expected}"
    return None


def check_matching(g: Multigraph) -> str | None:
    poly = matching_poly(g)
    expected = counts_as_poly(oracles.matchings(g), _r)
    if poly != expected:
        return f"M = {poly}, matching oracle gives {expected}"
    return None


def check_specialize(g: Multigraph) -> str | None:
    for name, direct in (("H", hamiltonian_poly), ("C", cycle_poly), ("D", merged_poly)):
        via_j, value = specialize(g, name), direct(g)
        if via_j != value:
            return f"{name} via J = {via_j}, direct {name} = {value}"
    return None


def check_tutte(g: Multigraph) -> str | None:
    lhs, rhs, equal = tutte_check(g)
    if not equal:
        return f"J(G,x,y,0,0,0,1) = {lhs}, x^k(G) T(G,1+x,y) = {rhs}"
    return None


def check_spanning_functional(g: Multigraph) -> str | None:
    poly = specialize(g, "spanning-functional")
    expected = counts_as_poly(oracles.spanning_functional_subgraphs(g), _s)
    if poly != expected:
        return f"J(G,0,1,0,0,s,1) = {poly}, oracle gives {expected}"
    return None


def check_functional(g: Multigraph) -> str | None:
    poly = specialize(g, "functional")
    expected = counts_as_poly(oracles.functional_subgraphs(g), _st)
    if poly != expected:
        return f"J(G,1,1,0,st-t,s,t) = {poly}, oracle gives {expected}"
    return None


IDENTITIES: dict[str, Callable[[Multigraph], str | None]] = {
    "hamiltonian": check_hamiltonian,
    "cycle": check_cycle,
    "matching": check_matching,
    "specialize": check_specialize,
    "tutte": check_tutte,
    "spanning-functional": check_spanning_functional,
    "functional": check_functional,
}
