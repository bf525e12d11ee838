import random
from itertools import permutations

from hypothesis import given, settings

from delcon.multigraph import Multigraph, bouquet, complete, cycle, digon, path, petersen
from delcon.oracles import (
    count_cycles, count_hamiltonian, cycle_systems, functional_subgraphs, matchings,
    spanning_functional_subgraphs, tutte_subset_expansion, two_factors_by_components,
)
from delcon.poly import x, y

from conftest import multigraphs, random_relabel


def hamiltonian_by_vertex_orders(g):
    """Simple graphs only: cyclic vertex orders (n-1)!/2 with all edges present."""
    edges = {tuple(sorted(e)) for e in g.edges}
    count = 0
    for rest in permutations(range(1, g.n)):
        if rest[0] > rest[-1]:
            continue
        cyc = (0,) + rest
        if all(tuple(sorted((cyc[i], cyc[(i + 1) % g.n]))) in edges for i in range(g.n)):
            count += 1
    return count


class TestHamiltonian:
    def test_bouquet(self):
        for n in range(5):
            assert count_hamiltonian(bouquet(n)) == n

    def test_k4(self):
        assert hamiltonian_by_vertex_orders(complete(4)) == 3
        assert count_hamiltonian(complete(4)) == 3

    def test_small_cases(self):
        assert count_hamiltonian(digon()) == 1
        assert count_hamiltonian(complete(3).disjoint_union(complete(3))) == 0
        assert count_hamiltonian(complete(2)) == 0
        assert count_hamiltonian(petersen()) == 0
        assert count_hamiltonian(complete(6)) == hamiltonian_by_vertex_orders(complete(6)) == 60

    def test_against_vertex_orders(self):
        rng = random.Random(1)
        for _ in range(30):
            n = rng.randint(3, 7)
            g = Multigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.6])
            assert count_hamiltonian(g) == hamiltonian_by_vertex_orders(g)


class TestCountMaps:
    def test_two_factors(self):
        assert two_factors_by_components(complete(3)) == {1: 1}
        assert two_factors_by_components(complete(4)) == {1: 3}
        assert two_factors_by_components(complete(3).disjoint_union(complete(3))) == {2: 1}

    def test_cycle_systems(self):
        assert cycle_systems(bouquet(3)) == {(0, 0): 1, (1, 1): 3}
        assert cycle_systems(complete(4)) == {(0, 0): 1, (1, 3): 4, (1, 4): 3}
        assert cycle_systems(complete(3)) == {(0, 0): 1, (1, 3): 1}

    def test_matchings(self):
        assert matchings(path(3)) == {0: 1, 1: 2}
        assert matchings(complete(4)) == {0: 1, 1: 6, 2: 3}
        assert matchings(bouquet(4)) == {0: 1}

    def test_spanning_functional(self):
        assert spanning_functional_subgraphs(complete(3)) == {1: 1}
        assert spanning_functional_subgraphs(bouquet(3)) == {1: 3}
        assert spanning_functional_subgraphs(cycle(4)) == {1: 1}

    def test_functional(self):
        assert functional_subgraphs(complete(2)) == {(0, 0): 1, (1, 1): 1}
        assert functional_subgraphs(path(3)) == {(0, 0): 1, (1, 1): 2, (1, 2): 1}
        assert functional_subgraphs(bouquet(1)) == {(0, 0): 1, (1, 1): 1}

    def test_tutte(self):
        assert tutte_subset_expansion(complete(2)) == x
        assert tutte_subset_expansion(complete(3)) == x ** 2 + x + y
        assert tutte_subset_expansion(bouquet(1)) == y
        # K4: known T = x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
        assert tutte_subset_expansion(complete(4)) == (
            x ** 3 + 3 * x ** 2 + 2 * x + 4 * x * y + 2 * y + 3 * y ** 2 + y ** 3)

    def test_cycle_count(self):
        assert count_cycles(petersen()) == 57
        assert count_cycles(complete(4)) == 7
        assert count_cycles(digon()) == 1 and count_cycles(bouquet(2)) == 2


class TestProperties:
    @settings(max_examples=60, deadline=None)
    @given(multigraphs(max_vertices=7, max_edges=10))
    def test_single_component_two_factors_are_hamiltonian(self, g):
        assert two_factors_by_components(g).get(1, 0) == count_hamiltonian(g)

    @settings(max_examples=60, deadline=None)
    @given(multigraphs(max_vertices=6, max_edges=10))
    def test_connected_cycle_systems_are_cycles(self, g):
        systems = cycle_systems(g)
        assert sum(v for (k, _), v in systems.items() if k == 1) == count_cycles(g)

    @settings(max_examples=60, deadline=None)
    @given(multigraphs(max_vertices=6, max_edges=10))
    def test_spanning_cycle_systems_are_two_factors(self, g):
        systems = cycle_systems(g)
        factors = two_factors_by_components(g)
        if g.n:
            assert factors == {k: v for (k, l), v in systems.items() if l == g.n}

    @settings(max_examples=40, deadline=None)
    @given(multigraphs(max_vertices=6, max_edges=9))
    def test_relabel_invariance(self, g):
        h = random_relabel(g, random.Random(g.n + 17 * g.m))
        for oracle in (count_hamiltonian, two_factors_by_components, cycle_systems, matchings,
                       spanning_functional_subgraphs, functional_subgraphs, tutte_subset_expansion):
            assert oracle(g) == oracle(h)
