import random

import pytest
from hypothesis import given, settings

from delcon.engine import (
    MemoTable, ReductionScheme, SchemeError, commutativity_witness, is_well_defined, reduce,
    reduce_ordered, triviality_probe,
)
from delcon.invariants import SCHEMES, InvariantKind
from delcon.multigraph import EMPTY, Multigraph, bouquet, complete, digon, path
from delcon.oracles import two_factors_by_components
from delcon.poly import ONE, ZERO, Poly, s, t, x

from conftest import multigraphs

H = SCHEMES[InvariantKind.H]
C = SCHEMES[InvariantKind.C]


def lam_scheme(lam):
    return ReductionScheme(ONE, t, -lam * t, Poly.var("r"), lambda n: x * Poly.var("y") ** n + n * s * t)


ILL = ReductionScheme(ONE, ONE, ONE, ZERO, lambda n: 2 ** n * x, "ill-2^n")
ILL_LINEAR = ReductionScheme(ONE, ONE, ONE, ZERO, lambda n: n * x, "ill-n")
DELETE_ONLY = ReductionScheme(ONE, ZERO, ZERO, ZERO, lambda n: ONE, "delete-only")


class TestReduce:
    def test_bouquet_base(self):
        assert reduce(bouquet(3), H) == 3 * s

    def test_digon(self):
        # two parallel edges form the only spanning 2-factor, one component
        assert two_factors_by_components(digon()) == {1: 1}
        assert reduce(digon(), H) == s

    def test_cycle_scheme_triangle(self):
        assert reduce(complete(3), C) == 1 + s * t ** 3

    @pytest.mark.parametrize("kind", list(InvariantKind))
    def test_empty_graph(self, kind):
        assert reduce(EMPTY, SCHEMES[kind]) == ONE

    @pytest.mark.parametrize("kind", list(InvariantKind))
    def test_bouquets_up_to_ten(self, kind):
        scheme = SCHEMES[kind]
        for n in range(11):
            assert reduce(bouquet(n), scheme) == scheme.base_value(n)

    def test_ill_defined_needs_opt_in(self):
        with pytest.raises(SchemeError):
            reduce(path(3), ILL)
        first = reduce(path(4), ILL, order_dependent=True)
        again = reduce(Multigraph(4, [(2, 3), (0, 2), (1, 3)]), ILL, order_dependent=True)
        assert first == again  # canonical edge choice makes the result label-free

    def test_disconnected_loops_only(self):
        g = Multigraph(3, [(0, 0), (2, 2), (2, 2)])
        for scheme in SCHEMES.values():
            assert reduce(g, scheme) == scheme.base_value(1) * scheme.base_value(0) * scheme.base_value(2)

    def test_threads_give_identical_output(self):
        g = complete(5)
        for scheme in SCHEMES.values():
            assert reduce(g, scheme, threads=4).to_text() == reduce(g, scheme).to_text()

    def test_memo_cap(self):
        memo = MemoTable(max_entries=3)
        assert reduce(complete(5), C, memo) == reduce(complete(5), C, memoize=False)
        assert len(memo) == 3

    def test_memo_env(self, monkeypatch):
        monkeypatch.setenv("DELCON_MEMO_MB", "1")
        assert MemoTable.from_env().max_entries == 512


class TestProperties:
    @settings(max_examples=40, deadline=None)
    @given(multigraphs(max_vertices=5, max_edges=7))
    def test_memoized_matches_unmemoized(self, g):
        for scheme in SCHEMES.values():
            assert reduce(g, scheme) == reduce(g, scheme, memoize=False)

    @settings(max_examples=40, deadline=None)
    @given(multigraphs(max_vertices=4, max_edges=6), multigraphs(max_vertices=4, max_edges=6))
    def test_union_is_product(self, g, h):
        for scheme in SCHEMES.values():
            assert reduce(g.disjoint_union(h), scheme) == reduce(g, scheme) * reduce(h, scheme)

    @settings(max_examples=40, deadline=None)
    @given(multigraphs(max_vertices=6, max_edges=9))
    def test_random_orders_agree(self, g):
        rng = random.Random(g.m)
        for scheme in SCHEMES.values():
            expected = reduce(g, scheme)
            for _ in range(5):
                order = list(g.labels)
                rng.shuffle(order)
                assert reduce_ordered(g, scheme, order) == expected

    def test_ordered_needs_every_label(self):
        with pytest.raises(SchemeError):
            reduce_ordered(path(3), H, [0])


class TestWellDefinedness:
    def test_hamiltonian_scheme(self):
        verdict = is_well_defined(H)
        assert verdict.condition == ZERO and verdict.condition_holds and verdict.witness is None

    def test_lambda_condition(self):
        for lam in (0, 1):
            assert lam_scheme(lam).condition() == ZERO
        # lambda^2 - lambda = 2 at lambda = 2
        assert lam_scheme(2).condition() == 2 * t ** 2

    def test_ill_defined(self):
        verdict = is_well_defined(ILL)
        assert verdict.condition == Poly.const(2)
        assert not verdict.trivial_suspected
        assert verdict.witness is not None and verdict.witness.graph == path(4)
        assert not verdict.well_defined

    def test_ill_defined_linear_base(self):
        verdict = is_well_defined(ILL_LINEAR)
        assert verdict.condition == Poly.const(2) and not verdict.trivial_suspected
        w = verdict.witness
        assert w is not None and w.value_a != w.value_b
        assert reduce_ordered(w.graph, ILL_LINEAR, w.order_a) == w.value_a
        assert reduce_ordered(w.graph, ILL_LINEAR, w.order_b) == w.value_b


class TestWitness:
    def test_hamiltonian_k4_all_orders(self):
        assert commutativity_witness(H, complete(4), max_orders=720) is None

    def test_ill_defined_on_p4(self):
        w = commutativity_witness(ILL, path(4))
        assert w is not None and w.value_a != w.value_b

    def test_linear_base_has_no_witness_on_trees(self):
        # F(K_1) = 0 and d = 0: every order evaluates a tree to 0
        assert commutativity_witness(ILL_LINEAR, path(4)) is None
        assert reduce_ordered(path(4), ILL_LINEAR, [2, 0, 1]) == ZERO

    def test_single_edge(self):
        assert commutativity_witness(ILL, Multigraph(2, [(0, 1), (1, 1)])) is None

    def test_sampling_is_seeded(self):
        g = complete(4)
        a = commutativity_witness(ILL, g, max_orders=10, seed=3)
        b = commutativity_witness(ILL, g, max_orders=10, seed=3)
        assert (a is None) == (b is None)
        if a is not None:
            assert a.order_a == b.order_a and a.order_b == b.order_b


class TestTriviality:
    def test_delete_only_is_trivial(self):
        assert triviality_probe(DELETE_ONLY, [complete(3), digon(), path(4)])

    def test_hamiltonian_not_trivial(self):
        assert reduce(complete(3), H) == s
        assert not triviality_probe(H, [complete(2), complete(3)])

    def test_j1_not_trivial(self):
        j1 = SCHEMES[InvariantKind.J1]
        assert reduce(complete(2), j1) != x ** 2
        assert not triviality_probe(j1, [complete(2)])

    def test_empty_panel(self):
        with pytest.raises(ValueError):
            triviality_probe(H, [])
