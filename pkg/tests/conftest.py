import itertools
import random

import pytest
from hypothesis import strategies as st

from delcon.multigraph import Multigraph


@st.composite
def multigraphs(draw, max_vertices=6, max_edges=9, min_vertices=0, loops=True):
    n = draw(st.integers(min_vertices, max_vertices))
    if n == 0:
        return Multigraph(0)
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1]) if n > 1 else st.nothing()
    if n == 1 and not loops:
        return Multigraph(1)
    edges = draw(st.lists(pair, max_size=max_edges))
    return Multigraph(n, edges)


def brute_isomorphic(g, h):
    """All-permutations isomorphism test on edge multisets."""
    if g.n != h.n or g.m != h.m:
        return False
    target = sorted(h.edges)
    for perm in itertools.permutations(range(g.n)):
        mapped = sorted(tuple(sorted((perm[a], perm[b]))) for a, b in g.edges)
        if mapped == target:
            return True
    return False


def random_relabel(g, rng: random.Random):
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    order = list(range(h.m))
    rng.shuffle(order)
    return Multigraph(h.n, [h.edges[i] for i in order])


# -- acceptance summary ---------------------------------------------------

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        _CRITERIA.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_CRITERIA):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2} {status}  {title}")
