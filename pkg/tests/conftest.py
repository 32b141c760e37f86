import random
import re
from collections import OrderedDict

import networkx as nx
import pytest

from cdsenum.graph import Graph
from cdsenum.generators import gen_random_degenerate

CORPUS_SEED = 20240501


def atlas_graphs():
    """Every connected unlabeled graph on 1..7 vertices."""
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() and nx.is_connected(h):
            out.append(Graph.from_networkx(h))
    return out


def random_corpus(count=500, seed=CORPUS_SEED):
    """Seeded connected graphs with 8..12 vertices and degeneracy 1..4."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(8, 12)
        d = 1 + i % 4
        out.append(gen_random_degenerate(n, d, rng.getrandbits(32)))
    return out


@pytest.fixture(scope="session")
def atlas():
    return atlas_graphs()


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


P3 = Graph(3, [(0, 1), (1, 2)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])


_results = OrderedDict()


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    key = int(m.group(1))
    if report.when == "call" or report.failed:
        prev = _results.get(key, True)
        _results[key] = prev and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results):
        terminalreporter.write_line(f"criterion {key}: {'PASS' if _results[key] else 'FAIL'}")
