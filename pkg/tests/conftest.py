import random

import pytest

from brp.generate import random_outerplanar
from brp.graph import build_graph


def graph(text, vertices=None):
    """Shorthand: ``graph("ab:2 bc:1")`` builds edges e1, e2, ... in order."""
    triples, weights = [], []
    seen = list(vertices or [])
    for i, tok in enumerate(text.split(), 1):
        pair, w = tok.split(":")
        u, v = pair[0], pair[1]
        for x in (u, v):
            if x not in seen:
                seen.append(x)
        triples.append((f"e{i}", u, v))
        weights.append(w)
    return build_graph(seen, triples, weights)


@pytest.fixture
def c4_2121():
    # circuit abcda, w(ab) = w(cd) = 2, w(ad) = w(bc) = 1
    return graph("ab:2 bc:1 cd:2 da:1")


def random_instances(count, max_n, seed=0, min_n=3):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(min_n, max_n)
        k = rng.randint(0, n - 3)
        out.append(random_outerplanar(n, k, seed=rng.randrange(1 << 30), wmax=10))
    return out


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.REPORT:
        terminalreporter.section("acceptance")
        for line in test_acceptance.REPORT:
            terminalreporter.write_line(line)
