import random

from hypothesis import strategies as st

from prophopf.axioms import FuzzConfig, random_term
from prophopf.words import Letter, ReducedWord, reduce


def words(rank, max_len=8):
    if rank == 0:
        return st.just(ReducedWord(0, ()))
    letter = st.builds(Letter, st.integers(1, rank), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_len).map(lambda xs: reduce(rank, xs))


def word_tuples(m, n, max_len=6):
    return st.tuples(*[words(n, max_len) for _ in range(m)])


ranks = st.integers(0, 4)


@st.composite
def terms(draw, max_nodes=20, max_boundary=3, dom=None, cod=None):
    seed = draw(st.integers(0, 2**32 - 1))
    cfg = FuzzConfig(seed=seed, max_nodes=max_nodes, max_boundary=max_boundary)
    return random_term(cfg, dom, cod, random.Random(seed))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
