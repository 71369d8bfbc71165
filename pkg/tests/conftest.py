from __future__ import annotations

from hypothesis import settings, strategies as st

from rdlab.enumeration import prufer_to_tree
from rdlab.graph import Tree

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def trees(draw: st.DrawFn, min_n: int = 1, max_n: int = 12) -> Tree:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 1:
        return Tree(1, frozenset())
    if n == 2:
        return Tree(2, frozenset({(0, 1)}))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_to_tree(tuple(seq))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
