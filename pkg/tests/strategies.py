"""
Estratégias hypothesis para grafos simples pequenos.
"""

from itertools import combinations

from hypothesis import strategies as st

from domain.graphs import Graph


@st.composite
def small_graphs(draw: st.DrawFn, min_order: int = 0, max_order: int = 6) -> Graph:
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])
