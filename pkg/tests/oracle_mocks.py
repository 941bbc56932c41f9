"""
Oráculos de teste: grafo finito com cores e injeção de falhas.
"""

from typing import Dict, Optional, Sequence, Tuple

from domain.graphs import Graph
from domain.oracles import GraphOracle


class FiniteGraphOracle(GraphOracle):
    """Oráculo sobre um grafo finito; ids fora do grafo são isolados."""

    kind = "finite-test"

    def __init__(self, graph: Graph, colours: Optional[Sequence[int]] = None, target: Optional[Graph] = None):
        self.graph = graph
        self.colours = list(colours) if colours is not None else None
        super().__init__(target=target)

    def _adjacent(self, u: int, v: int) -> bool:
        return v < self.graph.n and self.graph.has_edge(u, v)

    def colour(self, v: int) -> int:
        if self.colours is None:
            return super().colour(v)
        return self.colours[v] if v < len(self.colours) else 0

    def spec(self) -> Dict[str, str]:
        return {"kind": self.kind}


class FlippedOracle(GraphOracle):
    """Repassa ao oráculo base, invertendo a resposta de um único par."""

    kind = "flipped-test"

    def __init__(self, base: GraphOracle, pair: Tuple[int, int]):
        self.base = base
        self.pair = (min(pair), max(pair))
        super().__init__(seed=base.seed)

    def _adjacent(self, u: int, v: int) -> bool:
        answer = self.base.adjacent(u, v)
        return not answer if (u, v) == self.pair else answer

    def spec(self) -> Dict[str, str]:
        return {"kind": self.kind}
