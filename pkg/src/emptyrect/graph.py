"""Undirected simple graphs on vertex indices 0..n-1."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = e
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n, edges):
        return cls(n, frozenset(edges))

    @classmethod
    def complete(cls, n):
        return cls(n, frozenset(combinations(range(n), 2)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, i, j) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(int(data["n"]), frozenset(tuple(e) for e in data["edges"]))

    def to_dot(self, labels=None, name="G") -> str:
        """Graphviz text; ``labels`` maps vertex index to a display string."""
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            label = labels[v] if labels is not None else str(v)
            lines.append(f'  {v} [label="{label}"];')
        for i, j in self.sorted_edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def cliques(G: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-cliques of G as sorted vertex tuples."""
    adj = G.adjacency()
    out = []

    def extend(clique, cand):
        if len(clique) == k:
            out.append(tuple(clique))
            return
        for v in sorted(cand):
            if clique and v < clique[-1]:
                continue
            extend(clique + [v], {w for w in cand if w > v} & adj[v])

    extend([], set(range(G.n)))
    return out
