# Copyright (c) apasp contributors.
# SPDX-License-Identifier: Apache-2.0
"""Fully dynamic all-pairs shortest paths with exact path counts.

Weights are exact decimals stored as integers over a fixed denominator
(1000 by default). Accepted weight inputs are int, str, Fraction and float;
a float goes through its shortest repr, so 0.1 means one tenth.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional

from . import _core
from ._core import Error, GraphError, ParseError, load_graph, parse_graph, verify

__all__ = [
    "Apasp",
    "Error",
    "GraphError",
    "ParseError",
    "load_graph",
    "parse_graph",
    "verify",
]

Weight = int | str | Fraction | float


def _raw(w: Weight, scale: int) -> int:
    if isinstance(w, float):
        w = repr(w)
    if isinstance(w, str):
        return _core.parse_weight(w, scale)
    q = Fraction(w) * scale
    if q.denominator != 1:
        raise ValueError(f"weight {w} is not a multiple of 1/{scale}")
    return int(q)


class Apasp:
    """A dynamic digraph on vertex ids 0..n-1 with shortest path queries.

    `edges` is an iterable of (u, v, w); vertices in `dead` start deleted.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int, Weight]] = (),
        dead: Iterable[int] = (),
        scale: int = 1000,
    ) -> None:
        self.scale = scale
        g = _core.Graph(n)
        for v in dead:
            g.set_alive(v, False)
        for u, v, w in edges:
            g.add_edge(u, v, _raw(w, scale))
        self._d = _core.DynamicApasp(g)

    @classmethod
    def from_graph(cls, graph: "_core.Graph", scale: int = 1000) -> "Apasp":
        self = cls.__new__(cls)
        self.scale = scale
        self._d = _core.DynamicApasp(graph)
        return self

    def _changes(self, m: Optional[Mapping[int, Optional[Weight]]]):
        if not m:
            return []
        return [(u, None if w is None else _raw(w, self.scale)) for u, w in m.items()]

    def insert(self, v: int, out=None, in_=None) -> int:
        """Revives dead vertex v with the given {neighbor: weight} edges."""
        return self._d.apply(v, "insert", self._changes(out), self._changes(in_))

    def delete(self, v: int) -> int:
        return self._d.apply(v, "delete", [], [])

    def reweight(self, v: int, out=None, in_=None) -> int:
        """Changes edges at v; a weight of None removes the edge."""
        return self._d.apply(v, "reweight", self._changes(out), self._changes(in_))

    def distance(self, x: int, y: int) -> Optional[Fraction]:
        raw = self._d.distance(x, y)
        return None if raw is None else Fraction(raw, self.scale)

    def sigma(self, x: int, y: int) -> int:
        return self._d.sigma(x, y)

    def paths(self, x: int, y: int, limit: int = 1000) -> list[list[int]]:
        return self._d.paths(x, y, limit)

    def betweenness(self) -> list[Fraction]:
        return self._d.betweenness()

    def edges(self) -> list[tuple[int, int, Fraction]]:
        return [(u, v, Fraction(w, self.scale)) for u, v, w in self._d.graph.edges()]

    @property
    def graph(self) -> "_core.Graph":
        return self._d.graph

    @property
    def step(self) -> int:
        return self._d.step

    @property
    def epoch(self) -> int:
        return self._d.epoch

    @property
    def triple_count(self) -> int:
        return self._d.triple_count
