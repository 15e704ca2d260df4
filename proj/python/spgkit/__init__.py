"""Subset partition graphs from Python.

Graphs are handled as :class:`Spg` values wrapping the canonical ``spg/1``
JSON document; every operation returns a new value.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional

from . import _core
from ._core import SpgError

__all__ = [
    "Spg",
    "SpgError",
    "spindle",
    "cyclic",
    "cube",
    "hirsch_path",
    "figure1",
    "max_clf",
    "verify_trace",
]


class Spg:
    __slots__ = ("_doc",)

    def __init__(self, doc: str | dict):
        text = doc if isinstance(doc, str) else json.dumps(doc)
        self._doc = _core.normalize(text)

    @classmethod
    def _trusted(cls, text: str) -> "Spg":
        obj = cls.__new__(cls)
        obj._doc = text
        return obj

    def to_json(self) -> str:
        return self._doc

    def to_dict(self) -> dict:
        return json.loads(self._doc)

    @property
    def n(self) -> int:
        return self.to_dict()["n"]

    @property
    def d(self) -> int:
        return self.to_dict()["d"]

    @property
    def blocks(self) -> list:
        return self.to_dict()["vertices"]

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Spg) and self._doc == other._doc

    def __hash__(self) -> int:
        return hash(self._doc)

    def __repr__(self) -> str:
        return f"Spg(n={self.n}, d={self.d}, blocks={len(self)})"

    def check(self, properties: Iterable[str] = ()) -> dict:
        """Maps each property name to its result (``holds`` plus witness or evidence)."""
        report = json.loads(_core.check(self._doc, list(properties)))
        return {entry["property"]: entry for entry in report}

    def holds(self, prop: str) -> bool:
        return self.check([prop])[prop]["holds"]

    def brute_dimension_reduction(self) -> dict:
        return json.loads(_core.brute_dimension_reduction(self._doc))

    def diameter(self) -> int:
        return json.loads(_core.diameter(self._doc))["value"]

    def _subset(self, subset: str | Iterable[int]) -> str:
        # index lists are rendered with the document's labels when it has them
        if isinstance(subset, str):
            return subset
        labels = self.to_dict().get("labels")
        return ",".join(labels[i] if labels else str(i) for i in subset)

    def distance(self, a: str | Iterable[int], b: str | Iterable[int]) -> int:
        return _core.distance(self._doc, self._subset(a), self._subset(b))

    def restrict(self, face: str | Iterable[int]) -> dict:
        return json.loads(_core.restrict(self._doc, self._subset(face)))

    def layering(self, root: str | Iterable[int]) -> dict:
        return json.loads(_core.layering(self._doc, self._subset(root)))

    def contract(self, i: int, j: int) -> "Spg":
        return Spg._trusted(_core.contract(self._doc, i, j))

    def add_edge(self, i: int, j: int) -> "Spg":
        return Spg._trusted(_core.add_edge(self._doc, i, j))

    def search(self, targets: Iterable[str] = (), budget: int = 200, beam: int = 0) -> dict:
        """Runs the move search; raises SpgError (name BudgetExhausted, with ``trace``) on failure."""
        return json.loads(_core.search(self._doc, list(targets), budget, beam))


def spindle(m: int) -> Spg:
    return Spg._trusted(_core.spindle(m))


def cyclic(n: int, d: int) -> Spg:
    return Spg._trusted(_core.cyclic(n, d))


def cube(dim: int) -> Spg:
    return Spg._trusted(_core.cube(dim))


def hirsch_path(n: int, d: int) -> Spg:
    return Spg._trusted(_core.hirsch_path(n, d))


def figure1() -> Spg:
    return Spg._trusted(_core.figure1())


def max_clf(n: int, d: int, variant: str = "one-subset", time_limit: float = 60.0) -> dict:
    return json.loads(_core.max_clf(n, d, variant, time_limit))


def verify_trace(trace: str | dict) -> bool:
    text = trace if isinstance(trace, str) else json.dumps(trace)
    return _core.verify_trace(text)
