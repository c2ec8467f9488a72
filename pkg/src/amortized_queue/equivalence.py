"""Bounded checking of amortized equivalence between queue objects.

Two queues are amortized-equivalent when, observation by observation, they
return the same elements and their ``quit`` costs agree. Costs emitted by a
dequeue are not compared on the spot; they are pushed back onto the residual
queues as pending cost, so one side may pay early and the other late as long
as the totals meet at every ``quit``.

The relation is a greatest fixed point. :func:`approx_check` computes its
depth-``d`` approximant: all observation paths of at most ``d`` enqueue or
dequeue steps, with ``quit`` checked at every node along the way.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .batched import batched_queue, potential
from .cost import Cost
from .protocol import (
    Element,
    QueueObj,
    observe_dequeue,
    observe_enqueue,
    observe_quit,
    step_queue,
)
from .spec_queue import spec_queue

EQUIVALENT = "equivalent"
INEQUIVALENT = "inequivalent"


@dataclass(frozen=True)
class Label:
    op: str  # "quit" | "enqueue" | "dequeue"
    elem: Optional[Element] = None

    def to_json(self) -> Dict[str, Any]:
        if self.op == "enqueue":
            return {"op": "enqueue", "elem": self.elem}
        return {"op": self.op}

    @classmethod
    def from_json(cls, d: Dict[str, Any]) -> "Label":
        op = d["op"]
        if op == "enqueue":
            return cls("enqueue", int(d["elem"]))
        if op not in ("quit", "dequeue"):
            raise ValueError(f"unknown observation {op!r}")
        return cls(op)

    def __str__(self) -> str:
        return f"enqueue({self.elem})" if self.op == "enqueue" else self.op


QUIT = Label("quit")
DEQUEUE = Label("dequeue")


def enqueue_label(e: Element) -> Label:
    return Label("enqueue", e)


ObsPath = Tuple[Label, ...]


@dataclass(frozen=True)
class Observation:
    """What one side showed at the end of a path."""

    kind: str  # "quit" | "dequeue"
    cost: Cost
    elem: Optional[Element] = None

    def to_json(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {"kind": self.kind, "cost": self.cost}
        if self.kind == "dequeue":
            d["elem"] = self.elem
        return d

    @classmethod
    def from_json(cls, d: Dict[str, Any]) -> "Observation":
        return cls(d["kind"], int(d["cost"]), d.get("elem"))


@dataclass(frozen=True)
class Counterexample:
    path: ObsPath
    lhs: Observation
    rhs: Observation

    def to_json(self) -> Dict[str, Any]:
        return {
            "path": [lab.to_json() for lab in self.path],
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        }

    @classmethod
    def from_json(cls, d: Dict[str, Any]) -> "Counterexample":
        return cls(
            tuple(Label.from_json(x) for x in d["path"]),
            Observation.from_json(d["lhs"]),
            Observation.from_json(d["rhs"]),
        )

    @property
    def is_behavioral(self) -> bool:
        """True when the sides disagree on a dequeued element, not just on cost."""
        return self.lhs.kind == "dequeue" and self.lhs.elem != self.rhs.elem


@dataclass(frozen=True)
class EquivReport:
    verdict: str
    depth: int
    alphabet: int
    counterexample: Optional[Counterexample] = None
    nodes: int = 0

    @property
    def equivalent(self) -> bool:
        return self.verdict == EQUIVALENT

    def to_json(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "depth": self.depth,
            "alphabet": self.alphabet,
            "counterexample": None if self.counterexample is None else self.counterexample.to_json(),
            "nodes": self.nodes,
        }

    @classmethod
    def from_json(cls, d: Dict[str, Any]) -> "EquivReport":
        cx = d.get("counterexample")
        return cls(
            d["verdict"],
            int(d["depth"]),
            int(d["alphabet"]),
            None if cx is None else Counterexample.from_json(cx),
            int(d["nodes"]),
        )


#: JSON schema of :meth:`EquivReport.to_json`.
EQUIV_REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["verdict", "depth", "alphabet", "counterexample", "nodes"],
    "additionalProperties": False,
    "properties": {
        "verdict": {"enum": [EQUIVALENT, INEQUIVALENT]},
        "depth": {"type": "integer", "minimum": 0},
        "alphabet": {"type": "integer", "minimum": 1},
        "nodes": {"type": "integer", "minimum": 0},
        "counterexample": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["path", "lhs", "rhs"],
                    "properties": {
                        "path": {
                            "type": "array",
                            "minItems": 1,
                            "items": {
                                "oneOf": [
                                    {
                                        "type": "object",
                                        "required": ["op", "elem"],
                                        "properties": {
                                            "op": {"const": "enqueue"},
                                            "elem": {"type": "integer", "minimum": 0},
                                        },
                                    },
                                    {
                                        "type": "object",
                                        "required": ["op"],
                                        "properties": {"op": {"enum": ["quit", "dequeue"]}},
                                    },
                                ]
                            },
                        },
                        "lhs": {"$ref": "#/$defs/observation"},
                        "rhs": {"$ref": "#/$defs/observation"},
                    },
                },
            ]
        },
    },
    "$defs": {
        "observation": {
            "type": "object",
            "required": ["kind", "cost"],
            "properties": {
                "kind": {"enum": ["quit", "dequeue"]},
                "cost": {"type": "integer", "minimum": 0},
                "elem": {"type": ["integer", "null"]},
            },
        }
    },
}


def _check_bounds(depth: int, alphabet: int) -> None:
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if alphabet < 1:
        raise ValueError(f"alphabet must be >= 1, got {alphabet}")


def _advance(q: QueueObj, lab: Label) -> QueueObj:
    if lab.op == "enqueue":
        return observe_enqueue(q, lab.elem)
    c, _, r = observe_dequeue(q)
    return step_queue(c, r)


def replay(q: QueueObj, path: Sequence[Label]) -> Observation:
    """Follow ``path`` from ``q`` and return the final observation.

    Dequeue costs met along the way are deferred onto the residual, exactly as
    the checker does, so a quit at the end reports the accumulated total.
    """
    if not path or path[-1].op == "enqueue":
        raise ValueError("path must end with quit or dequeue")
    for lab in path[:-1]:
        if lab.op == "quit":
            raise ValueError("quit may only appear last")
        q = _advance(q, lab)
    if path[-1].op == "quit":
        return Observation("quit", observe_quit(q))
    c, e, _ = observe_dequeue(q)
    return Observation("dequeue", c, e)


@dataclass
class _Search:
    alphabet: int
    nodes: int = 0

    def quit_clause(self, q1: QueueObj, q2: QueueObj, path: ObsPath) -> Optional[Counterexample]:
        self.nodes += 1
        c1, c2 = observe_quit(q1), observe_quit(q2)
        if c1 != c2:
            return Counterexample(path + (QUIT,), Observation("quit", c1), Observation("quit", c2))
        return None

    def enqueue_children(self, q1: QueueObj, q2: QueueObj, path: ObsPath):
        for e in range(self.alphabet):
            yield observe_enqueue(q1, e), observe_enqueue(q2, e), path + (enqueue_label(e),)

    def dequeue_clause(self, q1: QueueObj, q2: QueueObj, path: ObsPath):
        """Return ``(counterexample, None)`` on an element mismatch, else ``(None, child)``."""
        d1, e1, r1 = observe_dequeue(q1)
        d2, e2, r2 = observe_dequeue(q2)
        dq = path + (DEQUEUE,)
        if e1 != e2:
            return Counterexample(dq, Observation("dequeue", d1, e1), Observation("dequeue", d2, e2)), None
        # emitted costs are deferred onto the residuals, not compared here
        return None, (step_queue(d1, r1), step_queue(d2, r2), dq)

    def dfs(self, q1: QueueObj, q2: QueueObj, depth: int, path: ObsPath = ()) -> Optional[Counterexample]:
        cx = self.quit_clause(q1, q2, path)
        if cx is not None or depth == 0:
            return cx
        for s1, s2, p in self.enqueue_children(q1, q2, path):
            cx = self.dfs(s1, s2, depth - 1, p)
            if cx is not None:
                return cx
        cx, child = self.dequeue_clause(q1, q2, path)
        if cx is not None:
            return cx
        s1, s2, p = child
        return self.dfs(s1, s2, depth - 1, p)

    def bfs(self, q1: QueueObj, q2: QueueObj, depth: int) -> Optional[Counterexample]:
        frontier = [(q1, q2, ())]
        for level in range(depth + 1):
            nxt = []
            for a, b, path in frontier:
                cx = self.quit_clause(a, b, path)
                if cx is not None:
                    return cx
                if level == depth:
                    continue
                nxt.extend(self.enqueue_children(a, b, path))
                cx, child = self.dequeue_clause(a, b, path)
                if cx is not None:
                    return cx
                nxt.append(child)
            frontier = nxt
        return None


def approx_check(q1: QueueObj, q2: QueueObj, depth: int, alphabet: int) -> EquivReport:
    """Check ``q1`` and ``q2`` for amortized equivalence up to ``depth`` steps.

    Exploration is depth-first (enqueues in alphabet order, then dequeue). If a
    disagreement turns up, a breadth-first pass replaces it by a shortest one.
    """
    _check_bounds(depth, alphabet)
    search = _Search(alphabet)
    cx = search.dfs(q1, q2, depth)
    if cx is None:
        return EquivReport(EQUIVALENT, depth, alphabet, None, search.nodes)
    shortest = search.bfs(q1, q2, depth)
    assert shortest is not None and len(shortest.path) <= len(cx.path)
    return EquivReport(INEQUIVALENT, depth, alphabet, shortest, search.nodes)


def theorem1_pair(
    bl: Iterable[Element],
    fl: Iterable[Element],
    batched: Callable[..., QueueObj] = batched_queue,
    spec: Callable[..., QueueObj] = spec_queue,
) -> Tuple[QueueObj, QueueObj]:
    """The batched queue on ``(bl, fl)`` and the reference queue it should match.

    The reference holds ``fl ++ reverse(bl)`` and is charged the potential up
    front.
    """
    bl, fl = list(bl), list(fl)
    lhs = batched(bl, fl)
    rhs = step_queue(potential(bl, fl), spec(fl + bl[::-1]))
    return lhs, rhs


def theorem1_check(
    bl: Iterable[Element],
    fl: Iterable[Element],
    depth: int,
    alphabet: int,
    batched: Callable[..., QueueObj] = batched_queue,
    spec: Callable[..., QueueObj] = spec_queue,
) -> EquivReport:
    return approx_check(*theorem1_pair(bl, fl, batched, spec), depth, alphabet)


def cong_check(c: Cost, q1: QueueObj, q2: QueueObj, depth: int, alphabet: int) -> bool:
    """Whether charging both sides ``c`` up front leaves the verdict unchanged."""
    before = approx_check(q1, q2, depth, alphabet)
    after = approx_check(step_queue(c, q1), step_queue(c, q2), depth, alphabet)
    return before.verdict == after.verdict


def all_lists(max_len: int, alphabet: int) -> List[Tuple[Element, ...]]:
    """Every list of length ``<= max_len`` over ``range(alphabet)``, shortest first."""
    return [t for n in range(max_len + 1) for t in product(range(alphabet), repeat=n)]


def approx_node_budget(depth: int, alphabet: int) -> int:
    """Upper bound on nodes visited by one :func:`approx_check` (DFS plus BFS)."""
    b = alphabet + 1
    return 2 * sum(b**i for i in range(depth + 1))
