"""Finite queue programs and their evaluation against a queue object.

A program is a tree of instructions: ``Return`` ends it, ``Enqueue`` pushes an
element and continues, ``Dequeue`` pops and continues with the branch chosen
by what came out (``on_none`` for an empty queue, ``on_some[e]`` otherwise),
after paying its own ``cont_cost``.

Program size is counted in nodes: one for the final ``Return`` plus one per
``Enqueue``/``Dequeue`` instruction anywhere in the tree. Return leaves under a
dequeue do not add to the count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Any, Dict, Iterator, Optional, Tuple, Union

from .cost import Comp, Cost, add_cost, check_cost, step
from .equivalence import EquivReport, approx_check
from .protocol import (
    Element,
    QueueObj,
    observe_dequeue,
    observe_enqueue,
    observe_quit,
    step_queue,
)

RunResult = Comp


@dataclass(frozen=True)
class Return:
    result: Any = None


@dataclass(frozen=True)
class Enqueue:
    elem: Element
    rest: "Program"


@dataclass(frozen=True)
class Dequeue:
    cont_cost: Cost
    on_none: "Program"
    on_some: Tuple["Program", ...]  # indexed by element, total over the alphabet

    def __post_init__(self) -> None:
        check_cost(self.cont_cost)
        object.__setattr__(self, "on_some", tuple(self.on_some))
        if not self.on_some:
            raise ValueError("on_some must cover an alphabet of size >= 1")

    def branch(self, e: Optional[Element]) -> "Program":
        if e is None:
            return self.on_none
        if not 0 <= e < len(self.on_some):
            raise ValueError(f"element {e} outside alphabet of size {len(self.on_some)}")
        return self.on_some[e]


Program = Union[Return, Enqueue, Dequeue]


def program_nodes(p: Program) -> int:
    """Size of ``p``: 1 plus the number of enqueue and dequeue instructions."""
    return 1 + _instructions(p)


def _instructions(p: Program) -> int:
    if isinstance(p, Return):
        return 0
    if isinstance(p, Enqueue):
        return 1 + _instructions(p.rest)
    return 1 + _instructions(p.on_none) + sum(_instructions(b) for b in p.on_some)


def evaluate(p: Program, q: QueueObj) -> RunResult:
    """Run ``p`` against ``q``; the result carries the total cost incurred.

    The final ``Return`` quits the queue, so costs still pending on it are paid.
    """
    total: Cost = 0
    while True:
        if isinstance(p, Return):
            return Comp(add_cost(total, observe_quit(q)), p.result)
        if isinstance(p, Enqueue):
            q = observe_enqueue(q, p.elem)
            p = p.rest
        elif isinstance(p, Dequeue):
            c, e, q = observe_dequeue(q)
            total = add_cost(add_cost(total, c), p.cont_cost)
            p = p.branch(e)
        else:
            raise TypeError(f"not a program: {p!r}")


def lemma_check(c: Cost, p: Program, q: QueueObj) -> bool:
    """Charging ``c`` before running equals running on a queue charged ``c``."""
    return step(c, evaluate(p, q)) == evaluate(p, step_queue(c, q))


# -- enumeration -------------------------------------------------------------


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _count_exact(instructions: int, alphabet: int) -> int:
    if instructions == 0:
        return 1
    n = alphabet * _count_exact(instructions - 1, alphabet)
    for split in _compositions(instructions - 1, alphabet + 1):
        n += prod(_count_exact(w, alphabet) for w in split)
    return n


def count_programs(max_nodes: int, alphabet: int) -> int:
    """Number of programs with at most ``max_nodes`` nodes."""
    return sum(_count_exact(w, alphabet) for w in range(max_nodes))


def _exact(instructions: int, alphabet: int) -> Iterator[Program]:
    if instructions == 0:
        yield Return()
        return
    for e in range(alphabet):
        for rest in _exact(instructions - 1, alphabet):
            yield Enqueue(e, rest)
    for split in _compositions(instructions - 1, alphabet + 1):
        yield from _dequeues(split, alphabet)


def _dequeues(split: Tuple[int, ...], alphabet: int) -> Iterator[Dequeue]:
    def branches(i: int) -> Iterator[Tuple[Program, ...]]:
        if i == len(split):
            yield ()
            return
        for b in _exact(split[i], alphabet):
            for tail in branches(i + 1):
                yield (b,) + tail

    for bs in branches(0):
        yield Dequeue(0, bs[0], bs[1:])


def enumerate_programs(max_nodes: int, alphabet: int) -> Iterator[Program]:
    """Yield every program of at most ``max_nodes`` nodes, smallest first.

    All continuation costs are 0 and every result is ``None``. Each program is
    produced exactly once, in a fixed order.
    """
    if max_nodes < 1:
        raise ValueError(f"max_nodes must be >= 1, got {max_nodes}")
    if alphabet < 1:
        raise ValueError(f"alphabet must be >= 1, got {alphabet}")
    for w in range(max_nodes):
        yield from _exact(w, alphabet)


def random_program(
    rng: random.Random,
    max_nodes: int,
    alphabet: int,
    max_cont_cost: int = 3,
) -> Program:
    """Draw a program of at most ``max_nodes`` nodes with random continuation costs."""
    budget = rng.randint(0, max_nodes - 1)

    def gen(budget: int) -> Program:
        if budget == 0:
            return Return()
        if rng.random() < 0.5:
            return Enqueue(rng.randrange(alphabet), gen(budget - 1))
        rest = budget - 1
        shares = [0] * (alphabet + 1)
        for _ in range(rest):
            shares[rng.randrange(alphabet + 1)] += 1
        kids = [gen(s) for s in shares]
        return Dequeue(rng.randint(0, max_cont_cost), kids[0], tuple(kids[1:]))

    return gen(budget)


# -- JSON --------------------------------------------------------------------


def program_to_json(p: Program) -> Dict[str, Any]:
    if isinstance(p, Return):
        d: Dict[str, Any] = {"op": "return"}
        if p.result is not None:
            d["result"] = p.result
        return d
    if isinstance(p, Enqueue):
        return {"op": "enqueue", "elem": p.elem, "rest": program_to_json(p.rest)}
    return {
        "op": "dequeue",
        "cost": p.cont_cost,
        "none": program_to_json(p.on_none),
        "some": {str(i): program_to_json(b) for i, b in enumerate(p.on_some)},
    }


def program_from_json(d: Dict[str, Any]) -> Program:
    op = d.get("op")
    if op == "return":
        return Return(d.get("result"))
    if op == "enqueue":
        return Enqueue(int(d["elem"]), program_from_json(d["rest"]))
    if op == "dequeue":
        some = d["some"]
        keys = sorted(int(k) for k in some)
        if keys != list(range(len(keys))):
            raise ValueError(f"dequeue branches must cover 0..k-1, got {keys}")
        return Dequeue(
            int(d.get("cost", 0)),
            program_from_json(d["none"]),
            tuple(program_from_json(some[str(k)]) for k in keys),
        )
    raise ValueError(f"unknown program op {op!r}")


# -- program-side equivalence ------------------------------------------------


@dataclass(frozen=True)
class Theorem2Report:
    """Both readings of amortized equivalence on one pair of queues.

    ``approx`` is the observation-by-observation check; ``programs_equal``
    says whether every enumerated program costs the same on both queues.
    """

    approx: EquivReport
    programs_equal: bool
    programs_checked: int
    max_nodes: int
    witness: Optional[Program] = None
    witness_results: Optional[Tuple[RunResult, RunResult]] = None

    @property
    def agree(self) -> bool:
        return self.approx.equivalent == self.programs_equal

    def to_json(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "agree": self.agree,
            "approx": self.approx.to_json(),
            "programs": {
                "verdict": "equivalent" if self.programs_equal else "inequivalent",
                "max_nodes": self.max_nodes,
                "checked": self.programs_checked,
                "witness": None if self.witness is None else program_to_json(self.witness),
            },
        }
        if self.witness_results is not None:
            lhs, rhs = self.witness_results
            d["programs"]["lhs_cost"] = lhs.cost
            d["programs"]["rhs_cost"] = rhs.cost
        return d


def programs_discriminate(
    q1: QueueObj, q2: QueueObj, max_nodes: int, alphabet: int
) -> Tuple[int, Optional[Program], Optional[Tuple[RunResult, RunResult]]]:
    """First enumerated program on which ``q1`` and ``q2`` evaluate differently."""
    n = 0
    for p in enumerate_programs(max_nodes, alphabet):
        n += 1
        r1, r2 = evaluate(p, q1), evaluate(p, q2)
        if r1 != r2:
            return n, p, (r1, r2)
    return n, None, None


def theorem2_check(
    q1: QueueObj, q2: QueueObj, max_nodes: int, depth: int, alphabet: int
) -> Theorem2Report:
    """Compare the bounded equivalence check with evaluation under all small programs.

    ``depth`` must be at least ``max_nodes`` so that any program the sweep can
    use to tell the queues apart is within reach of the observation check.
    """
    if depth < max_nodes:
        raise ValueError(f"depth ({depth}) must be >= max_nodes ({max_nodes})")
    approx = approx_check(q1, q2, depth, alphabet)
    n, witness, results = programs_discriminate(q1, q2, max_nodes, alphabet)
    return Theorem2Report(approx, witness is None, n, max_nodes, witness, results)
