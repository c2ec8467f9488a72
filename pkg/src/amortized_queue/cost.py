"""Abstract cost and cost-carrying computations.

Costs are non-negative integers under addition. A :class:`Comp` pairs a value
with the cost incurred to produce it, which is the writer monad over that
monoid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generic, TypeVar

A = TypeVar("A")
B = TypeVar("B")

Cost = int

#: Largest representable cost. Exceeding it raises rather than wrapping.
MAX_COST: Cost = 2**63 - 1


class CostOverflowError(OverflowError):
    pass


def check_cost(c: object) -> Cost:
    if isinstance(c, bool) or not isinstance(c, int):
        raise TypeError(f"cost must be an int, got {type(c).__name__}")
    if c < 0:
        raise ValueError(f"cost must be non-negative, got {c}")
    if c > MAX_COST:
        raise CostOverflowError(f"cost {c} exceeds {MAX_COST}")
    return c


def add_cost(a: Cost, b: Cost) -> Cost:
    total = a + b
    if total > MAX_COST:
        raise CostOverflowError(f"cost {a} + {b} exceeds {MAX_COST}")
    return total


@dataclass(frozen=True)
class Comp(Generic[A]):
    """A value together with the abstract cost spent computing it."""

    cost: Cost
    value: A

    def __post_init__(self) -> None:
        check_cost(self.cost)

    def bind(self, f: Callable[[A], "Comp[B]"]) -> "Comp[B]":
        return bind(self, f)


def ret(a: A) -> Comp[A]:
    return Comp(0, a)


def step(c: Cost, m: Comp[A]) -> Comp[A]:
    """Charge ``c`` units of cost in front of ``m``."""
    return Comp(add_cost(check_cost(c), m.cost), m.value)


def bind(m: Comp[A], f: Callable[[A], Comp[B]]) -> Comp[B]:
    n = f(m.value)
    return Comp(add_cost(m.cost, n.cost), n.value)
