"""Deliberately broken queue variants used to exercise the checkers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, ClassVar, Dict, Iterable, Tuple

from .batched import BatchedState, batched_queue
from .cost import Cost
from .protocol import Element, QueueObj, make_queue
from .spec_queue import SpecState, spec_queue


@dataclass(frozen=True)
class QuitFreeBatched(BatchedState):
    def quit_cost(self) -> Cost:
        return 0


@dataclass(frozen=True)
class FreeReversalBatched(BatchedState):
    def reversal_cost(self) -> Cost:
        return 0


@dataclass(frozen=True)
class DoubleReversalBatched(BatchedState):
    def reversal_cost(self) -> Cost:
        return 2 * len(self.bl)


@dataclass(frozen=True)
class UnreversedFrontBatched(BatchedState):
    # back list becomes the front list as-is, so the newest element leaves first
    def promote(self) -> Tuple[Element, ...]:
        return self.bl


@dataclass(frozen=True)
class ExpensiveSpec(SpecState):
    enqueue_cost: ClassVar[Cost] = 2


def _batched_with(cls: type) -> Callable[..., QueueObj]:
    def make(bl: Iterable[Element] = (), fl: Iterable[Element] = ()) -> QueueObj:
        return make_queue(cls(tuple(bl), tuple(fl)))

    make.__name__ = f"batched_queue[{cls.__name__}]"
    return make


def _expensive_spec(items: Iterable[Element] = ()) -> QueueObj:
    return make_queue(ExpensiveSpec(tuple(items)))


@dataclass(frozen=True)
class Variant:
    """A pairing of batched-queue and spec-queue constructors."""

    name: str
    description: str
    batched: Callable[..., QueueObj]
    spec: Callable[..., QueueObj]
    # "cost" or "element": the kind of disagreement that should expose it
    defect: str = "none"


BASELINE = Variant("batched", "unmodified batched queue", batched_queue, spec_queue)

MUTANTS: Dict[str, Variant] = {
    v.name: v
    for v in (
        Variant(
            "mutant-quit-free",
            "quit pays 0 instead of the stored potential",
            _batched_with(QuitFreeBatched),
            spec_queue,
            "cost",
        ),
        Variant(
            "mutant-no-reversal-cost",
            "reversing the back list is free",
            _batched_with(FreeReversalBatched),
            spec_queue,
            "cost",
        ),
        Variant(
            "mutant-double-reversal-cost",
            "reversing the back list costs twice its length",
            _batched_with(DoubleReversalBatched),
            spec_queue,
            "cost",
        ),
        Variant(
            "mutant-spec-enqueue-2",
            "reference queue charges 2 per enqueue",
            batched_queue,
            _expensive_spec,
            "cost",
        ),
        Variant(
            "mutant-unreversed-front",
            "back list is promoted to the front without reversing",
            _batched_with(UnreversedFrontBatched),
            spec_queue,
            "element",
        ),
    )
}

VARIANTS: Dict[str, Variant] = {BASELINE.name: BASELINE, **MUTANTS}


def get_variant(name: str) -> Variant:
    try:
        return VARIANTS[name]
    except KeyError:
        raise KeyError(f"unknown implementation {name!r}; choose from {sorted(VARIANTS)}") from None
