"""Single-list reference queue: one unit of cost per enqueue, nothing else.

The append is a full copy of the list, but only the abstract unit is charged;
this queue is a cost specification, not an efficient implementation.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import ClassVar, Iterable, Optional, Tuple

from .cost import Cost
from .protocol import Element, QueueImpl, QueueObj, make_queue


@dataclass(frozen=True)
class SpecState(QueueImpl):
    items: Tuple[Element, ...] = ()

    enqueue_cost: ClassVar[Cost] = 1

    def quit_cost(self) -> Cost:
        return 0

    def enqueue(self, e: Element) -> Tuple[Cost, "SpecState"]:
        return self.enqueue_cost, dataclasses.replace(self, items=self.items + (e,))

    def dequeue(self) -> Tuple[Cost, Optional[Element], "SpecState"]:
        if not self.items:
            return 0, None, self
        return 0, self.items[0], dataclasses.replace(self, items=self.items[1:])


def spec_queue(items: Iterable[Element] = ()) -> QueueObj:
    return make_queue(SpecState(tuple(items)))
