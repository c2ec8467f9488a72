"""Two-list batched queue with potential equal to the back-list length.

Enqueue conses onto the back list for free. Dequeue pops the front list; when
the front list is empty the back list is reversed into it, which is charged
at its length. ``quit`` pays off whatever potential is still stored.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .cost import Cost
from .protocol import Element, QueueImpl, QueueObj, make_queue


def potential(bl: Iterable[Element], fl: Iterable[Element] = ()) -> Cost:
    """Stored potential of a batched state: the back-list length. ``fl`` is ignored."""
    return len(tuple(bl))


@dataclass(frozen=True)
class BatchedState(QueueImpl):
    bl: Tuple[Element, ...] = ()  # most recent first
    fl: Tuple[Element, ...] = ()  # next out first

    def potential(self) -> Cost:
        return potential(self.bl, self.fl)

    def contents(self) -> Tuple[Element, ...]:
        return self.fl + self.bl[::-1]

    def quit_cost(self) -> Cost:
        return self.potential()

    def enqueue(self, e: Element) -> Tuple[Cost, "BatchedState"]:
        return 0, dataclasses.replace(self, bl=(e,) + self.bl)

    def reversal_cost(self) -> Cost:
        return len(self.bl)

    def promote(self) -> Tuple[Element, ...]:
        return self.bl[::-1]

    def dequeue(self) -> Tuple[Cost, Optional[Element], "BatchedState"]:
        if self.fl:
            return 0, self.fl[0], dataclasses.replace(self, fl=self.fl[1:])
        front = self.promote()
        if not front:
            return 0, None, dataclasses.replace(self, bl=(), fl=())
        return self.reversal_cost(), front[0], dataclasses.replace(self, bl=(), fl=front[1:])


def batched_queue(bl: Iterable[Element] = (), fl: Iterable[Element] = ()) -> QueueObj:
    return make_queue(BatchedState(tuple(bl), tuple(fl)))
