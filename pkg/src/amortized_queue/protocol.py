"""The queue object protocol: three observations plus latent pending cost.

A queue is observed through ``quit``, ``enqueue`` and ``dequeue``. Cost
charged on a queue as a whole (``step_queue``) is kept on the object as
``pending`` and is only emitted by the cost-returning observations (``quit``
and ``dequeue``); ``enqueue`` produces another queue, so the cost rides along.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass
from typing import Optional, Tuple

from .cost import Cost, add_cost, check_cost

Element = int


class QueueImpl(abc.ABC):
    """Implementation state behind a :class:`QueueObj`.

    Implementations must be immutable: every observation returns fresh state
    and leaves ``self`` untouched.
    """

    @abc.abstractmethod
    def quit_cost(self) -> Cost: ...

    @abc.abstractmethod
    def enqueue(self, e: Element) -> Tuple[Cost, "QueueImpl"]:
        """Return the latent cost of the enqueue and the successor state."""

    @abc.abstractmethod
    def dequeue(self) -> Tuple[Cost, Optional[Element], "QueueImpl"]:
        """Return emitted cost, the front element (``None`` if empty), and the residual."""

    def potential(self) -> Cost:
        return 0


@dataclass(frozen=True)
class QueueObj:
    pending: Cost
    impl: QueueImpl

    def __post_init__(self) -> None:
        check_cost(self.pending)


def make_queue(impl: QueueImpl) -> QueueObj:
    return QueueObj(0, impl)


def observe_quit(q: QueueObj) -> Cost:
    return add_cost(q.pending, q.impl.quit_cost())


def observe_enqueue(q: QueueObj, e: Element) -> QueueObj:
    if isinstance(e, bool) or not isinstance(e, int) or e < 0:
        raise ValueError(f"element must be a non-negative int, got {e!r}")
    c, impl = q.impl.enqueue(e)
    return QueueObj(add_cost(q.pending, c), impl)


def observe_dequeue(q: QueueObj) -> Tuple[Cost, Optional[Element], QueueObj]:
    c, e, impl = q.impl.dequeue()
    return add_cost(q.pending, c), e, QueueObj(0, impl)


def step_queue(c: Cost, q: QueueObj) -> QueueObj:
    return QueueObj(add_cost(check_cost(c), q.pending), q.impl)
