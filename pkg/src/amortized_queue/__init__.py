"""Cost-instrumented queues and a bounded checker for amortized equivalence."""

from .batched import BatchedState, batched_queue, potential
from .cost import Comp, CostOverflowError, bind, ret, step
from .equivalence import (
    EquivReport,
    approx_check,
    cong_check,
    replay,
    theorem1_check,
    theorem1_pair,
)
from .programs import (
    Dequeue,
    Enqueue,
    Return,
    enumerate_programs,
    evaluate,
    lemma_check,
    theorem2_check,
)
from .protocol import QueueObj, observe_dequeue, observe_enqueue, observe_quit, step_queue
from .spec_queue import SpecState, spec_queue

__all__ = [
    "BatchedState",
    "Comp",
    "CostOverflowError",
    "Dequeue",
    "Enqueue",
    "EquivReport",
    "QueueObj",
    "Return",
    "SpecState",
    "approx_check",
    "batched_queue",
    "bind",
    "cong_check",
    "enumerate_programs",
    "evaluate",
    "lemma_check",
    "observe_dequeue",
    "observe_enqueue",
    "observe_quit",
    "potential",
    "replay",
    "ret",
    "spec_queue",
    "step",
    "step_queue",
    "theorem1_check",
    "theorem1_pair",
    "theorem2_check",
]
