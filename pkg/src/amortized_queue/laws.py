"""Randomized checks of the algebraic laws the cost model relies on."""

from __future__ import annotations

import random
from typing import Callable, Dict

from .batched import batched_queue
from .cost import Comp, bind, ret, step
from .protocol import QueueObj, observe_dequeue, observe_enqueue, observe_quit, step_queue
from .spec_queue import spec_queue

MAX_SAMPLE_COST = 10**6


def random_list(rng: random.Random, alphabet: int, max_len: int) -> list:
    return [rng.randrange(alphabet) for _ in range(rng.randint(0, max_len))]


def random_queue(
    rng: random.Random, alphabet: int = 2, max_len: int = 4, max_step: int = 10
) -> QueueObj:
    """A spec or batched queue with random contents, possibly pre-charged."""
    if rng.random() < 0.5:
        q = spec_queue(random_list(rng, alphabet, max_len))
    else:
        q = batched_queue(random_list(rng, alphabet, max_len), random_list(rng, alphabet, max_len))
    if rng.random() < 0.5:
        q = step_queue(rng.randint(0, max_step), q)
    return q


def _cost(rng: random.Random) -> int:
    return rng.randint(0, MAX_SAMPLE_COST)


def _comp(rng: random.Random) -> Comp:
    return Comp(_cost(rng), rng.randint(-50, 50))


def _kleisli(rng: random.Random) -> Callable[[int], Comp]:
    a, b, c = rng.randint(0, 100), rng.randint(-5, 5), rng.randint(0, 7)
    return lambda x: Comp(a + (x % (c + 1)), x * b + c)


def _monoid_assoc(rng):
    a, b, c = _cost(rng), _cost(rng), _cost(rng)
    return (a + b) + c == a + (b + c)


def _monoid_identity(rng):
    a = _cost(rng)
    return step(a, ret(None)) == step(0, step(a, ret(None))) == Comp(a, None)


def _monoid_comm(rng):
    a, b = _cost(rng), _cost(rng)
    m = _comp(rng)
    return step(a, step(b, m)) == step(b, step(a, m))


def _left_identity(rng):
    x, f = rng.randint(-50, 50), _kleisli(rng)
    return bind(ret(x), f) == f(x)


def _right_identity(rng):
    m = _comp(rng)
    return bind(m, ret) == m


def _bind_assoc(rng):
    m, f, g = _comp(rng), _kleisli(rng), _kleisli(rng)
    return bind(bind(m, f), g) == bind(m, lambda x: bind(f(x), g))


def _step_fusion(rng):
    a, b, m = _cost(rng), _cost(rng), _comp(rng)
    return step(a, step(b, m)) == step(a + b, m)


def _step_bind(rng):
    c, m, f = _cost(rng), _comp(rng), _kleisli(rng)
    return bind(step(c, m), f) == step(c, bind(m, f))


def _quit_distributes(rng):
    c, q = _cost(rng), random_queue(rng)
    return observe_quit(step_queue(c, q)) == c + observe_quit(q)


def _dequeue_distributes(rng):
    c, q = _cost(rng), random_queue(rng)
    c1, e1, r1 = observe_dequeue(step_queue(c, q))
    c2, e2, r2 = observe_dequeue(q)
    return c1 == c + c2 and e1 == e2 and r1 == r2


def _enqueue_distributes(rng):
    c, q, e = _cost(rng), random_queue(rng), rng.randrange(2)
    return observe_enqueue(step_queue(c, q), e) == step_queue(c, observe_enqueue(q, e))


def _step_queue_fusion(rng):
    a, b, q = _cost(rng), _cost(rng), random_queue(rng)
    return step_queue(a, step_queue(b, q)) == step_queue(a + b, q) and step_queue(0, q) == q


LAWS: Dict[str, Callable[[random.Random], bool]] = {
    "monoid-associativity": _monoid_assoc,
    "monoid-identity": _monoid_identity,
    "monoid-commutativity": _monoid_comm,
    "monad-left-identity": _left_identity,
    "monad-right-identity": _right_identity,
    "monad-associativity": _bind_assoc,
    "step-fusion": _step_fusion,
    "step-bind": _step_bind,
    "step-queue-quit": _quit_distributes,
    "step-queue-dequeue": _dequeue_distributes,
    "step-queue-enqueue": _enqueue_distributes,
    "step-queue-fusion": _step_queue_fusion,
}


def check_laws(samples: int = 10_000, seed: int = 0) -> Dict[str, int]:
    """Run every law on ``samples`` random cases; return failure counts by law."""
    failures = {}
    for name, law in LAWS.items():
        rng = random.Random(f"{seed}:{name}")
        failures[name] = sum(not law(rng) for _ in range(samples))
    return failures
