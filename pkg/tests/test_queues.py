from collections import deque

import pytest
from hypothesis import given, strategies as st

from amortized_queue.batched import BatchedState, batched_queue, potential
from amortized_queue.protocol import (
    QueueObj,
    observe_dequeue,
    observe_enqueue,
    observe_quit,
    step_queue,
)
from amortized_queue.spec_queue import SpecState, spec_queue

elems = st.integers(0, 3)
lists = st.lists(elems, max_size=6)
# None is a dequeue, an int is an enqueue of that element
op_lists = st.lists(st.one_of(st.none(), elems), max_size=30)


@st.composite
def queues(draw):
    if draw(st.booleans()):
        q = spec_queue(draw(lists))
    else:
        q = batched_queue(draw(lists), draw(lists))
    return step_queue(draw(st.integers(0, 20)), q)


def test_spec_queue_observations():
    assert observe_quit(spec_queue([])) == 0
    assert observe_quit(step_queue(3, spec_queue([]))) == 3
    assert observe_dequeue(spec_queue([])) == (0, None, spec_queue([]))
    assert observe_dequeue(spec_queue([4, 5, 6])) == (0, 4, spec_queue([5, 6]))
    assert observe_dequeue(step_queue(5, spec_queue([7]))) == (5, 7, spec_queue([]))
    assert observe_enqueue(spec_queue([7]), 9) == QueueObj(1, SpecState((7, 9)))
    assert observe_enqueue(step_queue(2, spec_queue([])), 0).pending == 3
    q = observe_enqueue(observe_enqueue(spec_queue([]), 1), 2)
    assert observe_quit(q) == 2


def test_batched_queue_observations():
    assert observe_quit(batched_queue([1, 2], [])) == 2
    assert observe_quit(batched_queue([0, 1, 2], [3])) == 3
    assert observe_enqueue(batched_queue(), 5) == QueueObj(0, BatchedState((5,), ()))
    # back list [b, a] holds a then b
    assert observe_dequeue(batched_queue([2, 1], [])) == (2, 1, batched_queue([], [2]))
    assert observe_dequeue(batched_queue([2], [1, 3])) == (0, 1, batched_queue([2], [3]))
    assert observe_dequeue(batched_queue()) == (0, None, batched_queue())


def test_potential():
    assert potential([], []) == 0
    assert potential([0, 1], [1]) == 2


@given(lists, lists, lists)
def test_potential_ignores_front(bl, fl1, fl2):
    assert potential(bl, fl1) == potential(bl, fl2) == len(bl)


def _run(q, ops):
    out = []
    for op in ops:
        if op is None:
            _, e, q = observe_dequeue(q)
            out.append(e)
        else:
            q = observe_enqueue(q, op)
    return out


def _fifo(initial, ops):
    d, out = deque(initial), []
    for op in ops:
        if op is None:
            out.append(d.popleft() if d else None)
        else:
            d.append(op)
    return out


@given(lists, op_lists)
def test_spec_queue_is_fifo(items, ops):
    assert _run(spec_queue(items), ops) == _fifo(items, ops)


@given(lists, lists, op_lists)
def test_batched_matches_spec_elements(bl, fl, ops):
    expected = _fifo(fl + bl[::-1], ops)
    assert _run(batched_queue(bl, fl), ops) == expected
    assert _run(spec_queue(fl + bl[::-1]), ops) == expected


@given(op_lists)
def test_each_element_reversed_at_most_once(ops):
    q, reversal, enqueues = batched_queue(), 0, 0
    for op in ops:
        if op is None:
            c, _, q = observe_dequeue(q)
            reversal += c
        else:
            q = observe_enqueue(q, op)
            enqueues += 1
    assert reversal <= enqueues


@given(queues(), st.integers(0, 100), elems)
def test_step_distributes_over_observations(q, c, e):
    assert observe_quit(step_queue(c, q)) == c + observe_quit(q)
    c1, e1, r1 = observe_dequeue(step_queue(c, q))
    c2, e2, r2 = observe_dequeue(q)
    assert (c1, e1, r1) == (c + c2, e2, r2)
    assert r1.pending == 0
    assert observe_enqueue(step_queue(c, q), e) == step_queue(c, observe_enqueue(q, e))
    assert step_queue(0, q) == q


@given(queues(), op_lists, op_lists)
def test_observations_are_persistent(q, ops1, ops2):
    fresh = _run(q, ops2)
    _run(q, ops1)
    assert _run(q, ops2) == fresh
    assert observe_dequeue(q) == observe_dequeue(q)


def test_rejects_bad_elements():
    with pytest.raises(ValueError):
        observe_enqueue(spec_queue(), -1)
