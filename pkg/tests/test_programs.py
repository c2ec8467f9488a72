import json
import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from amortized_queue.batched import batched_queue
from amortized_queue.cost import Comp
from amortized_queue.equivalence import theorem1_pair
from amortized_queue.laws import random_queue
from amortized_queue.mutants import MUTANTS
from amortized_queue.programs import (
    Dequeue,
    Enqueue,
    Return,
    count_programs,
    enumerate_programs,
    evaluate,
    lemma_check,
    program_from_json,
    program_nodes,
    program_to_json,
    random_program,
    theorem2_check,
)
from amortized_queue.protocol import observe_dequeue, observe_enqueue, observe_quit, step_queue
from amortized_queue.spec_queue import spec_queue

R = Return()


def test_evaluate_examples():
    assert evaluate(R, spec_queue()) == Comp(0, None)
    p = Enqueue(0, Dequeue(0, R, (R,)))
    assert evaluate(p, batched_queue()) == Comp(1, None)
    assert evaluate(p, spec_queue()) == Comp(1, None)


def test_evaluate_branches_and_results():
    p = Dequeue(2, Return("empty"), (Return("zero"), Enqueue(0, Return("one"))))
    assert evaluate(p, spec_queue()) == Comp(2, "empty")
    assert evaluate(p, spec_queue([0])) == Comp(2, "zero")
    assert evaluate(p, spec_queue([1])) == Comp(3, "one")
    assert evaluate(p, batched_queue([1, 1], [])) == Comp(2 + 2 + 1, "one")


def test_branch_outside_alphabet():
    with pytest.raises(ValueError):
        evaluate(Dequeue(0, R, (R,)), spec_queue([1]))


def test_lemma_examples():
    assert lemma_check(0, R, spec_queue())
    assert lemma_check(7, R, spec_queue([0]))
    assert evaluate(R, step_queue(7, spec_queue([0]))) == Comp(7, None)


def _instrumented(p, q):
    """Re-run ``p`` on ``q`` summing emitted observation costs by hand."""
    emitted = []
    while not isinstance(p, Return):
        if isinstance(p, Enqueue):
            q = observe_enqueue(q, p.elem)
            p = p.rest
        else:
            c, e, q = observe_dequeue(q)
            emitted += [c, p.cont_cost]
            p = p.on_none if e is None else p.on_some[e]
    return sum(emitted) + observe_quit(q)


@given(st.integers(0, 2**32), st.integers(1, 10))
@settings(max_examples=300)
def test_cost_decomposition(seed, n):
    rng = random.Random(seed)
    p, q = random_program(rng, n, 2), random_queue(rng)
    assert evaluate(p, q).cost == _instrumented(p, q)
    assert program_nodes(p) <= n


@given(st.integers(0, 2**32), st.integers(0, 100))
@settings(max_examples=300)
def test_lemma_property(seed, c):
    rng = random.Random(seed)
    assert lemma_check(c, random_program(rng, 8, 2), random_queue(rng))


def test_node_count():
    assert program_nodes(R) == 1
    assert program_nodes(Enqueue(0, R)) == 2
    assert program_nodes(Dequeue(0, R, (R, R))) == 2
    assert program_nodes(Dequeue(0, Enqueue(1, R), (R, Dequeue(0, R, (R, R))))) == 4


def test_enumeration_small_case():
    assert list(enumerate_programs(1, 3)) == [R]
    assert list(enumerate_programs(2, 1)) == [R, Enqueue(0, R), Dequeue(0, R, (R,))]


def _closure(max_nodes, k):
    """Every program within the bound, built by saturating the constructors."""
    progs = {R}
    while True:
        grown = set(progs)
        grown |= {Enqueue(e, p) for e in range(k) for p in progs}
        pools = [sorted(progs, key=repr)] * (k + 1)
        grown |= {Dequeue(0, bs[0], bs[1:]) for bs in product(*pools)}
        grown = {p for p in grown if program_nodes(p) <= max_nodes}
        if grown == progs:
            return progs
        progs = grown


@pytest.mark.parametrize("max_nodes,k", [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (2, 2), (3, 2), (2, 3)])
def test_enumeration_matches_closure(max_nodes, k):
    listed = list(enumerate_programs(max_nodes, k))
    assert len(listed) == len(set(listed))
    assert set(listed) == _closure(max_nodes, k)
    assert [program_nodes(p) for p in listed] == sorted(program_nodes(p) for p in listed)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_count_recurrence(k):
    for n in range(1, 7 if k < 3 else 6):
        assert count_programs(n, k) == sum(1 for _ in enumerate_programs(n, k))


def test_known_counts():
    assert [count_programs(n, 1) for n in range(1, 5)] == [1, 3, 9, 31]
    assert [count_programs(n, 2) for n in range(1, 7)] == [1, 4, 19, 121, 928, 7879]


def test_enumeration_is_deterministic():
    assert list(enumerate_programs(4, 2)) == list(enumerate_programs(4, 2))


@given(st.integers(0, 2**32))
def test_json_round_trip(seed):
    p = random_program(random.Random(seed), 9, 2)
    assert program_from_json(json.loads(json.dumps(program_to_json(p)))) == p


def test_json_shape():
    p = Dequeue(1, R, (Enqueue(0, R), R))
    assert program_to_json(p) == {
        "op": "dequeue",
        "cost": 1,
        "none": {"op": "return"},
        "some": {"0": {"op": "enqueue", "elem": 0, "rest": {"op": "return"}}, "1": {"op": "return"}},
    }
    with pytest.raises(ValueError):
        program_from_json({"op": "dequeue", "cost": 0, "none": {"op": "return"}, "some": {"1": {"op": "return"}}})
    with pytest.raises(ValueError):
        program_from_json({"op": "jump"})


def test_theorem2_examples():
    r = theorem2_check(batched_queue(), spec_queue(), 5, 5, 2)
    assert r.agree and r.approx.equivalent and r.programs_equal
    q = spec_queue([0, 1])
    assert theorem2_check(q, q, 4, 4, 2).agree
    v = MUTANTS["mutant-no-reversal-cost"]
    r = theorem2_check(*theorem1_pair([], [], v.batched, v.spec), 6, 6, 2)
    assert r.agree and not r.approx.equivalent and not r.programs_equal
    assert r.witness == Enqueue(0, Dequeue(0, R, (R, R)))
    lhs, rhs = r.witness_results
    assert (lhs.cost, rhs.cost) == (0, 1)
    with pytest.raises(ValueError):
        theorem2_check(q, q, 4, 3, 2)


def test_program_discrimination_implies_checker_discrimination():
    # the direction of the bound that always holds: depth >= max_nodes
    pairs = [theorem1_pair([], [], v.batched, v.spec) for v in MUTANTS.values()]
    pairs += [theorem1_pair([1, 0], [], v.batched, v.spec) for v in MUTANTS.values()]
    for q1, q2 in pairs:
        for n in range(1, 6):
            r = theorem2_check(q1, q2, n, n, 2)
            if not r.programs_equal:
                assert not r.approx.equivalent
