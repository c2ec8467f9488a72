import pytest
from hypothesis import given, strategies as st

from amortized_queue.cost import MAX_COST, Comp, CostOverflowError, bind, check_cost, ret, step

costs = st.integers(min_value=0, max_value=10**9)
comps = st.builds(Comp, costs, st.integers())


def test_ret_is_free():
    assert ret(None) == Comp(0, None)
    assert ret(5) == Comp(0, 5)


def test_step_examples():
    m = Comp(4, "a")
    assert step(0, m) == m
    assert step(2, step(3, ret("x"))) == Comp(5, "x")
    assert step(1, m) == Comp(5, "a")


def test_bind_examples():
    assert bind(Comp(0, "x"), ret) == Comp(0, "x")
    assert bind(Comp(2, "x"), lambda _: Comp(3, "y")) == Comp(5, "y")
    f = lambda x: Comp(x, x + 1)
    assert bind(ret(3), f).cost == f(3).cost
    assert Comp(1, 2).bind(f) == Comp(3, 3)


@given(costs, comps, st.integers(0, 50))
def test_bind_commutes_with_step(c, m, k):
    f = lambda x: Comp(k, (x, k))
    assert bind(step(c, m), f) == step(c, bind(m, f))


@given(costs, costs, comps)
def test_step_fusion(a, b, m):
    assert step(a, step(b, m)) == step(a + b, m)


@given(comps)
def test_right_identity(m):
    assert bind(m, ret) == m


@pytest.mark.parametrize("bad", [-1, 1.5, True, "3"])
def test_rejects_non_costs(bad):
    with pytest.raises((TypeError, ValueError)):
        check_cost(bad)


def test_overflow_is_an_error():
    with pytest.raises(CostOverflowError):
        step(1, Comp(MAX_COST, None))
    with pytest.raises(CostOverflowError):
        bind(Comp(MAX_COST, 0), lambda _: Comp(1, 0))
