import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neutromap import (
    FIXED_POINT,
    LIMIT_CYCLE,
    I,
    IterationCapExceeded,
    NeutroValue,
    average_experts,
    fuzzy_infer,
    load_fixture,
    maxmin_backward,
    maxmin_forward,
    neutro_fuzzy_infer,
)

from oracles import fuzzy_table, walk


def F(text):
    return tuple(Fraction(t) for t in text.split())


def e(i, n):
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def test_forward_and_backward_on_educated_matrix():
    m = load_fixture("educated-fuzzy")
    assert maxmin_forward((1, 0, 0, 0, 0, 1, 0, 0, 0), m) == F(
        "0.8 0.8 0.9 0.6 0.4 0.6 0.9 0.8 0 0 0 0.6 0.8 0.8")
    a = [0] * 14
    for k in (1, 3, 9, 14):
        a[k - 1] = 1
    assert maxmin_backward(m, a) == F("0.9 0.9 0.8 0.8 0.9 0.8 0.7 0.7 0.6")


def test_educated_run_is_a_bipartite_fixed_point():
    p = fuzzy_infer(load_fixture("educated-fuzzy"), (1, 0, 0, 0, 0, 1, 0, 0, 0))
    assert p.meta["mode"] == "bipartite"
    assert p.classification == FIXED_POINT
    # the sixth node settles at 0.9 under exact recomputation
    assert p.final[0] == F("0.9 0.8 0.8 0.8 0.8 0.9 0.8 0.8 0.8")


def test_public_average_matches_printed_matrix():
    experts = [load_fixture(f"public-m{k}") for k in range(1, 11)]
    assert average_experts(experts) == load_fixture("public-combined-N").matrix


@pytest.mark.parametrize("node, kind", [
    (2, LIMIT_CYCLE), (4, FIXED_POINT), (5, FIXED_POINT), (8, FIXED_POINT),
    (6, LIMIT_CYCLE), (7, LIMIT_CYCLE), (9, LIMIT_CYCLE),
])
def test_public_average_unit_seeds(node, kind):
    p = fuzzy_infer(load_fixture("public-combined-N"), e(node, 9))
    assert p.meta["mode"] == "monopartite"
    assert p.classification == kind
    assert p.period in (1, 2)


def test_public_average_first_image():
    p = fuzzy_infer(load_fixture("public-combined-N"), e(6, 9))
    assert p.trace[1] == F("0.2 0.3 0.1 0.1 0.2 0 0.5 0.2 0.6")


def test_seed_validation():
    with pytest.raises(ValueError):
        fuzzy_infer(((0, 1), (1, 0)), (2, 0))
    with pytest.raises(ValueError):
        fuzzy_infer(((0, 1), (1, 0)), (1, 0, 0))
    with pytest.raises(ValueError):
        fuzzy_infer(((0, 1, 0), (1, 0, 1)), (1, 0), mode="monopartite")
    with pytest.raises(ValueError):
        fuzzy_infer(((0, "I"), (1, 0)), (1, 0))


def test_cap_is_enforced():
    m = ((0, 1), (1, 0))
    with pytest.raises(IterationCapExceeded):
        fuzzy_infer(m, (1, 0), max_iterations=1)


def test_neutro_fuzzy_orders_lexicographically():
    half = NeutroValue(Fraction(1, 2))
    m = ((0, I), (half, 0))
    # min(1, I) = I, and min(I, 1/2) = I because I ranks below any positive real part
    p = neutro_fuzzy_infer(m, (1, 0))
    assert p.trace[1:] == ((0, I), (I, 0), (0, I))
    assert p.classification == LIMIT_CYCLE and p.period == 2
    q = neutro_fuzzy_infer(load_fixture("educated-fuzzy-neutro"), (1, 0, 0, 0, 0, 1, 0, 0, 0))
    assert q.classification == FIXED_POINT


def test_average_experts_neutro():
    avg = average_experts([((0, "I"),), ((1, "I"),)])
    assert avg == ((NeutroValue(Fraction(1, 2)), I),)


# properties

GRID = (0, 3, 7, 10)  # {0, 0.3, 0.7, 1} scaled by 10


@st.composite
def fuzzy_cases(draw, values=GRID, max_n=4):
    n = draw(st.integers(1, max_n))
    m = [[draw(st.sampled_from(values)) for _ in range(n)] for _ in range(n)]
    seed = tuple(draw(st.sampled_from(values)) for _ in range(n))
    return m, seed


@settings(max_examples=120, deadline=None)
@given(fuzzy_cases())
def test_fuzzy_matches_maxmin_oracle(case):
    m, seed = case
    scaled = [[Fraction(v, 10) for v in row] for row in m]
    p = fuzzy_infer(scaled, tuple(Fraction(v, 10) for v in seed), mode="monopartite")
    _, cycle = walk(fuzzy_table(m, GRID), seed)
    assert [tuple(int(x * 10) for x in s) for s in p.cycle] == cycle


@settings(max_examples=120, deadline=None)
@given(fuzzy_cases(values=(0, 1, 2, 5, 9, 10), max_n=5))
def test_values_stay_in_the_input_set_and_run_terminates(case):
    m, seed = case
    m = [[Fraction(v, 10) for v in row] for row in m]
    seed = tuple(Fraction(v, 10) for v in seed)
    allowed = {v for row in m for v in row} | set(seed)
    p = fuzzy_infer(m, seed, mode="monopartite")
    assert p.iterations <= (len(allowed) + 1) ** len(m)
    for state in p.trace[1:]:
        assert set(state) <= allowed


@settings(max_examples=100, deadline=None)
@given(fuzzy_cases(), st.data())
def test_maxmin_is_monotone(case, data):
    m, seed = case
    bump = tuple(data.draw(st.sampled_from([v for v in GRID if v >= s])) for s in seed)
    lo, hi = maxmin_forward(seed, m), maxmin_forward(bump, m)
    assert all(a <= b for a, b in zip(lo, hi))
    grown = [[max(v, data.draw(st.sampled_from(GRID))) for v in row] for row in m]
    assert all(a <= b for a, b in zip(lo, maxmin_forward(seed, grown)))


@settings(max_examples=100, deadline=None)
@given(fuzzy_cases(values=(0, 10), max_n=5))
def test_binary_inputs_give_boolean_reachability(case):
    m, seed = case
    out = maxmin_forward(seed, m)
    n = len(m)
    assert out == tuple(10 if any(seed[i] and m[i][k] for i in range(n)) else 0 for k in range(n))


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 5), st.randoms(use_true_random=False))
def test_average_is_bounded_by_experts(rows, cols, count, rnd):
    mats = [[[Fraction(rnd.randint(0, 10), 10) for _ in range(cols)] for _ in range(rows)] for _ in range(count)]
    avg = average_experts(mats)
    for i, j in itertools.product(range(rows), range(cols)):
        cells = [m[i][j] for m in mats]
        assert min(cells) <= avg[i][j] <= max(cells)
        assert avg[i][j] * count == sum(cells)
