import itertools

import pytest
from hypothesis import given, strategies as st

from selt.effects import Identity, NonDet, Stateful, TraceEvent, Traced, distinct, pair, sequence_all

DOMAIN = (0, 1, 2)
small = st.sampled_from(DOMAIN)
nondets = st.lists(small, min_size=1, max_size=3).map(NonDet)


def ev(bits, result):
    return TraceEvent(tuple(bits), result)


E1, E2, E3 = ev([True], True), ev([False], False), ev([], True)


# --- unit / bind examples ----------------------------------------------------


def test_nondet_unit():
    assert NonDet.unit(3).candidates == (3,)


def test_stateful_unit_leaves_state():
    assert Stateful.unit(7).run("s") == (7, "s")


def test_traced_unit_has_empty_log():
    assert Traced.unit(True) == Traced(True, ())


def test_nondet_bind_concatenates_in_order():
    assert NonDet([1, 2]).bind(lambda x: NonDet([x, x + 10])).candidates == (1, 11, 2, 12)


def test_stateful_bind_threads_state():
    increment = Stateful(lambda s: (None, s + 1))
    assert increment.bind(lambda _: increment).run(0) == (None, 2)


def test_traced_bind_concatenates_logs():
    m = Traced("a", (E1,))
    assert m.bind(lambda _: Traced("b", (E2,))) == Traced("b", (E1, E2))


def test_identity_bind():
    assert Identity(2).bind(lambda x: Identity(x * 3)) == Identity(6)


def test_nondet_rejects_empty():
    with pytest.raises(ValueError):
        NonDet([])


# --- pair / sequence_all -------------------------------------------------------


def test_pair_nondet_is_cartesian_left_major():
    assert pair(NonDet([1, 2]), NonDet("ab")).candidates == ((1, "a"), (1, "b"), (2, "a"), (2, "b"))


def test_pair_singletons():
    assert pair(NonDet(["x"]), NonDet(["y"])).candidates == (("x", "y"),)


def test_pair_traced():
    assert pair(Traced(1, (E1,)), Traced(2, (E2,))) == Traced((1, 2), (E1, E2))


def test_sequence_all_nondet():
    assert sequence_all([NonDet([1]), NonDet([2, 3])]).candidates == ((1, 2), (1, 3))
    assert sequence_all([NonDet("ab"), NonDet("c")]).candidates == (("a", "c"), ("b", "c"))


def test_sequence_all_empty():
    assert sequence_all([], NonDet.unit).candidates == ((),)
    assert sequence_all([], Traced.unit) == Traced((), ())
    with pytest.raises(ValueError):
        sequence_all([])


def test_sequence_all_stateful_order():
    def push(x):
        return Stateful(lambda s: (x, s + (x,)))

    assert sequence_all([push(1), push(2), push(3)]).run(()) == ((1, 2, 3), (1, 2, 3))


# --- set semantics -------------------------------------------------------------


def test_nondet_set_equality_ignores_order_and_duplicates():
    assert NonDet([1, 2, 2]) == NonDet([2, 1])
    assert NonDet([1]) != NonDet([1, 2])
    assert NonDet([[1], [2]]).distinct().candidates == ([1], [2])


def test_distinct_unhashable():
    assert distinct([[1], [1], [2]]) == [[1], [2]]


@given(nondets, nondets, nondets)
def test_nondet_equality_is_an_equivalence(a, b, c):
    assert a == a
    assert (a == b) == (b == a)
    if a == b and b == c:
        assert a == c


@given(nondets, nondets, st.sampled_from([lambda x: NonDet([x]), lambda x: NonDet([x, x + 1]), lambda x: NonDet([0])]))
def test_bind_respects_set_equality(a, b, f):
    if a == b:
        assert a.bind(f) == b.bind(f)


# --- monad laws, exhaustive over small carriers -----------------------------

NONDET_VALUES = [NonDet(c) for k in (1, 2, 3) for c in itertools.product(DOMAIN, repeat=k)]


def nondet_kleisli():
    # a handful of functions DOMAIN -> NonDet covering singleton, growth and collapse
    tables = [
        {0: (0,), 1: (1,), 2: (2,)},
        {0: (1, 2), 1: (0,), 2: (2, 2, 0)},
        {0: (2,), 1: (2, 1), 2: (0, 1, 2)},
    ]
    return [lambda x, t=t: NonDet(t[x]) for t in tables]


def test_nondet_monad_laws_exhaustive():
    fs = nondet_kleisli()
    for x in DOMAIN:
        for f in fs:
            assert NonDet.unit(x).bind(f).candidates == f(x).candidates
    for m in NONDET_VALUES:
        assert m.bind(NonDet.unit).candidates == m.candidates
        for f, g in itertools.product(fs, fs):
            lhs = m.bind(f).bind(g)
            rhs = m.bind(lambda x: f(x).bind(g))
            assert lhs.candidates == rhs.candidates


STATE_FNS = [
    lambda x: Stateful(lambda s: (x, s)),
    lambda x: Stateful(lambda s: ((x + s) % 3, (s + 1) % 3)),
    lambda x: Stateful(lambda s: (s, x)),
]


def test_stateful_monad_laws_exhaustive():
    ms = [f(x) for f in STATE_FNS for x in DOMAIN]
    for s in DOMAIN:
        for x in DOMAIN:
            for f in STATE_FNS:
                assert Stateful.unit(x).bind(f).run(s) == f(x).run(s)
        for m in ms:
            assert m.bind(Stateful.unit).run(s) == m.run(s)
            for f, g in itertools.product(STATE_FNS, STATE_FNS):
                assert m.bind(f).bind(g).run(s) == m.bind(lambda x: f(x).bind(g)).run(s)


def test_stateful_is_pure():
    m = STATE_FNS[1](2).bind(STATE_FNS[2])
    assert m.run(1) == m.run(1)


TRACE_FNS = [
    lambda x: Traced(x, ()),
    lambda x: Traced((x + 1) % 3, (ev([x == 0], True),)),
    lambda x: Traced(0, (ev([], x > 0), ev([True, False], False))),
]


def test_traced_monad_laws_exhaustive():
    ms = [f(x) for f in TRACE_FNS for x in DOMAIN]
    for x in DOMAIN:
        for f in TRACE_FNS:
            assert Traced.unit(x).bind(f) == f(x)
    for m in ms:
        assert m.bind(Traced.unit) == m
        for f, g in itertools.product(TRACE_FNS, TRACE_FNS):
            assert m.bind(f).bind(g) == m.bind(lambda x: f(x).bind(g))


@given(nondets, nondets)
def test_pair_matches_bind_expansion(m, n):
    expanded = m.bind(lambda x: n.bind(lambda y: NonDet.unit((x, y))))
    assert pair(m, n).candidates == expanded.candidates


def test_trace_event_str():
    assert str(ev([True, False], True)) == "query 10 -> true"
