import random
from fractions import Fraction

import pytest

from zclrp import (GroupElem, JoinPoint, act, component_key, in_U, join_point,
                   sample_report, segment_in_component, vertex)
from zclrp.join_model import sample_point


def G(s, bits):
    return GroupElem(s, bits)


def test_group_elem_arithmetic():
    a, b = G(4, 0b101), G(4, 0b011)
    assert (a + b).bits == 0b110
    assert (a + a).bits == 0
    assert a + GroupElem.identity(4) == a
    with pytest.raises(ValueError):
        G(4, 8)
    with pytest.raises(ValueError):
        G(3, 1) + G(4, 1)


def test_join_point_validation():
    half = Fraction(1, 2)
    ok = join_point(1, {0: (half, G(3, 1)), 1: (half, G(3, 2))})
    assert ok.s == 3
    with pytest.raises(ValueError):  # does not sum to 1
        join_point(1, {0: (half, G(3, 1))})
    with pytest.raises(ValueError):  # label at a zero coordinate
        JoinPoint(1, ((Fraction(1), G(3, 0)), (Fraction(0), G(3, 1))))
    with pytest.raises(ValueError):  # negative coordinate
        join_point(1, {0: (Fraction(3, 2), G(3, 0)), 1: (-half, G(3, 1))})
    with pytest.raises(ValueError):  # mixed group ranks
        join_point(1, {0: (half, G(3, 0)), 1: (half, G(4, 1))})


def test_act_is_an_action_preserving_coordinates():
    rng = random.Random(0)
    for _ in range(50):
        s, k = rng.randint(2, 5), rng.randint(0, 4)
        j = rng.randrange(k + 1)
        p = sample_point(rng, s, k, j)
        g = G(s, rng.randrange(1 << (s - 1)))
        h = G(s, rng.randrange(1 << (s - 1)))
        assert act(GroupElem.identity(s), p) == p
        assert act(g, act(g, p)) == p
        assert act(g + h, p) == act(g, act(h, p))
        assert [t for t, _ in act(g, p).entries] == [t for t, _ in p.entries]
        assert sum(t for t, _ in act(g, p).entries) == 1


def test_in_U_examples():
    v = vertex(3, 2, G(2, 1))
    assert in_U(v, 2)
    assert not in_U(v, 0) and not in_U(v, 1) and not in_U(v, 3)
    with pytest.raises(ValueError):
        in_U(v, 4)


def test_in_U_is_action_invariant():
    rng = random.Random(1)
    for _ in range(50):
        s, k = rng.randint(2, 4), rng.randint(0, 4)
        p = sample_point(rng, s, k, rng.randrange(k + 1))
        g = G(s, rng.randrange(1 << (s - 1)))
        for j in range(k + 1):
            assert in_U(p, j) == in_U(act(g, p), j)


def test_component_key_equivariance():
    rng = random.Random(2)
    for _ in range(50):
        s, k = rng.randint(2, 5), rng.randint(0, 4)
        j = rng.randrange(k + 1)
        p = sample_point(rng, s, k, j)
        g = G(s, rng.randrange(1 << (s - 1)))
        assert component_key(act(g, p), j) == g + component_key(p, j)
    with pytest.raises(ValueError):
        component_key(vertex(2, 0, G(2, 0)), 1)


def test_keys_realized_and_action_transitive():
    rng = random.Random(3)
    for s in range(2, 6):
        for k in range(0, 5):
            j = rng.randrange(k + 1)
            keys = {component_key(sample_point(rng, s, k, j), j).bits
                    for _ in range(300)}
            assert keys == set(range(1 << (s - 1))), (s, k)
            # the action on keys is simply transitive: one orbit, free
            base = G(s, 0)
            orbit = {(g_bits, (G(s, g_bits) + base).bits)
                     for g_bits in range(1 << (s - 1))}
            assert {t for _, t in orbit} == set(range(1 << (s - 1)))


def test_segment_trivial_cases():
    p = join_point(2, {0: (Fraction(1, 3), G(3, 1)), 1: (Fraction(2, 3), G(3, 2))})
    assert segment_in_component(p, p, 0)
    q = vertex(2, 0, G(3, 1))
    assert segment_in_component(p, q, 0)


def test_segment_routed_through_vertex():
    half = Fraction(1, 2)
    # same key at level 0, clashing labels at level 1
    p = join_point(1, {0: (half, G(3, 1)), 1: (half, G(3, 2))})
    q = join_point(1, {0: (half, G(3, 1)), 1: (half, G(3, 3))})
    assert segment_in_component(p, q, 0)


def test_segment_preconditions():
    half = Fraction(1, 2)
    p = join_point(1, {0: (half, G(3, 1)), 1: (half, G(3, 2))})
    bad_key = join_point(1, {0: (half, G(3, 0)), 1: (half, G(3, 2))})
    with pytest.raises(ValueError):
        segment_in_component(p, bad_key, 0)
    outside = vertex(1, 1, G(3, 0))
    with pytest.raises(ValueError):
        segment_in_component(p, outside, 0)


def test_segment_random_same_key_pairs():
    rng = random.Random(4)
    for _ in range(400):
        s, k = rng.randint(2, 4), rng.randint(0, 4)
        j = rng.randrange(k + 1)
        p = sample_point(rng, s, k, j)
        q = sample_point(rng, s, k, j)
        q = act(component_key(p, j) + component_key(q, j), q)
        assert segment_in_component(p, q, j)


def test_sample_report_deterministic():
    a = sample_report(3, 2, samples=200, seed=5)
    b = sample_report(3, 2, samples=200, seed=5)
    assert a == b
    assert a.keys_found == 4
    assert a.transitive
    assert a.segment_checks_passed == 200
    assert set(a.as_dict()) == {"s", "k", "samples", "keys_found",
                                "transitive", "segment_checks_passed"}
