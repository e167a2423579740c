"""Carlitz q-Euler and q-Bernoulli sequences."""

from fractions import Fraction

import pytest

from qhankel.carlitz import (
    MomentSeq,
    limit_q1,
    q_bernoulli_explicit,
    q_bernoulli_recursive,
    q_bernoulli_seq,
    q_euler_explicit,
    q_euler_recursive,
    q_euler_seq,
)
from qhankel.ratcore import Q_ONE, QPoly, RatFuncQ


def P(*coeffs):
    return QPoly(coeffs)


EPS_AT_ONE = [
    Fraction(1),
    Fraction(-1, 2),
    Fraction(0),
    Fraction(1, 4),
    Fraction(0),
    Fraction(-1, 2),
    Fraction(0),
    Fraction(17, 8),
    Fraction(0),
    Fraction(-31, 2),
]


class TestQEuler:
    def test_first_values(self):
        assert q_euler_recursive(0) == Q_ONE
        assert q_euler_recursive(1) == RatFuncQ(P(0, -1), P(1, 0, 1))
        # eps_2 = -q(1-q^2) / ((1+q^2)(1+q^3))
        want = RatFuncQ(P(0, -1) * P(1, 0, -1), P(1, 0, 1) * P(1, 0, 0, 1))
        assert q_euler_recursive(2) == want
        assert want == RatFuncQ(P(0, -1, 1), P(1, -1, 2, -1, 1))

    def test_routes_agree(self):
        for n in range(21):
            assert q_euler_explicit(n) == q_euler_recursive(n)

    def test_values_at_one(self):
        for n, want in enumerate(EPS_AT_ONE):
            assert limit_q1("qeuler", n) == want

    def test_negative_index(self):
        with pytest.raises(ValueError):
            q_euler_explicit(-1)
        with pytest.raises(ValueError):
            q_euler_recursive(-2)


class TestQBernoulli:
    def test_first_values(self):
        assert q_bernoulli_recursive(0) == Q_ONE
        assert q_bernoulli_recursive(1) == RatFuncQ(P(-1), P(1, 1))

    def test_routes_agree(self):
        for n in range(21):
            assert q_bernoulli_explicit(n) == q_bernoulli_recursive(n)

    def test_values_at_one(self):
        # classical Bernoulli numbers
        want = [
            Fraction(1),
            Fraction(-1, 2),
            Fraction(1, 6),
            Fraction(0),
            Fraction(-1, 30),
            Fraction(0),
            Fraction(1, 42),
        ]
        for n, b in enumerate(want):
            assert limit_q1("qbernoulli", n) == b


class TestMomentSeq:
    def test_prefix_is_inclusive(self):
        seq = q_euler_seq()
        vals = seq.prefix(3)
        assert len(vals) == 4
        assert vals[0] == Q_ONE
        assert vals[2] == q_euler_recursive(2)

    def test_value_is_stable(self):
        seq = q_bernoulli_seq()
        first = seq.value(5)
        assert seq.value(5) == first
        assert seq.prefix(5)[5] == first

    def test_ids(self):
        assert q_euler_seq().id == "qeuler"
        assert q_bernoulli_seq().id == "qbernoulli"

    def test_negative_index(self):
        with pytest.raises(ValueError):
            q_euler_seq().value(-1)

    def test_custom_sequence(self):
        calls = []

        def fn(n):
            calls.append(n)
            return Q_ONE

        seq = MomentSeq("probe", fn)
        seq.value(2)
        seq.value(1)
        assert calls == [0, 1, 2]


def test_limit_q1_rejects_unknown_id():
    with pytest.raises(ValueError):
        limit_q1("fibonacci", 3)
