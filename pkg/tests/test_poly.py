import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import pytest

from mlqtasep.poly import (
    LaurentPoly,
    complete_homogeneous,
    parse_poly,
    q_int,
    q_int_derivative,
    x_vars,
)


def test_basic_arithmetic():
    x1, x2 = x_vars(2)
    assert (x1 + x2) * x1 == x1 ** 2 + x1 * x2
    assert str(x1 + x2) == "x1 + x2"
    assert (x1 - x1).is_zero()
    assert (x1 + x2) - (x1 + x2) == LaurentPoly.zero(2)


def test_weights_of_rotated_words_cancel():
    # both ends of the three-particle ring carry weight x1 + x2
    x1, x2 = x_vars(2)
    w123 = x1 + x2
    w231 = x2 + x1
    assert (w123 - w231).is_zero()


def test_laurent_cancellation():
    x1, x2 = x_vars(2)
    ratio = x2 * x1.monomial_inverse()  # x2/x1
    assert ratio * x1 == x2
    assert x1.monomial_inverse() * x1 == LaurentPoly.one(2)


def test_monomial_div():
    x1, x2 = x_vars(2)
    p = x1 ** 2 + x1 * x2
    assert p.monomial_div(x1) == x1 + x2
    with pytest.raises(ValueError):
        p.monomial_div(x1 + x2)
    assert (2 * x1).monomial_div(LaurentPoly.constant(2, 2)) == x1


def test_eval_exact():
    x1, x2 = x_vars(2)
    assert (x1 + x2).eval([2, 1]) == 3
    assert x1.eval([2, 1]) == 2
    assert (x2 * x1.monomial_inverse()).eval([Fraction(1, 3), 2]) == 6


def test_eval_pole_rejected():
    x1, x2 = x_vars(2)
    ratio = x2 * x1.monomial_inverse()
    with pytest.raises(ZeroDivisionError):
        ratio.eval([0, 1])


def test_positivity_check():
    x1, x2 = x_vars(2)
    assert (x1 + x2).is_positive()
    assert not (x1 - x2).is_positive()
    assert not (x2 * x1.monomial_inverse()).is_positive()
    assert LaurentPoly.zero(2).is_positive()  # vacuous


def test_q_int_derivative_closed_form():
    assert str(q_int_derivative(3, 0)) == "1 + q + q^2"
    assert str(q_int_derivative(3, 1)) == "1 + 2*q"
    assert q_int_derivative(4, 2) == LaurentPoly(1, {(0,): 2, (1,): 6}, ("q",))
    assert q_int_derivative(3, 3).is_zero()
    assert q_int_derivative(3, 7).is_zero()


def _formal_derivative(p: LaurentPoly) -> LaurentPoly:
    terms = {}
    for (e,), c in p.terms.items():
        if e != 0:
            terms[(e - 1,)] = terms.get((e - 1,), 0) + c * e
    return LaurentPoly(1, terms, p.names)


@pytest.mark.parametrize("k", range(1, 11))
def test_q_int_derivative_matches_termwise_oracle(k):
    for d in range(k):
        expected = q_int(k)
        for _ in range(d):
            expected = _formal_derivative(expected)
        assert q_int_derivative(k, d) == expected


def _h_bruteforce(k, gens):
    total = LaurentPoly.zero(gens[0].nvars, gens[0].names)
    for combo in combinations_with_replacement(gens, k):
        term = LaurentPoly.one(gens[0].nvars, gens[0].names)
        for g in combo:
            term = term * g
        total = total + term
    return total


def test_complete_homogeneous_small_cases():
    a = LaurentPoly.variable(0, 1, ("a",))
    one = LaurentPoly.one(1, ("a",))
    assert str(complete_homogeneous(1, [one, a, a])) == "1 + 2*a"
    assert complete_homogeneous(0, [one, a, a]) == LaurentPoly.one(1, ("a",))
    assert str(complete_homogeneous(2, [one, a])) == "1 + a + a^2"
    assert complete_homogeneous(2, [one, a]) == _h_bruteforce(2, [one, a])


@pytest.mark.parametrize("k,r", [(k, r) for k in range(9) for r in range(1, 7)])
def test_complete_homogeneous_binomial_coefficients(k, r):
    a = LaurentPoly.variable(0, 1, ("a",))
    gens = [LaurentPoly.one(1, ("a",))] + [a] * r
    h = complete_homogeneous(k, gens)
    for i in range(k + 1):
        assert h.terms.get((i,), 0) == comb(i + r - 1, i)


def _random_poly(rng, nvars, nterms, max_deg=3, laurent=False):
    terms = {}
    low = -max_deg if laurent else 0
    for _ in range(nterms):
        exps = tuple(rng.randint(low, max_deg) for _ in range(nvars))
        terms[exps] = rng.randint(-5, 5)
    return LaurentPoly(nvars, terms)


def test_ring_axioms_randomized():
    rng = random.Random(20240)
    for _ in range(40):
        nvars = rng.randint(1, 4)
        p = _random_poly(rng, nvars, rng.randint(0, 5), laurent=True)
        q = _random_poly(rng, nvars, rng.randint(0, 5), laurent=True)
        r = _random_poly(rng, nvars, rng.randint(0, 5), laurent=True)
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + (-p) == LaurentPoly.zero(nvars)
        assert p * q == q * p


def test_eval_is_ring_homomorphism():
    rng = random.Random(7)
    for _ in range(25):
        nvars = rng.randint(1, 3)
        p = _random_poly(rng, nvars, rng.randint(0, 4))
        q = _random_poly(rng, nvars, rng.randint(0, 4))
        point = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(nvars)]
        assert (p * q).eval(point) == p.eval(point) * q.eval(point)
        assert (p + q).eval(point) == p.eval(point) + q.eval(point)


def test_str_parse_round_trip():
    rng = random.Random(99)
    for _ in range(40):
        nvars = rng.randint(1, 3)
        p = _random_poly(rng, nvars, rng.randint(0, 5), laurent=True)
        assert parse_poly(str(p), nvars) == p
    assert parse_poly("x1^6*x2^5*x3^6*x4^2*x5", 5) == LaurentPoly.monomial(
        1, (6, 5, 6, 2, 1)
    )
    assert parse_poly("0", 2).is_zero()
    assert parse_poly("3 + 6*a", 1, ("a",)) == LaurentPoly(1, {(0,): 3, (1,): 6}, ("a",))


def test_str_canonical_order():
    x1, x2 = x_vars(2)
    assert str(x2 + x1) == "x1 + x2"
    assert str(LaurentPoly.constant(3, 1, ("a",)) + 6 * LaurentPoly.variable(0, 1, ("a",))) == "3 + 6*a"
    assert str(x1 * x1 - x2) == "-x2 + x1^2"


def test_mismatched_nvars_rejected():
    x1, _ = x_vars(2)
    q = LaurentPoly.variable(0, 3)
    with pytest.raises(ValueError):
        _ = x1 + q
