from __future__ import annotations

import json
import pickle
import random
from fractions import Fraction

import pytest

from cubicsieve.polyalg import (
    T3_HAT,
    U2_HAT,
    Poly,
    poly_add,
    poly_compose,
    poly_divrem,
    poly_eval,
    poly_mul,
    poly_neg,
    poly_pow,
    poly_scale,
    poly_sub,
)
from cubicsieve.qfield import QS2, SQRT2

F = Fraction
X = Poly.x()


def _random_poly(rng: random.Random, degree: int) -> Poly:
    return Poly(QS2(F(rng.randint(-9, 9), rng.randint(1, 5)), F(rng.randint(-3, 3), rng.randint(1, 4))) for _ in range(degree + 1))


def test_trailing_zeros_are_trimmed() -> None:
    p = Poly([1, 2, 0, 0])
    assert p.degree == 1
    assert Poly([0, 0]).is_zero()
    assert Poly().degree == -1


def test_addition_and_multiplication_examples() -> None:
    assert poly_mul(U2_HAT, Poly.constant(1)) == U2_HAT
    assert poly_mul(X, X) == Poly.monomial(2)
    assert poly_mul(X - F(1, 2), X + F(1, 2)) == U2_HAT
    assert poly_add(X, -X).is_zero()
    assert poly_sub(U2_HAT, Poly.monomial(2)) == Poly.constant(F(-1, 4))
    assert poly_neg(X) == Poly([0, -1])
    assert poly_scale(X, SQRT2) == Poly([0, SQRT2])
    assert poly_pow(X + 1, 2) == Poly([1, 2, 1])


def test_degree_is_additive_under_products() -> None:
    rng = random.Random(11)
    for _ in range(30):
        p = _random_poly(rng, rng.randint(0, 6))
        q = _random_poly(rng, rng.randint(0, 6))
        if p.is_zero() or q.is_zero():
            continue
        assert (p * q).degree == p.degree + q.degree


def test_compose_examples() -> None:
    assert poly_compose(X, T3_HAT) == T3_HAT
    assert poly_compose(Poly.monomial(2), T3_HAT) == Poly([0, 0, F(9, 16), 0, F(-3, 2), 0, 1])
    assert poly_compose(Poly.constant(F(5, 7)), T3_HAT) == Poly.constant(F(5, 7))
    assert poly_compose(T3_HAT, U2_HAT).degree == 6


def test_divrem_examples() -> None:
    assert poly_divrem(U2_HAT, U2_HAT) == (Poly.constant(1), Poly())
    assert poly_divrem(T3_HAT, U2_HAT) == (X, Poly([0, F(-1, 2)]))
    assert poly_divrem(Poly(), U2_HAT) == (Poly(), Poly())
    with pytest.raises(ZeroDivisionError):
        poly_divrem(X, Poly())


def test_divrem_recovers_quotient_and_remainder() -> None:
    rng = random.Random(3)
    for _ in range(40):
        p = _random_poly(rng, rng.randint(0, 8))
        r = _random_poly(rng, rng.randint(0, 1))
        q, rem = poly_divrem(p * U2_HAT + r, U2_HAT)
        assert q == p
        assert rem == r


def test_evaluation_examples() -> None:
    assert poly_eval(U2_HAT, F(1, 2)) == 0
    assert poly_eval(T3_HAT, 1) == F(1, 4)
    assert poly_eval(Poly.constant(1), SQRT2) == 1
    assert poly_eval(U2_HAT, SQRT2) == F(7, 4)


def test_derivative_of_t3_is_three_u2() -> None:
    assert T3_HAT.derivative() == U2_HAT.scale(3)
    assert T3_HAT.derivative().antiderivative() == T3_HAT


def test_reflect_and_first_difference() -> None:
    assert T3_HAT.reflect() == -T3_HAT
    assert U2_HAT.reflect() == U2_HAT
    assert T3_HAT.first_difference(T3_HAT) is None
    assert T3_HAT.first_difference(X ** 3) == 1
    assert X.first_difference(Poly()) == 1


def test_structure_predicates() -> None:
    assert T3_HAT.is_monic()
    assert T3_HAT.is_rational()
    assert not Poly([SQRT2, 1]).is_rational()
    assert not Poly([1, 2]).is_monic()
    assert T3_HAT.leading == 1
    assert T3_HAT.coefficient(1) == F(-3, 4)
    assert T3_HAT.coefficient(10) == 0


def test_json_round_trip_is_byte_identical() -> None:
    p = Poly([SQRT2, F(-3, 4), 0, 1])
    text = json.dumps(p.to_json())
    again = Poly.from_json(json.loads(text))
    assert again == p
    assert json.dumps(again.to_json()) == text
    assert pickle.loads(pickle.dumps(p)) == p


def test_polynomials_are_immutable_and_hashable() -> None:
    with pytest.raises(AttributeError):
        X.coeffs = ()  # type: ignore[misc]
    assert len({Poly([1, 1]), Poly([1, 1, 0])}) == 1


def test_text_form() -> None:
    assert str(T3_HAT) == "x^3 + (-3/4)*x"
    assert str(Poly()) == "0"
