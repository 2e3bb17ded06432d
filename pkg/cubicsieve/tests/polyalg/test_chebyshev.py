from __future__ import annotations

from fractions import Fraction

import pytest

from cubicsieve.errors import InsufficientGammaError
from cubicsieve.polyalg import T3_HAT, U2_HAT, Poly, cheb_t_monic, cheb_u_monic, recurrence_polys

F = Fraction
X = Poly.x()


def test_chebyshev_generators() -> None:
    assert cheb_t_monic(3) == Poly([0, F(-3, 4), 0, 1])
    assert cheb_u_monic(2) == Poly([F(-1, 4), 0, 1])
    assert cheb_t_monic(1) == X
    assert cheb_t_monic(0) == Poly.constant(1)
    assert cheb_u_monic(0) == Poly.constant(1)
    assert T3_HAT == cheb_t_monic(3)
    assert U2_HAT == cheb_u_monic(2)


def test_chebyshev_t4_matches_the_closed_form() -> None:
    # T_4 = 8x^4 - 8x^2 + 1, monic form divides by 8
    assert cheb_t_monic(4) == Poly([F(1, 8), 0, -1, 0, 1])
    # U_3 = 8x^3 - 4x
    assert cheb_u_monic(3) == Poly([0, F(-1, 2), 0, 1])


def test_negative_chebyshev_index_is_rejected() -> None:
    with pytest.raises(ValueError):
        cheb_t_monic(-1)


def test_recurrence_examples(pinned_gamma: list) -> None:
    polys = recurrence_polys(pinned_gamma, 3)
    assert polys[1] == X
    assert polys[2] == Poly([F(-1, 2), 0, 1])
    assert polys[3] == T3_HAT


def test_recurrence_output_is_monic_with_parity(pinned_gamma: list) -> None:
    polys = recurrence_polys(pinned_gamma, 11)
    for n, p in enumerate(polys):
        assert p.degree == n
        assert p.is_monic()
        assert p.is_rational()
        assert p.reflect() == (p if n % 2 == 0 else -p)


def test_recurrence_needs_enough_gammas(pinned_gamma: list) -> None:
    with pytest.raises(InsufficientGammaError):
        recurrence_polys(pinned_gamma, 13)
    assert len(recurrence_polys([F(0)], 1)) == 2
    with pytest.raises(ValueError):
        recurrence_polys(pinned_gamma, -1)
