from __future__ import annotations

from mpmath import mp, mpf

from ..errors import DomainError

DEFAULT_DPS = 50


def _open_interval(value, low, high, name: str):
    value = mpf(value)
    if not low < value < high:
        raise DomainError(f"{name} is defined on ({low}, {high}), got {mp.nstr(value, 17)}")
    return value


def eval_w(x):
    """w(x) through the closed form with cos(arccos(x)/3), -1 < x < 1."""

    x = _open_interval(x, -1, 1, "w")
    c = mp.cos(mp.acos(x) / 3)
    half = mpf(1) / 2
    return 1 / ((c - half) * mp.sqrt(1 + c)) + 1 / ((c + half) * mp.sqrt(1 - c))


def eval_w_cos_form(theta):
    """w(cos theta) written in theta, 0 < theta < pi.

    The differences c - 1/2 and 1 - c (c = cos(theta/3)) are expanded as products of
    sines so the form stays accurate next to both ends of (0, pi).
    """

    theta = _open_interval(theta, 0, mp.pi, "w(cos theta)")
    c = mp.cos(theta / 3)
    below = 2 * mp.sin((theta + mp.pi) / 6) * mp.sin((mp.pi - theta) / 6)
    root_below = mp.sqrt(2) * mp.sin(theta / 6)
    return 1 / (below * mp.sqrt(1 + c)) + 1 / ((c + mpf(1) / 2) * root_below)


def eval_w_secant_form(theta):
    """w(cos theta) as the secant/cosecant product, 0 < theta < pi."""

    theta = _open_interval(theta, 0, mp.pi, "w secant form")
    first = mp.sec((theta - 2 * mp.pi) / 6) * mp.sec((theta + 2 * mp.pi) / 6) * mp.sec(theta / 6)
    second = mp.sec((theta - mp.pi) / 6) * mp.sec((theta + mp.pi) / 6) * mp.csc(theta / 6)
    return (first + second) / (2 * mp.sqrt(2))


def eval_w_P(x):
    x = _open_interval(x, -1, 1, "w_P")
    half = mpf(1) / 2
    return abs(x + half) / mp.sqrt(1 + x) + abs(x - half) / mp.sqrt(1 - x)


def eval_w_Q(x):
    x = _open_interval(x, mpf(-1) / 4, mpf(1) / 4, "w_Q")
    return eval_w(4 * x)


def wp_theta(theta):
    """w_P(cos theta) * sin theta, bounded on [0, pi] with kinks at pi/3 and 2pi/3."""

    c = mp.cos(theta)
    half = mpf(1) / 2
    return mp.sqrt(2) * (abs(c + half) * mp.sin(theta / 2) + abs(c - half) * mp.cos(theta / 2))


def wq_theta(theta):
    """w(cos theta) * sin theta; the end singularities of w cancel against sin theta."""

    return eval_w_cos_form(theta) * mp.sin(theta)


def triple_angle_rhs(theta):
    """1/(|cos t - 1/2| sqrt(1 + cos t)) + 1/(|cos t + 1/2| sqrt(1 - cos t)), which equals w(cos 3t)."""

    c = mp.cos(mpf(theta))
    half = mpf(1) / 2
    return 1 / (abs(c - half) * mp.sqrt(1 + c)) + 1 / (abs(c + half) * mp.sqrt(1 - c))
