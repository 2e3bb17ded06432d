from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..qfield import ONE, QS2, ZERO, as_qs2
from ..qfield.qs2 import QS2Like


class Poly:
    """Dense univariate polynomial over Q(sqrt 2), constant term first.

    The coefficient tuple never ends in a zero; the zero polynomial is empty.
    """

    __slots__ = ("coeffs",)

    coeffs: Tuple[QS2, ...]

    def __init__(self, coeffs: Iterable[QS2Like] = ()) -> None:
        items = [as_qs2(c) for c in coeffs]
        while items and items[-1].is_zero():
            items.pop()
        object.__setattr__(self, "coeffs", tuple(items))

    @classmethod
    def _trusted(cls, items: List[QS2]) -> "Poly":
        while items and items[-1].is_zero():
            items.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(items))
        return obj

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Poly values are immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    @classmethod
    def constant(cls, value: QS2Like) -> "Poly":
        return cls((value,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((ZERO, ONE))

    @classmethod
    def monomial(cls, degree: int, value: QS2Like = 1) -> "Poly":
        return cls([ZERO] * degree + [as_qs2(value)])

    # -- structure --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> QS2:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def coefficient(self, k: int) -> QS2:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def first_difference(self, other: "Poly") -> Optional[int]:
        """Lowest index where the two coefficient lists differ, or None."""

        for k in range(max(len(self.coeffs), len(other.coeffs))):
            if self.coefficient(k) != other.coefficient(k):
                return k
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Any) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(as_qs2(other))
        longer, shorter = (self.coeffs, other.coeffs) if len(self.coeffs) >= len(other.coeffs) else (other.coeffs, self.coeffs)
        items = list(longer)
        for k, c in enumerate(shorter):
            items[k] = items[k] + c
        return Poly._trusted(items)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._trusted([-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(as_qs2(other))
        return self + (-other)

    def __rsub__(self, other: Any) -> "Poly":
        return (-self) + other

    def scale(self, factor: QS2Like) -> "Poly":
        factor = as_qs2(factor)
        if factor.is_zero():
            return Poly()
        return Poly._trusted([c * factor for c in self.coeffs])

    def __mul__(self, other: Any) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        rhs = [(j, c) for j, c in enumerate(other.coeffs) if not c.is_zero()]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in rhs:
                out[i + j] = out[i + j] + a * b
        return Poly._trusted(out)

    def __rmul__(self, other: Any) -> "Poly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative polynomial powers are not polynomials")
        result, base = Poly.constant(ONE), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int = 1) -> "Poly":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Poly._trusted([ZERO] * k + list(self.coeffs))

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)) by Horner's scheme."""

        if not self.coeffs:
            return Poly()
        result = Poly.constant(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            result = result * inner + c
        return result

    def divrem(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        dd = divisor.degree
        remainder = list(self.coeffs)
        if self.degree < dd:
            return Poly(), Poly._trusted(remainder)
        quotient = [ZERO] * (self.degree - dd + 1)
        lead_inv = divisor.leading.inverse()
        for k in range(self.degree - dd, -1, -1):
            coef = remainder[k + dd] * lead_inv
            quotient[k] = coef
            if coef.is_zero():
                continue
            for j, dc in enumerate(divisor.coeffs):
                remainder[k + j] = remainder[k + j] - coef * dc
        return Poly._trusted(quotient), Poly._trusted(remainder[:dd])

    def __call__(self, x: QS2Like) -> QS2:
        x = as_qs2(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly._trusted([c * k for k, c in enumerate(self.coeffs) if k > 0])

    def antiderivative(self) -> "Poly":
        """Primitive with zero constant term."""
        return Poly._trusted([ZERO] + [c * Fraction(1, k + 1) for k, c in enumerate(self.coeffs)])

    def reflect(self) -> "Poly":
        """p(-x)."""
        return Poly._trusted([-c if k % 2 else c for k, c in enumerate(self.coeffs)])

    # -- comparison and serialization ------------------------------------

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self == Poly.constant(as_qs2(other))
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_json(self) -> List[Dict[str, str]]:
        return [c.to_dict() for c in self.coeffs]

    @classmethod
    def from_json(cls, payload: Sequence[Dict[str, str]]) -> "Poly":
        return cls(QS2.from_dict(item) for item in payload)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not power:
                terms.append(f"({c})")
            elif c == ONE:
                terms.append(power)
            else:
                terms.append(f"({c})*{power}")
        return " + ".join(terms)


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_sub(p: Poly, q: Poly) -> Poly:
    return p - q


def poly_neg(p: Poly) -> Poly:
    return -p


def poly_scale(p: Poly, factor: QS2Like) -> Poly:
    return p.scale(factor)


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_pow(p: Poly, exponent: int) -> Poly:
    return p ** exponent


def poly_compose(outer: Poly, inner: Poly) -> Poly:
    return outer.compose(inner)


def poly_divrem(p: Poly, d: Poly) -> Tuple[Poly, Poly]:
    return p.divrem(d)


def poly_eval(p: Poly, x: QS2Like) -> QS2:
    return p(x)
