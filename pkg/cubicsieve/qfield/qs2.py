from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Union

from .rational import RatLike, format_rat, parse_rat, rat_sign, to_rat

_ZERO = Fraction(0)


class QS2:
    """Element a + b*sqrt(2) of the quadratic field Q(sqrt 2).

    Both parts are Fractions, so every value is in canonical reduced form.
    Instances are immutable and hashable.
    """

    __slots__ = ("rat_part", "sqrt2_part")

    rat_part: Fraction
    sqrt2_part: Fraction

    def __init__(self, rat_part: RatLike = 0, sqrt2_part: RatLike = 0) -> None:
        object.__setattr__(self, "rat_part", to_rat(rat_part))
        object.__setattr__(self, "sqrt2_part", to_rat(sqrt2_part))

    @classmethod
    def _raw(cls, rat_part: Fraction, sqrt2_part: Fraction) -> "QS2":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rat_part", rat_part)
        object.__setattr__(obj, "sqrt2_part", sqrt2_part)
        return obj

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("QS2 values are immutable")

    def __reduce__(self):
        return (QS2, (self.rat_part, self.sqrt2_part))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.rat_part and not self.sqrt2_part

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not self.sqrt2_part

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(2), decided on integers only."""

        a, b = self.rat_part, self.sqrt2_part
        sa, sb = rat_sign(a), rat_sign(b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # Opposite signs: compare a^2 with 2 b^2 over a common denominator.
        lhs = a.numerator * a.numerator * b.denominator * b.denominator
        rhs = 2 * b.numerator * b.numerator * a.denominator * a.denominator
        return sa if lhs > rhs else sb

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(value: Any) -> "QS2 | None":
        if isinstance(value, QS2):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return QS2._raw(Fraction(value), _ZERO)
        return None

    def __add__(self, other: Any) -> "QS2":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QS2._raw(self.rat_part + rhs.rat_part, self.sqrt2_part + rhs.sqrt2_part)

    __radd__ = __add__

    def __neg__(self) -> "QS2":
        return QS2._raw(-self.rat_part, -self.sqrt2_part)

    def __sub__(self, other: Any) -> "QS2":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QS2._raw(self.rat_part - rhs.rat_part, self.sqrt2_part - rhs.sqrt2_part)

    def __rsub__(self, other: Any) -> "QS2":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> "QS2":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self.rat_part, self.sqrt2_part
        c, d = rhs.rat_part, rhs.sqrt2_part
        # fast paths: pure-rational and pure-sqrt2 operands
        if not b:
            if not d:
                return QS2._raw(a * c, _ZERO)
            return QS2._raw(a * c, a * d)
        if not d:
            return QS2._raw(a * c, b * c)
        if not a and not c:
            return QS2._raw(2 * b * d, _ZERO)
        return QS2._raw(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm a^2 - 2 b^2; zero only for the zero element."""

        return self.rat_part * self.rat_part - 2 * self.sqrt2_part * self.sqrt2_part

    def conjugate(self) -> "QS2":
        return QS2._raw(self.rat_part, -self.sqrt2_part)

    def inverse(self) -> "QS2":
        a, b = self.rat_part, self.sqrt2_part
        if not a and not b:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        if not b:
            return QS2._raw(1 / a, _ZERO)
        if not a:
            return QS2._raw(_ZERO, 1 / (2 * b))
        n = self.norm()
        return QS2._raw(a / n, -b / n)

    def __truediv__(self, other: Any) -> "QS2":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not rhs.sqrt2_part:
            if not rhs.rat_part:
                raise ZeroDivisionError("division by zero in Q(sqrt 2)")
            return QS2._raw(self.rat_part / rhs.rat_part, self.sqrt2_part / rhs.rat_part)
        return self * rhs.inverse()

    def __rtruediv__(self, other: Any) -> "QS2":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent: int) -> "QS2":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.rat_part == rhs.rat_part and self.sqrt2_part == rhs.sqrt2_part

    def __hash__(self) -> int:
        if not self.sqrt2_part:
            return hash(self.rat_part)
        return hash((self.rat_part, self.sqrt2_part))

    def __lt__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() < 0

    def __gt__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() > 0

    # -- conversion -------------------------------------------------------

    def as_rational(self) -> Fraction:
        if self.sqrt2_part:
            raise ValueError(f"{self} is not rational")
        return self.rat_part

    def to_mpf(self):
        """Value at the current mpmath working precision."""

        from mpmath import mp, mpf

        a, b = self.rat_part, self.sqrt2_part
        value = mpf(a.numerator) / a.denominator
        if b:
            value += mpf(b.numerator) / b.denominator * mp.sqrt(2)
        return value

    def to_dict(self) -> Dict[str, str]:
        return {"rat": format_rat(self.rat_part), "sqrt2": format_rat(self.sqrt2_part)}

    @classmethod
    def from_dict(cls, payload: Dict[str, str]) -> "QS2":
        try:
            return cls(parse_rat(payload["rat"]), parse_rat(payload["sqrt2"]))
        except KeyError as exc:
            raise ValueError(f"QS2 payload missing key {exc}") from exc

    def __repr__(self) -> str:
        return f"QS2({format_rat(self.rat_part)!r}, {format_rat(self.sqrt2_part)!r})"

    def __str__(self) -> str:
        a, b = self.rat_part, self.sqrt2_part
        if not b:
            return format_rat(a)
        root = "sqrt2" if b == 1 else ("-sqrt2" if b == -1 else f"{format_rat(b)}*sqrt2")
        if not a:
            return root
        if b < 0:
            return f"{format_rat(a)} - {root.lstrip('-')}"
        return f"{format_rat(a)} + {root}"


QS2Like = Union[QS2, int, Fraction]

ZERO = QS2._raw(_ZERO, _ZERO)
ONE = QS2._raw(Fraction(1), _ZERO)
SQRT2 = QS2._raw(_ZERO, Fraction(1))


def as_qs2(value: QS2Like) -> QS2:
    coerced = QS2._coerce(value)
    if coerced is None:
        raise TypeError(f"Cannot interpret {type(value).__name__} as an element of Q(sqrt 2)")
    return coerced


def qs2_add(x: QS2, y: QS2) -> QS2:
    return x + y


def qs2_mul(x: QS2, y: QS2) -> QS2:
    return x * y


def qs2_inv(x: QS2) -> QS2:
    """Inverse (a - b*sqrt2)/(a^2 - 2b^2); ZeroDivisionError for x = 0."""
    return x.inverse()


def qs2_sign(x: QS2) -> int:
    return x.sign()


def qs2_is_rational(x: QS2) -> bool:
    return x.is_rational()
