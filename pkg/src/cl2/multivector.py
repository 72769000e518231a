"""Elements of the Clifford algebra Cl2 and their exact-formula arithmetic.

A multivector is ``s + x1*e1 + x2*e2 + x3*e3`` with ``e1**2 = e2**2 = 1``,
``e3 = e1*e2`` and ``e3**2 = -1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import InvalidValue, NonInvertible

Scalar = Union[int, float]


@dataclass(frozen=True)
class Tolerances:
    """Relative thresholds.

    ``tau_class`` decides whether I or V count as zero (relative to the
    squared coefficient norm); ``tau_verify`` bounds the residual of a
    re-powered root.
    """

    tau_class: float = 1e-10
    tau_verify: float = 1e-8

    def __post_init__(self):
        for name in ("tau_class", "tau_verify"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidValue(f"{name} must be positive and finite, got {value!r}")


DEFAULT_TOL = Tolerances()


def _coef(value) -> float:
    x = float(value)
    if not math.isfinite(x):
        raise InvalidValue(f"non-finite coefficient {value!r}")
    # fold -0.0 into 0.0 so that equal values have identical bits
    return x + 0.0


@dataclass(frozen=True)
class Multivector:
    """Immutable Cl2 value with coefficients on (1, e1, e2, e3)."""

    s: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    def __post_init__(self):
        for name in ("s", "x1", "x2", "x3"):
            object.__setattr__(self, name, _coef(getattr(self, name)))

    @classmethod
    def scalar(cls, value: Scalar) -> Multivector:
        return cls(value, 0.0, 0.0, 0.0)

    @classmethod
    def coerce(cls, value) -> Multivector:
        if isinstance(value, Multivector):
            return value
        if isinstance(value, (int, float)):
            return cls.scalar(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Multivector")

    def coefficients(self) -> tuple[float, float, float, float]:
        return (self.s, self.x1, self.x2, self.x3)

    def __iter__(self):
        return iter(self.coefficients())

    def norm_sq(self) -> float:
        """Euclidean squared norm of the coefficient vector (not I_a)."""
        return self.s * self.s + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def norm(self) -> float:
        return math.sqrt(self.norm_sq())

    def is_zero(self) -> bool:
        return self.s == 0.0 and self.x1 == 0.0 and self.x2 == 0.0 and self.x3 == 0.0

    @property
    def re(self) -> float:
        return self.s

    @property
    def im(self) -> Multivector:
        return Multivector(0.0, self.x1, self.x2, self.x3)

    def conj(self) -> Multivector:
        return conj(self)

    # arithmetic -----------------------------------------------------------

    def __neg__(self):
        return Multivector(-self.s, -self.x1, -self.x2, -self.x3)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, (int, float)):
            return Multivector(self.s + other, self.x1, self.x2, self.x3)
        if not isinstance(other, Multivector):
            return NotImplemented
        return Multivector(self.s + other.s, self.x1 + other.x1,
                           self.x2 + other.x2, self.x3 + other.x3)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            return Multivector(self.s - other, self.x1, self.x2, self.x3)
        if not isinstance(other, Multivector):
            return NotImplemented
        return Multivector(self.s - other.s, self.x1 - other.x1,
                           self.x2 - other.x2, self.x3 - other.x3)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, t: Scalar) -> Multivector:
        return Multivector(t * self.s, t * self.x1, t * self.x2, t * self.x3)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            if other == 0:
                raise ZeroDivisionError("division of a multivector by zero")
            return Multivector(self.s / other, self.x1 / other, self.x2 / other, self.x3 / other)
        return NotImplemented

    def __repr__(self):
        return f"Multivector({self.s!r}, {self.x1!r}, {self.x2!r}, {self.x3!r})"


ZERO = Multivector()
ONE = Multivector(1.0)
E1 = Multivector(0.0, 1.0, 0.0, 0.0)
E2 = Multivector(0.0, 0.0, 1.0, 0.0)
E3 = Multivector(0.0, 0.0, 0.0, 1.0)


class QuadraticInvariants(NamedTuple):
    I: float
    N: float
    V: float


def mul(a: Multivector, b: Multivector) -> Multivector:
    """Cl2 product, written out component by component."""
    a0, a1, a2, a3 = a.s, a.x1, a.x2, a.x3
    b0, b1, b2, b3 = b.s, b.x1, b.x2, b.x3
    return Multivector(
        a0 * b0 + a1 * b1 + a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
        a0 * b2 + a1 * b3 + a2 * b0 - a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def conj(a: Multivector) -> Multivector:
    return Multivector(a.s, -a.x1, -a.x2, -a.x3)


def parts(a: Multivector) -> tuple[float, Multivector]:
    """Split ``a`` into its real part and its imaginary (vector+bivector) part."""
    return a.s, a.im


def v_map(a: Multivector) -> float:
    """V_a = x1^2 + x2^2 - x3^2; the Lorentzian square of Im(a)."""
    return a.x1 * a.x1 + a.x2 * a.x2 - a.x3 * a.x3


def i_map(a: Multivector) -> float:
    """I_a = conj(a) a = s^2 - x1^2 - x2^2 + x3^2."""
    return a.s * a.s - a.x1 * a.x1 - a.x2 * a.x2 + a.x3 * a.x3


def invariants(a: Multivector) -> QuadraticInvariants:
    i = i_map(a)
    return QuadraticInvariants(i, math.sqrt(abs(i)), v_map(a))


def is_invertible(a: Multivector, tol: Tolerances = DEFAULT_TOL) -> bool:
    return abs(i_map(a)) > tol.tau_class * a.norm_sq()


def inverse(a: Multivector, tol: Tolerances = DEFAULT_TOL) -> Multivector:
    """Return ``conj(a) / I_a``.

    Raises NonInvertible when ``|I_a| <= tau_class * |a|^2``, which covers
    the zero element and the whole null set I_a = 0.
    """
    i = i_map(a)
    if not abs(i) > tol.tau_class * a.norm_sq():
        raise NonInvertible(f"I_a = {i!r} is zero within tolerance; {a!r} has no inverse")
    return conj(a) / i


def lorentz_inner(u: Multivector, v: Multivector) -> float:
    """Signature (+, +, -) inner product of the imaginary parts.

    Scalar parts are ignored, so for pure imaginary arguments this equals
    the real part of ``u * v``.
    """
    return u.x1 * v.x1 + u.x2 * v.x2 - u.x3 * v.x3
