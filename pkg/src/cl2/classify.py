"""Sector classification and polar forms.

Every element falls in exactly one of

* ``S1``: I > 0, V > 0 -> ``sign * N (cosh t + eps sinh t)``, eps in E1
* ``S2``: I > 0, V < 0 -> ``N (cos t + eps sin t)``, eps in E-1
* ``S3``: I < 0        -> ``N (sinh t + eps cosh t)``, eps in E1
* ``S4``: I = 0, V != 0
* ``S5``: V = 0, I != 0
* ``E0``: I = V = 0, nonzero (a pure null vector)
* ``0``

where "= 0" is judged relative to the squared coefficient norm.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

from .errors import ZeroElement
from .multivector import (DEFAULT_TOL, Multivector, Tolerances, i_map,
                          invariants, v_map)

__all__ = [
    "Tolerances", "Sector", "EpsilonClass", "HyperbolicCosh", "Circular",
    "HyperbolicSinh", "Parabolic", "PolarForm", "classify", "epsilon_class",
    "polar", "reconstruct",
]


class Sector(enum.Enum):
    ZERO = "0"
    NULL_IMAGINARY = "E0"
    S4_ONLY = "S4"
    S5_ONLY = "S5"
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"

    def describe(self) -> str:
        if self is Sector.NULL_IMAGINARY:
            return "E0 (null imaginary)"
        if self is Sector.ZERO:
            return "0 (zero)"
        return self.value


class EpsilonClass(enum.Enum):
    E1 = "E1"
    E0 = "E0"
    EMINUS1 = "E-1"
    NONE = "none"


@dataclass(frozen=True)
class HyperbolicCosh:
    """``sign * N * (cosh(theta) + eps * sinh(theta))``, the S1 form."""

    sign: int
    N: float
    theta: float
    eps: Multivector


@dataclass(frozen=True)
class Circular:
    """``N * (cos(theta) + eps * sin(theta))``, the S2 form; theta in (0, pi)."""

    N: float
    theta: float
    eps: Multivector


@dataclass(frozen=True)
class HyperbolicSinh:
    """``N * (sinh(theta) + eps * cosh(theta))``, the S3 form."""

    N: float
    theta: float
    eps: Multivector


@dataclass(frozen=True)
class Parabolic:
    """``a0 + im`` for elements on the null sets; ``kind`` is "S4", "S5" or "E0"."""

    a0: float
    im: Multivector
    kind: str


PolarForm = Union[HyperbolicCosh, Circular, HyperbolicSinh, Parabolic]


def classify(a: Multivector, tol: Tolerances = DEFAULT_TOL) -> Sector:
    if a.is_zero():
        return Sector.ZERO
    i = i_map(a)
    v = v_map(a)
    cutoff = tol.tau_class * a.norm_sq()
    i_null = abs(i) <= cutoff
    v_null = abs(v) <= cutoff
    if i_null and v_null:
        return Sector.NULL_IMAGINARY
    if i_null:
        return Sector.S4_ONLY
    if v_null:
        return Sector.S5_ONLY
    if i < 0:
        return Sector.S3
    return Sector.S1 if v > 0 else Sector.S2


def epsilon_class(v: Multivector, tol: Tolerances = DEFAULT_TOL) -> EpsilonClass:
    """Classify a pure imaginary value by the sign of its Lorentzian square.

    Only the direction matters, so ``3*e1`` is in the same class as ``e1``.
    Returns ``NONE`` for values with a non-negligible scalar part and for 0.
    """
    scale = v.norm_sq()
    if scale == 0.0 or abs(v.s) > math.sqrt(tol.tau_class * scale):
        return EpsilonClass.NONE
    vv = v_map(v)
    if abs(vv) <= tol.tau_class * scale:
        return EpsilonClass.E0
    return EpsilonClass.E1 if vv > 0 else EpsilonClass.EMINUS1


def is_unit_epsilon(eps: Multivector, cls: EpsilonClass, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True when ``eps`` lies in E1 / E-1 itself (not just on its ray)."""
    if epsilon_class(eps, tol) is not cls:
        return False
    target = {EpsilonClass.E1: 1.0, EpsilonClass.EMINUS1: -1.0, EpsilonClass.E0: 0.0}[cls]
    return abs(v_map(eps) - target) <= tol.tau_verify * max(1.0, eps.norm_sq())


def polar(a: Multivector, tol: Tolerances = DEFAULT_TOL) -> PolarForm:
    sector = classify(a, tol)
    if sector is Sector.ZERO:
        raise ZeroElement("the zero element has no polar form")
    a0, im = a.s, a.im
    inv = invariants(a)
    if sector is Sector.S1:
        sign = 1 if a0 > 0 else -1
        root_v = math.sqrt(inv.V)
        return HyperbolicCosh(sign, inv.N, math.asinh(root_v / inv.N), im / (sign * root_v))
    if sector is Sector.S2:
        root_v = math.sqrt(-inv.V)
        return Circular(inv.N, math.atan2(root_v, a0), im / root_v)
    if sector is Sector.S3:
        return HyperbolicSinh(inv.N, math.asinh(a0 / inv.N), im / math.sqrt(inv.V))
    return Parabolic(a0, im, sector.value)


def reconstruct(p: PolarForm) -> Multivector:
    if isinstance(p, HyperbolicCosh):
        c, s = math.cosh(p.theta), math.sinh(p.theta)
        return (p.eps * s + c) * (p.sign * p.N)
    if isinstance(p, Circular):
        return (p.eps * math.sin(p.theta) + math.cos(p.theta)) * p.N
    if isinstance(p, HyperbolicSinh):
        return (p.eps * math.cosh(p.theta) + math.sinh(p.theta)) * p.N
    if isinstance(p, Parabolic):
        return p.im + p.a0
    raise TypeError(f"not a polar form: {p!r}")
