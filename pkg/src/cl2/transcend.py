"""Exponential, integer powers and nth roots in closed form.

Powers use the sector polar forms (De Moivre).  Roots come in two flavours:

``RootMode.PAPER``
    exactly the root families obtained by inverting the polar forms;
``RootMode.COMPLETE``
    additionally the sign partners ``-w`` of even-order roots and, for even
    roots of a positive scalar, the family ``scale * eps`` with eps in E1.
    This is the full solution set of ``w**n = a``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .classify import (Circular, EpsilonClass, HyperbolicCosh, HyperbolicSinh,
                       Sector, classify, epsilon_class, polar)
from .errors import BadExponent, NonInvertible, Overflow
from .multivector import (DEFAULT_TOL, ONE, ZERO, Multivector, Tolerances,
                          is_invertible, v_map)


class RootMode(enum.Enum):
    PAPER = "paper"
    COMPLETE = "complete"


# root sets -----------------------------------------------------------------

def _close(w: Multivector, ref: Multivector, tol: float) -> bool:
    return (w - ref).norm() <= tol * max(1.0, ref.norm())


@dataclass(frozen=True)
class Empty:
    note: str = ""

    def contains(self, w: Multivector, tol: Tolerances = DEFAULT_TOL) -> bool:
        return False

    def samples(self, eps: Optional[Multivector] = None) -> list[Multivector]:
        return []


@dataclass(frozen=True)
class Finite:
    roots: tuple[Multivector, ...]

    def contains(self, w: Multivector, tol: Tolerances = DEFAULT_TOL) -> bool:
        return any(_close(w, r, tol.tau_verify) for r in self.roots)

    def samples(self, eps: Optional[Multivector] = None) -> list[Multivector]:
        return list(self.roots)


@dataclass(frozen=True)
class CircularFamily:
    """``scale * (cos(phi) + eps * sin(phi))`` for phi in ``angles``, any eps in E-1."""

    scale: float
    angles: tuple[float, ...]

    def member(self, angle: float, eps: Multivector) -> Multivector:
        return (eps * math.sin(angle) + math.cos(angle)) * self.scale

    def contains(self, w: Multivector, tol: Tolerances = DEFAULT_TOL) -> bool:
        im = w.im
        v = v_map(im)
        if v < 0:
            eps = im / math.sqrt(-v)
        elif im.norm() <= tol.tau_verify * max(1.0, self.scale):
            eps = Multivector(0.0, 0.0, 0.0, 1.0)
        else:
            return False
        return any(_close(w, self.member(phi, eps), tol.tau_verify) for phi in self.angles)

    def samples(self, eps: Optional[Multivector] = None) -> list[Multivector]:
        eps = Multivector(0.0, 0.0, 0.0, 1.0) if eps is None else eps
        return [self.member(phi, eps) for phi in self.angles]


@dataclass(frozen=True)
class HyperbolicUnitFamily:
    """``scale * eps`` for any eps in E1."""

    scale: float

    def contains(self, w: Multivector, tol: Tolerances = DEFAULT_TOL) -> bool:
        v = v_map(w)
        if v <= 0:
            return False
        return _close(w, w.im * (self.scale / math.sqrt(v)), tol.tau_verify)

    def samples(self, eps: Optional[Multivector] = None) -> list[Multivector]:
        eps = Multivector(0.0, 1.0, 0.0, 0.0) if eps is None else eps
        return [eps * self.scale]


@dataclass(frozen=True)
class NullCone:
    """Every pure imaginary w with V_w = 0, zero included."""

    def contains(self, w: Multivector, tol: Tolerances = DEFAULT_TOL) -> bool:
        scale = tol.tau_verify * max(1.0, w.norm_sq())
        return abs(w.s) <= tol.tau_verify * max(1.0, w.norm()) and abs(v_map(w)) <= scale

    def samples(self, eps: Optional[Multivector] = None) -> list[Multivector]:
        return [ZERO if eps is None else eps]


@dataclass(frozen=True)
class RootUnion:
    """Disjoint union of several of the other variants."""

    parts: tuple = field(default_factory=tuple)

    def contains(self, w: Multivector, tol: Tolerances = DEFAULT_TOL) -> bool:
        return any(p.contains(w, tol) for p in self.parts)

    def samples(self, eps: Optional[Multivector] = None) -> list[Multivector]:
        return [w for p in self.parts for w in p.samples(eps)]


RootSet = Union[Empty, Finite, CircularFamily, HyperbolicUnitFamily, NullCone, RootUnion]


def _finite(roots: Iterable[Multivector], tol: Tolerances) -> Finite:
    unique: list[Multivector] = []
    for w in roots:
        if not any(_close(w, u, tol.tau_verify) for u in unique):
            unique.append(w)
    return Finite(tuple(unique))


# helpers -------------------------------------------------------------------

def _checked(s, x1, x2, x3) -> Multivector:
    if not all(math.isfinite(c) for c in (s, x1, x2, x3)):
        raise Overflow("result coefficient exceeds the double range")
    return Multivector(s, x1, x2, x3)


def _combine(scalar: float, vec_coef: float, vec: Multivector) -> Multivector:
    return _checked(scalar, vec_coef * vec.x1, vec_coef * vec.x2, vec_coef * vec.x3)


def real_root(x: float, n: int) -> float:
    """Real nth root; negative radicands only for odd n (``-|x|**(1/n)``)."""
    if x < 0:
        if n % 2 == 0:
            raise ValueError("even root of a negative number")
        return -((-x) ** (1.0 / n))
    return x ** (1.0 / n)


def _hyp_pair(log_scale: float, x: float) -> tuple[float, float]:
    """``(e**L cosh x, e**L sinh x)`` without premature overflow."""
    try:
        m = math.exp(log_scale)
        return m * math.cosh(x), m * math.sinh(x)
    except OverflowError:
        pass
    try:
        hi = math.exp(log_scale + abs(x)) / 2.0
        lo = math.exp(log_scale - abs(x)) / 2.0
    except OverflowError:
        raise Overflow("result coefficient exceeds the double range") from None
    return hi + lo, math.copysign(hi - lo, x)


# exponential ---------------------------------------------------------------

def exp(a: Multivector, tol: Tolerances = DEFAULT_TOL) -> Multivector:
    """Closed-form ``e**a = e**a0 * e**Im(a)``.

    The branch follows the sign of ``V = V_{Im(a)}``: cosh/sinh for V > 0,
    cos/sin for V < 0.  When ``|V| <= tau_class * |Im(a)|**2`` the value is
    ``e**a0 * (1 + Im(a))`` plus the V and V**2 Taylor corrections, which
    vanish on the null cone and keep the branches continuous.
    """
    a0, im = a.s, a.im
    v = v_map(im)
    if abs(v) <= tol.tau_class * im.norm_sq():
        even = 1.0 + v / 2.0 + v * v / 24.0
        odd = 1.0 + v / 6.0 + v * v / 120.0
        try:
            m = math.exp(a0)
        except OverflowError:
            raise Overflow("exp overflow") from None
        return _combine(m * even, m * odd, im)
    if v > 0:
        r = math.sqrt(v)
        c, s = _hyp_pair(a0, r)
        return _combine(c, s / r, im)
    r = math.sqrt(-v)
    try:
        m = math.exp(a0)
    except OverflowError:
        raise Overflow("exp overflow") from None
    return _combine(m * math.cos(r), m * math.sin(r) / r, im)


# integer powers ------------------------------------------------------------

def pow_int(a: Multivector, n: int, tol: Tolerances = DEFAULT_TOL) -> Multivector:
    """``a**n`` for any integer n via the sector's De Moivre formula.

    ``a**0`` is 1 for every a, including non-invertible ones.  Negative n
    needs ``a`` invertible and raises NonInvertible otherwise.
    """
    n = int(n)
    if n == 0:
        return ONE
    if n == 1:
        return a
    sector = classify(a, tol)
    if n < 0 and not is_invertible(a, tol):
        raise NonInvertible(f"negative power of non-invertible {a!r}")
    if sector is Sector.ZERO:
        return ZERO
    if sector in (Sector.S4_ONLY, Sector.NULL_IMAGINARY):
        # a**2 = 2 a0 a on I = 0, hence a**n = (2 a0)**(n-1) a
        try:
            f = (2.0 * a.s) ** (n - 1)
        except OverflowError:
            raise Overflow("power overflow") from None
        return _checked(f * a.s, f * a.x1, f * a.x2, f * a.x3)
    if sector is Sector.S5_ONLY:
        # Im(a)**2 = 0, so the binomial expansion stops after two terms
        try:
            lead = a.s ** n
            f = n * a.s ** (n - 1)
        except OverflowError:
            raise Overflow("power overflow") from None
        return _combine(lead, f, a.im)
    p = polar(a, tol)
    log_n = n * math.log(p.N)
    if isinstance(p, HyperbolicCosh):
        c, s = _hyp_pair(log_n, n * p.theta)
        sign = p.sign ** (n % 2)
        return _combine(sign * c, sign * s, p.eps)
    if isinstance(p, Circular):
        try:
            m = math.exp(log_n)
        except OverflowError:
            raise Overflow("power overflow") from None
        return _combine(m * math.cos(n * p.theta), m * math.sin(n * p.theta), p.eps)
    assert isinstance(p, HyperbolicSinh)
    c, s = _hyp_pair(log_n, n * p.theta)
    if n % 2:
        return _combine(s, c, p.eps)
    return _combine(c, s, p.eps)


# roots ---------------------------------------------------------------------

def _root_cosh(r: float, t: float, eps: Multivector) -> Multivector:
    return _combine(r * math.cosh(t), r * math.sinh(t), eps)


def _root_sinh(r: float, t: float, eps: Multivector) -> Multivector:
    return _combine(r * math.sinh(t), r * math.cosh(t), eps)


def _s1_principal(a: Multivector, n: int, tol: Tolerances) -> list[Multivector]:
    p = polar(a, tol)
    r = p.N ** (1.0 / n)
    t = p.theta / n
    roots = [_root_cosh(r, t, p.eps)]
    if n % 2 == 0:
        roots.append(_root_sinh(r, t, p.eps))
    return roots


def _with_negatives(roots: list[Multivector]) -> list[Multivector]:
    return roots + [-w for w in roots]


def nth_roots(a: Multivector, n: int, mode: RootMode = RootMode.PAPER,
              tol: Tolerances = DEFAULT_TOL) -> RootSet:
    """All solutions of ``w**n = a`` (n >= 2) as a :data:`RootSet`."""
    if int(n) != n or n < 2:
        raise BadExponent(f"root order must be an integer >= 2, got {n!r}")
    n = int(n)
    mode = RootMode(mode)
    complete = mode is RootMode.COMPLETE
    even = n % 2 == 0
    sector = classify(a, tol)

    if sector is Sector.ZERO:
        return NullCone()
    if sector is Sector.NULL_IMAGINARY:
        return Empty("powers of order >= 2 never land on a nonzero null vector")

    if sector is Sector.S1:
        if a.s > 0:
            roots = _s1_principal(a, n, tol)
            return _finite(_with_negatives(roots) if complete and even else roots, tol)
        if not complete:
            return Empty("S1 element with negative scalar part: no polar root form")
        if even:
            return Empty("even powers in S1 and S3 have positive scalar part")
        return _finite([-w for w in _s1_principal(-a, n, tol)], tol)

    if sector is Sector.S2:
        p = polar(a, tol)
        r = p.N ** (1.0 / n)
        roots = []
        for m in range(n):
            phi = (p.theta + 2.0 * m * math.pi) / n
            roots.append(_combine(r * math.cos(phi), r * math.sin(phi), p.eps))
        return _finite(roots, tol)

    if sector is Sector.S3:
        if even:
            return Empty("even powers never land in S3")
        p = polar(a, tol)
        return _finite([_root_sinh(p.N ** (1.0 / n), p.theta / n, p.eps)], tol)

    if sector is Sector.S4_ONLY:
        # (2 w0)**(n-1) w = a  =>  2**(n-1) w0**n = a0, (2 w0)**(n-1) Im(w) = Im(a)
        if even and a.s < 0:
            return Empty("even root of an I = 0 element with negative scalar part")
        w0 = real_root(a.s / 2.0 ** (n - 1), n)
        w = _combine(w0, 1.0 / (2.0 * w0) ** (n - 1), a.im)
        return _finite(_with_negatives([w]) if complete and even else [w], tol)

    # S5: V = 0, a0 != 0
    a0, im = a.s, a.im
    if im.norm() > tol.tau_class * a.norm():
        # w0**n = a0, n w0**(n-1) Im(w) = Im(a)
        if even and a0 < 0:
            return Empty("even root of a V = 0 element with negative scalar part")
        w0 = real_root(a0, n)
        w = _combine(w0, 1.0 / (n * w0 ** (n - 1)), im)
        return _finite(_with_negatives([w]) if complete and even else [w], tol)
    if a0 > 0:
        scale = a0 ** (1.0 / n)
        family = CircularFamily(scale, tuple(2.0 * m * math.pi / n for m in range(n)))
        if complete and even:
            return RootUnion((family, HyperbolicUnitFamily(scale)))
        return family
    return CircularFamily((-a0) ** (1.0 / n),
                          tuple((math.pi + 2.0 * m * math.pi) / n for m in range(n)))


def family_members(roots: RootSet, eps: Multivector, tol: Tolerances = DEFAULT_TOL) -> list[Multivector]:
    """Concrete roots obtained by fixing the free unit vector of each family.

    ``eps`` is checked with :func:`epsilon_class`; families whose class does
    not match are skipped, finite parts are returned unchanged.
    """
    cls = epsilon_class(eps, tol)
    out: list[Multivector] = []
    parts = roots.parts if isinstance(roots, RootUnion) else (roots,)
    for part in parts:
        if isinstance(part, CircularFamily) and cls is EpsilonClass.EMINUS1:
            out.extend(part.samples(eps / math.sqrt(-v_map(eps))))
        elif isinstance(part, HyperbolicUnitFamily) and cls is EpsilonClass.E1:
            out.extend(part.samples(eps / math.sqrt(v_map(eps))))
        elif isinstance(part, NullCone) and cls is EpsilonClass.E0:
            out.append(eps)
        elif isinstance(part, Finite):
            out.extend(part.roots)
    return out
