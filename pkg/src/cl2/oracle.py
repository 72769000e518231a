"""Brute-force checks and deterministic samplers.

Nothing here touches the closed forms in :mod:`cl2.transcend`; powers and
exponentials are built from repeated :func:`cl2.multivector.mul` only.

Random draws come from SplitMix64 (Steele, Lea & Flood 2014)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all arithmetic mod 2**64, seeded directly with the caller's integer seed.
A unit float is ``(next() >> 11) * 2**-53``.
"""
from __future__ import annotations

import math

from .classify import EpsilonClass, Sector, classify
from .multivector import (DEFAULT_TOL, ONE, Multivector, Tolerances, i_map,
                          mul, v_map)

_MASK = (1 << 64) - 1

# Box for unconstrained coefficient draws.
COEF_RANGE = 10.0
# Classification margin demanded of samples, in units of tau_class.
MARGIN = 100.0


class SplitMix64:
    """The SplitMix64 generator; state is a single 64-bit word."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def unit(self) -> float:
        """Uniform on [0, 1)."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.unit()

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer on [lo, hi] (modulo bias is negligible here)."""
        return lo + self.next_u64() % (hi - lo + 1)

    def sign(self) -> int:
        return 1 if self.next_u64() >> 63 else -1


def pow_naive(a: Multivector, n: int) -> Multivector:
    """``a**n`` for n >= 0 by square-and-multiply over ``mul``."""
    if n < 0:
        raise ValueError("pow_naive needs n >= 0")
    result = ONE
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def exp_series(a: Multivector, terms: int = 40) -> Multivector:
    """Partial sum of ``a**k / k!`` for k < terms."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    total = ONE
    term = ONE
    for k in range(1, terms):
        term = mul(term, a) / k
        total = total + term
    return total


def residual(a: Multivector, n: int, w: Multivector) -> float:
    return (pow_naive(w, n) - a).norm()


def verify_root(a: Multivector, n: int, w: Multivector, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff ``w**n`` matches ``a`` to ``tau_verify * max(1, |a|)``."""
    try:
        r = residual(a, n, w)
    except (ArithmeticError, ValueError):
        return False
    return r <= tol.tau_verify * max(1.0, a.norm())


# samplers ------------------------------------------------------------------

def _dyadic(rng: SplitMix64, limit: int = 40, denom: int = 16) -> float:
    # small dyadic rationals: squares and products stay exact in binary64
    return rng.randint(-limit, limit) / denom


def _null_vector(rng: SplitMix64) -> Multivector:
    """Nonzero pure imaginary with V = 0 exactly, via a Pythagorean triple."""
    while True:
        p, q = _dyadic(rng, 12, 4), _dyadic(rng, 12, 4)
        if p or q:
            break
    x1, x2, x3 = p * p - q * q, 2 * p * q, (p * p + q * q) * rng.sign()
    if rng.sign() > 0:
        x1, x2 = x2, x1
    return Multivector(0.0, x1, x2, x3)


def _has_margin(a: Multivector, tol: Tolerances, need_i: bool, need_v: bool) -> bool:
    cut = MARGIN * tol.tau_class * a.norm_sq()
    return (not need_i or abs(i_map(a)) > cut) and (not need_v or abs(v_map(a)) > cut)


def sample_in_sector(label: Sector, seed: int, tol: Tolerances = DEFAULT_TOL) -> Multivector:
    """Deterministic element of the requested sector.

    S1, S2, S3 use rejection sampling on ``[-10, 10]**4``.  The null sets are
    built so that the vanishing quadratic form is exactly zero in floating
    point: S4 from the two-squares identity
    ``(pr-qt)^2 + (pt+qr)^2 = (pr+qt)^2 + (pt-qr)^2``, E0 and S5 from
    Pythagorean triples.
    """
    if label is Sector.ZERO:
        raise ValueError("cannot sample the zero sector")
    rng = SplitMix64(seed)
    while True:
        if label is Sector.NULL_IMAGINARY:
            a = _null_vector(rng)
            need_i = need_v = False
        elif label is Sector.S5_ONLY:
            a0 = _dyadic(rng)
            if a0 == 0.0:
                continue
            im = _null_vector(rng) if rng.unit() < 0.9 else Multivector()
            a = im + a0
            need_i, need_v = True, False
        elif label is Sector.S4_ONLY:
            p, q, r, t = (_dyadic(rng, 16, 8) for _ in range(4))
            a0, x3 = p * r - q * t, p * t + q * r
            x1, x2 = p * r + q * t, p * t - q * r
            if rng.sign() < 0:
                a0, x3 = x3, a0
            a = Multivector(a0 * rng.sign(), x1 * rng.sign(), x2 * rng.sign(), x3 * rng.sign())
            need_i, need_v = False, True
        else:
            a = Multivector(*(rng.uniform(-COEF_RANGE, COEF_RANGE) for _ in range(4)))
            need_i = need_v = True
        if classify(a, tol) is label and _has_margin(a, tol, need_i, need_v):
            return a


def sample_epsilon(cls: EpsilonClass, seed: int) -> Multivector:
    """Random member of E1, E-1 or E0 (E0 draws are never 0)."""
    rng = SplitMix64(seed)
    if cls is EpsilonClass.E0:
        return _null_vector(rng)
    x3 = rng.uniform(-3.0, 3.0)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    if cls is EpsilonClass.E1:
        r = math.sqrt(1.0 + x3 * x3)
        return Multivector(0.0, r * math.cos(phi), r * math.sin(phi), x3)
    if cls is EpsilonClass.EMINUS1:
        r = abs(x3)
        return Multivector(0.0, r * math.cos(phi), r * math.sin(phi),
                           rng.sign() * math.sqrt(1.0 + r * r))
    raise ValueError(f"no unit vectors in class {cls}")
