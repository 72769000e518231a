"""Hypothesis checks of the algebraic identities and sector behaviour."""
import math

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cl2 import (ONE, Multivector, NullCone, RootMode, Sector, classify, conj,
                 exp, inverse, nth_roots, pow_int)
from cl2.multivector import i_map, is_invertible, mul, v_map
from cl2.oracle import exp_series, pow_naive, verify_root

coef = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
mvs = st.builds(Multivector, coef, coef, coef, coef)
small = st.floats(min_value=-1.5, max_value=1.5, allow_nan=False, allow_infinity=False)
small_mvs = st.builds(Multivector, small, small, small, small)
imag = st.builds(Multivector, st.just(0.0), coef, coef, coef)


def near(x, y, tol, scale=1.0):
    return abs(x - y) <= tol * max(1.0, scale)


@given(mvs, mvs, mvs)
def test_associative(a, b, c):
    lhs, rhs = mul(mul(a, b), c), mul(a, mul(b, c))
    scale = a.norm() * b.norm() * c.norm()
    assert all(near(x, y, 1e-12, scale) for x, y in zip(lhs, rhs))


@given(mvs, mvs)
def test_conj_reverses_products(a, b):
    lhs, rhs = conj(mul(a, b)), mul(conj(b), conj(a))
    # same terms, different summation order
    assert all(near(x, y, 1e-15, a.norm() * b.norm()) for x, y in zip(lhs, rhs))


@given(mvs, mvs)
def test_i_multiplicative(a, b):
    assert near(i_map(mul(a, b)), i_map(a) * i_map(b), 1e-10, a.norm_sq() * b.norm_sq())


@given(mvs, st.floats(min_value=-100, max_value=100, allow_nan=False))
def test_quadratic_scaling(a, t):
    ta = a * t
    scale = t * t * a.norm_sq()
    assert near(i_map(ta), t * t * i_map(a), 1e-12, scale)
    assert near(v_map(ta), t * t * v_map(a), 1e-12, scale)


@given(mvs)
def test_conj_product_is_central_scalar(a):
    target = Multivector(i_map(a))
    for got in (mul(a, conj(a)), mul(conj(a), a)):
        assert all(near(x, y, 1e-15, a.norm_sq()) for x, y in zip(got, target))


@given(imag)
def test_imaginary_square_is_v(u):
    assert mul(u, u) == Multivector(v_map(u))


@given(mvs, st.sampled_from([-3.0, -0.5, 0.25, 7.0]))
def test_classification_scale_invariant(a, t):
    assume(not a.is_zero())
    scale = a.norm_sq()
    # stay clear of the tolerance boundary so rounding cannot flip a label
    for q in (i_map(a), v_map(a)):
        assume(abs(q) == 0 or abs(abs(q) / scale - 1e-10) > 1e-11)
    assert classify(a * t) is classify(a)


@given(mvs, st.integers(min_value=-4, max_value=8))
def test_de_moivre_matches_repeated_product(a, n):
    if n < 0:
        assume(is_invertible(a))
        ref = pow_naive(inverse(a), -n)
    else:
        ref = pow_naive(a, n)
    got = pow_int(a, n)
    assert (got - ref).norm() <= 1e-9 * max(1.0, ref.norm())


@given(small_mvs)
@settings(max_examples=300)
def test_exp_identities(a):
    e = exp(a)
    assert (e - exp_series(a, 40)).norm() <= 1e-10
    assert (mul(e, exp(-a)) - ONE).norm() <= 1e-10
    assert (conj(e) - exp(conj(a))).norm() <= 1e-12
    assert near(i_map(e), math.exp(2 * a.s), 1e-9, math.exp(2 * a.s))


@given(mvs, st.integers(min_value=2, max_value=6), st.sampled_from(list(RootMode)))
@settings(max_examples=300)
def test_every_returned_root_verifies(a, n, mode):
    roots = nth_roots(a, n, mode)
    assume(not isinstance(roots, NullCone))
    for w in roots.samples():
        assert verify_root(a, n, w)


@given(mvs, st.integers(min_value=2, max_value=6))
def test_sector_closure(a, n):
    sector = classify(a)
    p = pow_naive(a, n)
    target = classify(p)
    # powers push elements toward the null cone geometrically; only judge
    # elements well inside their sector
    scale = a.norm_sq()
    assume(scale > 1e-100)
    assume(min(abs(i_map(a)), abs(v_map(a))) / scale > 0.05)
    if sector is Sector.S1:
        assert target is Sector.S1
    elif sector is Sector.S3:
        # even powers of a pure imaginary S3 element are real, hence S5
        assert target in ((Sector.S1, Sector.S5_ONLY) if n % 2 == 0 else (Sector.S3,))
    elif sector is Sector.S2:
        assert target in (Sector.S2, Sector.S5_ONLY)
