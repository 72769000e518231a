import math

import pytest

from cl2 import Multivector


def close(a: Multivector, b: Multivector, tol: float = 1e-12) -> bool:
    """Coefficient-wise comparison, relative to max(1, |b_i|)."""
    return all(abs(x - y) <= tol * max(1.0, abs(y)) for x, y in zip(a, b))


def assert_close(a, b, tol=1e-12):
    assert close(a, b, tol), f"{a!r} != {b!r} (tol {tol})"


SQRT2 = math.sqrt(2.0)
S1_EXAMPLE = Multivector(SQRT2, 7, 4, 8)
S2_EXAMPLE = Multivector(1, 0, 0, -1)
S3_EXAMPLE = Multivector(1, 1, -1, 0)
S4_EXAMPLE = Multivector(2, 5, 10, 11)
S5_EXAMPLE = Multivector(8, 3, -4, 5)


@pytest.fixture
def tol():
    from cl2 import Tolerances
    return Tolerances()
