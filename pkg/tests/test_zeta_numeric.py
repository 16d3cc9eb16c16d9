import math

import mpmath
import pytest

from floorzeta.errors import DomainError, InvalidArgument
from floorzeta.zeta_numeric import cpow_neg, hurwitz_zeta, riemann_zeta

# mpmath itself loses digits for large s and t at 50 digits
mpmath.mp.dps = 120


def ref(s, t):
    return complex(mpmath.zeta(mpmath.mpc(s), mpmath.mpc(t)))


def test_known_constants():
    assert abs(riemann_zeta(2).value - math.pi ** 2 / 6) <= 1e-12
    assert abs(riemann_zeta(4).value - math.pi ** 4 / 90) <= 1e-12
    assert abs(riemann_zeta(3).value - 1.2020569031595942) <= 1e-12
    assert abs(hurwitz_zeta(2, 2).value - (math.pi ** 2 / 6 - 1)) <= 1e-12
    assert riemann_zeta(5.5).value == hurwitz_zeta(5.5, 1).value


@pytest.mark.parametrize("sr", [1.5, 2, 3, 5, 8])
@pytest.mark.parametrize("si", [0, 1, 10])
@pytest.mark.parametrize("t", [0.5, 1, 2.5])
def test_shift_identity(sr, si, t):
    s = complex(sr, si)
    z = hurwitz_zeta(s, t).value
    z1 = hurwitz_zeta(s, t + 1).value
    assert abs(z1 - (z - cpow_neg(complex(t), s))) <= 1e-11 * (1 + abs(z))


@pytest.mark.parametrize("s", [1.1, 1.5, 2, 3.7, 12, 30, complex(2, 5), complex(3, -20), complex(1.5, 40)])
@pytest.mark.parametrize("t", [0.25, 1, 3.5, 100.5, complex(1, 2)])
def test_against_mpmath(s, t):
    got = hurwitz_zeta(s, t)
    want = ref(s, t)
    err = abs(got.value - want)
    assert err <= got.est_error
    if abs(complex(t).imag) == 0:
        assert err <= 1e-12 * abs(want) + 1e-300


def test_estimate_contract_on_real_grid():
    for s in (1.5, 2, 3, 5, 8):
        for t in (0.5, 1, 2.5):
            z = hurwitz_zeta(s, t)
            assert z.est_error <= 1e-12 * abs(z.value)


def test_direct_summation_bracket():
    # partial sum plus integral tail brackets the value for Re(s) >= 3
    s, N = 3.0, 10 ** 6
    head = math.fsum((n + 1.0) ** -s for n in range(N))
    lo = head + (N + 1.0) ** (1 - s) / (s - 1)
    hi = head + (N + 0.0) ** (1 - s) / (s - 1)
    v = riemann_zeta(s).value.real
    assert lo - 1e-15 <= v <= hi + 1e-15


def test_domain_errors():
    with pytest.raises(DomainError):
        riemann_zeta(1)
    with pytest.raises(DomainError):
        hurwitz_zeta(complex(0.5, 3), 1)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, 0)
    with pytest.raises(InvalidArgument):
        hurwitz_zeta(float("nan"), 1)


def test_deterministic():
    a = hurwitz_zeta(complex(2.5, 3), 0.75)
    b = hurwitz_zeta(complex(2.5, 3), 0.75)
    assert a == b
