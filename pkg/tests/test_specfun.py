import math
import numpy as np
import pytest
from scipy import special
from pyhill.specfun import *

# points of the series regime and of the Stirling regime
small_points = [0.1, 0.5, 1.0, 2.5, 3.99]
large_points = [4.01, 10.0, 20.0, 50.0, 1e3]

def test_psi_half():
    assert psi_half() == pytest.approx(special.digamma(0.5), abs=1e-15), 'wrong psi(1/2)'
    assert psi_half() == pytest.approx(-1.9635100260214235, abs=1e-15), 'wrong psi(1/2)'

    # derivative of the real log-gamma
    step = 1e-5
    fd = (special.gammaln(0.5 + step) - special.gammaln(0.5 - step)) / (2 * step)
    assert abs(fd - psi_half()) <= 1e-6, 'inconsistent with log-gamma'

def test_arg_gamma_values():
    assert arg_gamma(0.0) == 0.0, 'arg Gamma(1/2) must vanish'
    assert arg_gamma(1.0) == pytest.approx(-0.95499, abs=5e-6), 'wrong arg Gamma(1/2 + i)'

    for x in small_points + large_points:
        exact = special.loggamma(0.5 + 1j * x).imag
        assert abs(arg_gamma(x) - exact) <= 1e-10, 'arg Gamma mismatch at {0}'.format(x)

def test_arg_gamma_mpmath():
    pytest.importorskip('mpmath')

    for x in [0.1, 0.5, 1.0, 4.0, 10.0, 123.4]:
        assert abs(arg_gamma(x) - arg_gamma_reference(x)) <= 1e-10, 'mpmath mismatch at {0}'.format(x)

def test_arg_gamma_far():
    pytest.importorskip('mpmath')

    for x in [1e4, 1e5, 1e6]:
        exact = arg_gamma_reference(x)
        assert abs(arg_gamma(x) - exact) <= 1e-14 * abs(exact), 'relative mismatch at {0}'.format(x)
        assert arg_gamma(-x) == -arg_gamma(x), 'arg Gamma must be odd at {0}'.format(x)

def test_arg_gamma_stirling():
    for x in [10.0, 20.0, 50.0]:
        leading = x * math.log(x) - x + 1 / (24 * x) + 7 / (2880 * x ** 3)
        assert abs(arg_gamma(x) - leading) <= 1e-8, 'Stirling mismatch at {0}'.format(x)

def test_arg_gamma_crossover():
    xs = np.linspace(3.5, 6.0, 11)
    diff = np.abs(arg_gamma_series(xs) - arg_gamma_stirling(xs))

    assert np.max(diff) <= 1e-10, 'series and Stirling forms must overlap'

def test_arg_gamma_odd():
    xs = np.random.RandomState(7).uniform(-30.0, 30.0, 1000)

    assert np.max(np.abs(arg_gamma(-xs) + arg_gamma(xs))) <= 1e-14, 'arg Gamma must be odd'

def test_h_identities():
    xs = np.random.RandomState(11).uniform(-20.0, 20.0, 1000)
    hp, hm = h_branch(xs, +1), h_branch(xs, -1)

    assert np.max(np.abs(hp - hm - 2 * arctan_exp(xs))) <= 1e-12, 'difference identity violated'
    assert np.max(np.abs(h_branch(-xs, +1) - (0.5 * math.pi - hp))) <= 1e-12, 'reflection of H+ violated'
    assert np.max(np.abs(h_branch(-xs, -1) - (-0.5 * math.pi - hm))) <= 1e-12, 'reflection of H- violated'

def test_h_values():
    ev = h_pm(0.0)
    assert ev.h_plus == pytest.approx(0.25 * math.pi, abs=1e-15), 'H+(0) must be pi/4'
    assert ev.h_minus == pytest.approx(-0.25 * math.pi, abs=1e-15), 'H-(0) must be -pi/4'
    assert ev.method == 'direct'

    assert abs(h_pm(5.0).h_plus - (0.5 * math.pi - 1 / 120 - 7 / (2880 * 125))) <= 1e-6, 'wrong H+(5)'
    assert abs(h_pm(-5.0).h_plus - (1 / 120 + 7 / (2880 * 125))) <= 1e-6, 'wrong H+(-5)'

    xs = np.linspace(-40.0, 40.0, 2001)
    for sign in (1, -1):
        assert np.max(np.abs(h_branch(xs, sign))) <= 0.5 * math.pi + 0.05, 'H must stay bounded'

def test_large_expansion():
    assert h_expansion(3.0, 'large', +1) == pytest.approx(0.5 * math.pi - 1 / 72 - 7 / (2880 * 27), abs=1e-12)

    for x in np.concatenate([np.linspace(3.0, 30.0, 28), -np.linspace(3.0, 30.0, 28)]):
        for sign in (1, -1):
            err = abs(h_branch(x, sign) - h_expansion(x, 'large', sign))
            assert err <= 8 * abs(x) ** -5 * 7 / 2880, 'large-x expansion off at {0}'.format(x)

def test_small_expansion():
    assert h_expansion(0.0, 'small', -1) == pytest.approx(-0.25 * math.pi, abs=1e-15)

    for x in np.linspace(-0.2, 0.2, 41):
        for sign in (1, -1):
            err = abs(h_branch(x, sign) - h_expansion(x, 'small', sign))
            assert err <= SMALL_X_REMAINDER * abs(x) ** 5 + 1e-13, 'small-x expansion off at {0}'.format(x)

    ev = h_pm(0.05, method='small')
    assert ev.method == 'small_x_series'

def test_expansion_domains():
    with pytest.raises(DomainError):
        h_expansion(0.5, 'small', +1)

    with pytest.raises(DomainError):
        h_expansion(1.0, 'large', -1)

def test_h_minimum():
    x_plus, h_plus = h_minimum(+1)
    assert abs(x_plus - 0.0293) <= 2e-3, 'wrong location of the H+ minimum'
    assert abs(h_plus - (0.25 * math.pi - 0.0293)) <= 2e-3, 'wrong H+ minimum'
    assert abs(h_derivative(x_plus, +1)) <= 1e-10, 'H+\' must vanish at the minimum'

    x_minus, h_minus = h_minimum(-1)
    assert abs(x_minus - 1.683) <= 2e-3, 'wrong location of the H- minimum'
    assert abs(h_minus - (-0.5 * math.pi - 0.02)) <= 2e-3, 'wrong H- minimum'
    assert abs(h_derivative(x_minus, -1)) <= 1e-10, 'H-\' must vanish at the minimum'

def test_h_derivative():
    step = 1e-6

    for x in [-3.0, -0.4, 0.3, 1.0, 6.0]:
        for sign in (1, -1):
            fd = (h_branch(x + step, sign) - h_branch(x - step, sign)) / (2 * step)
            assert abs(fd - h_derivative(x, sign)) <= 1e-6, 'analytic derivative off at {0}'.format(x)

def test_bias_breaks_reflection():
    xs = np.linspace(-5.0, 5.0, 101)

    try:
        set_arg_gamma_bias(1e-3)
        skew = np.abs(h_branch(-xs, +1) - (0.5 * math.pi - h_branch(xs, +1)))
        assert np.max(skew) > 1e-12, 'bias must be detectable'
    finally:
        set_arg_gamma_bias(0.0)

    assert arg_gamma_bias() == 0.0, 'bias must be cleared'
