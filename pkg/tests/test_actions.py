import math
import numpy as np
import pytest
from scipy import integrate
from pyhill.actions import *
from pyhill.potential import PotentialSpec, canonical, continuation_root

spec = canonical()

# (a, turning point) for g(x) = 2 - cos x and h(x) = 2 - cosh x
turning_points = [(1.5, math.pi / 3), (2.0, 0.5 * math.pi), (2.5, 2 * math.pi / 3), (0.5, math.acosh(1.5)),
        (1.0, 0.0)]

def test_turning_point():
    for a, x2 in turning_points:
        assert abs(turning_point(spec, a) - x2) <= 1e-12, 'wrong turning point at a={0}'.format(a)

    for a in (3.0, 3.5, -0.1):
        with pytest.raises(NoRoot):
            turning_point(spec, a)

# potentials whose continuation root leaves h(x0) a few ulps away from 0
bottom_specs = [canonical(), PotentialSpec([1.2, -1.0]), PotentialSpec([2.5, -1.2, -0.1])]

def test_turning_point_bottom():
    for pot in bottom_specs:
        x0 = continuation_root(pot)
        assert abs(turning_point(pot, 0.0) - x0) <= 1e-12, 'turning point at a=0 must be x0 for {0}'.format(pot)

        geo = geometry(pot, 0.0)
        assert geo.region == 'U3' and geo.F > 0, 'bad geometry at a=0 for {0}'.format(pot)

        params = spectral_params(pot, 0.0, 30.0)
        assert params.b2 < 0, 'b2 must be negative below a2 for {0}'.format(pot)

def test_action_values():
    beta = math.sqrt(math.pi) * math.gamma(0.75) / math.gamma(1.25)

    assert abs(action_F(spec, 1.0) - 4 * math.sqrt(2)) <= 1e-9, 'wrong F(a2)'
    assert abs(action_F(spec, 2.0) - beta) <= 1e-9, 'wrong F(2)'
    assert action_F(spec, 3.0) == 0.0, 'F must vanish at a1'

    # brute force without the endpoint substitution
    for a in (0.3, 1.7, 2.6):
        kinks = [] if a < 1.0 else [-turning_point(spec, a), turning_point(spec, a)]
        plain, _ = integrate.quad(lambda x: math.sqrt(max(0.0, 2 - math.cos(x) - a)), -math.pi, math.pi,
                points=kinks, limit=400)
        assert abs(action_F(spec, a) - plain) <= 1e-6, 'F disagrees with plain quadrature at a={0}'.format(a)

def test_action_monotone():
    values = [action_F(spec, a) for a in np.linspace(0.0, 2.99, 60)]

    assert all(x > y for x, y in zip(values, values[1:])), 'F must decrease in a'
    assert all(v > 0 for v in values), 'F must stay positive below a1'

def test_alpha_squares():
    alpha_sq, alpha2_sq = alpha_squares(spec, 2.0)
    assert alpha_sq == pytest.approx(1.52552, abs=1e-5), 'wrong alpha^2 at a=2'
    assert alpha_sq == alpha2_sq, 'alpha and alpha2 coincide in U2'

    assert alpha_squares(spec, 1.0) == (0.0, 0.0), 'both vanish at a2'

    # U1: alpha is the action over the narrow well
    a = 2.95
    alpha_sq, alpha2_sq = alpha_squares(spec, a)
    assert alpha_sq == pytest.approx(2 * action_F(spec, a) / math.pi, rel=1e-12)
    assert alpha2_sq == pytest.approx(4 * forbidden_action(spec, a) / math.pi, rel=1e-12)

def test_alpha_continuity():
    # alpha^2 grows like C|a - a2| on both sides of a2
    for delta in (1e-2, 1e-3, 1e-4):
        above = alpha_squares(spec, 1.0 + delta)[1]
        below = alpha_squares(spec, 1.0 - delta)[1]

        assert 0.0 < above <= 2.0 * delta, 'alpha2^2 not O(delta) above a2'
        assert 0.0 < below <= 2.0 * delta, 'alpha2^2 not O(delta) below a2'

    assert abs(alpha_squares(spec, 1.0 + 1e-4)[1] / 1e-4 - alpha_squares(spec, 1.0 - 1e-4)[1] / 1e-4) <= 1e-3

def test_zeta2():
    assert zeta2(spec, 1.0) == pytest.approx(2 ** 1.25, abs=1e-9), 'zeta2(a2) must equal sqrt(F)'

    for a in (0.2, 0.5, 0.99, 1.0, 1.01, 2.0, 2.5, 2.9, 2.95):
        z = zeta2(spec, a)
        assert z > 0.0
        assert abs(zeta2_residual(spec, a, z)) <= 1e-10, 'zeta2 residual too large at a={0}'.format(a)

def test_zeta_integral():
    assert zeta_integral(2.0, 0.0, +1) == 2.0
    assert zeta_integral(2.0, 0.0, -1) == 2.0
    assert zeta_integral(1.0, 1.0, -1) == 0.0, 'J- vanishes at the turning point'

    plain, _ = integrate.quad(lambda s: math.sqrt(s * s + 0.7), 0.0, 1.3)
    assert zeta_integral(1.3, 0.7, +1) == pytest.approx(plain, abs=1e-12)

def test_regions():
    a0 = threshold_a0(spec)
    assert a0 == pytest.approx(2 + math.cos(0.5), abs=1e-15)

    assert coarse_region(spec, 2.95) == 'U1'
    assert coarse_region(spec, 2.0) == 'U2'
    assert coarse_region(spec, 1.0) == 'U2'
    assert coarse_region(spec, 0.5) == 'U3'

    assert classify_region(spec, 2.95, 30.0) == RegionTag('U1', 'A1')
    assert str(classify_region(spec, 2.0, 30.0)) == 'A2'
    assert str(classify_region(spec, 1.0, 30.0)) == 'A3'
    assert str(classify_region(spec, 0.999, 30.0)) == 'A4'
    assert str(classify_region(spec, 0.5, 30.0)) == 'A5'

def test_geometry():
    geo = geometry(spec, 2.0)

    assert geo.region == 'U2'
    assert geo.x2 == pytest.approx(0.5 * math.pi, abs=1e-12)
    assert geo.F == action_F(spec, 2.0)
    assert geometry(spec, 2.0) is geo, 'geometry must be cached'
    assert len(geo.row()) == len(WellGeometry.fields)

    with pytest.raises(NoRoot):
        geometry(spec, 3.0)

def test_k_of_b():
    assert k_of_b(0.0) == pytest.approx(math.sqrt(2) - 1, abs=1e-15)
    assert k_of_b(-1.0) == pytest.approx(0.957719, abs=1e-6)

    bs = np.linspace(-2.0, 10.0, 121)
    k = k_of_b(bs)
    assert np.all(np.isfinite(k)) and np.all(k > 0) and np.all(k < 1)
    assert np.max(np.abs(np.arccos(2 * k / (1 + k * k)) - np.arctan(np.exp(np.pi * bs)))) <= 1e-11

def test_spectral_params():
    params = spectral_params(spec, 2.0, 26.0)
    alpha_sq = alpha_squares(spec, 2.0)[0]

    assert params.b == pytest.approx(13.0 * alpha_sq, rel=1e-14), 'b must be +lam alpha^2 / 2 in U2'
    assert params.b2 == params.b
    assert b2_of(spec, 0.5, 26.0) < 0.0, 'b2 is negative below a2'
    assert spectral_params(spec, 2.95, 26.0).b < 0.0, 'b is negative in U1'

    # at a2 the phase reduces to lam zeta2^2
    assert psi_function(spec, 1.0, 20.0) == pytest.approx(20.0 * zeta2(spec, 1.0) ** 2, rel=1e-13)

def test_threshold_margin():
    assert threshold_a0(spec, margin=1.0) < threshold_a0(spec, margin=0.5), 'a0 grows as the margin shrinks'
    assert coarse_region(spec, 2.5, a0=2.4) == 'U1'

    with pytest.raises(AssertionError):
        threshold_a0(spec, margin=4.0)
