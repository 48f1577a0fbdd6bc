import math
import numpy as np
import pytest
from pyhill.asymptotics import Asymptotics
from pyhill.oracle import *
from pyhill.potential import PotentialSpec, canonical

spec = canonical()
oracle = Oracle(spec)
asym = Asymptotics(spec)

def test_constant_potential():
    flat = Oracle(PotentialSpec([2.0]))
    xs = np.linspace(0.0, math.pi, 41)

    t, u, du = flat.integrate(1.0, 3.0, (1.0, 0.0), t_eval=xs)
    assert np.max(np.abs(u - np.cos(3 * t))) <= 1e-9, 'solution must be cos(3x)'
    assert np.max(np.abs(du + 3 * np.sin(3 * t))) <= 1e-9

def test_integrate_reversal():
    t, u, du = oracle.integrate(2.0, 12.0, (1.0, 0.0))
    back, ub, dub = oracle.integrate(2.0, 12.0, (u[-1], du[-1]), interval=(math.pi, 0.0))

    assert abs(ub[-1] - 1.0) <= 1e-7 and abs(dub[-1]) <= 1e-6, 'integration must be reversible'

def test_monodromy_wronskian():
    for a, lam in [(2.0, 12.3), (2.0, 25.0), (0.5, 16.0), (2.9, 40.0)]:
        record = oracle.monodromy(a, lam)

        assert record.method == 'symmetric'
        assert record.wronskian_error <= 1e-9, 'Wronskian drift at a={0}, lam={1}'.format(a, lam)

    direct = oracle.monodromy(2.0, 6.3, method='direct')
    symmetric = oracle.monodromy(2.0, 6.3)
    assert direct.wronskian_error <= 1e-9
    assert abs(direct.discriminant - symmetric.discriminant) <= 1e-6 * max(1.0, abs(direct.discriminant))

def test_shooting_phase():
    phases = oracle.shooting_phase(2.0, np.array([20.0, 22.0, 24.0, 26.0]), 'D')
    assert np.all(np.diff(phases) > 0.0), 'phase must grow with lambda'

def test_dirichlet_at_a2_branch():
    eigs = oracle.shoot_eigen(2.0, 'D', (24.0, 26.0))

    assert [(e.symmetry, e.nodes_full) for e in eigs] == [('D', 20)]
    assert eigs[0].lam == pytest.approx(25.566, abs=2e-3)
    assert eigs[0].nodes_half == 9 and eigs[0].p == 10
    assert eigs[0].bracket_width <= 1e-10 * eigs[0].lam

def test_cell_holds_pair():
    for a in (2.0, 0.5):
        for p in (10, 20):
            eigs = oracle.periodic_spectrum(a, asym.cell_interval(a, p))

            assert sorted(e.symmetry for e in eigs) == ['D', 'N'], 'cell must hold one D and one N'
            assert all(e.nodes_full == 2 * p for e in eigs)
            assert all(e.discriminant_residual <= 1e-6 for e in eigs)
            assert all(e.wronskian_error <= 1e-9 for e in eigs)

def test_tolerance_halving():
    coarse = Oracle(spec, rtol=2e-12, atol=2e-12).shoot_eigen(2.0, 'both', asym.cell_interval(2.0, 15))
    fine = Oracle(spec, rtol=1e-12, atol=1e-12).shoot_eigen(2.0, 'both', asym.cell_interval(2.0, 15))

    assert len(coarse) == len(fine) == 2
    for x, y in zip(coarse, fine):
        assert abs(x.lam - y.lam) <= 1e-8 * y.lam, 'eigenvalue not stable under tolerance halving'

def test_discriminant_roots():
    half = math.pi / asym.action(2.0)
    window = (asym.lambda0(2.0, 10) - half, asym.lambda0(2.0, 12) + half)
    shot = [e.lam for e in oracle.shoot_eigen(2.0, 'both', window)]
    roots = oracle.discriminant_roots(2.0, window)

    assert len(roots) == len(shot)
    for x, y in zip(sorted(roots), shot):
        assert abs(x - y) <= 1e-7 * y, 'discriminant root and shooting disagree'

def test_definite_splitting():
    lo, hi = asym.cell_interval(0.5, 10)
    eigs = oracle.shoot_eigen(0.5, 'both', (lo, hi))
    lower, upper = [e for e in eigs if e.symmetry == 'D'][0], [e for e in eigs if e.symmetry == 'N'][0]

    assert 0.0 < abs(upper.lam - lower.lam) <= 1e-3, 'definite pair must be nearly degenerate'

def test_weyl_count():
    for a in (2.0, 0.5):
        lo, hi = asym.lambda0(a, 10), asym.lambda0(a, 14)
        eigs = oracle.shoot_eigen(a, 'both', (lo, hi))

        assert abs(len(eigs) - asym.weyl_count(a, lo, hi)) <= 2, 'eigenvalue count off Weyl law'

def test_lambda_max():
    small = Oracle(spec, lambda_max=20.0)

    with pytest.raises(OracleError):
        small.shoot_eigen(2.0, 'D', (15.0, 25.0))

    with pytest.raises(OracleError):
        small.monodromy(2.0, 30.0)

def test_empty_window():
    # phase gain below lambda = 0.1 stays under pi
    assert oracle.shoot_eigen(2.0, 'D', (0.05, 0.1)) == []
