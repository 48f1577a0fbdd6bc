import math
import numpy as np
import pytest
from pyhill.asymptotics import *
from pyhill.potential import canonical
from pyhill.specfun import h_branch

asym = Asymptotics(canonical())

# the two formulations are compared against the unscaled remainder bound
unit = Asymptotics(canonical(), budget_indefinite=1.0, budget_definite=1.0)

def test_lambda0():
    assert asym.lambda0(2.0, 10) == pytest.approx(26.2207, abs=1e-4), 'wrong lambda0(2, 10)'
    assert asym.lambda0(1.0, 10) == pytest.approx(20 * math.pi / (4 * math.sqrt(2)), rel=1e-10)

    for a in (0.5, 1.0, 2.0, 2.9):
        assert abs(asym.lambda0(a, 20) - 2 * asym.lambda0(a, 10)) <= 1e-12 * asym.lambda0(a, 20)

def test_degenerate_action():
    with pytest.raises(DegenerateAction):
        asym.lambda0(3.0 - 1e-12, 10)

def test_branch_at_a2():
    F = asym.action(1.0)

    for p in (10, 20, 40):
        lower, upper = asym.branch_pair(1.0, p)

        assert lower.b2_used == 0.0 and upper.b2_used == 0.0, 'b2 must vanish at a2'
        assert abs(upper.lam - lower.lam - 0.5 * math.pi / F) <= 1e-12, 'split at a2 must be (pi/2)/F'
        assert abs(upper.lam - lower.lambda0 - 0.25 * math.pi / F) <= 1e-12

def test_branch_order():
    for a in (1.5, 2.0, 2.9):
        for p in (10, 20):
            lower, upper = asym.branch_pair(a, p)
            following = asym.branch_lambda(a, p + 1, -1)

            assert lower.lam < upper.lam < following.lam, 'branches out of order at a={0}'.format(a)
            assert lower.index < upper.index < following.index

def test_branch_continuity():
    for sign in (1, -1):
        above = asym.branch_lambda(1.0 + 1e-6, 30, sign).lam
        below = asym.branch_lambda(1.0 - 1e-6, 30, sign).lam
        assert abs(above - below) <= 1e-3, 'branch jumps across a2'

def test_definite_pairs():
    for p in (10, 20, 30):
        lower, upper = asym.branch_pair(0.5, p)
        gap = 2 * np.arctan(np.exp(np.pi * upper.b2_used)) / asym.action(0.5)

        assert abs(upper.lam - lower.lam - gap) <= 1e-12, 'pair split must be 2 arctan(exp(pi b2))/F'
        assert upper.lam - lower.lam <= 1e-3

def test_gap_width():
    F = asym.action(2.0)
    assert abs(asym.gap_width(2.0, 200.0) * F - math.pi) <= 1e-6, 'indefinite gaps tend to pi/F'

    F = asym.action(0.5)
    assert abs(asym.gap_width(0.5, 200.0) * F - 2 * math.pi) <= 1e-6, 'definite gaps tend to 2pi/F'

    assert asym.gap_width(1.0, 50.0) * asym.action(1.0) == pytest.approx(1.5 * math.pi, abs=1e-12)

def test_order_map():
    assert asym.order_map(20, 2.0, 26.0) == (BranchIndex(10, 1), )
    assert asym.order_map(21, 2.0, 26.0) == (BranchIndex(11, -1), )
    assert asym.order_map(20, 0.5, 16.0) == (BranchIndex(10, -1), BranchIndex(10, 1))

    with pytest.raises(AmbiguousOrder):
        asym.order_map(20, 1.0, 26.0)

    with pytest.raises(AmbiguousOrder):
        asym.order_map(20, 1.05, 26.0)

def test_fixed_point():
    for a, sign in [(2.0, 1), (2.0, -1), (1.2, 1), (0.5, -1)]:
        branch = asym.branch_lambda(a, 20, sign, refinement='fixed_point')
        F = asym.action(a)

        assert branch.refinement == 'fixed_point' and not branch.fallback
        assert abs(branch.lam - branch.lambda0 - h_branch(asym.b2(a, branch.lam), sign) / F) <= 1e-10

        plain = asym.branch_lambda(a, 20, sign)
        assert abs(plain.lam - branch.lam) * F <= unit.scaled_budget(a, branch.lambda0)

def test_branch_preconditions():
    with pytest.raises(AssertionError):
        asym.branch_lambda(2.0, 3, 1)

    with pytest.raises(AssertionError):
        asym.branch_lambda(2.0, 10, 1, refinement='newton')

def test_budgets():
    budgets = [asym.scaled_budget(2.0, lam) for lam in (10.0, 50.0, 200.0)]
    assert budgets[0] > budgets[1] > budgets[2] > 0.0, 'budget must shrink with lambda'

    assert asym.remainder_budget(0.5, 20.0) == pytest.approx(asym.scaled_budget(0.5, 20.0) / asym.action(0.5))

    loose = Asymptotics(canonical(), budget_indefinite=3.0)
    assert loose.scaled_budget(2.0, 50.0) == pytest.approx(3.0 * asym.scaled_budget(2.0, 50.0) / BUDGET_INDEFINITE)

    assert (asym.budget_indefinite, asym.budget_definite, asym.budget_lemma) == \
            (BUDGET_INDEFINITE, BUDGET_DEFINITE, BUDGET_LEMMA), 'shipped constants must be the defaults'
    assert BUDGET_INDEFINITE < 1.0 and BUDGET_DEFINITE < 1.0

def test_lemma_sign_flip():
    for a, region in [(2.95, 'A1'), (2.0, 'A2')]:
        lam = asym.lambda0(a, 15)
        assert str(asym.classify(a, lam)) == region

        flip = asym.lemma_residual(a, lam, 15, 1) - asym.lemma_residual(a, lam, 15, -1)
        assert abs(flip + math.pi) <= 1e-12, 'sign flip must shift the residual by -pi in {0}'.format(region)

def test_lemma_root():
    for a in (2.95, 2.0, 1.0, 0.999, 0.5):
        for sign in (1, -1):
            root = asym.lemma_root(a, 20, sign)
            branch = asym.branch_lambda(a, 20, sign)

            assert abs(asym.lemma_residual(a, root, 20, sign, branch.region)) <= 1e-9
            assert abs(root - branch.lam) * asym.action(a) <= 2 * unit.scaled_budget(a, branch.lambda0), \
                    'lemma root and branch disagree at a={0}'.format(a)

def test_lemma_budget():
    for a in (2.95, 2.0, 1.0, 0.999, 0.5):
        lam = asym.lambda0(a, 20)
        assert asym.lemma_budget(a, lam) > 0.0

def test_cells():
    lo, hi = asym.cell_interval(2.0, 10)
    assert lo < asym.branch_lambda(2.0, 10, -1).lam < asym.branch_lambda(2.0, 10, 1).lam < hi
    assert asym.weyl_count(2.0, lo, hi) == pytest.approx(1.2, abs=1e-12)
