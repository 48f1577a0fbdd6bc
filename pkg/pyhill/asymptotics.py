#!/usr/bin/env python
#-*- coding:utf-8 -*-
##
## asymptotics.py
##
##  Created on: Oct 18, 2026
##      Author: pyhill contributors
##

"""
    ===============
    List of classes
    ===============

    .. autosummary::
        :nosignatures:

        Asymptotics
        BranchIndex
        BranchEigenvalue
        DegenerateAction
        NonConvergence
        AmbiguousOrder

    ==================
    Module description
    ==================

    For large :math:`\\lambda`, the real periodic eigenvalues of
    :math:`u'' + \\lambda^2(g(x) - a)u = 0` split into two branches
    labelled by a sign and a positive integer :math:`p`:

    .. math::

        \\lambda_\\pm(a, p) = \\lambda_p^0 + F(a)^{-1}H_\\pm(b_2(\\lambda_p^0))
        + R_\\pm(a, p), \\qquad \\lambda_p^0 = \\frac{2\\pi p}{F(a)}.

    A single formula covers the definite problem (:math:`a < a_2`, where
    the two branches merge exponentially fast), the indefinite problem
    (:math:`a > a_2`, where they are :math:`\\pi/F` apart) and the
    transition between them. The eigenfunctions of both branches have
    :math:`2p` zeros per period.

    The class :class:`Asymptotics` binds a potential together with the
    thresholds and budget constants and offers:

    * the branch values (:meth:`Asymptotics.branch_lambda`), optionally
      refined by iterating :math:`\\lambda \\leftarrow \\lambda_p^0 +
      F^{-1}H_\\pm(b_2(\\lambda))`;
    * the predicted gap between consecutive pairs
      (:meth:`Asymptotics.gap_width`);
    * the map from the position in the sorted spectrum to a branch
      (:meth:`Asymptotics.order_map`);
    * residuals of the region-wise quantization conditions
      (:meth:`Asymptotics.lemma_residual`) with their budgets and roots;
    * remainder budgets used when comparing with computed eigenvalues.

    .. code-block:: python

        >>> from pyhill.potential import canonical
        >>> from pyhill.asymptotics import Asymptotics
        >>> asym = Asymptotics(canonical())
        >>> round(asym.lambda0(2.0, 10), 4)
        26.2207
        >>> plus = asym.branch_lambda(1.0, 10, +1)
        >>> round(plus.lam - plus.lambda0, 6) == round(0.25 * math.pi / asym.action(1.0), 6)
        True

    ==============
    Module details
    ==============
"""

#
#==============================================================================
import logging
import math

from scipy import optimize

from pyhill.actions import B2_EXPONENT, B_EXPONENT, DEFAULT_MARGIN, classify_region, \
        geometry, spectral_params, threshold_a0
from pyhill.specfun import arctan_exp, h_branch


#
#==============================================================================
logger = logging.getLogger(__name__)

# actions below this value make lambda0 meaningless
MIN_ACTION = 1e-8

FIXED_POINT_TOL = 1e-12
FIXED_POINT_ITERS = 50

# remainder constants; above a2, twice the largest residual to unit-budget
# ratio of a comparison run on g = 2 - cos x with p = 10..40, which was
# 0.031 at a = 1 (0.0059 at a = 2)
BUDGET_INDEFINITE = 0.07
# TODO: replace with the output of `pyhill calibrate` over a = 0.5:0.95:0.05
BUDGET_DEFINITE = 0.25
# TODO: same run; the lemma ratios were not recorded with the ones above
BUDGET_LEMMA = 1.0


#
#==============================================================================
class DegenerateAction(Exception):
    """
        Raised when :math:`F(a)` is too small to define :math:`\\lambda_p^0`,
        i.e. for :math:`a` too close to :math:`a_1`.
    """

    pass


#
#==============================================================================
class NonConvergence(Exception):
    """
        Raised when an iteration or a root search on :math:`\\lambda` fails.
    """

    pass


#
#==============================================================================
class AmbiguousOrder(Exception):
    """
        Raised by :meth:`Asymptotics.order_map` inside the collar around
        :math:`a_2` where the ordering of the branches is not determined.
    """

    pass


#
#==============================================================================
class BranchIndex(object):
    """
        Label :math:`(p, \\pm)` of a branch eigenvalue; ``sign`` is ``+1``
        or ``-1``.
    """

    def __init__(self, p, sign):
        """
            Constructor.
        """

        assert p >= 1, 'Branch number must be positive'
        assert sign in (1, -1), 'Sign must be +1 or -1'

        self.p = int(p)
        self.sign = sign

    @property
    def symbol(self):
        """
            ``'+'`` or ``'-'``.
        """

        return '+' if self.sign > 0 else '-'

    def __eq__(self, other):
        return isinstance(other, BranchIndex) and (self.p, self.sign) == (other.p, other.sign)

    def __lt__(self, other):
        return (self.p, self.sign) < (other.p, other.sign)

    def __hash__(self):
        return hash((self.p, self.sign))

    def __repr__(self):
        return 'BranchIndex({0}, {1})'.format(self.p, self.symbol)


#
#==============================================================================
class BranchEigenvalue(object):
    """
        Asymptotic eigenvalue of one branch.

        :ivar index: :class:`BranchIndex`
        :ivar a: spectral parameter
        :ivar lambda0: :math:`2\\pi p/F(a)`
        :ivar lam: the asymptotic eigenvalue
        :ivar b2_used: value of :math:`b_2` fed into :math:`H_\\pm`
        :ivar remainder_budget: remainder bound at ``lambda0``, in units of
            :math:`\\lambda`
        :ivar refinement: ``'none'`` or ``'fixed_point'``
        :ivar fallback: ``True`` if a requested fixed-point refinement
            failed and the plain value was returned instead
        :ivar region: fine region at ``lambda0``
    """

    def __init__(self, index, a, lambda0, lam, b2_used, remainder_budget, refinement='none',
            fallback=False, region=None):
        """
            Constructor.
        """

        self.index = index
        self.a = a
        self.lambda0 = lambda0
        self.lam = lam
        self.b2_used = b2_used
        self.remainder_budget = remainder_budget
        self.refinement = refinement
        self.fallback = fallback
        self.region = region

    def __repr__(self):
        return 'BranchEigenvalue({0}, a={1}, lam={2}, refinement={3})'.format(self.index,
                self.a, self.lam, repr(self.refinement))


#
#==============================================================================
class Asymptotics(object):
    """
        Uniform eigenvalue asymptotics for one canonical potential.

        :param spec: canonical potential
        :param a0: U1/U2 threshold; computed from ``margin`` when omitted
        :param margin: distance of the threshold turning point from
            :math:`\\pi`
        :param collar: constant :math:`C` of the ambiguous collar
            :math:`|a - a_2| < C/\\lambda`
        :param p_min: smallest branch number accepted
        :param budget_indefinite: remainder constant for :math:`a \\geq a_2`
        :param budget_definite: remainder constant for :math:`a < a_2`
        :param budget_lemma: constant of the lemma residual budgets
        :param b2_exponent: exponent of the A2/A3 boundary
        :param b_exponent: exponent of the A4/A5 boundary

        :type spec: :class:`pyhill.potential.PotentialSpec`
        :type a0: float
        :type margin: float
        :type collar: float
        :type p_min: int
        :type budget_indefinite: float
        :type budget_definite: float
        :type budget_lemma: float
        :type b2_exponent: float
        :type b_exponent: float
    """

    def __init__(self, spec, a0=None, margin=DEFAULT_MARGIN, collar=math.pi, p_min=5,
            budget_indefinite=BUDGET_INDEFINITE, budget_definite=BUDGET_DEFINITE, budget_lemma=BUDGET_LEMMA,
            b2_exponent=B2_EXPONENT, b_exponent=B_EXPONENT):
        """
            Constructor.
        """

        self.spec = spec
        self.a0 = threshold_a0(spec, margin) if a0 is None else float(a0)
        self.collar = collar
        self.p_min = p_min
        self.budget_indefinite = budget_indefinite
        self.budget_definite = budget_definite
        self.budget_lemma = budget_lemma
        self.b2_exponent = b2_exponent
        self.b_exponent = b_exponent

    def geometry(self, a):
        """
            Cached :class:`pyhill.actions.WellGeometry` at ``a``.
        """

        return geometry(self.spec, a, self.a0)

    def action(self, a):
        """
            :math:`F(a)`.
        """

        return self.geometry(a).F

    def params(self, a, lam):
        """
            :class:`pyhill.actions.SpectralParameters` at :math:`(a,
            \\lambda)`.
        """

        return spectral_params(self.spec, a, lam, self.a0)

    def b2(self, a, lam):
        """
            Signed :math:`b_2(\\lambda)`.
        """

        geo = self.geometry(a)
        return 0.5 * lam * geo.alpha2_sq * (1.0 if a >= self.spec.a2 else -1.0)

    def classify(self, a, lam):
        """
            Fine region (:class:`pyhill.actions.RegionTag`) of :math:`(a,
            \\lambda)`.
        """

        return classify_region(self.spec, a, lam, self.a0, self.b2_exponent, self.b_exponent)

    def lambda0(self, a, p):
        """
            :math:`\\lambda_p^0 = 2\\pi p/F(a)`.

            :param a: spectral parameter
            :param p: branch number

            :type a: float
            :type p: int

            :rtype: float

            :raises DegenerateAction: if :math:`F(a) < 10^{-8}`.
        """

        F = self.action(a)

        if F < MIN_ACTION:
            raise DegenerateAction('action F({0}) = {1:.3g} is degenerate'.format(a, F))

        return 2.0 * math.pi * p / F

    def branch_lambda(self, a, p, sign, refinement='none'):
        """
            Asymptotic eigenvalue :math:`\\lambda_\\pm(a, p)`. With
            ``refinement='none'`` the interpolation function is evaluated at
            :math:`b_2(\\lambda_p^0)`; with ``'fixed_point'`` the value
            :math:`\\lambda = \\lambda_p^0 + F^{-1}H_\\pm(b_2(\\lambda))` is
            iterated to :math:`10^{-12}` in at most 50 steps. If the
            iteration fails, a warning is logged and the plain value is
            returned with ``fallback`` set.

            :param a: spectral parameter
            :param p: branch number, at least ``p_min``
            :param sign: ``+1`` or ``-1``
            :param refinement: ``'none'`` or ``'fixed_point'``

            :type a: float
            :type p: int
            :type sign: int
            :type refinement: str

            :rtype: :class:`BranchEigenvalue`
        """

        assert p >= self.p_min, 'Branch number {0} is below p_min = {1}'.format(p, self.p_min)
        assert refinement in ('none', 'fixed_point'), 'Unknown refinement \'{0}\''.format(refinement)

        index = BranchIndex(p, sign)
        lam0 = self.lambda0(a, p)
        F = self.action(a)

        b2 = self.b2(a, lam0)
        lam = lam0 + h_branch(b2, sign) / F
        fallback = False

        if refinement == 'fixed_point':
            try:
                lam, b2 = self._fixed_point(a, lam0, lam, sign)
            except NonConvergence as err:
                logger.warning('falling back to the plain formula at a=%g, p=%d: %s', a, p, err)
                refinement, fallback = 'none', True

        return BranchEigenvalue(index, a, lam0, lam, b2, self.remainder_budget(a, lam0),
                refinement=refinement, fallback=fallback, region=str(self.classify(a, lam0)))

    def _fixed_point(self, a, lam0, lam, sign):
        F = self.action(a)

        for step in range(FIXED_POINT_ITERS):
            b2 = self.b2(a, lam)
            new = lam0 + h_branch(b2, sign) / F

            if not math.isfinite(new):
                break

            if abs(new - lam) <= FIXED_POINT_TOL * max(1.0, abs(lam)):
                logger.debug('fixed point reached in %d steps', step + 1)
                return new, self.b2(a, new)

            lam = new

        raise NonConvergence('no fixed point within {0} iterations'.format(FIXED_POINT_ITERS))

    def branch_pair(self, a, p, refinement='none'):
        """
            The pair :math:`(\\lambda_-(a, p), \\lambda_+(a, p))`.

            :rtype: tuple(:class:`BranchEigenvalue`, :class:`BranchEigenvalue`)
        """

        return self.branch_lambda(a, p, -1, refinement), self.branch_lambda(a, p, +1, refinement)

    def gap_width(self, a, lam):
        """
            Predicted gap :math:`(2\\pi - 2\\arctan e^{\\pi b_2(\\lambda)})/F(a)`
            between :math:`\\lambda_+(a, p)` and :math:`\\lambda_-(a, p + 1)`.
            It tends to :math:`2\\pi/F` in the definite regime and to
            :math:`\\pi/F` in the indefinite one.

            :rtype: float
        """

        assert lam > 0.0, 'Lambda must be positive'
        return (2.0 * math.pi - 2.0 * arctan_exp(self.b2(a, lam))) / self.action(a)

    def order_map(self, n, a, lam):
        """
            Branches that may hold the :math:`n`-th eigenvalue of the
            sorted periodic spectrum (counted from 1). For :math:`a \\geq
            a_2 + C/\\lambda` the answer is unique: :math:`(+, n/2)` for
            even :math:`n` and :math:`(-, (n+1)/2)` for odd :math:`n`. For
            :math:`a \\leq a_2 - C/\\lambda` both branches with
            :math:`p = \\lceil n/2 \\rceil` are returned, since nearly
            degenerate pairs may come in either order.

            :param n: position in the sorted spectrum
            :param a: spectral parameter
            :param lam: scale of the eigenvalue

            :type n: int
            :type a: float
            :type lam: float

            :rtype: tuple(:class:`BranchIndex`)

            :raises AmbiguousOrder: inside the collar :math:`|a - a_2| <
                C/\\lambda`.
        """

        assert n >= 1, 'Position must be positive'
        assert lam > 0.0, 'Lambda must be positive'

        width = self.collar / lam
        a2 = self.spec.a2

        if a >= a2 + width:
            if n % 2 == 0:
                return (BranchIndex(n // 2, +1), )
            return (BranchIndex((n + 1) // 2, -1), )

        if a <= a2 - width:
            p = (n + 1) // 2
            return (BranchIndex(p, -1), BranchIndex(p, +1))

        raise AmbiguousOrder('a = {0} lies within {1:.3g} of a2 = {2}'.format(a, width, a2))

    def remainder_budget(self, a, lam):
        """
            Remainder bound in units of :math:`\\lambda`:
            :math:`C_1\\lambda^{-2/3}\\ln\\lambda/F` for :math:`a \\geq a_2`
            and :math:`C_2\\lambda^{-1/2}(\\ln\\lambda)^{1/2}/F` below.
            Multiplying by :math:`F` gives the bound on the scaled residual
            :math:`|\\lambda - \\lambda_\\pm|F`.

            :rtype: float
        """

        return self.scaled_budget(a, lam) / self.action(a)

    def scaled_budget(self, a, lam):
        """
            Remainder bound on :math:`|\\lambda - \\lambda_\\pm|F(a)`.
        """

        log = math.log(max(lam, math.e))

        if a >= self.spec.a2:
            return self.budget_indefinite * lam ** (-2.0 / 3.0) * log
        return self.budget_definite * lam ** -0.5 * math.sqrt(log)

    def lemma_rhs(self, a, lam, p, sign, region):
        """
            Explicit right-hand side of the quantization condition of the
            fine region, and whether its left-hand side is :math:`\\Psi`
            (``True``) or :math:`\\lambda F` (``False``).
        """

        params = self.params(a, lam)
        cycle = 2.0 * math.pi * p

        if region == 'A1':
            return cycle + sign * 0.5 * math.pi, False
        if region == 'A2':
            return cycle + sign * 0.5 * math.pi - 1.0 / (24.0 * params.b), False
        if region == 'A5':
            return cycle - 1.0 / (24.0 * params.b), False

        assert region in ('A3', 'A4'), 'Unknown region \'{0}\''.format(region)

        k = params.k_of_b
        zeta = self.geometry(a).zeta2
        phase = math.acos(min(1.0, 2.0 * k / (1.0 + k * k)))

        return cycle + sign * phase - params.b ** 2 / (2.0 * zeta * zeta * lam), True

    def lemma_residual(self, a, lam, p, sign, region=None):
        """
            Signed residual of the quantization condition of the fine
            region, left-hand side minus the explicit terms:

            * ``'A1'``: :math:`\\lambda F - (2\\pi p \\pm \\pi/2)`;
            * ``'A2'``: :math:`\\lambda F - (2\\pi p \\pm \\pi/2 - 1/(24b))`;
            * ``'A3'``, ``'A4'``: :math:`\\Psi - (2\\pi p \\pm \\arccos
              \\frac{2k(b)}{1 + k^2(b)} - \\frac{b^2}{2\\zeta_2^2\\lambda})`;
            * ``'A5'``: :math:`\\lambda F - (2\\pi p - 1/(24b))`.

            :param a: spectral parameter
            :param lam: :math:`\\lambda > 0`
            :param p: branch number
            :param sign: ``+1`` or ``-1``
            :param region: fine region; classified at ``lam`` when omitted

            :rtype: float
        """

        region = str(self.classify(a, lam)) if region is None else region
        rhs, uses_psi = self.lemma_rhs(a, lam, p, sign, region)

        lhs = self.params(a, lam).psi if uses_psi else lam * self.action(a)
        return lhs - rhs

    def lemma_budget(self, a, lam, region=None):
        """
            Bound on :func:`lemma_residual` in the fine region:
            :math:`c\\lambda^{-2/3}\\ln\\lambda` (A1),
            :math:`c(|b|^{-3} + \\lambda^{-2/3}\\ln\\lambda)` (A2),
            :math:`c(b^4/\\lambda^2 + \\lambda^{-2/3}\\ln\\lambda)` (A3),
            :math:`c(b^4/\\lambda^2 + \\lambda^{-1}\\ln\\lambda)` (A4) and
            :math:`c(|b|^{-3/2} + \\lambda^{-1/2}(\\ln\\lambda)^{1/2})` (A5).
        """

        region = str(self.classify(a, lam)) if region is None else region
        b = abs(self.params(a, lam).b)
        log = math.log(max(lam, math.e))

        terms = {
            'A1': lambda: lam ** (-2.0 / 3.0) * log,
            'A2': lambda: b ** -3 + lam ** (-2.0 / 3.0) * log,
            'A3': lambda: b ** 4 / lam ** 2 + lam ** (-2.0 / 3.0) * log,
            'A4': lambda: b ** 4 / lam ** 2 + log / lam,
            'A5': lambda: b ** -1.5 + lam ** -0.5 * math.sqrt(log)
        }

        return self.budget_lemma * terms[region]()

    def lemma_root(self, a, p, sign, region=None):
        """
            Root :math:`\\lambda` of the quantization condition of the fine
            region (classified at :math:`\\lambda_p^0` when omitted), searched
            in :math:`\\lambda_p^0 \\pm (\\pi/2 + 1/2)/F`.

            :rtype: float

            :raises NonConvergence: if the condition has no sign change in
                the window.
        """

        lam0 = self.lambda0(a, p)
        region = str(self.classify(a, lam0)) if region is None else region
        width = (0.5 * math.pi + 0.5) / self.action(a)

        func = lambda lam: self.lemma_residual(a, lam, p, sign, region)

        try:
            return optimize.brentq(func, lam0 - width, lam0 + width, xtol=1e-13, rtol=1e-14)
        except ValueError:
            raise NonConvergence('region {0} condition has no root near {1:.6g}'.format(region, lam0))

    def cell_interval(self, a, p):
        """
            The interval :math:`\\{\\lambda : |F\\lambda - 2\\pi p| \\leq
            \\pi/2 + \\pi/10\\}`, which holds exactly the two eigenvalues
            :math:`\\lambda_\\pm(a, p)` for large :math:`p`.

            :rtype: tuple(float, float)
        """

        F = self.action(a)
        half = 0.5 * math.pi + 0.1 * math.pi

        return (2.0 * math.pi * p - half) / F, (2.0 * math.pi * p + half) / F

    def weyl_count(self, a, lo, hi):
        """
            Expected number :math:`F(a)(hi - lo)/\\pi` of periodic eigenvalues
            in :math:`[lo, hi]`.
        """

        return self.action(a) * (hi - lo) / math.pi
