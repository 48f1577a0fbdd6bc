#!/usr/bin/env python
#-*- coding:utf-8 -*-
##
## actions.py
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

        RegionTag
        WellGeometry
        SpectralParameters
        NoRoot

    ==================
    Module description
    ==================

    Geometric and action quantities of the equation :math:`u'' +
    \\lambda^2(g(x) - a)u = 0` for a canonical potential (minimum
    :math:`a_2` at 0, maximum :math:`a_1` at :math:`\\pi`).

    Three coarse regions of the spectral parameter :math:`a` are
    distinguished:

    * ``'U1'``: :math:`a_0 \\leq a < a_1`, the allowed well around
      :math:`\\pi` is narrow;
    * ``'U2'``: :math:`a_2 \\leq a < a_0`, the weight changes sign
      (indefinite problem);
    * ``'U3'``: :math:`0 \\leq a < a_2`, the weight is positive (definite
      problem) and the turning points are complex, given by the
      continuation :math:`h(x) = g(ix)`.

    For each :math:`a` the module computes the turning point :math:`x_2`,
    the action :math:`F(a) = \\int_{g > a}\\sqrt{g - a}\\,dx`, the
    normalized actions :math:`\\alpha^2, \\alpha_2^2`, and the
    auxiliary value :math:`\\zeta_2` fixed by an implicit equation. They are
    collected by :func:`geometry` into a cached :class:`WellGeometry`. For a
    given :math:`\\lambda`, :func:`spectral_params` adds the parabolic
    cylinder parameters :math:`b, b_2`, the connection coefficient
    :math:`k(b)` and the phase :math:`\\Psi(\\lambda, a)`, while
    :func:`classify_region` refines the coarse region into one of five
    :math:`\\lambda`-dependent regions ``'A1'`` ... ``'A5'``.

    Every integrand with a square-root zero at a turning point :math:`x_t`
    is integrated after the substitution :math:`x = x_t \\pm t^2`, which
    turns it into a smooth function of :math:`t`.

    .. code-block:: python

        >>> from pyhill.potential import canonical
        >>> from pyhill.actions import action_F, geometry
        >>> spec = canonical()
        >>> round(action_F(spec, 2.0), 5)
        2.39628
        >>> geo = geometry(spec, 2.0)
        >>> geo.region, round(geo.x2, 6)
        ('U2', 1.570796)

    ==============
    Module details
    ==============
"""

#
#==============================================================================
import functools
import logging
import math

import numpy as np
from scipy import integrate, optimize

from pyhill.potential import continuation_root, eval_g, eval_h
from pyhill.specfun import arg_gamma


#
#==============================================================================
logger = logging.getLogger(__name__)

# default distance between the U1/U2 threshold turning point and pi
DEFAULT_MARGIN = 0.5

# default exponents of the fine-region boundaries b2 = lam^(2/9), |b| = lam^(1/3)
B2_EXPONENT = 2.0 / 9.0
B_EXPONENT = 1.0 / 3.0

QUAD_OPTIONS = {'epsabs': 1e-13, 'epsrel': 1e-12, 'limit': 200}


#
#==============================================================================
class NoRoot(Exception):
    """
        Raised when a turning point or the auxiliary value :math:`\\zeta_2`
        cannot be bracketed, e.g. for :math:`a \\geq a_1`.
    """

    pass


#
#==============================================================================
class RegionTag(object):
    """
        Coarse region (``'U1'``, ``'U2'``, ``'U3'``) and fine region
        (``'A1'`` ... ``'A5'``, or ``None`` if no :math:`\\lambda` was
        given).
    """

    def __init__(self, coarse, fine=None):
        """
            Constructor.
        """

        self.coarse = coarse
        self.fine = fine

    def __eq__(self, other):
        return isinstance(other, RegionTag) and (self.coarse, self.fine) == (other.coarse, other.fine)

    def __hash__(self):
        return hash((self.coarse, self.fine))

    def __str__(self):
        return self.fine if self.fine else self.coarse

    def __repr__(self):
        return 'RegionTag({0}, {1})'.format(repr(self.coarse), repr(self.fine))


#
#==============================================================================
class WellGeometry(object):
    """
        Per-:math:`a` geometry: coarse ``region``, turning point ``x2``
        (the other one is :math:`-x_2`), ``alpha_sq``, ``alpha2_sq``,
        action ``F``, ``zeta2`` and the threshold ``a0`` it was computed
        with.
    """

    fields = ('a', 'region', 'x2', 'alpha_sq', 'alpha2_sq', 'F', 'zeta2')

    def __init__(self, a, region, x2, alpha_sq, alpha2_sq, F, zeta2, a0):
        """
            Constructor.
        """

        self.a = a
        self.region = region
        self.x2 = x2
        self.alpha_sq = alpha_sq
        self.alpha2_sq = alpha2_sq
        self.F = F
        self.zeta2 = zeta2
        self.a0 = a0

    def row(self):
        """
            Values in the order of :attr:`fields`.
        """

        return [getattr(self, name) for name in self.fields]

    def __repr__(self):
        return 'WellGeometry({0})'.format(', '.join('{0}={1}'.format(name, getattr(self, name)) for name in self.fields))


#
#==============================================================================
class SpectralParameters(object):
    """
        Quantities depending on both :math:`a` and :math:`\\lambda`: the
        signed parameters ``b`` and ``b2``, the connection coefficient
        ``k_of_b`` and the phase ``psi``. The latter enters the lemma
        equations of the regions ``'A3'`` and ``'A4'`` only.
    """

    def __init__(self, lam, b, b2, k_of_b, psi):
        """
            Constructor.
        """

        self.lam = lam
        self.b = b
        self.b2 = b2
        self.k_of_b = k_of_b
        self.psi = psi

    def __repr__(self):
        return 'SpectralParameters(lam={0}, b={1}, b2={2}, k_of_b={3}, psi={4})'.format(self.lam,
                self.b, self.b2, self.k_of_b, self.psi)


#
#==============================================================================
def threshold_a0(spec, margin=DEFAULT_MARGIN):
    """
        The largest :math:`a` whose turning point keeps a distance of at
        least ``margin`` from :math:`\\pi`, i.e. :math:`g(\\pi - margin)`.

        :param spec: canonical potential
        :param margin: distance from :math:`\\pi`

        :type spec: :class:`pyhill.potential.PotentialSpec`
        :type margin: float

        :rtype: float
    """

    assert 0.0 < margin < math.pi, 'Margin must lie in (0, pi)'
    return eval_g(spec, math.pi - margin)


def coarse_region(spec, a, a0=None):
    """
        Coarse region ``'U1'``, ``'U2'`` or ``'U3'`` of :math:`a`.
    """

    a0 = threshold_a0(spec) if a0 is None else a0

    if a >= a0:
        return 'U1'
    if a >= spec.a2:
        return 'U2'
    return 'U3'


#
#==============================================================================
@functools.lru_cache(maxsize=64)
def _continuation_root(spec):
    return continuation_root(spec)


def turning_point(spec, a):
    """
        Turning point :math:`x_2 \\geq 0`: the root of :math:`g(x) = a` in
        :math:`(0, \\pi)` for :math:`a_2 < a < a_1`, the root of :math:`h(x)
        = a` in :math:`(0, x_0]` for :math:`0 \\leq a < a_2`, and 0 at
        :math:`a = a_2`. The bracketed root is polished by Newton steps.

        :param spec: canonical potential
        :param a: spectral parameter

        :type spec: :class:`pyhill.potential.PotentialSpec`
        :type a: float

        :rtype: float

        :raises NoRoot: if :math:`a \\geq a_1` or :math:`a < 0`.

        .. code-block:: python

            >>> round(turning_point(canonical(), 1.5), 12) == round(math.pi / 3, 12)
            True
    """

    a1, a2 = spec.a1, spec.a2

    if a >= a1:
        raise NoRoot('no turning point for a = {0} >= a1 = {1}'.format(a, a1))
    if a < 0.0:
        raise NoRoot('no turning point for negative a = {0}'.format(a))
    if a == a2:
        return 0.0

    if a > a2:
        func, lo, hi = (lambda x: eval_g(spec, x) - a), 0.0, math.pi
        deriv = lambda x: eval_g(spec, x, 1)
    else:
        func, lo, hi = (lambda x: eval_h(spec, x) - a), 0.0, _continuation_root(spec)
        deriv = lambda x: eval_h(spec, x, 1)

    # at a = 0 the root is x0 itself, and h(x0) may round to either sign
    tol = 1e-13 * max(1.0, a1)
    if abs(func(hi)) <= tol:
        return hi

    try:
        x = optimize.brentq(func, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    except ValueError:
        raise NoRoot('turning point for a = {0} cannot be bracketed'.format(a))

    for _ in range(3):
        fx, dx = func(x), deriv(x)
        if abs(fx) <= tol or dx == 0.0:
            break
        x = min(max(x - fx / dx, lo), hi)

    return x


#
#==============================================================================
def _edge_integral(func, edge, length, direction):
    """
        :math:`\\int \\sqrt{f(x)}\\,dx` over an interval of given length with
        the square-root zero at ``edge``, after substituting :math:`x =
        edge + direction\\cdot t^2`.
    """

    if length <= 0.0:
        return 0.0

    integrand = lambda t: 2.0 * t * math.sqrt(max(0.0, func(edge + direction * t * t)))
    value, _ = integrate.quad(integrand, 0.0, math.sqrt(length), **QUAD_OPTIONS)

    return value


def action_F(spec, a):
    """
        The action :math:`F(a) = \\int_{g > a}\\sqrt{g(x) - a}\\,dx` over
        one period, with absolute accuracy better than :math:`10^{-10}`.
        Vanishes for :math:`a \\geq a_1`.

        :param spec: canonical potential
        :param a: spectral parameter, :math:`a \\geq 0`

        :type spec: :class:`pyhill.potential.PotentialSpec`
        :type a: float

        :rtype: float
    """

    if a >= spec.a1:
        return 0.0

    if a > spec.a2:
        x2 = turning_point(spec, a)
        return 2.0 * _edge_integral(lambda x: eval_g(spec, x) - a, x2, math.pi - x2, +1)

    value, _ = integrate.quad(lambda x: math.sqrt(max(0.0, eval_g(spec, x) - a)), 0.0, math.pi, **QUAD_OPTIONS)
    return 2.0 * value


def forbidden_action(spec, a):
    """
        :math:`\\int_0^{x_2}\\sqrt{a - g(x)}\\,dx`, half the action across
        the classically forbidden set, for :math:`a \\geq a_2`.
    """

    if a <= spec.a2:
        return 0.0

    x2 = turning_point(spec, a)
    return _edge_integral(lambda x: a - eval_g(spec, x), x2, x2, -1)


def continuation_action(spec, a):
    """
        :math:`\\int_0^{x_2}\\sqrt{h(x) - a}\\,dx` between the origin and the
        root of :math:`h(x) = a`, for :math:`a \\leq a_2`.
    """

    if a >= spec.a2:
        return 0.0

    x2 = turning_point(spec, a)
    return _edge_integral(lambda x: eval_h(spec, x) - a, x2, x2, -1)


#
#==============================================================================
def alpha_squares(spec, a, a0=None):
    """
        The pair :math:`(\\alpha^2, \\alpha_2^2)`:

        * ``'U1'``: :math:`\\alpha^2 = \\frac{2}{\\pi}F(a)` (action over the
          well around :math:`\\pi`) and :math:`\\alpha_2^2 =
          \\frac{2}{\\pi}\\int_{-x_2}^{x_2}\\sqrt{a - g}\\,dx`;
        * ``'U2'``: :math:`\\alpha^2 = \\alpha_2^2 =
          \\frac{2}{\\pi}\\int_{-x_2}^{x_2}\\sqrt{a - g}\\,dx`;
        * ``'U3'``: :math:`\\alpha^2 = \\alpha_2^2 =
          \\frac{2}{\\pi}\\int_{-x_2}^{x_2}\\sqrt{h - a}\\,dx`.

        Both vanish at :math:`a = a_2`.

        :param spec: canonical potential
        :param a: spectral parameter
        :param a0: U1/U2 threshold, :func:`threshold_a0` by default

        :type spec: :class:`pyhill.potential.PotentialSpec`
        :type a: float
        :type a0: float

        :rtype: tuple(float, float)
    """

    region = coarse_region(spec, a, a0)

    if region == 'U3':
        value = 4.0 * continuation_action(spec, a) / math.pi
        return value, value

    alpha2_sq = 4.0 * forbidden_action(spec, a) / math.pi
    if region == 'U2':
        return alpha2_sq, alpha2_sq

    return 2.0 * action_F(spec, a) / math.pi, alpha2_sq


#
#==============================================================================
def zeta_integral(zeta, alpha_sq, sign):
    """
        Closed-form :math:`\\zeta`-side integrals
        :math:`J_-(\\zeta) = \\int_\\alpha^\\zeta\\sqrt{s^2 - \\alpha^2}\\,ds`
        (``sign=-1``, :math:`\\zeta \\geq \\alpha`) and
        :math:`J_+(\\zeta) = \\int_0^\\zeta\\sqrt{s^2 + \\alpha^2}\\,ds`
        (``sign=+1``), both equal to :math:`\\zeta^2/2` for :math:`\\alpha
        = 0`.
    """

    if alpha_sq <= 0.0:
        return 0.5 * zeta * zeta

    alpha = math.sqrt(alpha_sq)

    if sign > 0:
        return 0.5 * zeta * math.sqrt(zeta * zeta + alpha_sq) + 0.5 * alpha_sq * math.asinh(zeta / alpha)

    ratio = max(1.0, zeta / alpha)
    return 0.5 * zeta * math.sqrt(max(0.0, zeta * zeta - alpha_sq)) - 0.5 * alpha_sq * math.acosh(ratio)


def _zeta_problem(spec, a, a0):
    """
        Left-hand side, alpha squared and sign of the zeta equation.
    """

    region = coarse_region(spec, a, a0)
    alpha_sq, alpha2_sq = alpha_squares(spec, a, a0)

    if region == 'U1':
        return 0.25 * math.pi * alpha2_sq, alpha_sq, -1

    half = 0.5 * action_F(spec, a)
    return half, alpha_sq, (-1 if region == 'U2' else +1)


def zeta2_residual(spec, a, zeta, a0=None):
    """
        Residual of the implicit equation defining :math:`\\zeta_2`: the
        closed-form :math:`\\zeta`-integral minus the matching
        :math:`x`-integral.

        :rtype: float
    """

    lhs, alpha_sq, sign = _zeta_problem(spec, a, a0)
    return zeta_integral(zeta, alpha_sq, sign) - lhs


def zeta2(spec, a, a0=None):
    """
        The value :math:`\\zeta_2(a)`, the image of :math:`x = \\pi` under the
        comparison map. It solves

        * ``'U1'``: :math:`J_-(\\zeta) = \\int_0^{x_2}\\sqrt{a - g}\\,dx`;
        * ``'U2'``: :math:`J_-(\\zeta) = F(a)/2`;
        * ``'U3'``: :math:`J_+(\\zeta) = F(a)/2`;

        with :math:`\\alpha^2` of the region (see :func:`zeta_integral`).
        The root is bracketed on :math:`[\\alpha, \\infty)` (or
        :math:`[0, \\infty)`), found by Brent's method and polished by a
        Newton step to a residual below :math:`10^{-10}`.

        :param spec: canonical potential
        :param a: spectral parameter
        :param a0: U1/U2 threshold

        :type spec: :class:`pyhill.potential.PotentialSpec`
        :type a: float
        :type a0: float

        :rtype: float

        :raises NoRoot: if the root cannot be bracketed.

        .. code-block:: python

            >>> round(zeta2(canonical(), 1.0), 6) == round(2 ** 1.25, 6)
            True
    """

    lhs, alpha_sq, sign = _zeta_problem(spec, a, a0)
    func = lambda z: zeta_integral(z, alpha_sq, sign) - lhs

    lo = 0.0 if sign > 0 else math.sqrt(max(0.0, alpha_sq))
    hi = max(2.0 * lo, 1.0)

    for _ in range(60):
        if func(hi) > 0.0:
            break
        hi *= 2.0
    else:
        raise NoRoot('zeta2 for a = {0} cannot be bracketed'.format(a))

    if lhs <= 0.0:
        return lo

    zeta = optimize.brentq(func, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)

    slope = math.sqrt(max(0.0, zeta * zeta + sign * alpha_sq))
    if slope > 0.0:
        zeta -= func(zeta) / slope

    return zeta


#
#==============================================================================
def geometry(spec, a, a0=None):
    """
        All per-:math:`a` quantities in one :class:`WellGeometry`. Results
        are cached per ``(spec, a, a0)``.

        :param spec: canonical potential
        :param a: spectral parameter, :math:`0 \\leq a < a_1`
        :param a0: U1/U2 threshold, :func:`threshold_a0` by default

        :rtype: :class:`WellGeometry`
    """

    a0 = threshold_a0(spec) if a0 is None else a0
    return _geometry(spec, float(a), float(a0))


@functools.lru_cache(maxsize=4096)
def _geometry(spec, a, a0):
    if a >= spec.a1:
        raise NoRoot('no geometry for a = {0} >= a1 = {1}'.format(a, spec.a1))

    alpha_sq, alpha2_sq = alpha_squares(spec, a, a0)
    geo = WellGeometry(a, coarse_region(spec, a, a0), turning_point(spec, a), alpha_sq, alpha2_sq,
            action_F(spec, a), zeta2(spec, a, a0), a0)

    logger.debug('geometry at a=%g: %s', a, geo)
    return geo


#
#==============================================================================
def k_of_b(b):
    """
        Connection coefficient :math:`k(b) = \\sqrt{1 + e^{2\\pi b}} -
        e^{\\pi b}`, evaluated in the cancellation-free form
        :math:`1/(\\sqrt{1 + e^{2\\pi b}} + e^{\\pi b})` and, for positive
        :math:`b`, scaled by :math:`e^{-\\pi b}` against overflow. Accepts
        arrays.

        .. code-block:: python

            >>> round(k_of_b(0.0), 12) == round(math.sqrt(2) - 1, 12)
            True
    """

    bs = np.asarray(b, dtype=float)
    small = np.exp(-np.pi * np.abs(bs))

    pos = small / (np.sqrt(small * small + 1.0) + 1.0)
    neg = 1.0 / (np.sqrt(1.0 + small * small) + small)
    res = np.where(bs > 0.0, pos, neg)

    return float(res) if res.ndim == 0 else res


#
#==============================================================================
def spectral_params(spec, a, lam, a0=None):
    """
        Parameters :math:`b = \\pm\\frac{1}{2}\\lambda\\alpha^2` (plus sign
        in ``'U2'``, minus in ``'U1'`` and ``'U3'``), :math:`b_2 =
        \\pm\\frac{1}{2}\\lambda\\alpha_2^2` (plus sign for :math:`a \\geq
        a_2`), :math:`k(b)` and

        .. math::

            \\Psi(\\lambda, a) = \\lambda\\zeta_2^2 - 2b\\ln(\\zeta_2
            \\sqrt{2\\lambda}) + \\arg\\Gamma(\\tfrac{1}{2} + ib).

        :param spec: canonical potential
        :param a: spectral parameter
        :param lam: :math:`\\lambda > 0`
        :param a0: U1/U2 threshold

        :rtype: :class:`SpectralParameters`
    """

    assert lam > 0.0, 'Lambda must be positive'

    geo = geometry(spec, a, a0)

    b = 0.5 * lam * geo.alpha_sq * (1.0 if geo.region == 'U2' else -1.0)
    b2 = 0.5 * lam * geo.alpha2_sq * (1.0 if a >= spec.a2 else -1.0)

    zeta = geo.zeta2
    psi = lam * zeta * zeta - 2.0 * b * math.log(zeta * math.sqrt(2.0 * lam)) + arg_gamma(b)

    return SpectralParameters(lam, b, b2, k_of_b(b), psi)


def psi_function(spec, a, lam, a0=None):
    """
        Shortcut for ``spectral_params(spec, a, lam, a0).psi``.
    """

    return spectral_params(spec, a, lam, a0).psi


def b2_of(spec, a, lam, a0=None):
    """
        Signed parameter :math:`b_2(\\lambda)` alone.
    """

    geo = geometry(spec, a, a0)
    return 0.5 * lam * geo.alpha2_sq * (1.0 if a >= spec.a2 else -1.0)


#
#==============================================================================
def classify_region(spec, a, lam, a0=None, b2_exponent=B2_EXPONENT, b_exponent=B_EXPONENT):
    """
        Fine region of :math:`(a, \\lambda)`:

        * ``'A1'`` if :math:`a \\geq a_0`;
        * ``'A2'`` if :math:`a > a_2` and :math:`b_2 \\geq \\lambda^{2/9}`;
        * ``'A3'`` if :math:`a \\geq a_2` and :math:`b_2 < \\lambda^{2/9}`;
        * ``'A4'`` if :math:`a < a_2` and :math:`|b| < \\lambda^{1/3}`;
        * ``'A5'`` otherwise.

        The exponents of the boundaries are configurable.

        :param spec: canonical potential
        :param a: spectral parameter
        :param lam: :math:`\\lambda > 0`
        :param a0: U1/U2 threshold
        :param b2_exponent: exponent of the A2/A3 boundary
        :param b_exponent: exponent of the A4/A5 boundary

        :rtype: :class:`RegionTag`
    """

    params = spectral_params(spec, a, lam, a0)
    region = coarse_region(spec, a, a0)

    if region == 'U1':
        fine = 'A1'
    elif a > spec.a2 and params.b2 >= lam ** b2_exponent:
        fine = 'A2'
    elif a >= spec.a2:
        fine = 'A3'
    elif abs(params.b) < lam ** b_exponent:
        fine = 'A4'
    else:
        fine = 'A5'

    return RegionTag(region, fine)
