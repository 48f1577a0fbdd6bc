#!/usr/bin/env python
#-*- coding:utf-8 -*-
##
## specfun.py
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

        HEvaluation
        DomainError

    ==================
    Module description
    ==================

    Special functions entering the uniform eigenvalue asymptotics. The
    central object is the pair of interpolation functions

    .. math::

        H_\\pm(x) = \\pm\\arctan e^{\\pi x} - x + x\\ln|x| -
        \\arg\\Gamma\\left(\\tfrac{1}{2} + ix\\right),

    which shift the Bohr-Sommerfeld phase smoothly from :math:`0` (deep in
    the definite regime, :math:`x \\to -\\infty`) to :math:`\\pm\\pi/2`
    (deep in the indefinite regime, :math:`x \\to +\\infty`). They satisfy

    .. math::

        H_+(x) - H_-(x) = 2\\arctan e^{\\pi x}, \\qquad
        H_\\pm(-x) = \\pm\\frac{\\pi}{2} - H_\\pm(x).

    The argument of :math:`\\Gamma(\\frac{1}{2} + ix)` is evaluated by two
    real formulas: a partial-fraction series with an Euler-Maclaurin tail
    for :math:`|x| \\leq 4` (:func:`arg_gamma_series`) and the Stirling
    expansion with Bernoulli numbers beyond (:func:`arg_gamma_stirling`).
    Both stay within :math:`10^{-10}` of the exact value; the results can be
    cross-checked with :func:`scipy.special.loggamma` or, when available,
    with :mod:`mpmath` (:func:`arg_gamma_reference`).

    .. code-block:: python

        >>> from pyhill.specfun import h_pm, h_minimum
        >>> ev = h_pm(0.0)
        >>> ev.h_plus, ev.h_minus
        (0.7853981633974483, -0.7853981633974483)
        >>> x_star, h_star = h_minimum(+1)
        >>> round(x_star, 4)
        0.0293

    The truncated expansions of :math:`H_\\pm` for small and large
    :math:`|x|` (:func:`h_expansion`) serve as test oracles only; the
    production path always evaluates the definition.

    For fault-injection tests, :func:`set_arg_gamma_bias` adds a constant to
    every value of :func:`arg_gamma`, which breaks the reflection identity
    above.

    ==============
    Module details
    ==============
"""

#
#==============================================================================
import logging
import math

import numpy as np
from scipy import optimize, special

# checking whether or not mpmath is available for high-precision references
mpmath_present = True
try:
    import mpmath
except ImportError:
    mpmath_present = False


#
#==============================================================================
logger = logging.getLogger(__name__)

# crossover between the series and the Stirling form of arg Gamma
ARG_GAMMA_SWITCH = 4.0

# validity windows of the truncated H expansions
SMALL_X_LIMIT = 0.2
LARGE_X_LIMIT = 2.0

# frozen constant C of |H - small expansion| <= C |x|^5 on |x| <= 0.2
SMALL_X_REMAINDER = 13.0

# additive fault-injection bias of arg_gamma
_bias = 0.0


#
#==============================================================================
class DomainError(Exception):
    """
        Raised when a truncated expansion is requested outside its window
        of validity.
    """

    pass


#
#==============================================================================
def set_arg_gamma_bias(value):
    """
        Add ``value`` to every subsequent result of :func:`arg_gamma`. Used
        by the self test to check that corrupted special functions are
        detected. Pass ``0.0`` to restore exact behaviour.

        :param value: additive bias
        :type value: float
    """

    global _bias
    _bias = float(value)

    if _bias:
        logger.warning('arg_gamma bias set to %g', _bias)


def arg_gamma_bias():
    """
        The currently injected bias of :func:`arg_gamma`.
    """

    return _bias


#
#==============================================================================
def psi_half():
    """
        The digamma function at one half,
        :math:`\\psi(\\frac{1}{2}) = -\\gamma - 2\\ln 2 = -1.9635\\ldots`.

        :rtype: float
    """

    return -np.euler_gamma - 2.0 * math.log(2.0)


#
#==============================================================================
def _scalar_or_array(values, like):
    """
        Return a Python float when the input was a scalar.
    """

    return float(values) if np.ndim(like) == 0 else values


#
#==============================================================================
def arg_gamma_series(x, terms=200):
    """
        :math:`\\arg\\Gamma(\\frac{1}{2} + ix)` from the partial-fraction
        series

        .. math::

            x\\psi(\\tfrac{1}{2}) + \\sum_{n \\geq 0}\\left(\\frac{2x}{2n+1}
            - \\arctan\\frac{2x}{2n+1}\\right),

        summed exactly up to ``terms`` and completed by the Euler-Maclaurin
        estimate of the tail (integral, half end term and first derivative
        correction). Accurate to :math:`10^{-12}` for :math:`|x| \\leq 4`.

        :param x: argument(s)
        :param terms: number of explicitly summed terms

        :type x: float or numpy.ndarray
        :type terms: int

        :rtype: float or numpy.ndarray
    """

    assert terms >= 10, 'At least 10 explicit terms are required'

    xs = np.asarray(x, dtype=float)
    c = 2.0 * xs[..., np.newaxis]
    u = 2.0 * np.arange(terms) + 1.0

    ratio = c / u
    head = np.sum(ratio - np.arctan(ratio), axis=-1)

    c = 2.0 * xs
    big_u = 2.0 * terms + 1.0
    integral = 0.5 * (big_u * np.arctan(c / big_u) + 0.5 * c * np.log1p((c / big_u) ** 2) - c)
    end = c / big_u - np.arctan(c / big_u)
    slope = -2.0 * c ** 3 / (big_u ** 2 * (big_u ** 2 + c ** 2))

    res = xs * psi_half() + head + integral + 0.5 * end - slope / 12.0
    return _scalar_or_array(res, x)


#
#==============================================================================
def arg_gamma_stirling(x, terms=10):
    """
        :math:`\\arg\\Gamma(\\frac{1}{2} + ix)` from the Stirling expansion

        .. math::

            x\\ln|x| - x + \\sum_{k=1}^{K} \\frac{(1 - 2^{1-2k})|B_{2k}|}
            {2k(2k-1)x^{2k-1}},

        i.e. :math:`x\\ln x - x + \\frac{1}{24x} + \\frac{7}{2880x^3} +
        \\ldots`, extended to negative :math:`x` by oddness. With the default
        ten terms it is accurate to :math:`10^{-10}` for :math:`|x| \\geq 4`.

        :param x: nonzero argument(s)
        :param terms: number :math:`K` of Bernoulli terms

        :type x: float or numpy.ndarray
        :type terms: int

        :rtype: float or numpy.ndarray
    """

    xs = np.asarray(x, dtype=float)
    ax = np.abs(xs)
    assert np.all(ax > 0.0), 'Stirling form is undefined at x = 0'

    bern = special.bernoulli(2 * terms)
    k = np.arange(1, terms + 1)
    coeffs = (1.0 - 2.0 ** (1 - 2 * k)) * np.abs(bern[2 * k]) / (2 * k * (2 * k - 1))

    powers = ax[..., np.newaxis] ** (2 * k - 1)
    res = ax * np.log(ax) - ax + np.sum(coeffs / powers, axis=-1)

    return _scalar_or_array(np.sign(xs) * res, x)


#
#==============================================================================
def arg_gamma(x):
    """
        The continuous branch of :math:`\\arg\\Gamma(\\frac{1}{2} + ix)`
        vanishing at :math:`x = 0`. Odd in :math:`x`; absolute error at most
        :math:`10^{-10}` for :math:`|x| \\leq 10^4`, relative error at most
        :math:`10^{-14}` beyond, where the value itself exceeds
        :math:`10^5`.

        :param x: argument(s)
        :type x: float or numpy.ndarray

        :rtype: float or numpy.ndarray

        .. code-block:: python

            >>> round(arg_gamma(1.0), 5)
            -0.95499
    """

    xs = np.asarray(x, dtype=float)
    ax = np.atleast_1d(np.abs(xs))
    near = ax <= ARG_GAMMA_SWITCH

    res = np.empty_like(ax)
    if np.any(near):
        res[near] = arg_gamma_series(ax[near])
    if np.any(~near):
        res[~near] = arg_gamma_stirling(ax[~near])

    res = np.sign(xs) * res.reshape(xs.shape) + _bias
    return _scalar_or_array(res, x)


#
#==============================================================================
def arg_gamma_reference(x, dps=30):
    """
        Independent reference value of :math:`\\arg\\Gamma(\\frac{1}{2} +
        ix)`: :func:`mpmath.loggamma` at ``dps`` decimal digits if mpmath is
        installed, :func:`scipy.special.loggamma` otherwise. The imaginary
        part of the principal log-gamma is exactly the continuous branch.

        :param x: argument
        :param dps: mpmath working precision

        :type x: float
        :type dps: int

        :rtype: float
    """

    if mpmath_present:
        with mpmath.workdps(dps):
            return float(mpmath.im(mpmath.loggamma(mpmath.mpc(0.5, x))))

    return float(special.loggamma(0.5 + 1j * x).imag)


#
#==============================================================================
class HEvaluation(object):
    """
        Values :math:`H_+(x)` and :math:`H_-(x)` together with the method
        used: ``'direct'`` (the definition), ``'small_x_series'`` or
        ``'large_x_series'``.
    """

    def __init__(self, x, h_plus, h_minus, method='direct'):
        """
            Constructor.
        """

        self.x = x
        self.h_plus = h_plus
        self.h_minus = h_minus
        self.method = method

    def branch(self, sign):
        """
            Value of the branch with the given sign (``+1`` or ``-1``).
        """

        return self.h_plus if sign > 0 else self.h_minus

    def __repr__(self):
        return 'HEvaluation(x={0}, h_plus={1}, h_minus={2}, method={3})'.format(self.x,
                self.h_plus, self.h_minus, repr(self.method))


#
#==============================================================================
def arctan_exp(x):
    """
        :math:`\\arctan e^{\\pi x}` without overflow, computed as
        :math:`\\pi/2 - \\arctan e^{-\\pi x}` for positive :math:`x`.

        :param x: argument(s)
        :type x: float or numpy.ndarray

        :rtype: float or numpy.ndarray
    """

    xs = np.asarray(x, dtype=float)
    res = np.where(xs > 0.0, 0.5 * np.pi - np.arctan(np.exp(-np.pi * np.abs(xs))),
            np.arctan(np.exp(-np.pi * np.abs(xs))))

    return _scalar_or_array(res, x)


#
#==============================================================================
def _xlogx(xs):
    # continuous extension by 0 at the origin
    ax = np.abs(xs)
    return np.where(ax > 0.0, xs * np.log(np.where(ax > 0.0, ax, 1.0)), 0.0)


#
#==============================================================================
def h_branch(x, sign):
    """
        A single branch :math:`H_\\pm(x)` from its definition. Accepts
        arrays.

        :param x: argument(s)
        :param sign: ``+1`` or ``-1``

        :type x: float or numpy.ndarray
        :type sign: int

        :rtype: float or numpy.ndarray
    """

    assert sign in (1, -1), 'Sign must be +1 or -1'

    xs = np.asarray(x, dtype=float)
    res = sign * arctan_exp(xs) - xs + _xlogx(xs) - arg_gamma(xs)

    return _scalar_or_array(res, x)


#
#==============================================================================
def h_pm(x, method='direct'):
    """
        Evaluate both interpolation functions at ``x``. The default method
        evaluates the definition; ``'small'`` and ``'large'`` return the
        truncated expansions of :func:`h_expansion` instead and are meant
        for cross-validation only.

        :param x: argument
        :param method: ``'direct'``, ``'small'`` or ``'large'``

        :type x: float
        :type method: str

        :rtype: :class:`HEvaluation`
    """

    x = float(x)

    if method == 'direct':
        common = -x + float(_xlogx(x)) - arg_gamma(x)
        tail = arctan_exp(x)
        return HEvaluation(x, tail + common, -tail + common, 'direct')

    assert method in ('small', 'large'), 'Unknown method \'{0}\''.format(method)

    return HEvaluation(x, h_expansion(x, method, +1), h_expansion(x, method, -1),
            '{0}_x_series'.format(method))


#
#==============================================================================
def h_expansion(x, kind, sign):
    """
        Truncated expansions of :math:`H_\\pm`:

        * ``kind='small'`` (:math:`|x| \\leq 0.2`):
          :math:`\\pm\\frac{\\pi}{4} + x\\ln|x| + x(\\pm\\frac{\\pi}{2} - 1
          - \\psi(\\frac{1}{2})) + x^3(\\mp\\frac{\\pi^3}{12} -
          \\frac{7}{3}\\zeta(3))` with remainder :math:`O(x^5)`;
        * ``kind='large'`` (:math:`|x| \\geq 2`):
          :math:`\\pm\\arctan e^{\\pi x} - \\frac{1}{24x} -
          \\frac{7}{2880x^3}` with remainder :math:`O(x^{-5})`, valid for
          both signs of :math:`x`. For positive :math:`x` the arctangent
          equals :math:`\\pi/2` up to :math:`e^{-\\pi x}`.

        :param x: argument
        :param kind: ``'small'`` or ``'large'``
        :param sign: ``+1`` or ``-1``

        :type x: float
        :type kind: str
        :type sign: int

        :rtype: float

        :raises DomainError: outside the window of the chosen expansion.
    """

    assert sign in (1, -1), 'Sign must be +1 or -1'

    if kind == 'small':
        if abs(x) > SMALL_X_LIMIT:
            raise DomainError('small-x expansion requires |x| <= {0}, got {1}'.format(SMALL_X_LIMIT, x))

        linear = sign * 0.5 * math.pi - 1.0 - psi_half()
        cubic = -sign * math.pi ** 3 / 12.0 - 7.0 * special.zeta(3.0) / 3.0
        return sign * 0.25 * math.pi + float(_xlogx(x)) + linear * x + cubic * x ** 3

    if kind == 'large':
        if abs(x) < LARGE_X_LIMIT:
            raise DomainError('large-x expansion requires |x| >= {0}, got {1}'.format(LARGE_X_LIMIT, x))

        return sign * arctan_exp(x) - 1.0 / (24.0 * x) - 7.0 / (2880.0 * x ** 3)

    raise DomainError('unknown expansion kind \'{0}\''.format(kind))


#
#==============================================================================
def h_derivative(x, sign):
    """
        Analytic derivative :math:`H_\\pm'(x) = \\pm\\frac{\\pi}{2\\cosh\\pi
        x} + \\ln|x| - \\mathrm{Re}\\,\\psi(\\frac{1}{2} + ix)`, singular
        at :math:`x = 0`.

        :param x: nonzero argument
        :param sign: ``+1`` or ``-1``

        :type x: float
        :type sign: int

        :rtype: float
    """

    assert x != 0.0, 'H\' has a logarithmic singularity at 0'

    return sign * 0.5 * math.pi / math.cosh(math.pi * x) + math.log(abs(x)) - special.digamma(0.5 + 1j * x).real


#
#==============================================================================
def h_minimum(sign):
    """
        Location and value of the minimum of :math:`H_\\pm` on
        :math:`x > 0`. A bounded Brent search (golden section with
        parabolic steps) gives the first approximation, which is then
        polished as a root of :func:`h_derivative`.

        :param sign: ``+1`` or ``-1``
        :type sign: int

        :rtype: tuple(float, float)

        .. code-block:: python

            >>> x_star, h_star = h_minimum(-1)
            >>> round(x_star, 3)
            1.683
    """

    assert sign in (1, -1), 'Sign must be +1 or -1'

    bounds = (1e-4, 0.5) if sign > 0 else (0.5, 4.0)
    res = optimize.minimize_scalar(lambda t: h_branch(t, sign), bounds=bounds,
            method='bounded', options={'xatol': 1e-10})
    x_star = res.x

    lo, hi = (0.5 * x_star, 2.0 * x_star) if sign > 0 else (x_star - 0.3, x_star + 0.3)
    dlo, dhi = h_derivative(lo, sign), h_derivative(hi, sign)

    if dlo < 0.0 < dhi:
        x_star = optimize.brentq(h_derivative, lo, hi, args=(sign,), xtol=1e-15, rtol=4 * np.finfo(float).eps)
    else:
        logger.debug('no derivative bracket around %g, keeping Brent estimate', x_star)

    return x_star, h_branch(x_star, sign)
