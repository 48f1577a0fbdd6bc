#!/usr/bin/env python
#-*- coding:utf-8 -*-
##
## potential.py
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

        PotentialSpec
        ClassGReport
        PotentialError

    ==================
    Module description
    ==================

    This module represents the even :math:`2\\pi`-periodic potentials
    :math:`g(x) = \\sum_n c_n\\cos nx` the rest of the package works with.
    The coordinate origin is always put at the minimum of :math:`g`, so
    that :math:`a_2 = g(0)` is the minimum and :math:`a_1 = g(\\pi)` the
    maximum. A potential given the other way round can be brought to this
    form with :func:`normalize`, which shifts the origin by :math:`\\pi`.

    Besides :math:`g` and its derivatives (:func:`eval_g`), the module
    evaluates the continuation :math:`h(x) = g(ix) = \\sum_n c_n\\cosh nx`
    (:func:`eval_h`), which governs the problem below the bottom of the
    well, and checks the admissibility conditions the asymptotic formulas
    rely on (:func:`validate_class_g`):

    1. boundedness of the derivatives of :math:`g` up to order six;
    2. a single simple minimum and a single simple maximum per period;
    3. evenness of :math:`g` about both extrema;
    4. :math:`h` decreases strictly from :math:`h(0) = a_2` to a root
       :math:`x_0 \\leq \\pi - 0.1` and stays within :math:`[0, a_2]`.

    Potentials are read from plain-text files of ``key = value`` lines
    with keys ``c0``, ``c1``, ... and an optional ``name``. Numbers are
    parsed exactly with :class:`decimal.Decimal`:

    .. code-block:: python

        >>> from pyhill.potential import PotentialSpec, eval_g, validate_class_g
        >>> spec = PotentialSpec.from_string('name = canonical\\nc0 = 2\\nc1 = -1\\n')
        >>> spec.a2, spec.a1
        (1.0, 3.0)
        >>> eval_g(spec, 0.5 * math.pi, derivative_order=1)
        1.0
        >>> validate_class_g(spec).passed
        True

    ==============
    Module details
    ==============
"""

#
#==============================================================================
import decimal
import io
import logging
import math

import numpy as np
from scipy import optimize

from pyhill._fileio import FileObject


#
#==============================================================================
logger = logging.getLogger(__name__)

# cosh(n x) overflows double precision beyond this argument
COSH_LIMIT = 709.0


#
#==============================================================================
class PotentialError(Exception):
    """
        Raised for malformed potentials: missing or non-finite coefficients,
        bad keys in a potential file, or arguments of :math:`h` that would
        overflow.
    """

    pass


#
#==============================================================================
def parse_decimal(text):
    """
        Parse a real number exactly. Accepted forms are decimal literals
        (``'0.25'``, ``'-1e-3'``), ratios of two decimal literals
        (``'2/9'``) and the constant ``'pi'``, optionally negated.
        Non-finite values are rejected.

        :param text: the literal
        :type text: str

        :rtype: :class:`decimal.Decimal`

        :raises ValueError: if the literal is malformed or not finite.
    """

    text = text.strip()
    sign = 1

    if text.startswith('-'):
        sign, text = -1, text[1:].strip()

    try:
        if text == 'pi':
            value = decimal.Decimal(repr(math.pi))
        elif '/' in text:
            num, den = text.split('/')
            value = decimal.Decimal(num.strip()) / decimal.Decimal(den.strip())
        else:
            value = decimal.Decimal(text)
    except (decimal.InvalidOperation, decimal.DivisionByZero, ValueError):
        raise ValueError('cannot parse number \'{0}\''.format(text))

    if not value.is_finite():
        raise ValueError('non-finite number \'{0}\''.format(text))

    return sign * value


#
#==============================================================================
def parse_assignments(file_pointer):
    """
        Read ``key = value`` lines from a file pointer. Empty lines and
        everything after ``#`` are ignored. Keys are lowercased; a repeated
        key is an error.

        :param file_pointer: a text file pointer
        :type file_pointer: file_pointer

        :rtype: list(tuple(str, str))

        :raises ValueError: for a line without ``=`` or a repeated key.
    """

    pairs, seen = [], set()

    for lineno, line in enumerate(file_pointer, 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue

        if '=' not in line:
            raise ValueError('line {0}: expected \'key = value\''.format(lineno))

        key, value = [part.strip() for part in line.split('=', 1)]
        key = key.lower()

        if key in seen:
            raise ValueError('line {0}: repeated key \'{1}\''.format(lineno, key))

        seen.add(key)
        pairs.append((key, value))

    return pairs


#
#==============================================================================
class PotentialSpec(object):
    """
        Immutable cosine-series potential :math:`g(x) = \\sum_{n=0}^N c_n
        \\cos nx`. Objects are hashable, so they can be used as cache keys
        and shared freely between worker processes.

        :param coefficients: the coefficients :math:`c_0, \\ldots, c_N`
        :param name: an optional label

        :type coefficients: iterable(float)
        :type name: str

        :raises PotentialError: if no coefficient is given or some
            coefficient is not finite.
    """

    def __init__(self, coefficients, name=None):
        """
            Constructor.
        """

        coefficients = tuple(float(c) for c in coefficients)

        if not coefficients:
            raise PotentialError('potential has no coefficients')
        if not all(math.isfinite(c) for c in coefficients):
            raise PotentialError('non-finite coefficient in {0}'.format(coefficients))

        self.coefficients = coefficients
        self.name = name

        self.orders = np.arange(len(coefficients), dtype=float)
        self.weights = np.array(coefficients)

    @classmethod
    def from_file(cls, fname, compressed_with='use_ext'):
        """
            Read a potential from a (possibly compressed) file.

            :param fname: file name
            :param compressed_with: compression type as in
                :class:`pyhill._fileio.FileObject`

            :type fname: str
            :type compressed_with: str

            :rtype: :class:`PotentialSpec`
        """

        with FileObject(fname, mode='r', compression=compressed_with) as fobj:
            return cls.from_fp(fobj.fp)

    @classmethod
    def from_fp(cls, file_pointer):
        """
            Read a potential from a file pointer. Only the keys ``name`` and
            ``c0``, ``c1``, ... are allowed; missing intermediate
            coefficients are zero.

            :param file_pointer: a file pointer to read from
            :type file_pointer: file_pointer

            :rtype: :class:`PotentialSpec`
        """

        try:
            pairs = parse_assignments(file_pointer)
        except ValueError as err:
            raise PotentialError(str(err))

        return cls.from_assignments(pairs)

    @classmethod
    def from_string(cls, string):
        """
            Read a potential from a string in the file format.

            :param string: file contents
            :type string: str

            :rtype: :class:`PotentialSpec`
        """

        return cls.from_fp(io.StringIO(string))

    @classmethod
    def from_assignments(cls, pairs):
        """
            Build a potential from already parsed ``(key, value)`` pairs.

            :param pairs: key-value pairs
            :type pairs: list(tuple(str, str))

            :rtype: :class:`PotentialSpec`
        """

        name, coeffs = None, {}

        for key, value in pairs:
            if key == 'name':
                name = value
            elif key.startswith('c') and key[1:].isdigit():
                try:
                    coeffs[int(key[1:])] = parse_decimal(value)
                except ValueError as err:
                    raise PotentialError('{0}: {1}'.format(key, err))
            else:
                raise PotentialError('unknown potential key \'{0}\''.format(key))

        if not coeffs:
            raise PotentialError('potential has no coefficients')

        return cls([float(coeffs.get(n, 0)) for n in range(max(coeffs) + 1)], name=name)

    def to_assignments(self):
        """
            Inverse of :meth:`from_assignments`; reals are written with
            17 significant digits.

            :rtype: list(tuple(str, str))
        """

        pairs = [('name', self.name)] if self.name else []
        return pairs + [('c{0}'.format(n), '{0:.17g}'.format(c)) for n, c in enumerate(self.coefficients)]

    @property
    def order(self):
        """
            Highest harmonic :math:`N` of the series.
        """

        return len(self.coefficients) - 1

    @property
    def a2(self):
        """
            Minimum of :math:`g` over the extrema candidates 0 and
            :math:`\\pi`.
        """

        return min(eval_g(self, 0.0), eval_g(self, math.pi))

    @property
    def a1(self):
        """
            Maximum of :math:`g` over the extrema candidates 0 and
            :math:`\\pi`.
        """

        return max(eval_g(self, 0.0), eval_g(self, math.pi))

    @property
    def x_min(self):
        """
            Location of the minimum, 0 for a canonical potential.
        """

        return 0.0 if eval_g(self, 0.0) <= eval_g(self, math.pi) else math.pi

    @property
    def x_max(self):
        """
            Location of the maximum, :math:`\\pi` for a canonical potential.
        """

        return math.pi - self.x_min

    def reflected(self):
        """
            The same potential seen from an origin shifted by :math:`\\pi`,
            i.e. :math:`c_n \\mapsto (-1)^n c_n`.

            :rtype: :class:`PotentialSpec`
        """

        return PotentialSpec([c if n % 2 == 0 else -c for n, c in enumerate(self.coefficients)],
                name=self.name)

    def __eq__(self, other):
        return isinstance(other, PotentialSpec) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return 'PotentialSpec({0}, name={1})'.format(list(self.coefficients), repr(self.name))


#
#==============================================================================
def canonical():
    """
        The project-wide test potential :math:`g(x) = 2 - \\cos x` with
        :math:`a_2 = 1` and :math:`a_1 = 3`.

        :rtype: :class:`PotentialSpec`
    """

    return PotentialSpec([2.0, -1.0], name='canonical')


#
#==============================================================================
def normalize(spec):
    """
        Return the potential with its minimum at the origin, reflecting it if the
        minimum sits at :math:`\\pi`.

        :param spec: a potential
        :type spec: :class:`PotentialSpec`

        :rtype: :class:`PotentialSpec`
    """

    if spec.x_min != 0.0:
        return spec.reflected()

    return spec


#
#==============================================================================
def eval_g(spec, x, derivative_order=0):
    """
        Evaluate :math:`g^{(k)}(x)` by termwise differentiation of the
        cosine series. Works on scalars and on numpy arrays.

        :param spec: the potential
        :param x: point(s) in radians
        :param derivative_order: :math:`k \\in \\{0, \\ldots, 6\\}`

        :type spec: :class:`PotentialSpec`
        :type x: float or numpy.ndarray
        :type derivative_order: int

        :rtype: float or numpy.ndarray
    """

    assert 0 <= derivative_order <= 6, 'Derivative order must be within 0..6'

    xs = np.asarray(x, dtype=float)
    phase = np.multiply.outer(xs, spec.orders)
    scale = spec.weights * spec.orders ** derivative_order

    # d^k/dx^k cos(nx) cycles through cos, -sin, -cos, sin
    quarter = derivative_order % 4
    if quarter == 0:
        trig = np.cos(phase)
    elif quarter == 1:
        trig = -np.sin(phase)
    elif quarter == 2:
        trig = -np.cos(phase)
    else:
        trig = np.sin(phase)

    res = trig @ scale
    return float(res) if res.ndim == 0 else res


#
#==============================================================================
def eval_h(spec, x, derivative_order=0):
    """
        Evaluate the continuation :math:`h(x) = g(ix) = \\sum_n c_n\\cosh
        nx` or its derivatives. :math:`h` is even and :math:`h(0) = g(0)`.

        :param spec: the potential
        :param x: point(s) with :math:`|x| \\leq \\pi`
        :param derivative_order: :math:`k \\in \\{0, \\ldots, 6\\}`

        :type spec: :class:`PotentialSpec`
        :type x: float or numpy.ndarray
        :type derivative_order: int

        :rtype: float or numpy.ndarray

        :raises PotentialError: if :math:`\\cosh(Nx)` would overflow.
    """

    assert 0 <= derivative_order <= 6, 'Derivative order must be within 0..6'

    xs = np.asarray(x, dtype=float)
    assert np.all(np.abs(xs) <= math.pi + 1e-12), 'h is defined for |x| <= pi only'

    if spec.order * float(np.max(np.abs(xs), initial=0.0)) > COSH_LIMIT:
        raise PotentialError('cosh overflow: N|x| exceeds {0}'.format(COSH_LIMIT))

    phase = np.multiply.outer(xs, spec.orders)
    scale = spec.weights * spec.orders ** derivative_order
    trig = np.cosh(phase) if derivative_order % 2 == 0 else np.sinh(phase)

    res = trig @ scale
    return float(res) if res.ndim == 0 else res


#
#==============================================================================
def continuation_root(spec):
    """
        The first root :math:`x_0` of :math:`h` on :math:`(0, \\pi]`,
        located on a grid and refined by bracketed root finding.

        :param spec: a canonical potential
        :type spec: :class:`PotentialSpec`

        :rtype: float

        :raises PotentialError: if :math:`h` has no root on
            :math:`(0, \\pi]`.
    """

    grid = np.linspace(0.0, math.pi, 1025)
    vals = eval_h(spec, grid)

    below = np.nonzero(vals <= 0.0)[0]
    if below.size == 0 or below[0] == 0:
        raise PotentialError('h has no root on (0, pi]')

    i = below[0]
    if vals[i] == 0.0:
        return float(grid[i])

    return optimize.brentq(lambda t: eval_h(spec, t), grid[i - 1], grid[i], xtol=1e-15, rtol=4 * np.finfo(float).eps)


#
#==============================================================================
class ClassGReport(object):
    """
        Outcome of :func:`validate_class_g`. Per-condition verdicts are kept
        in :attr:`conditions`, offending sample points in :attr:`witnesses`
        and free-form remarks (e.g. origin reindexing) in :attr:`notes`.
        :attr:`spec` is the normalized potential that was checked and
        :attr:`x0` the root of :math:`h` (or ``None``).
    """

    names = ('smoothness', 'extrema', 'evenness', 'continuation')

    def __init__(self, spec):
        """
            Constructor.
        """

        self.spec = spec
        self.conditions = dict((name, False) for name in self.names)
        self.witnesses = dict((name, []) for name in self.names)
        self.notes = []
        self.x0 = None

    @property
    def passed(self):
        """
            True iff every condition holds.
        """

        return all(self.conditions.values())

    def rows(self):
        """
            Rows ``(condition, verdict, witnesses)`` for tabular output.
        """

        for name in self.names:
            points = ' '.join('{0:.6g}'.format(x) for x in self.witnesses[name][:8])
            yield name, self.conditions[name], points

    def __repr__(self):
        return 'ClassGReport(passed={0}, conditions={1})'.format(self.passed, self.conditions)


#
#==============================================================================
def validate_class_g(spec, grid_size=1024, margin=0.1):
    """
        Check the admissibility conditions of a potential numerically on a
        uniform grid of :math:`[0, \\pi]`. A potential with its minimum at
        :math:`\\pi` is reflected first, which is recorded in the report's
        notes. The function never raises for an inadmissible potential; it
        returns a failing report instead.

        :param spec: the potential
        :param grid_size: number of grid intervals, at least 256
        :param margin: required distance of :math:`x_0` from :math:`\\pi`

        :type spec: :class:`PotentialSpec`
        :type grid_size: int
        :type margin: float

        :rtype: :class:`ClassGReport`

        .. code-block:: python

            >>> report = validate_class_g(PotentialSpec([2.0, 0.0, -1.0]))
            >>> report.conditions['extrema']
            False
    """

    assert grid_size >= 256, 'Grid must have at least 256 intervals'

    if not all(math.isfinite(c) for c in spec.coefficients):
        raise PotentialError('non-finite coefficients')

    canon = normalize(spec)
    report = ClassGReport(canon)

    if canon is not spec:
        report.notes.append('reindexed: minimum found at pi, origin moved there')

    grid = np.linspace(0.0, math.pi, grid_size + 1)
    inner = grid[1:-1]
    scale = max(1.0, float(np.max(np.abs(canon.weights))))

    # (1) derivatives up to order six stay bounded
    report.conditions['smoothness'] = all(np.all(np.isfinite(eval_g(canon, grid, k))) for k in range(7))

    # (2) one simple minimum at 0 and one simple maximum at pi
    slope = eval_g(canon, inner, 1)
    bad = inner[slope <= 0.0]
    report.witnesses['extrema'].extend(bad.tolist())
    curv_min, curv_max = eval_g(canon, 0.0, 2), eval_g(canon, math.pi, 2)
    if curv_min <= 0.0:
        report.witnesses['extrema'].append(0.0)
    if curv_max >= 0.0:
        report.witnesses['extrema'].append(math.pi)
    if canon.a2 <= 0.0:
        report.notes.append('minimum value a2 = {0:.6g} is not positive'.format(canon.a2))
    report.conditions['extrema'] = bad.size == 0 and curv_min > 0.0 and curv_max < 0.0 and canon.a2 > 0.0

    # (3) evenness about both extrema
    sym = np.linspace(-math.pi, math.pi, grid_size + 1)
    skew = np.abs(eval_g(canon, sym) - eval_g(canon, -sym))
    skew_max = np.abs(eval_g(canon, math.pi + sym) - eval_g(canon, math.pi - sym))
    odd = sym[(skew > 1e-12 * scale) | (skew_max > 1e-12 * scale)]
    report.witnesses['evenness'].extend(odd.tolist())
    report.conditions['evenness'] = odd.size == 0

    # (4) the continuation h decreases from a2 to a root x0 <= pi - margin
    if canon.order * math.pi > COSH_LIMIT:
        report.notes.append('continuation not evaluated: cosh overflow')
        return report

    try:
        x0 = continuation_root(canon)
    except PotentialError as err:
        report.notes.append(str(err))
        return report

    report.x0 = x0
    well = grid[(grid > 0.0) & (grid <= x0)]
    hval, hslope = eval_h(canon, well), eval_h(canon, well, 1)
    tol = 1e-12 * scale
    bad = well[(hslope >= 0.0) | (hval < -tol) | (hval > canon.a2 + tol)]
    report.witnesses['continuation'].extend(bad.tolist())

    if x0 > math.pi - margin:
        report.witnesses['continuation'].append(x0)
        report.notes.append('root of h at {0:.6g} is closer than {1} to pi'.format(x0, margin))

    report.conditions['continuation'] = bad.size == 0 and x0 <= math.pi - margin

    if not report.passed:
        logger.info('class-G validation failed: %s', report.conditions)

    return report


#
#==============================================================================
def fourier_advisory(spec):
    """
        Evaluate the sufficient Fourier-coefficient conditions for
        admissibility of a canonical potential: :math:`c_n \\leq 0` for
        :math:`n \\geq 1`, :math:`|c_1| \\leq \\frac{\\pi}{2}\\sum_{n\\geq
        2} n|c_n|` and :math:`\\sum_{n\\geq 1}|c_n| < c_0 < \\sum_{n\\geq
        1}|c_n|\\cosh \\pi n`. This is advisory only: :math:`2 - \\cos x` is
        admissible yet fails the second inequality, so
        :func:`validate_class_g` does not use it.

        :param spec: the potential
        :type spec: :class:`PotentialSpec`

        :rtype: dict(str, bool)
    """

    c = spec.weights
    n = spec.orders
    tail = np.abs(c[1:])

    return {
        'nonpositive': bool(np.all(c[1:] <= 0.0)),
        'first_harmonic': bool(abs(c[1]) <= 0.5 * math.pi * np.sum(n[2:] * tail[1:])) if spec.order >= 1 else False,
        'mean_level': bool(np.sum(tail) < c[0] < np.sum(tail * np.cosh(math.pi * n[1:])))
    }
