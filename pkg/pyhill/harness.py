#!/usr/bin/env python
#-*- coding:utf-8 -*-
##
## harness.py
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

        RunConfig
        ComparisonRow
        SelfTestReport
        ConfigError
        UnmatchedEigenvalue

    ==================
    Module description
    ==================

    Orchestration of the package: run configurations, the comparison of
    asymptotic eigenvalues with the shooting oracle, the transition sweep
    across :math:`a = a_2`, calibration of the remainder constants, the self
    test and the command-line interface ``pyhill``.

    A run is described by a plain-text configuration of ``key = value``
    lines, for instance:

    .. code-block:: none

        # canonical potential g(x) = 2 - cos x
        name = canonical
        c0 = 2
        c1 = -1
        a = 0.5, 1, 2
        p_min = 10
        p_max = 40
        budget_indefinite = 0.07
        budget_definite = 0.25

    Every key is optional, but a configuration file must contain at least
    one. Unknown keys, malformed or non-finite numbers are rejected with
    :class:`ConfigError`. The values of ``a`` are either a comma-separated
    list or a ``start:stop:step`` range, evaluated in exact decimal
    arithmetic so that e.g. ``0.7:1.3:0.05`` contains ``1`` exactly.

    From Python, the comparison is run as follows:

    .. code-block:: python

        >>> from pyhill.harness import RunConfig, compare
        >>> config = RunConfig(from_string='a = 2\\np_min = 10\\np_max = 12\\n')
        >>> rows = compare(config)
        >>> all(row.residual_scaled <= row.budget for row in rows)
        True

    The command-line interface writes one CSV table per command; see
    :func:`usage` for the options. ``selftest`` runs reduced versions of all
    invariant checks of the package and exits with a nonzero status if any
    fails.

    ==============
    Module details
    ==============
"""

#
#==============================================================================
import decimal
import getopt
import io
import logging
import math
import multiprocessing
import os
import sys
import time

import numpy as np

from pyhill import __version__
from pyhill._fileio import FileObject
from pyhill._utils import CSVWriter
from pyhill.actions import NoRoot, action_F, alpha_squares, geometry, k_of_b, zeta2_residual
from pyhill.asymptotics import BUDGET_DEFINITE, BUDGET_INDEFINITE, BUDGET_LEMMA, AmbiguousOrder, Asymptotics, \
        BranchIndex, DegenerateAction
from pyhill.oracle import Oracle, OracleError
from pyhill.potential import PotentialError, PotentialSpec, canonical, eval_g, eval_h, \
        normalize, parse_assignments, parse_decimal, validate_class_g
from pyhill.specfun import arctan_exp, arg_gamma, arg_gamma_reference, h_branch, h_minimum, \
        h_pm, set_arg_gamma_bias


#
#==============================================================================
logger = logging.getLogger(__name__)

# CSV headers per command
HEADERS = {
    'geometry': ['a', 'region', 'x2', 'alpha_sq', 'alpha2_sq', 'F', 'zeta2'],
    'hfun': ['x', 'H_plus', 'H_minus', 'arg_gamma'],
    'spectrum': ['p', 'sign', 'lambda0', 'lambda', 'b2', 'gap_pred', 'region'],
    'oracle': ['lambda', 'symmetry', 'nodes_half', 'nodes_full', 'discriminant_residual'],
    'validate': ['condition', 'passed', 'witnesses']
}

COMMANDS = ('validate', 'geometry', 'hfun', 'spectrum', 'oracle', 'compare', 'sweep', 'selftest',
        'calibrate')

# slack applied to the largest observed ratio by calibrate()
CALIBRATION_SLACK = 2.0


#
#==============================================================================
class ConfigError(Exception):
    """
        Raised for invalid run configurations.
    """

    pass


#
#==============================================================================
class UnmatchedEigenvalue(Exception):
    """
        No oracle eigenvalue with the required symmetry and node count was
        found in the search window. Reported, not fatal.
    """

    pass


#
#==============================================================================
class RunConfig(object):
    """
        Settings of a run. Created with the built-in defaults (canonical
        potential, :math:`a = 2`, :math:`10 \\leq p \\leq 40`) and
        optionally updated from a configuration file, file pointer or
        string.

        :param from_file: configuration file name
        :param from_fp: file pointer to read from
        :param from_string: configuration text

        :type from_file: str
        :type from_fp: file_pointer
        :type from_string: str

        Known keys (with defaults): ``name`` and ``c0``, ``c1``, ... (the
        potential), ``a`` (``2``), ``p_min`` (``10``), ``p_max`` (``40``),
        ``sweep_p`` (``30``), ``a0`` (from ``a0_margin``), ``a0_margin``
        (``0.5``), ``collar`` (``pi``), ``lambda_max`` (``500``),
        ``b2_exponent`` (``2/9``), ``b_exponent`` (``1/3``),
        ``budget_indefinite`` (``0.07``), ``budget_definite`` (``0.25``),
        ``budget_lemma`` (``1``), ``refine`` (``none``), ``rtol``
        (``1e-12``), ``jobs`` (``1``) and ``out`` (``-``).
    """

    reals = ('a0', 'a0_margin', 'collar', 'lambda_max', 'b2_exponent', 'b_exponent',
            'budget_indefinite', 'budget_definite', 'budget_lemma', 'rtol')
    integers = ('p_min', 'p_max', 'sweep_p', 'jobs')
    strings = ('refine', 'out')

    def __init__(self, from_file=None, from_fp=None, from_string=None):
        """
            Constructor.
        """

        self.spec = canonical()
        self.name = 'canonical'
        self.a_grid = [2.0]
        self.a_text = '2'

        self.p_min, self.p_max, self.sweep_p = 10, 40, 30
        self.a0, self.a0_margin, self.collar = None, 0.5, math.pi
        self.lambda_max = 500.0
        self.b2_exponent, self.b_exponent = 2.0 / 9.0, 1.0 / 3.0
        self.budget_indefinite, self.budget_definite = BUDGET_INDEFINITE, BUDGET_DEFINITE
        self.budget_lemma = BUDGET_LEMMA
        self.refine, self.rtol, self.jobs, self.out = 'none', 1e-12, 1, '-'

        if from_file:
            self.from_file(from_file)
        elif from_fp:
            self.from_fp(from_fp)
        elif from_string:
            self.from_string(from_string)

    def from_file(self, fname, compressed_with='use_ext'):
        """
            Read a (possibly compressed) configuration file.
        """

        with FileObject(fname, mode='r', compression=compressed_with) as fobj:
            self.from_fp(fobj.fp)

    def from_string(self, string):
        """
            Read a configuration from a string.
        """

        self.from_fp(io.StringIO(string))

    def from_fp(self, file_pointer):
        """
            Read a configuration from a file pointer and validate it.

            :raises ConfigError: for empty configurations, unknown keys,
                malformed or non-finite values and inconsistent ranges.
        """

        try:
            pairs = parse_assignments(file_pointer)
        except ValueError as err:
            raise ConfigError(str(err))

        if not pairs:
            raise ConfigError('empty configuration')

        potential = []

        for key, value in pairs:
            if key == 'name' or (key.startswith('c') and key[1:].isdigit()):
                potential.append((key, value))
                if key == 'name':
                    self.name = value
            elif key == 'a':
                self.a_grid, self.a_text = self.parse_grid(value), value
            elif key in self.reals:
                setattr(self, key, None if key == 'a0' and value.lower() == 'none' else self._real(key, value))
            elif key in self.integers:
                setattr(self, key, self._integer(key, value))
            elif key in self.strings:
                setattr(self, key, value)
            else:
                raise ConfigError('unknown configuration key \'{0}\''.format(key))

        if any(key != 'name' for key, _ in potential):
            try:
                spec = PotentialSpec.from_assignments(potential)
            except PotentialError as err:
                raise ConfigError(str(err))

            self.spec = normalize(spec)
            if self.spec is not spec:
                logger.info('potential reindexed: minimum moved to the origin')

        self.validate()

    @staticmethod
    def _real(key, value):
        try:
            return float(parse_decimal(value))
        except ValueError as err:
            raise ConfigError('{0}: {1}'.format(key, err))

    @staticmethod
    def _integer(key, value):
        try:
            number = parse_decimal(value)
        except ValueError as err:
            raise ConfigError('{0}: {1}'.format(key, err))

        if number != number.to_integral_value():
            raise ConfigError('{0}: expected an integer, got \'{1}\''.format(key, value))

        return int(number)

    @staticmethod
    def parse_grid(text):
        """
            Parse a list ``'0.5, 1, 2'`` or a range ``'0.7:1.3:0.05'`` (stop
            included) of reals in exact decimal arithmetic.

            :rtype: list(float)
        """

        try:
            if ':' in text:
                start, stop, step = [parse_decimal(part) for part in text.split(':')]
                if step <= 0 or stop < start:
                    raise ConfigError('bad range \'{0}\''.format(text))

                values, value = [], start
                while value <= stop:
                    values.append(float(value))
                    value += step
            else:
                values = [float(parse_decimal(part)) for part in text.split(',') if part.strip()]
        except (ValueError, decimal.InvalidOperation) as err:
            raise ConfigError('a: {0}'.format(err))

        if not values:
            raise ConfigError('a: empty grid')

        return values

    def validate(self):
        """
            Check value ranges.
        """

        if not 1 <= self.p_min <= self.p_max:
            raise ConfigError('need 1 <= p_min <= p_max, got {0} and {1}'.format(self.p_min, self.p_max))
        if self.sweep_p < 1 or self.jobs < 1:
            raise ConfigError('sweep_p and jobs must be positive')
        if self.refine not in ('none', 'fixed_point'):
            raise ConfigError('refine must be \'none\' or \'fixed_point\'')
        if min(self.rtol, self.lambda_max, self.collar, self.a0_margin) <= 0.0:
            raise ConfigError('rtol, lambda_max, collar and a0_margin must be positive')
        if min(self.budget_indefinite, self.budget_definite, self.budget_lemma) <= 0.0:
            raise ConfigError('budget constants must be positive')
        if any(not 0.0 <= a < self.spec.a1 for a in self.a_grid):
            raise ConfigError('a-grid must lie in [0, a1) = [0, {0})'.format(self.spec.a1))

    def asymptotics(self):
        """
            :class:`pyhill.asymptotics.Asymptotics` with the configured
            thresholds and constants.
        """

        return Asymptotics(self.spec, a0=self.a0, margin=self.a0_margin, collar=self.collar,
                p_min=min(5, self.p_min, self.sweep_p), budget_indefinite=self.budget_indefinite,
                budget_definite=self.budget_definite, budget_lemma=self.budget_lemma,
                b2_exponent=self.b2_exponent, b_exponent=self.b_exponent)

    def oracle(self):
        """
            :class:`pyhill.oracle.Oracle` with the configured tolerance.
        """

        return Oracle(self.spec, rtol=self.rtol, atol=self.rtol, lambda_max=self.lambda_max)

    def to_string(self):
        """
            Canonical configuration text; reading it back gives the same
            settings.
        """

        lines = ['name = {0}'.format(self.name)]
        lines += ['c{0} = {1:.17g}'.format(n, c) for n, c in enumerate(self.spec.coefficients)]
        lines.append('a = {0}'.format(self.a_text))

        for key in self.integers + self.reals + self.strings:
            value = getattr(self, key)
            if value is None:
                lines.append('{0} = none'.format(key))
            elif isinstance(value, float):
                lines.append('{0} = {1:.17g}'.format(key, value))
            else:
                lines.append('{0} = {1}'.format(key, value))

        return '\n'.join(lines) + '\n'


#
#==============================================================================
class ComparisonRow(object):
    """
        One asymptotic eigenvalue next to its oracle counterpart. The
        residual and the budget are both in scaled units,
        :math:`|\\lambda_{oracle} - \\lambda_{asym}|F(a)`. Gap columns refer
        to the gap :math:`\\lambda_-(a, p + 1) - \\lambda_+(a, p)` above the
        pair :math:`p`. Missing oracle data are ``nan``.
    """

    fields = ('a', 'p', 'sign', 'region', 'lambda_asym', 'lambda_oracle', 'residual_scaled',
            'budget', 'b2', 'nodes_full', 'gap_observed', 'gap_predicted')

    def __init__(self, **kwargs):
        """
            Constructor.
        """

        for name in self.fields:
            setattr(self, name, kwargs[name])

    @property
    def key(self):
        """
            Sort key ``(a, p, sign)`` with the lower branch first.
        """

        return self.a, self.p, 0 if self.sign == '-' else 1

    @property
    def matched(self):
        """
            Whether an oracle eigenvalue was found.
        """

        return not math.isnan(self.lambda_oracle)

    def row(self):
        """
            Values in the order of :attr:`fields`.
        """

        return [getattr(self, name) for name in self.fields]

    def __repr__(self):
        return 'ComparisonRow(a={0}, p={1}, sign={2}, residual_scaled={3})'.format(self.a, self.p,
                self.sign, self.residual_scaled)


#
#==============================================================================
def match_eigenvalue(table, symmetry, p, a):
    """
        Oracle eigenvalue of the given symmetry with :math:`2p` zeros per
        period.

        :raises UnmatchedEigenvalue: if there is none.
    """

    try:
        return table[(symmetry, p)]
    except KeyError:
        raise UnmatchedEigenvalue('no {0} eigenvalue with {1} nodes at a={2}'.format(symmetry, 2 * p, a))


def _compare_worker(task):
    """
        Comparison rows of a single value of :math:`a`.
    """

    config, a, p_min, p_max = task
    asym, oracle = config.asymptotics(), config.oracle()

    F = asym.action(a)
    window = ((2.0 * math.pi * p_min - math.pi) / F, (2.0 * math.pi * (p_max + 1) + math.pi) / F)
    started = time.time()

    table = {}
    for eig in oracle.periodic_spectrum(a, window):
        if (eig.symmetry, eig.p) in table:
            logger.warning('two %s eigenvalues with %d nodes at a=%g', eig.symmetry, eig.nodes_full, a)
            continue
        table[(eig.symmetry, eig.p)] = eig

    logger.info('oracle at a=%g found %d eigenvalues in %.1fs', a, len(table), time.time() - started)

    rows = []
    for p in range(p_min, p_max + 1):
        try:
            gap = match_eigenvalue(table, 'D', p + 1, a).lam - match_eigenvalue(table, 'N', p, a).lam
        except UnmatchedEigenvalue:
            gap = math.nan

        for sign in (-1, +1):
            branch = asym.branch_lambda(a, p, sign, config.refine)

            try:
                eig = match_eigenvalue(table, 'D' if sign < 0 else 'N', p, a)
                lam, nodes = eig.lam, eig.nodes_full
            except UnmatchedEigenvalue as err:
                logger.warning(str(err))
                lam, nodes = math.nan, None

            rows.append(ComparisonRow(a=a, p=p, sign=BranchIndex(p, sign).symbol, region=branch.region,
                lambda_asym=branch.lam, lambda_oracle=lam, residual_scaled=abs(lam - branch.lam) * F,
                budget=asym.scaled_budget(a, branch.lambda0), b2=branch.b2_used, nodes_full=nodes,
                gap_observed=gap, gap_predicted=asym.gap_width(a, branch.lambda0)))

    return rows


def compare(config, a_grid=None, p_range=None):
    """
        Compare :math:`\\lambda_\\pm(a, p)` with the oracle for every
        :math:`a` of the grid and every :math:`p` of the range. Oracle
        eigenvalues are matched by symmetry (``'D'`` with the lower branch,
        ``'N'`` with the upper one) and node count :math:`2p`, never by
        proximity. Values of :math:`a` are processed in parallel when
        ``config.jobs > 1``.

        :param config: run configuration
        :param a_grid: values of :math:`a`, ``config.a_grid`` by default
        :param p_range: ``(p_min, p_max)``, the configured range by default

        :type config: :class:`RunConfig`
        :type a_grid: list(float)
        :type p_range: tuple(int, int)

        :rtype: list(:class:`ComparisonRow`) sorted by ``(a, p, sign)``

        :raises PotentialError: if the potential is not admissible.
    """

    report = validate_class_g(config.spec)
    if not report.passed:
        raise PotentialError('potential fails validation: {0}'.format(report.conditions))

    a_grid = config.a_grid if a_grid is None else a_grid
    p_min, p_max = (config.p_min, config.p_max) if p_range is None else p_range
    tasks = [(config, a, p_min, p_max) for a in a_grid]

    if config.jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(processes=min(config.jobs, len(tasks))) as pool:
            chunks = pool.map(_compare_worker, tasks)
    else:
        chunks = [_compare_worker(task) for task in tasks]

    return sorted([row for chunk in chunks for row in chunk], key=lambda row: row.key)


#
#==============================================================================
def sweep_transition(config):
    """
        Comparison rows for the fixed branch number ``config.sweep_p`` over
        the configured grid of :math:`a`, typically crossing :math:`a_2`.

        :rtype: list(:class:`ComparisonRow`)
    """

    return compare(config, p_range=(config.sweep_p, config.sweep_p))


def jump_statistic(values):
    """
        Largest consecutive jump of a sequence divided by the median jump;
        values of order one indicate a continuous curve on a uniform grid.

        :param values: sequence sampled on a uniform grid
        :type values: iterable(float)

        :rtype: float
    """

    jumps = np.abs(np.diff(np.asarray(list(values), dtype=float)))
    assert jumps.size >= 1, 'At least two values are required'

    median = float(np.median(jumps))
    return float(np.max(jumps)) / median if median > 0.0 else math.inf


def remainder_slope(rows):
    """
        Trend of the scaled residual against its predicted decay. For each
        branch sign, :math:`\\ln(r_p / s(\\lambda_p))` is fitted by least
        squares against :math:`\\ln\\lambda_p`, where :math:`r_p` is
        ``residual_scaled`` and :math:`s(\\lambda) = \\lambda^{-2/3}\\ln
        \\lambda` in the indefinite regions (``A1`` ... ``A3``) and
        :math:`\\lambda^{-1/2}(\\ln\\lambda)^{1/2}` in ``A4`` and ``A5``.
        The larger of the two slopes is returned; a value not above
        :math:`0.1` means the residual decays at least as predicted.

        :param rows: matched comparison rows at one value of :math:`a`,
            at least two per sign
        :type rows: list(:class:`ComparisonRow`)

        :rtype: float
    """

    slopes = []

    for sign in ('-', '+'):
        picked = [row for row in rows if row.sign == sign and row.matched]
        assert len(picked) >= 2, 'At least two matched rows per sign are required'

        lams = np.array([row.lambda_asym for row in picked])
        logs = np.log(lams)
        scales = np.array([lam ** (-2.0 / 3.0) * log if row.region in ('A1', 'A2', 'A3') else
            math.sqrt(log / lam) for row, lam, log in zip(picked, lams, logs)])

        # keep the logarithm of an exact match finite
        residuals = np.maximum([row.residual_scaled for row in picked], np.finfo(float).tiny)

        slopes.append(float(np.polyfit(logs, np.log(residuals / scales), 1)[0]))
        logger.debug('remainder slope of lambda%s: %.3f', sign, slopes[-1])

    return max(slopes)


def splitting_decay(config, a=0.5, ps=(10, 20, 30, 40)):
    """
        Splitting :math:`|\\lambda^N - \\lambda^D|` of the oracle pair with
        :math:`2p` zeros for each :math:`p` in ``ps``. In the definite
        regime it decays faster than any power of :math:`p`.

        :rtype: list(tuple(int, float, float, float))
            of ``(p, lambda_D, lambda_N, splitting)``
    """

    asym, oracle = config.asymptotics(), config.oracle()
    result = []

    for p in ps:
        eigs = oracle.shoot_eigen(a, 'both', asym.cell_interval(a, p))
        table = dict(((eig.symmetry, eig.p), eig) for eig in eigs)

        lower, upper = match_eigenvalue(table, 'D', p, a), match_eigenvalue(table, 'N', p, a)
        result.append((p, lower.lam, upper.lam, abs(upper.lam - lower.lam)))
        logger.info('splitting at a=%g, p=%d: %.3e', a, p, result[-1][3])

    return result


def calibrate(config):
    """
        Suggest remainder constants from a comparison run: the largest
        observed ratio of residual to unit budget, times a slack factor of
        two. Constants without data keep their configured value.

        :rtype: dict(str, float) with keys ``budget_indefinite``,
            ``budget_definite`` and ``budget_lemma``
    """

    rows = [row for row in compare(config) if row.matched]
    unit = Asymptotics(config.spec, a0=config.a0, margin=config.a0_margin, collar=config.collar,
            p_min=1, b2_exponent=config.b2_exponent, b_exponent=config.b_exponent)

    ratios = {'budget_indefinite': [], 'budget_definite': [], 'budget_lemma': []}

    for row in rows:
        lam0 = unit.lambda0(row.a, row.p)
        key = 'budget_indefinite' if row.a >= config.spec.a2 else 'budget_definite'
        ratios[key].append(row.residual_scaled / unit.scaled_budget(row.a, lam0))

        sign = -1 if row.sign == '-' else 1
        residual = unit.lemma_residual(row.a, row.lambda_oracle, row.p, sign, region=row.region)
        ratios['budget_lemma'].append(abs(residual) / unit.lemma_budget(row.a, row.lambda_oracle, region=row.region))

    suggested = {}
    for key, values in ratios.items():
        if values:
            suggested[key] = CALIBRATION_SLACK * max(values)
        else:
            suggested[key] = getattr(config, key)
            logger.warning('no data to calibrate %s, keeping %g', key, suggested[key])

    return suggested


#
#==============================================================================
class SelfTestReport(object):
    """
        Outcome of :func:`selftest`: a list of ``(suite, passed, detail,
        seconds)`` records.
    """

    def __init__(self):
        """
            Constructor.
        """

        self.suites = []

    @property
    def passed(self):
        """
            True iff every suite passed.
        """

        return all(ok for _, ok, _, _ in self.suites)

    def lines(self):
        """
            Report lines: one ``c`` line per suite and a final ``s`` line.
        """

        for name, ok, detail, seconds in self.suites:
            yield 'c {0}: {1} ({2}) [{3:.2f}s]'.format(name, 'PASS' if ok else 'FAIL', detail, seconds)

        yield 's {0}'.format('PASSED' if self.passed else 'FAILED')


def _suite_potential():
    xs = np.linspace(0.0, math.pi, 1001)
    spec = canonical()

    skew = max(np.max(np.abs(eval_g(spec, xs) - eval_g(spec, -xs))), np.max(np.abs(eval_h(spec, xs) - eval_h(spec, -xs))))
    checks = [validate_class_g(spec).passed, validate_class_g(PotentialSpec([2.0, 1.0])).passed,
            not validate_class_g(PotentialSpec([2.0, 0.0, -1.0])).conditions['extrema'], skew <= 1e-12]

    return all(checks), 'checks={0}'.format(checks)


def _suite_arg_gamma():
    points = [0.1, 0.5, 1.0, 10.0, 20.0, 50.0]
    error = max(abs(arg_gamma(x) - arg_gamma_reference(x)) for x in points)

    xs = np.random.RandomState(1).uniform(-30.0, 30.0, 200)
    odd = float(np.max(np.abs(arg_gamma(xs) + arg_gamma(-xs))))

    return error <= 1e-10 and odd <= 1e-14, 'error={0:.2e} oddness={1:.2e}'.format(error, odd)


def _suite_h_identities():
    xs = np.random.RandomState(2).uniform(-20.0, 20.0, 1000)
    hp, hm = h_branch(xs, 1), h_branch(xs, -1)

    diff = float(np.max(np.abs(hp - hm - 2.0 * arctan_exp(xs))))
    refl = max(float(np.max(np.abs(h_branch(-xs, 1) - 0.5 * math.pi + hp))),
            float(np.max(np.abs(h_branch(-xs, -1) + 0.5 * math.pi + hm))))

    return diff <= 1e-12 and refl <= 1e-12, 'difference={0:.2e} reflection={1:.2e}'.format(diff, refl)


def _suite_h_minima():
    xp, hp = h_minimum(1)
    xm, hm = h_minimum(-1)

    ok = abs(xp - 0.0293) <= 2e-3 and abs(hp - 0.25 * math.pi + 0.0293) <= 2e-3 and \
            abs(xm - 1.683) <= 2e-3 and abs(hm + 0.5 * math.pi + 0.02) <= 2e-3 and \
            abs(h_pm(0.0).h_plus - 0.25 * math.pi) <= 1e-15

    return ok, 'x+={0:.5f} x-={1:.5f}'.format(xp, xm)


def _suite_actions():
    spec = canonical()
    beta = math.sqrt(math.pi) * math.gamma(0.75) / math.gamma(1.25)

    f1, f2 = action_F(spec, 1.0) - 4.0 * math.sqrt(2.0), action_F(spec, 2.0) - beta
    zeta = max(abs(zeta2_residual(spec, a, geometry(spec, a).zeta2)) for a in (0.25, 0.5, 1.0, 2.0, 2.9))

    bs = np.linspace(-2.0, 5.0, 71)
    k = k_of_b(bs)
    ident = float(np.max(np.abs(np.arccos(2.0 * k / (1.0 + k * k)) - arctan_exp(bs))))

    values = [action_F(spec, a) for a in np.linspace(0.0, 2.95, 20)]
    monotone = all(x > y for x, y in zip(values, values[1:]))

    ok = abs(f1) <= 1e-9 and abs(f2) <= 1e-9 and zeta <= 1e-10 and ident <= 1e-11 and monotone
    return ok, 'F(1)={0:.1e} F(2)={1:.1e} zeta={2:.1e} k={3:.1e}'.format(f1, f2, zeta, ident)


def _suite_asymptotics():
    asym = Asymptotics(canonical())

    linear = abs(asym.lambda0(2.0, 20) - 2.0 * asym.lambda0(2.0, 10)) <= 1e-12
    at_a2 = abs(asym.gap_width(1.0, 50.0) * asym.action(1.0) - 1.5 * math.pi) <= 1e-12

    orders = asym.order_map(20, 2.0, 26.0) == (BranchIndex(10, 1), ) and \
            asym.order_map(21, 2.0, 26.0) == (BranchIndex(11, -1), ) and \
            len(asym.order_map(20, 0.5, 16.0)) == 2

    try:
        asym.order_map(20, 1.0, 26.0)
        collar = False
    except AmbiguousOrder:
        collar = True

    ok = linear and at_a2 and orders and collar
    return ok, 'linear={0} gap={1} order={2} collar={3}'.format(linear, at_a2, orders, collar)


def _suite_oracle():
    asym, oracle = Asymptotics(canonical()), Oracle(canonical())

    eigs = oracle.periodic_spectrum(2.0, asym.cell_interval(2.0, 10))
    kinds = sorted((eig.symmetry, eig.nodes_full) for eig in eigs)

    worst = max([eig.wronskian_error for eig in eigs] + [0.0])
    budget = max(abs(eig.lam - asym.branch_lambda(2.0, 10, -1 if eig.symmetry == 'D' else 1).lam) *
            asym.action(2.0) / asym.scaled_budget(2.0, asym.lambda0(2.0, 10)) for eig in eigs)

    ok = kinds == [('D', 20), ('N', 20)] and worst <= 1e-9 and budget <= 1.0
    return ok, 'eigenvalues={0} wronskian={1:.1e} budget_ratio={2:.2f}'.format(kinds, worst, budget)


def _suite_transition():
    asym, oracle = Asymptotics(canonical()), Oracle(canonical())

    eigs = oracle.shoot_eigen(1.0, 'both', asym.cell_interval(1.0, 10))
    table = dict(((eig.symmetry, eig.p), eig.lam) for eig in eigs)

    F = asym.action(1.0)
    split = (table[('N', 10)] - table[('D', 10)]) * F
    error = abs(split - 0.5 * math.pi)

    return error <= 2.0 * asym.scaled_budget(1.0, asym.lambda0(1.0, 10)), 'scaled split={0:.6f}'.format(split)


def _suite_derivatives():
    xs = np.linspace(-3.0, 3.0, 101)
    step, worst = 1e-5, 0.0

    for spec in (canonical(), PotentialSpec([2.5, -1.2, -0.1]), PotentialSpec([3.0, -1.0, 0.2, -0.05])):
        for evaluate in (eval_g, eval_h):
            for order in (0, 1, 2, 3):
                central = (evaluate(spec, xs + step, order) - evaluate(spec, xs - step, order)) / (2.0 * step)
                scale = max(1.0, float(np.max(np.abs(central))))
                worst = max(worst, float(np.max(np.abs(evaluate(spec, xs, order + 1) - central))) / scale)

    return worst <= 1e-7, 'difference={0:.1e}'.format(worst)


def _suite_alpha_continuity():
    spec = canonical()
    a2 = spec.a2

    at = alpha_squares(spec, a2)[1]
    below, above = alpha_squares(spec, a2 - 1e-6)[1], alpha_squares(spec, a2 + 1e-6)[1]

    ok = at == 0.0 and 0.0 < below <= 1e-5 and 0.0 < above <= 1e-5
    return ok, 'below={0:.1e} above={1:.1e}'.format(below, above)


def _suite_k_monotone():
    k = k_of_b(np.linspace(-5.0, 5.0, 201))
    ok = bool(np.all(np.diff(k) < 0.0)) and float(np.min(k)) > 0.0 and float(np.max(k)) < 1.0

    return ok, 'range=[{0:.2e}, {1:.4f}]'.format(float(np.min(k)), float(np.max(k)))


def _suite_lemma_consistency():
    asym = Asymptotics(canonical(), budget_indefinite=1.0, budget_definite=1.0)
    worst = 0.0

    for a in (2.0, 0.5):
        for sign in (-1, 1):
            branch = asym.branch_lambda(a, 20, sign)
            error = abs(asym.lemma_root(a, 20, sign) - branch.lam) * asym.action(a)
            worst = max(worst, error / asym.scaled_budget(a, branch.lambda0))

    return worst <= 2.0, 'ratio={0:.3f}'.format(worst)


def _suite_tolerance_halving():
    window = Asymptotics(canonical()).cell_interval(2.0, 10)

    coarse = Oracle(canonical(), rtol=2e-12, atol=2e-12).shoot_eigen(2.0, 'both', window)
    fine = Oracle(canonical(), rtol=1e-12, atol=1e-12).shoot_eigen(2.0, 'both', window)

    drift = max([abs(x.lam - y.lam) / y.lam for x, y in zip(coarse, fine)] + [math.inf if not fine else 0.0])
    ok = len(coarse) == len(fine) == 2 and drift <= 1e-8

    return ok, 'drift={0:.1e}'.format(drift)


def _suite_discriminant():
    asym, oracle = Asymptotics(canonical()), Oracle(canonical())

    half = math.pi / asym.action(2.0)
    window = (asym.lambda0(2.0, 10) - half, asym.lambda0(2.0, 11) + half)

    shot = [eig.lam for eig in oracle.shoot_eigen(2.0, 'both', window)]
    roots = sorted(oracle.discriminant_roots(2.0, window))

    ok = len(roots) == len(shot) == 4 and all(abs(x - y) <= 1e-7 * y for x, y in zip(roots, shot))
    return ok, 'roots={0} shot={1}'.format(len(roots), len(shot))


def _suite_node_law():
    asym, oracle = Asymptotics(canonical()), Oracle(canonical())
    found = []

    for p in (8, 12, 16):
        eigs = oracle.periodic_spectrum(2.0, asym.cell_interval(2.0, p))
        found.append(sorted((eig.symmetry, eig.nodes_full) for eig in eigs) == [('D', 2 * p), ('N', 2 * p)])

    return all(found), 'cells={0}'.format(found)


def _reduced_rows(a, ps):
    config = RunConfig()
    return [row for p in ps for row in compare(config, [a], (p, p))]


def _suite_gap():
    rows = [row for row in _reduced_rows(2.0, (10, 11)) if row.matched]
    F = action_F(canonical(), 2.0)

    worst = max(abs(row.gap_observed - row.gap_predicted) * F / (2.0 * row.budget) for row in rows)
    ok = len(rows) == 4 and worst <= 1.0 and all(row.residual_scaled <= row.budget for row in rows)

    return ok, 'ratio={0:.3f}'.format(worst)


def _suite_remainder_scaling():
    rows = _reduced_rows(2.0, (10, 20, 30))
    slope = remainder_slope(rows)

    return slope <= 0.1, 'slope={0:.3f}'.format(slope)


SUITES = [('potential', _suite_potential), ('arg-gamma', _suite_arg_gamma),
        ('h-identities', _suite_h_identities), ('h-minima', _suite_h_minima),
        ('actions', _suite_actions), ('asymptotics', _suite_asymptotics),
        ('oracle', _suite_oracle), ('transition', _suite_transition),
        ('derivatives', _suite_derivatives), ('alpha-continuity', _suite_alpha_continuity),
        ('k-monotone', _suite_k_monotone), ('lemma-consistency', _suite_lemma_consistency),
        ('tolerance-halving', _suite_tolerance_halving), ('discriminant', _suite_discriminant),
        ('node-law', _suite_node_law), ('gap', _suite_gap), ('remainder-scaling', _suite_remainder_scaling)]


def selftest(bias=0.0):
    """
        Run reduced versions of the invariant suites. A nonzero ``bias`` is
        injected into :func:`pyhill.specfun.arg_gamma` for the duration of
        the run; the arg-gamma and identity suites must then fail.

        :param bias: fault-injection bias
        :type bias: float

        :rtype: :class:`SelfTestReport`
    """

    report = SelfTestReport()
    set_arg_gamma_bias(bias)

    try:
        for name, suite in SUITES:
            started = time.time()

            try:
                ok, detail = suite()
            except (AmbiguousOrder, AssertionError, DegenerateAction, KeyError, NoRoot, OracleError,
                    PotentialError, UnmatchedEigenvalue) as err:
                ok, detail = False, '{0}: {1}'.format(type(err).__name__, err)

            report.suites.append((name, bool(ok), detail, time.time() - started))
            logger.info('suite %s: %s', name, 'pass' if ok else 'fail')
    finally:
        set_arg_gamma_bias(0.0)

    return report


#
#==============================================================================
def parse_options(argv=None):
    """
        Parses command-line options. Returns the command and a dictionary
        of options.
    """

    argv = sys.argv[1:] if argv is None else argv

    try:
        opts, args = getopt.gnu_getopt(argv, 'c:ho:v:',
                ['a=', 'config=', 'help', 'inject-bias=', 'lambda-max=', 'lambda-min=',
                    'no-header-timestamp', 'out=', 'p-max=', 'p-min=', 'refine', 'step=',
                    'symmetry=', 'verbose=', 'x-max=', 'x-min='])
    except getopt.GetoptError as err:
        sys.stderr.write(str(err).capitalize() + '\n')
        usage()
        sys.exit(1)

    options = {'a': None, 'config': None, 'bias': 0.0, 'lambda_min': None, 'lambda_max': None,
            'timestamp': True, 'out': None, 'p_min': None, 'p_max': None, 'refine': False,
            'step': 0.1, 'symmetry': 'both', 'verbose': 0, 'x_min': -5.0, 'x_max': 5.0}

    try:
        for opt, arg in opts:
            if opt == '--a':
                options['a'] = RunConfig.parse_grid(arg)
            elif opt in ('-c', '--config'):
                options['config'] = str(arg)
            elif opt in ('-h', '--help'):
                usage()
                sys.exit(0)
            elif opt == '--inject-bias':
                options['bias'] = float(arg)
            elif opt == '--lambda-max':
                options['lambda_max'] = float(arg)
            elif opt == '--lambda-min':
                options['lambda_min'] = float(arg)
            elif opt == '--no-header-timestamp':
                options['timestamp'] = False
            elif opt in ('-o', '--out'):
                options['out'] = str(arg)
            elif opt == '--p-max':
                options['p_max'] = int(arg)
            elif opt == '--p-min':
                options['p_min'] = int(arg)
            elif opt == '--refine':
                options['refine'] = True
            elif opt == '--step':
                options['step'] = float(arg)
            elif opt == '--symmetry':
                options['symmetry'] = {'d': 'D', 'n': 'N', 'both': 'both'}[arg.lower()]
            elif opt in ('-v', '--verbose'):
                options['verbose'] = int(arg)
            elif opt == '--x-max':
                options['x_max'] = float(arg)
            elif opt == '--x-min':
                options['x_min'] = float(arg)
            else:
                assert False, 'Unhandled option: {0} {1}'.format(opt, arg)
    except (ValueError, KeyError, ConfigError) as err:
        sys.stderr.write('Bad option value: {0}\n'.format(err))
        usage()
        sys.exit(1)

    if len(args) != 1 or args[0] not in COMMANDS:
        sys.stderr.write('Expected exactly one command out of: {0}\n'.format(', '.join(COMMANDS)))
        usage()
        sys.exit(1)

    return args[0], options


#
#==============================================================================
def usage():
    """
        Prints usage message.
    """

    print('Usage:', os.path.basename(sys.argv[0]), '[options] command')
    print('Commands:')
    print('        validate                   Check admissibility of the potential')
    print('        geometry                   Turning points, actions and zeta2 per a')
    print('        hfun                       Tabulate H+, H- and arg Gamma(1/2 + ix)')
    print('        spectrum                   Asymptotic branches lambda+-(a, p)')
    print('        oracle                     Eigenvalues by D/N shooting in a lambda window')
    print('        compare                    Asymptotic vs oracle eigenvalues')
    print('        sweep                      Fixed-p comparison across the a-grid')
    print('        selftest                   Run all invariant suites')
    print('        calibrate                  Suggest remainder budget constants')
    print('Options:')
    print('        --a=<list>                 Values of a (list or start:stop:step)')
    print('                                   Available values: [0, a1) (default = from config)')
    print('        -c, --config=<string>      Run configuration file')
    print('        -h, --help                 Show this message')
    print('        --inject-bias=<float>      Bias added to arg Gamma during selftest')
    print('                                   Available values: any real (default = 0)')
    print('        --lambda-max=<float>       Upper end of the oracle window')
    print('        --lambda-min=<float>       Lower end of the oracle window')
    print('        --no-header-timestamp      Omit the comment line of CSV output')
    print('        -o, --out=<string>         Output file (default = standard output)')
    print('        --p-max=<int>              Largest branch number (default = from config)')
    print('        --p-min=<int>              Smallest branch number (default = from config)')
    print('        --refine                   Use fixed-point refinement in spectrum')
    print('        --step=<float>             Step of the hfun grid (default = 0.1)')
    print('        --symmetry=<string>        Oracle symmetry class')
    print('                                   Available values: d, n, both (default = both)')
    print('        -v, --verbose=<int>        Verbosity level')
    print('                                   Available values: [0 .. 2] (default = 0)')
    print('        --x-max=<float>            Upper end of the hfun grid (default = 5)')
    print('        --x-min=<float>            Lower end of the hfun grid (default = -5)')


#
#==============================================================================
def _write_table(name, header, rows, command, options):
    with CSVWriter(name, header, command=command, timestamp=options['timestamp']) as writer:
        for row in rows:
            writer.write(row)


def _a_values(config, options):
    return options['a'] if options['a'] is not None else config.a_grid


def _p_range(config, options, floor=1):
    p_min = config.p_min if options['p_min'] is None else options['p_min']
    p_max = config.p_max if options['p_max'] is None else options['p_max']

    if not floor <= p_min <= p_max:
        raise ConfigError('need {0} <= p-min <= p-max, got {1} and {2}'.format(floor, p_min, p_max))

    return p_min, p_max


def _run_validate(config, options, out):
    report = validate_class_g(config.spec)

    for note in report.notes:
        logger.info(note)

    _write_table(out, HEADERS['validate'], report.rows(), 'validate', options)
    return 0 if report.passed else 1


def _run_geometry(config, options, out):
    rows = [geometry(config.spec, a, config.asymptotics().a0).row() for a in _a_values(config, options)]
    _write_table(out, HEADERS['geometry'], rows, 'geometry', options)
    return 0


def _run_hfun(config, options, out):
    count = int(round((options['x_max'] - options['x_min']) / options['step'])) + 1
    xs = options['x_min'] + options['step'] * np.arange(count)

    rows = []
    for x in xs:
        ev = h_pm(x)
        rows.append([ev.x, ev.h_plus, ev.h_minus, arg_gamma(ev.x)])

    _write_table(out, HEADERS['hfun'], rows, 'hfun', options)
    return 0


def _run_spectrum(config, options, out):
    asym = config.asymptotics()
    a = _a_values(config, options)[0]
    refinement = 'fixed_point' if options['refine'] else config.refine

    p_min, p_max = _p_range(config, options, asym.p_min)

    rows = []
    for p in range(p_min, p_max + 1):
        for sign in (-1, 1):
            branch = asym.branch_lambda(a, p, sign, refinement)
            rows.append([p, branch.index.symbol, branch.lambda0, branch.lam, branch.b2_used,
                asym.gap_width(a, branch.lambda0), branch.region])

    _write_table(out, HEADERS['spectrum'], rows, 'spectrum', options)
    return 0


def _run_oracle(config, options, out):
    asym, oracle = config.asymptotics(), config.oracle()
    a = _a_values(config, options)[0]

    F = asym.action(a)
    p_min, p_max = _p_range(config, options)

    lo = (2.0 * math.pi * p_min - math.pi) / F if options['lambda_min'] is None else options['lambda_min']
    hi = (2.0 * math.pi * p_max + math.pi) / F if options['lambda_max'] is None else options['lambda_max']
    if not 0.0 < lo < hi:
        raise ConfigError('lambda window ({0}, {1}) must satisfy 0 < min < max'.format(lo, hi))

    rows = [[eig.lam, eig.symmetry, eig.nodes_half, eig.nodes_full, eig.discriminant_residual]
            for eig in oracle.shoot_eigen(a, options['symmetry'], (lo, hi))]

    _write_table(out, HEADERS['oracle'], rows, 'oracle', options)
    return 0


def _run_compare(config, options, out):
    p_range = _p_range(config, options, config.asymptotics().p_min)
    rows = compare(config, _a_values(config, options), p_range)

    _write_table(out, ComparisonRow.fields, [row.row() for row in rows], 'compare', options)

    unmatched = sum(1 for row in rows if not row.matched)
    if unmatched:
        logger.warning('%d rows without an oracle eigenvalue', unmatched)

    for a in sorted(set(row.a for row in rows)):
        picked = [row for row in rows if row.a == a and row.matched]
        if min(sum(1 for row in picked if row.sign == sign) for sign in '-+') >= 2:
            logger.info('remainder slope at a=%g: %.3f', a, remainder_slope(picked))

    return 0


def _run_sweep(config, options, out):
    if options['a'] is not None:
        config.a_grid = options['a']

    rows = sweep_transition(config)
    _write_table(out, ComparisonRow.fields, [row.row() for row in rows], 'sweep', options)

    for sign in ('-', '+'):
        values = [row.lambda_asym for row in rows if row.sign == sign]
        if len(values) > 1:
            logger.info('jump statistic of lambda%s: %.3f', sign, jump_statistic(values))

    return 0


def _run_selftest(config, options, out):
    report = selftest(bias=options['bias'])

    with FileObject(out, mode='w') as fobj:
        for line in report.lines():
            fobj.fp.write(line + '\n')

    return 0 if report.passed else 1


def _run_calibrate(config, options, out):
    for key, value in calibrate(config).items():
        setattr(config, key, value)

    with FileObject(out, mode='w') as fobj:
        fobj.fp.write('# refreshed by pyhill {0} calibrate\n'.format(__version__))
        fobj.fp.write(config.to_string())

    return 0


def main(argv=None):
    """
        Entry point of the ``pyhill`` command. Returns the exit status.
    """

    command, options = parse_options(argv)

    levels = {0: logging.WARNING, 1: logging.INFO}
    logging.basicConfig(level=levels.get(options['verbose'], logging.DEBUG),
            format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)

    try:
        config = RunConfig(from_file=options['config']) if options['config'] else RunConfig()
    except (ConfigError, PotentialError, OSError) as err:
        sys.stderr.write('Bad configuration: {0}\n'.format(err))
        usage()
        return 1

    out = options['out'] or config.out
    runner = globals()['_run_{0}'.format(command)]

    try:
        return runner(config, options, out)
    except ConfigError as err:
        sys.stderr.write('Bad options: {0}\n'.format(err))
        usage()
        return 1
    except (PotentialError, NoRoot, DegenerateAction, OracleError) as err:
        sys.stderr.write('Error: {0}\n'.format(err))
        return 1


#
#==============================================================================
if __name__ == '__main__':
    sys.exit(main())
