#!/usr/bin/env python
#-*- coding:utf-8 -*-
##
## oracle.py
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

        Oracle
        MonodromyRecord
        OracleEigenvalue
        OracleError
        StepUnderflow
        MissedRoot

    ==================
    Module description
    ==================

    Brute-force computation of the real periodic eigenvalues of
    :math:`u'' + \\lambda^2(g(x) - a)u = 0` on :math:`[-\\pi, \\pi]`,
    independent of any asymptotic formula.

    Since the potential is even, every periodic eigenfunction is either odd
    or even, so the periodic spectrum is the union of the Dirichlet
    spectrum (:math:`y(0) = y(\\pi) = 0`, odd extension, ``'D'``) and the
    Neumann spectrum (:math:`y'(0) = y'(\\pi) = 0`, even extension,
    ``'N'``) of the half period :math:`(0, \\pi)`.

    Both half-period problems are shot in scaled Pruefer variables
    :math:`y = \\rho\\sin\\varphi`, :math:`y' = s\\rho\\cos\\varphi` with a
    constant :math:`s = \\lambda\\max|g - a|^{1/2}`:

    .. math::

        \\varphi' = s\\cos^2\\varphi + \\frac{\\lambda^2(g - a)}{s}
        \\sin^2\\varphi, \\qquad
        (\\ln\\rho)' = \\left(s - \\frac{\\lambda^2(g - a)}{s}\\right)
        \\sin\\varphi\\cos\\varphi.

    The phase stays bounded even where solutions grow like
    :math:`e^{\\lambda x}` under the barrier. An eigenvalue is a
    :math:`\\lambda` at which :math:`\\varphi(\\pi)` hits :math:`k\\pi`
    (``'D'``) or :math:`\\pi/2 + k\\pi` (``'N'``), and the phase can only
    cross these levels upwards as :math:`\\lambda` grows. Hence the number
    of eigenvalues between two values of :math:`\\lambda` equals the
    increase of the level :math:`\\lfloor(\\varphi(\\pi) -
    \\varphi(0))/\\pi\\rfloor`. The scan uses this count to bracket roots,
    refines them with a vectorized Illinois false-position iteration and
    certifies a bracket no wider than :math:`10^{-10}\\lambda`.

    Integration is done by :func:`scipy.integrate.solve_ivp` with the
    ``DOP853`` method. All values of :math:`\\lambda` being refined at the
    same time are stacked into a single system, as are the ``'D'`` and
    ``'N'`` problems.

    The Floquet discriminant :math:`\\Delta = \\mathrm{tr}\\,M` of the
    monodromy matrix over :math:`[-\\pi, \\pi]` is assembled from the same
    half-period solutions (:meth:`Oracle.monodromy`), or obtained by direct
    integration of the linear system when asked.

    .. code-block:: python

        >>> from pyhill.potential import canonical
        >>> from pyhill.oracle import Oracle
        >>> oracle = Oracle(canonical())
        >>> eigs = oracle.shoot_eigen(2.0, 'D', (24.0, 26.0))
        >>> [(e.symmetry, e.nodes_full) for e in eigs]
        [('D', 20)]

    ==============
    Module details
    ==============
"""

#
#==============================================================================
import logging
import math

import numpy as np
from scipy import integrate, optimize

from pyhill.actions import action_F
from pyhill.potential import eval_g


#
#==============================================================================
logger = logging.getLogger(__name__)

# phase and log-amplitude at x = 0 per symmetry class; the D amplitude
# additionally carries -ln(s) so that y'(0) = 1
INITIAL_PHASE = {'D': 0.0, 'N': 0.5 * math.pi}

ILLINOIS_ITERS = 40
BISECTION_ITERS = 80


#
#==============================================================================
class OracleError(Exception):
    """
        Generic failure of the eigenvalue oracle, e.g. a window beyond
        :math:`\\lambda_{max}` or a failed discriminant cross-check.
    """

    pass


#
#==============================================================================
class StepUnderflow(OracleError):
    """
        Raised when the integrator cannot reach the requested tolerance.
    """

    pass


#
#==============================================================================
class MissedRoot(OracleError):
    """
        Raised when a scan cell still holds two or more eigenvalues after
        the automatic refinement.
    """

    pass


#
#==============================================================================
class MonodromyRecord(object):
    """
        Monodromy matrix over one period and derived values.

        :ivar lam: :math:`\\lambda`
        :ivar a: spectral parameter
        :ivar matrix: :math:`2\\times 2` array mapping data at :math:`-\\pi`
            to data at :math:`\\pi`; entries may be infinite when the
            solutions overflow
        :ivar discriminant: trace :math:`\\Delta`
        :ivar discriminant_residual: :math:`|\\Delta - 2|/\\max(1, S)`
            with :math:`S` the size of the diagonal
        :ivar wronskian_error: :math:`|\\det - 1|` relative to the same
            scale
        :ivar steps: number of right-hand side evaluations
        :ivar method: ``'symmetric'`` or ``'direct'``
    """

    def __init__(self, lam, a, matrix, discriminant, discriminant_residual, wronskian_error,
            steps, method):
        """
            Constructor.
        """

        self.lam = lam
        self.a = a
        self.matrix = matrix
        self.discriminant = discriminant
        self.discriminant_residual = discriminant_residual
        self.wronskian_error = wronskian_error
        self.steps = steps
        self.method = method

    def __repr__(self):
        return 'MonodromyRecord(lam={0}, discriminant={1}, wronskian_error={2})'.format(self.lam,
                self.discriminant, self.wronskian_error)


#
#==============================================================================
class OracleEigenvalue(object):
    """
        Eigenvalue found by shooting.

        :ivar lam: :math:`\\lambda`
        :ivar symmetry: ``'D'`` (odd eigenfunction) or ``'N'`` (even)
        :ivar nodes_half: zeros of the eigenfunction in :math:`(0, \\pi)`
        :ivar nodes_full: zeros in :math:`[-\\pi, \\pi)` of its extension
        :ivar bracket_width: width of the certified bracket
        :ivar discriminant_residual: scaled :math:`|\\Delta - 2|` at
            ``lam``
        :ivar wronskian_error: scaled Wronskian drift at ``lam``
    """

    def __init__(self, lam, symmetry, nodes_half, nodes_full, bracket_width,
            discriminant_residual=None, wronskian_error=None):
        """
            Constructor.
        """

        self.lam = lam
        self.symmetry = symmetry
        self.nodes_half = nodes_half
        self.nodes_full = nodes_full
        self.bracket_width = bracket_width
        self.discriminant_residual = discriminant_residual
        self.wronskian_error = wronskian_error

    @property
    def p(self):
        """
            Branch number :math:`p` = half the number of zeros per period.
        """

        return self.nodes_full // 2

    def __lt__(self, other):
        return (self.lam, self.symmetry) < (other.lam, other.symmetry)

    def __repr__(self):
        return 'OracleEigenvalue(lam={0}, symmetry={1}, nodes_full={2})'.format(self.lam,
                self.symmetry, self.nodes_full)


#
#==============================================================================
class Oracle(object):
    """
        Eigenvalue oracle for one potential. The potential must be even and
        canonical for the shooting methods; :meth:`integrate` accepts any
        cosine series, including constants.

        :param spec: the potential
        :param rtol: relative tolerance of the integrator
        :param atol: absolute tolerance of the integrator
        :param lambda_max: largest admissible :math:`\\lambda`
        :param density: scan points per predicted quarter gap

        :type spec: :class:`pyhill.potential.PotentialSpec`
        :type rtol: float
        :type atol: float
        :type lambda_max: float
        :type density: int
    """

    def __init__(self, spec, rtol=1e-12, atol=1e-12, lambda_max=500.0, density=1):
        """
            Constructor.
        """

        self.spec = spec
        self.rtol = rtol
        self.atol = atol
        self.lambda_max = lambda_max
        self.density = density

    def _spread(self, a):
        # sqrt(max |g - a|) over the period
        return math.sqrt(max(self.spec.a1 - a, a - self.spec.a2, 1e-12))

    def _check_lambda(self, lam):
        top = float(np.max(lam))

        if top > self.lambda_max:
            raise OracleError('lambda = {0:.6g} exceeds lambda_max = {1:.6g}'.format(top, self.lambda_max))

        assert float(np.min(lam)) > 0.0, 'Lambda must be positive'

    #
    # linear integration
    #==========================================================================
    def integrate(self, a, lam, init, interval=(0.0, math.pi), t_eval=None):
        """
            Integrate :math:`u'' = -\\lambda^2(g - a)u` with data ``init`` =
            :math:`(u, u')` at ``interval[0]``. The interval may run
            backwards.

            :param a: spectral parameter
            :param lam: :math:`\\lambda`
            :param init: initial data :math:`(u, u')`
            :param interval: end points
            :param t_eval: points at which to report the solution

            :type a: float
            :type lam: float
            :type init: tuple(float, float)
            :type interval: tuple(float, float)
            :type t_eval: numpy.ndarray

            :rtype: tuple(numpy.ndarray, numpy.ndarray, numpy.ndarray)

            :raises StepUnderflow: if the integrator fails.
        """

        self._check_lambda(lam)

        spec, lam2 = self.spec, lam * lam
        rhs = lambda x, y: np.array([y[1], -lam2 * (eval_g(spec, x) - a) * y[0]])

        sol = integrate.solve_ivp(rhs, interval, np.asarray(init, dtype=float), method='DOP853',
                t_eval=t_eval, rtol=self.rtol, atol=self.atol,
                max_step=1.0 / (8.0 * lam * self._spread(a)))

        if sol.status != 0:
            raise StepUnderflow('linear integration at lambda={0} failed: {1}'.format(lam, sol.message))

        return sol.t, sol.y[0], sol.y[1]

    #
    # Pruefer shooting
    #==========================================================================
    def _prufer(self, a, lams, kinds, t_eval=None):
        """
            Integrate the scaled Pruefer system over :math:`[0, \\pi]` for
            every pair ``(lams[i], kinds[i])`` at once. Returns the phases,
            log-amplitudes, scales :math:`s` and the solver result.
        """

        lams = np.asarray(lams, dtype=float)
        self._check_lambda(lams)

        spread = self._spread(a)
        scale = lams * spread
        ratio = lams / spread
        size = lams.size

        phi0 = np.array([INITIAL_PHASE[kind] for kind in kinds])
        log0 = np.where(np.array([kind == 'D' for kind in kinds]), -np.log(scale), 0.0)

        spec = self.spec

        def rhs(x, y):
            phi = y[:size]
            weight = ratio * (eval_g(spec, x) - a)
            cos, sin = np.cos(phi), np.sin(phi)
            return np.concatenate([scale * cos * cos + weight * sin * sin, (scale - weight) * sin * cos])

        sol = integrate.solve_ivp(rhs, (0.0, math.pi), np.concatenate([phi0, log0]), method='DOP853',
                t_eval=t_eval, rtol=self.rtol, atol=self.atol, max_step=1.0 / (8.0 * float(np.max(scale))))

        if sol.status != 0:
            raise StepUnderflow('shooting at a={0} failed: {1}'.format(a, sol.message))

        logger.debug('Pruefer solve of %d systems took %d evaluations', size, sol.nfev)

        return sol.y[:size, -1], sol.y[size:, -1], scale, sol

    def shooting_phase(self, a, lam, symmetry):
        """
            Accumulated phase :math:`\\varphi(\\pi) - \\varphi(0)` of the
            ``'D'`` or ``'N'`` initial value problem. Eigenvalues of the
            class are the :math:`\\lambda` where it equals :math:`k\\pi`
            (``'D'``) or :math:`\\pi/2 + k\\pi` (``'N'``), :math:`k \\geq
            1` resp. :math:`k \\geq 0`. Accepts arrays.

            :rtype: float or numpy.ndarray
        """

        lams = np.atleast_1d(np.asarray(lam, dtype=float))
        phi, _, _, _ = self._prufer(a, lams, [symmetry] * lams.size)

        res = phi - INITIAL_PHASE[symmetry]
        return float(res[0]) if np.ndim(lam) == 0 else res

    def _mismatch(self, a, lams, kinds, targets):
        """
            Continuous mismatch :math:`\\varphi(\\pi) - \\varphi(0) -
            k\\pi` of each root being refined.
        """

        phi, _, _, _ = self._prufer(a, lams, kinds)
        base = np.array([INITIAL_PHASE[kind] for kind in kinds])

        return phi - base - targets * math.pi

    def _refine(self, a, kinds, targets, lo, hi, flo, fhi):
        """
            Vectorized Illinois iteration on the phase mismatch, followed by
            a two-point certification of a bracket of width at most
            :math:`10^{-10}\\lambda` and bisection where certification
            fails. Returns roots and bracket widths.
        """

        kinds = list(kinds)
        lo, hi, flo, fhi = [np.array(v, dtype=float) for v in (lo, hi, flo, fhi)]
        wlo, whi = flo.copy(), fhi.copy()
        side = np.zeros(lo.size, dtype=int)
        best = 0.5 * (lo + hi)
        prev = np.full(lo.size, np.inf)

        for it in range(ILLINOIS_ITERS):
            tol = 1e-10 * hi
            active = (np.abs(best - prev) > 0.25 * tol) & (hi - lo > tol)
            if not np.any(active):
                break

            idx = np.nonzero(active)[0]
            cand = (lo[idx] * whi[idx] - hi[idx] * wlo[idx]) / (whi[idx] - wlo[idx])
            cand = np.clip(cand, lo[idx], hi[idx])
            fc = self._mismatch(a, cand, [kinds[i] for i in idx], targets[idx])

            for j, i in enumerate(idx):
                prev[i], best[i] = best[i], cand[j]

                if fc[j] < 0.0:
                    lo[i], flo[i], wlo[i] = cand[j], fc[j], fc[j]
                    if side[i] == -1:
                        whi[i] *= 0.5
                    side[i] = -1
                elif fc[j] > 0.0:
                    hi[i], fhi[i], whi[i] = cand[j], fc[j], fc[j]
                    if side[i] == 1:
                        wlo[i] *= 0.5
                    side[i] = 1
                else:
                    lo[i] = hi[i] = cand[j]

        logger.debug('Illinois refinement of %d roots stopped after %d rounds', lo.size, it + 1)

        # two-point certification around the best estimate
        tol = 1e-10 * hi
        wide = np.nonzero(hi - lo > tol)[0]

        if wide.size:
            left = np.maximum(best[wide] - 0.45 * tol[wide], lo[wide])
            right = np.minimum(best[wide] + 0.45 * tol[wide], hi[wide])
            points = np.concatenate([left, right])
            vals = self._mismatch(a, points, [kinds[i] for i in wide] * 2, np.concatenate([targets[wide]] * 2))

            for j, i in enumerate(wide):
                fl, fr = vals[j], vals[j + wide.size]
                if fl <= 0.0 <= fr:
                    lo[i], hi[i], flo[i], fhi[i] = left[j], right[j], fl, fr

        # bisection where certification failed
        for _ in range(BISECTION_ITERS):
            tol = 1e-10 * hi
            wide = np.nonzero(hi - lo > tol)[0]
            if not wide.size:
                break

            logger.debug('bisecting %d uncertified brackets', wide.size)
            mid = 0.5 * (lo[wide] + hi[wide])
            vals = self._mismatch(a, mid, [kinds[i] for i in wide], targets[wide])

            for j, i in enumerate(wide):
                if vals[j] < 0.0:
                    lo[i], flo[i] = mid[j], vals[j]
                else:
                    hi[i], fhi[i] = mid[j], vals[j]

        span = fhi - flo
        roots = np.where(span > 0.0, lo - flo * (hi - lo) / np.where(span > 0.0, span, 1.0), 0.5 * (lo + hi))

        return roots, hi - lo

    def _brackets(self, a, kinds, grid):
        """
            Scan ``grid`` for every symmetry in ``kinds``. Returns, per
            symmetry, a list of ``(lo, hi, flo, fhi, target)`` cells with a
            single eigenvalue, and a list of cells holding several.
        """

        size = grid.size
        phi, _, _, _ = self._prufer(a, np.tile(grid, len(kinds)), [k for k in kinds for _ in range(size)])

        found, crowded = {}, []

        for n, kind in enumerate(kinds):
            rel = phi[n * size:(n + 1) * size] - INITIAL_PHASE[kind]
            level = np.floor(rel / math.pi).astype(int)

            # a sign change of sin(rel) must come with a unit level increment
            flips = np.sign(np.sin(rel[1:])) != np.sign(np.sin(rel[:-1]))

            found[kind] = []
            for i in range(size - 1):
                jump = level[i + 1] - level[i]

                if jump < 0:
                    logger.warning('phase level decreased between %g and %g', grid[i], grid[i + 1])
                elif jump == 1 and flips[i]:
                    target = level[i + 1]
                    found[kind].append((grid[i], grid[i + 1], rel[i] - target * math.pi,
                        rel[i + 1] - target * math.pi, target))
                elif jump >= 1:
                    crowded.append((kind, grid[i], grid[i + 1]))

        return found, crowded

    def _scan(self, a, kinds, window, density):
        lo, hi = window
        step = 0.25 * math.pi / (action_F(self.spec, a) * density)
        count = max(2, int(math.ceil((hi - lo) / step)) + 1)

        return self._brackets(a, kinds, np.linspace(lo, hi, count))

    def shoot_eigen(self, a, symmetry, lambda_window):
        """
            All eigenvalues of the ``'D'`` or ``'N'`` half-period problem in
            ``lambda_window``; ``symmetry='both'`` returns the union. The
            window is scanned with a step of at most :math:`\\pi/(4F(a))`,
            half the smallest predicted gap. A cell whose phase level grows
            by two or more is rescanned once at four times the density.

            :param a: spectral parameter
            :param symmetry: ``'D'``, ``'N'`` or ``'both'``
            :param lambda_window: :math:`(\\lambda_{lo}, \\lambda_{hi})`

            :type a: float
            :type symmetry: str
            :type lambda_window: tuple(float, float)

            :rtype: list(:class:`OracleEigenvalue`)

            :raises MissedRoot: if refinement does not separate the roots.
        """

        kinds = ['D', 'N'] if symmetry == 'both' else [symmetry]
        assert all(kind in INITIAL_PHASE for kind in kinds), 'Unknown symmetry \'{0}\''.format(symmetry)

        lo, hi = lambda_window
        assert 0.0 < lo < hi, 'Bad lambda window {0}'.format(lambda_window)
        self._check_lambda(hi)

        found, crowded = self._scan(a, kinds, (lo, hi), self.density)

        if crowded:
            logger.warning('%d crowded scan cells at a=%g, rescanning at 4x density', len(crowded), a)
            for kind, clo, chi in crowded:
                sub, again = self._scan(a, [kind], (clo, chi), 4 * self.density)

                if again:
                    raise MissedRoot('eigenvalues in [{0:.6g}, {1:.6g}] not separated'.format(clo, chi))

                found[kind].extend(sub[kind])

        cells = [(kind, cell) for kind in kinds for cell in found[kind]]
        if not cells:
            return []

        roots, widths = self._refine(a, [kind for kind, _ in cells], np.array([cell[4] for _, cell in cells]),
                [cell[0] for _, cell in cells], [cell[1] for _, cell in cells],
                [cell[2] for _, cell in cells], [cell[3] for _, cell in cells])

        return sorted(self._describe(a, roots, [kind for kind, _ in cells], widths))

    def _describe(self, a, roots, kinds, widths):
        """
            Node counts and discriminant data at refined roots, from one
            stacked solve over a uniform interior grid.
        """

        size = roots.size
        both = np.concatenate([roots, roots])
        order = list(kinds) + [('N' if kind == 'D' else 'D') for kind in kinds]

        top = float(np.max(roots)) * self._spread(a)
        grid = np.linspace(0.0, math.pi, max(66, int(math.ceil(8.0 * top * math.pi)) + 2))

        phi, log, scale, sol = self._prufer(a, both, order, t_eval=grid)

        # zeros strictly inside (0, pi)
        signs = np.sign(np.sin(sol.y[:size, 1:-1]))
        nodes = np.sum(signs[:, 1:] != signs[:, :-1], axis=1)

        eigs = []
        for i in range(size):
            j = i if kinds[i] == 'N' else i + size
            k = i + size if kinds[i] == 'N' else i
            record = self._symmetric_record(a, roots[i], phi[j], log[j], phi[k], log[k], scale[i], sol.nfev)

            half = int(nodes[i])
            full = 2 * half + 2 if kinds[i] == 'D' else 2 * half

            eigs.append(OracleEigenvalue(float(roots[i]), kinds[i], half, full, float(widths[i]),
                record.discriminant_residual, record.wronskian_error))

        return eigs

    def periodic_spectrum(self, a, lambda_window, tolerance=1e-6):
        """
            Sorted union of the ``'D'`` and ``'N'`` spectra in the window,
            each eigenvalue cross-checked against the Floquet discriminant.

            :raises OracleError: if some :math:`|\\Delta - 2|` (scaled)
                exceeds ``tolerance``.
        """

        eigs = self.shoot_eigen(a, 'both', lambda_window)

        for eig in eigs:
            if not eig.discriminant_residual <= tolerance:
                raise OracleError('discriminant check failed at lambda={0}: {1:.3g}'.format(eig.lam,
                    eig.discriminant_residual))

        return eigs

    #
    # Floquet discriminant
    #==========================================================================
    def _symmetric_record(self, a, lam, phi_n, log_n, phi_d, log_d, scale, steps):
        """
            Monodromy over :math:`[-\\pi, \\pi]` from the even solution
            :math:`y_1` and the odd solution :math:`y_2` at :math:`\\pi`.
        """

        log_s = log_n + log_d + math.log(scale)

        with np.errstate(over='ignore', invalid='ignore'):
            size = math.exp(log_s) if log_s < 700.0 else math.inf
            cross = math.cos(phi_n) * math.sin(phi_d)

            diag = 1.0 + 2.0 * size * cross
            upper = 2.0 * (size / scale) * math.sin(phi_n) * math.sin(phi_d)
            lower = 2.0 * scale * size * math.cos(phi_n) * math.cos(phi_d)
            disc = 2.0 + 4.0 * size * cross

        matrix = np.array([[diag, upper], [lower, diag]])
        residual = 4.0 * abs(cross) * min(1.0, size)

        if log_s >= 0.0:
            werr = abs(math.sin(phi_n - phi_d) - math.exp(-log_s))
        else:
            werr = abs(size * math.sin(phi_n - phi_d) - 1.0)

        return MonodromyRecord(lam, a, matrix, disc, residual, werr, steps, 'symmetric')

    def monodromy(self, a, lam, method='symmetric'):
        """
            Monodromy matrix over :math:`[-\\pi, \\pi]`, columns being the
            solutions with data :math:`(1, 0)` and :math:`(0, 1)` at
            :math:`-\\pi`. The ``'symmetric'`` method builds it from the
            half-period solutions using evenness and is reliable for every
            :math:`a`; the ``'direct'`` method integrates the linear system
            over the full period and loses accuracy when solutions grow
            strongly under the barrier.

            :param a: spectral parameter
            :param lam: :math:`\\lambda`
            :param method: ``'symmetric'`` or ``'direct'``

            :rtype: :class:`MonodromyRecord`
        """

        if method == 'symmetric':
            phi, log, scale, sol = self._prufer(a, [lam, lam], ['N', 'D'])
            return self._symmetric_record(a, lam, phi[0], log[0], phi[1], log[1], scale[0], sol.nfev)

        assert method == 'direct', 'Unknown method \'{0}\''.format(method)
        self._check_lambda(lam)

        spec, lam2 = self.spec, lam * lam

        def rhs(x, y):
            weight = -lam2 * (eval_g(spec, x) - a)
            return np.array([y[1], weight * y[0], y[3], weight * y[2]])

        sol = integrate.solve_ivp(rhs, (-math.pi, math.pi), np.array([1.0, 0.0, 0.0, 1.0]), method='DOP853',
                rtol=self.rtol, atol=self.atol, max_step=1.0 / (8.0 * lam * self._spread(a)))

        if sol.status != 0:
            raise StepUnderflow('monodromy at lambda={0} failed: {1}'.format(lam, sol.message))

        end = sol.y[:, -1]
        matrix = np.array([[end[0], end[2]], [end[1], end[3]]])
        size = max(1.0, abs(matrix[0, 0] * matrix[1, 1]) + abs(matrix[0, 1] * matrix[1, 0]))
        disc = float(np.trace(matrix))

        return MonodromyRecord(lam, a, matrix, disc, abs(disc - 2.0) / size,
                abs(np.linalg.det(matrix) - 1.0) / size, sol.nfev, 'direct')

    def discriminant_roots(self, a, lambda_window):
        """
            Periodic eigenvalues as sign changes of :math:`\\Delta - 2 =
            4y_1'(\\pi)y_2(\\pi)`, located on the scan grid and refined by
            Brent's method. Pairs closer than the scan step (nearly
            degenerate ``'D'``/``'N'`` pairs of the definite problem) are
            invisible to this method.

            :rtype: list(float)
        """

        lo, hi = lambda_window
        self._check_lambda(hi)

        step = 0.25 * math.pi / (action_F(self.spec, a) * self.density)
        grid = np.linspace(lo, hi, max(2, int(math.ceil((hi - lo) / step)) + 1))

        def sign_of(lams):
            lams = np.atleast_1d(lams)
            phi, _, _, _ = self._prufer(a, np.concatenate([lams, lams]), ['N'] * lams.size + ['D'] * lams.size)
            return np.cos(phi[:lams.size]) * np.sin(phi[lams.size:])

        vals = sign_of(grid)
        roots = []

        for i in np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]:
            root = optimize.brentq(lambda t: float(sign_of(t)[0]), grid[i], grid[i + 1],
                    xtol=1e-11 * grid[i + 1], rtol=1e-14)
            roots.append(root)

        return roots
