import gzip
import math
import numpy as np
import pytest
from pyhill.potential import *

# test potentials
cases = [PotentialSpec([2.0, -1.0]),
         PotentialSpec([3.0, -1.0, -0.2]),
         PotentialSpec([2.5, -1.0, -0.1, -0.05])]

def test_eval_g_values():
    spec = canonical()

    assert eval_g(spec, 0.0) == pytest.approx(1.0, abs=1e-15), 'g(0) must be 1'
    assert eval_g(spec, math.pi) == pytest.approx(3.0, abs=1e-15), 'g(pi) must be 3'
    assert eval_g(spec, 0.5 * math.pi, derivative_order=1) == pytest.approx(1.0, abs=1e-15), 'g\'(pi/2) must be 1'
    assert eval_g(spec, 1.0, derivative_order=2) == pytest.approx(math.cos(1.0), abs=1e-15), 'wrong g\'\''

    xs = np.linspace(-7.0, 7.0, 101)
    assert np.allclose(eval_g(spec, xs + 2 * math.pi), eval_g(spec, xs), atol=1e-13), 'g must be periodic'

def test_evenness():
    xs = np.linspace(0.0, math.pi, 1001)

    for spec in cases:
        assert np.max(np.abs(eval_g(spec, xs) - eval_g(spec, -xs))) <= 1e-12, 'g must be even'
        assert np.max(np.abs(eval_h(spec, xs) - eval_h(spec, -xs))) <= 1e-12, 'h must be even'

def test_derivative_consistency():
    xs = np.linspace(0.2, math.pi - 0.2, 50)
    step = 1e-5

    for spec in cases:
        for k in range(5):
            fd = (eval_g(spec, xs + step, k) - eval_g(spec, xs - step, k)) / (2 * step)
            exact = eval_g(spec, xs, k + 1)
            scale = np.max(np.abs(exact))
            assert np.max(np.abs(fd - exact)) <= 1e-6 * scale, 'derivative {0} inconsistent'.format(k)

def test_extrema():
    xs = np.linspace(0.0, 2 * math.pi, 4097)

    for spec in cases:
        vals = eval_g(spec, xs)
        assert spec.a2 == pytest.approx(vals.min(), abs=1e-9), 'a2 is not the minimum'
        assert spec.a1 == pytest.approx(vals.max(), abs=1e-9), 'a1 is not the maximum'
        assert spec.x_min == 0.0 and spec.x_max == math.pi, 'wrong extremum locations'

def test_eval_h():
    spec = canonical()

    assert eval_h(spec, 0.0) == pytest.approx(1.0, abs=1e-15), 'h(0) must be a2'
    assert eval_h(spec, math.acosh(2.0)) == pytest.approx(0.0, abs=1e-14), 'h must vanish at arccosh 2'
    assert eval_h(spec, 1.0) == pytest.approx(2.0 - math.cosh(1.0), abs=1e-14), 'wrong h(1)'
    assert eval_h(spec, 1.0, derivative_order=1) == pytest.approx(-math.sinh(1.0), abs=1e-14), 'wrong h\'(1)'

    assert continuation_root(spec) == pytest.approx(math.acosh(2.0), abs=1e-13), 'wrong root of h'

def test_eval_h_overflow():
    spec = PotentialSpec([1.0] + [0.0] * 299 + [-1e-3])

    with pytest.raises(PotentialError):
        eval_h(spec, 3.0)

def test_validate_canonical():
    report = validate_class_g(canonical())

    assert report.passed, 'canonical potential must pass'
    assert not report.notes, 'no reindexing expected'
    assert report.x0 == pytest.approx(math.acosh(2.0), abs=1e-12), 'wrong x0'

def test_validate_reflected():
    report = validate_class_g(PotentialSpec([2.0, 1.0]))

    assert report.passed, '2 + cos x must pass after reindexing'
    assert any('reindexed' in note for note in report.notes), 'reindexing must be reported'
    assert report.spec == canonical(), 'normalized spec must be 2 - cos x'

def test_validate_double_well():
    report = validate_class_g(PotentialSpec([2.0, 0.0, -1.0]))

    assert not report.passed, '2 - cos 2x must fail'
    assert not report.conditions['extrema'], 'extrema condition must fail'
    assert report.witnesses['extrema'], 'witnesses must be reported'

def test_validate_errors():
    with pytest.raises(AssertionError):
        validate_class_g(canonical(), grid_size=100)

    with pytest.raises(PotentialError):
        PotentialSpec([1.0, float('nan')])

    with pytest.raises(PotentialError):
        PotentialSpec([])

def test_fourier_advisory():
    verdict = fourier_advisory(canonical())

    assert verdict['nonpositive'], 'c1 is nonpositive'
    assert verdict['mean_level'], 'c0 lies between the sums'
    assert not verdict['first_harmonic'], '2 - cos x fails the first-harmonic inequality'

def test_from_string():
    spec = PotentialSpec.from_string('# comment\nname = demo\nc0 = 2.5\nc2 = -1/10\nc1 = -1\n')

    assert spec.name == 'demo', 'wrong name'
    assert spec.coefficients == (2.5, -1.0, -0.1), 'wrong coefficients'

    with pytest.raises(PotentialError):
        PotentialSpec.from_string('c0 = 2\nd1 = 1\n')

    with pytest.raises(PotentialError):
        PotentialSpec.from_string('c0 = 2\nc0 = 3\n')

    with pytest.raises(PotentialError):
        PotentialSpec.from_string('c0 = inf\n')

    with pytest.raises(PotentialError):
        PotentialSpec.from_string('# nothing\n')

def test_from_file(tmp_path):
    fname = str(tmp_path / 'well.txt.gz')
    with gzip.open(fname, 'wt') as fp:
        fp.write('c0 = 2\nc1 = -1\n')

    spec = PotentialSpec.from_file(fname)
    assert spec == canonical(), 'compressed file must be read transparently'
    assert hash(spec) == hash(canonical()), 'equal specs must hash equally'

def test_parse_decimal():
    assert parse_decimal('0.1') + parse_decimal('0.2') == parse_decimal('0.3'), 'parsing must be exact'
    assert float(parse_decimal('2/9')) == pytest.approx(2 / 9, rel=1e-15), 'wrong ratio'
    assert float(parse_decimal('-pi')) == -math.pi, 'wrong constant'

    with pytest.raises(ValueError):
        parse_decimal('nan')
