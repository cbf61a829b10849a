import numpy as np
import pytest

from chains.bottleneck import bottleneck_matrix
from lab import SUITES, run_suite
from lab.errors import InvalidGeneratorConfig, TooLarge, UnknownSuite
from lab.generators import SPACE_KINDS, GeneratorConfig, gen_model, gen_space, gen_subset
from lab.oracles import oracle_kcenter
from lab.suites import TrialCheck
from spaces.errors import TriangleViolation
from spaces.finite_space import from_coordinates, validate_metric


def test_every_suite_is_registered():
    assert {
        'metric-axioms', 'ultrametric', 'component-equivalence', 'functional-coincidences',
        'monotonicity', 'union-law', 'hausdorff-stability', 'box-product-law',
        'model-classifier-goldens', 'model-fc-laws', 'hierarchy-audit', 'bornology-laws',
        'sample-crosscheck', 'bottleneck-oracle', 'covering-oracle', 'model-functional-laws',
    } <= set(SUITES)


@pytest.mark.parametrize('name', sorted(SUITES))
def test_suite_passes(name):
    report = run_suite(name, seed=7, trials=5)
    assert report.passed, report.to_dict()
    assert report.trials == 5


@pytest.mark.slow
@pytest.mark.parametrize('name, trials', [
    ('bottleneck-oracle', 500),
    ('component-equivalence', 500),
    ('ultrametric', 200),
    ('covering-oracle', 200),
    ('hausdorff-stability', 200),
    ('box-product-law', 50),
])
def test_suite_at_full_size(name, trials):
    report = run_suite(name, seed=2024, trials=trials)
    assert report.passed, report.to_dict()


def test_bottleneck_oracle_draws_past_eight_points(monkeypatch):
    sizes = []

    def recording(X):
        sizes.append(len(X))
        return bottleneck_matrix(X)

    monkeypatch.setenv('CHAINSCOPE_WORKERS', '1')
    monkeypatch.setattr('lab.suites.bottleneck_matrix', recording)
    assert run_suite('bottleneck-oracle', seed=5, trials=60).passed
    assert 8 < max(sizes) <= 12


def test_reports_are_deterministic():
    first = run_suite('component-equivalence', seed=3, trials=4)
    second = run_suite('component-equivalence', seed=3, trials=4)
    assert first.to_dict() == second.to_dict()
    assert 'elapsed' not in first.to_dict()
    assert 'elapsed' in first.to_dict(timing=True)


def test_run_suite_rejects_bad_arguments():
    with pytest.raises(UnknownSuite) as excinfo:
        run_suite('no-such-suite')
    assert 'ultrametric' in excinfo.value.witness['known']
    with pytest.raises(InvalidGeneratorConfig):
        run_suite('ultrametric', trials=0)


def test_failures_carry_a_rerun_line(monkeypatch):
    def broken(rng, check):
        check.digest = 'abc'
        check.expect(False, 'always fails', value=1.5)

    monkeypatch.setitem(SUITES, 'broken', broken)
    report = run_suite('broken', seed=11, trials=2)
    assert not report.passed
    assert [f.trial for f in report.failures] == [0, 1]
    failure = report.to_dict()['failures'][0]
    assert failure['assertion'] == 'always fails'
    assert failure['digest'] == 'abc'
    assert failure['witness'] == {'value': 1.5}
    assert failure['rerun'] == 'chainscope propcheck --suite broken --seed 11 --trials 2'


def test_raising_trials_are_failures(monkeypatch):
    def crashes(rng, check):
        raise RuntimeError('boom')

    monkeypatch.setitem(SUITES, 'crashes', crashes)
    report = run_suite('crashes', trials=1)
    assert report.failures[0].assertion == 'trial completes without error'
    assert report.failures[0].witness == {'error': 'RuntimeError', 'message': 'boom'}


def test_expect_error():
    check = TrialCheck()
    dist = [[0, 1, 5], [1, 0, 1], [5, 1, 0]]
    check.expect_error(lambda: validate_metric(['a', 'b', 'c'], dist), TriangleViolation, 'triangle')
    assert check.failures == []
    check.expect_error(lambda: None, TriangleViolation, 'nothing raised')
    assert check.failures[0][0] == 'nothing raised'


@pytest.mark.parametrize('kind', sorted(SPACE_KINDS))
def test_generated_spaces_are_seeded(kind):
    config = GeneratorConfig(seed=5, kind=kind, size=6)
    first, second = gen_space(config), gen_space(config)
    assert len(first) == 6
    assert first.digest == second.digest
    assert first.provenance['seed'] == 5


@pytest.mark.parametrize('options', [
    {'kind': 'spiral'},
    {'size': 1},
    {'scale_range': (0.0, 1.0)},
    {'dim': 0},
])
def test_invalid_generator_config(options):
    with pytest.raises(InvalidGeneratorConfig):
        GeneratorConfig(seed=0, **options)


def test_generated_models_and_subsets():
    rng = np.random.default_rng(2024)
    for _ in range(20):
        M = gen_model(rng)
        A = gen_subset(rng, M)
        A.check_in(M)


def test_oracle_size_bounds():
    big = from_coordinates(list(range(11)))
    with pytest.raises(TooLarge):
        oracle_kcenter(big, big.full(), 1, 1)
    small = from_coordinates([0, 1, 2])
    with pytest.raises(TooLarge):
        oracle_kcenter(small, small.full(), 4, 1)
