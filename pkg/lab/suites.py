"""Randomized property suites.

Each suite is a function of a trial generator and a ``TrialCheck``; it
draws its instances, sets the digest of the main instance and records a
failure for every assertion that does not hold. Suites register
themselves with ``@suite``.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from chains.bottleneck import bottleneck_matrix
from chains.chain_graph import chain_ball, chain_component, witness_chain
from chains.merge_tree import merge_tree
from config.config_manager import ConfigManager
from functionals.covering import Mode, alpha_k, eta_km, eta_star_k, gamma_m, gamma_star, unbounded_functionals
from handlers.report_handlers import jsonable
from lab.errors import InvalidGeneratorConfig, UnknownSuite
from lab.generators import gen_model, gen_subset, random_space, random_subset
from lab.goldens import SPACE_GOLDENS, SUBSET_GOLDENS, golden_models, golden_subset
from lab.oracles import oracle_chain_ball, oracle_chain_component, oracle_kcenter, oracle_minimax
from lab.oracles.kcenter import MAX_POINTS as KCENTER_MAX_POINTS
from models.analysis import f_c, isolation, limit_points, model_component, nslc
from models.classifier import classify_space, classify_subset, model_functionals
from models.model import Model1D
from models.pieces import Points
from models.sampling import sample, sample_points
from models.subset import SubsetSpec
from spaces.errors import (
    Asymmetry,
    ChainscopeError,
    CoincidentPoints,
    NegativeDistance,
    NonzeroDiagonal,
    TriangleViolation,
)
from spaces.ext_real import INF
from spaces.finite_space import PointSubset, box_product, hausdorff, validate_metric

logger = logging.getLogger(__name__)

# stored float distances go through sums in a few laws
FLOAT_SLACK = 1e-9


@dataclass
class Failure:
    trial: int
    digest: str
    assertion: str
    witness: Dict[str, Any]
    rerun: str


@dataclass
class SuiteReport:
    suite: str
    seed: int
    trials: int
    failures: List[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        """Deterministic for a fixed seed unless ``timing`` adds the elapsed seconds."""
        result = {
            'suite': self.suite,
            'seed': self.seed,
            'trials': self.trials,
            'passed': self.passed,
            'failures': [asdict(f) for f in self.failures],
        }
        if timing:
            result['elapsed'] = round(self.elapsed, 6)
        return result


class TrialCheck:
    """Collects failed assertions of one trial."""

    def __init__(self):
        self.digest = ''
        self.failures: List[Tuple[str, Dict[str, Any]]] = []

    def expect(self, condition: bool, assertion: str, **witness: Any) -> bool:
        if not condition:
            self.failures.append((assertion, jsonable(witness)))
        return bool(condition)

    def expect_error(self, action: Callable[[], Any], error: type, assertion: str, **fields: Any) -> None:
        """``action`` must raise ``error`` with the given attribute values."""
        try:
            action()
        except error as e:
            for name, expected in fields.items():
                self.expect(getattr(e, name, None) == expected, f"{assertion}: {name}",
                            expected=expected, got=getattr(e, name, None))
            return
        except ChainscopeError as e:
            self.expect(False, assertion, expected=error.__name__, got=e.code)
            return
        self.expect(False, assertion, expected=error.__name__, got='no error')


SuiteFn = Callable[[np.random.Generator, TrialCheck], None]

SUITES: Dict[str, SuiteFn] = {}


def suite(name: str) -> Callable[[SuiteFn], SuiteFn]:
    def register(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn
    return register


def _at_most(a: Real, b: Real, scale: Real = 1.0) -> bool:
    return a <= b + FLOAT_SLACK * max(1.0, float(scale))


def _test_scales(rng: np.random.Generator, distances: np.ndarray, count: int = 4) -> List[float]:
    """Stored distances, midpoints between them, and values past both ends."""
    positive = [float(d) for d in distances if d > 0]
    scales = {positive[0] / 2, positive[-1] + 1.0}
    for i in rng.choice(len(positive), size=min(count, len(positive)), replace=False):
        scales.add(positive[i])
        if i + 1 < len(positive):
            scales.add((positive[i] + positive[i + 1]) / 2)
    return sorted(scales)


def _sub_subset(rng: np.random.Generator, B: PointSubset) -> PointSubset:
    size = int(rng.integers(1, len(B) + 1))
    return PointSubset(B.space, tuple(int(m) for m in rng.choice(B.members, size=size, replace=False)))


@suite('metric-axioms')
def metric_axioms(rng: np.random.Generator, check: TrialCheck) -> None:
    X = random_space(rng)
    check.digest = X.digest
    n = len(X)
    d = np.array(X.dist)
    i, j = sorted(int(v) for v in rng.choice(n, size=2, replace=False))

    check.expect(validate_metric(X.labels, d).digest == X.digest, "revalidated copy keeps its digest")

    bad = d.copy()
    bad[j, i] = bad[i, j] * 2
    check.expect_error(lambda: validate_metric(X.labels, bad), Asymmetry, "asymmetry detected", i=i, j=j)

    diag = d.copy()
    diag[i, i] = 1.0
    check.expect_error(lambda: validate_metric(X.labels, diag), NonzeroDiagonal, "diagonal detected", i=i)

    negative = d.copy()
    negative[i, j] = negative[j, i] = -1.0
    check.expect_error(lambda: validate_metric(X.labels, negative), NegativeDistance,
                       "negative distance detected", i=i, j=j)

    merged = d.copy()
    merged[i, j] = merged[j, i] = 0.0
    check.expect_error(lambda: validate_metric(X.labels, merged), CoincidentPoints,
                       "coincident points detected", i=i, j=j)

    if n >= 3:
        a, b, c = (int(v) for v in rng.choice(n, size=3, replace=False))
        stretched = d.copy()
        stretched[a, c] = stretched[c, a] = d[a, b] + d[b, c] + X.diameter()
        try:
            validate_metric(X.labels, stretched)
            check.expect(False, "triangle violation detected", triple=[a, b, c])
        except TriangleViolation as e:
            check.expect(stretched[e.i, e.k] > stretched[e.i, e.j] + stretched[e.j, e.k],
                         "reported triple violates the triangle inequality", triple=[e.i, e.j, e.k])


@suite('ultrametric')
def ultrametric(rng: np.random.Generator, check: TrialCheck) -> None:
    X = random_space(rng, 10)
    check.digest = X.digest
    n = len(X)
    c = bottleneck_matrix(X).c
    check.expect(np.array_equal(c, c.T), "bottleneck matrix is symmetric")
    check.expect(not np.diag(c).any(), "bottleneck diagonal is zero")
    check.expect(bool((c <= X.dist).all()), "bottleneck never exceeds the direct distance")
    stored = set(float(v) for v in X.dist.ravel())
    extra = set(float(v) for v in c.ravel()) - stored
    check.expect(not extra, "bottleneck values are stored distances", extra=extra)
    for x, y, z in rng.integers(n, size=(30, 3)):
        check.expect(c[x, z] <= max(c[x, y], c[y, z]), "strong triangle inequality",
                     x=x, y=y, z=z, c_xz=c[x, z], c_xy=c[x, y], c_yz=c[y, z])

    tree = merge_tree(X)
    for eps in _test_scales(rng, X.distinct_distances()):
        parts = tree.partition(eps)
        covered = sorted(p for part in parts for p in part)
        check.expect(covered == list(range(n)), "partition covers every point once", eps=eps)
        for part in parts:
            for x in part:
                expected = tuple(int(y) for y in np.flatnonzero(c[x] < eps))
                check.expect(part == expected, "class equals {y : c(x, y) < eps}", x=x, eps=eps,
                             expected=expected, got=part)


@suite('component-equivalence')
def component_equivalence(rng: np.random.Generator, check: TrialCheck) -> None:
    X = random_space(rng, 10)
    check.digest = X.digest
    n = len(X)
    for eps in _test_scales(rng, X.distinct_distances()):
        for x in range(n):
            component = chain_component(X, x, eps)
            expected = oracle_chain_component(X, x, eps)
            check.expect(component.members == expected.members, "component matches breadth-first closure",
                         x=x, eps=eps, expected=expected.members, got=component.members)
            full = chain_ball(X, x, eps, n - 1)
            check.expect(full.members == component.members, "chain ball of n-1 steps is the component",
                         x=x, eps=eps, ball=full.members, component=component.members)
            for m in (1, 2):
                ball = chain_ball(X, x, eps, m)
                reference = oracle_chain_ball(X, x, eps, m)
                check.expect(ball.members == reference.members, "chain ball matches breadth-first levels",
                             x=x, eps=eps, m=m, expected=reference.members, got=ball.members)
            for y in component.members:
                chain = witness_chain(X, x, y, eps)
                check.expect(chain.points[0] == x and chain.points[-1] == y, "witness chain joins its ends",
                             x=x, y=y, eps=eps, chain=chain.points)


@suite('functional-coincidences')
def functional_coincidences(rng: np.random.Generator, check: TrialCheck) -> None:
    X = random_space(rng, 8)
    A = random_subset(rng, X)
    check.digest = X.digest
    n = len(X)
    g_star = gamma_star(A).value
    check.expect(g_star == eta_star_k(A, 1).value, "gamma* equals eta*_1", members=A.members)
    check.expect(unbounded_functionals(A)['gamma'] == g_star, "unbounded gamma is gamma*")
    check.expect(gamma_m(A, n - 1).value == g_star, "gamma with n-1 steps is gamma*", members=A.members)
    for k in (1, 2, 3):
        alpha = alpha_k(A, k).value
        check.expect(alpha == eta_km(A, k, 1).value, "alpha_k equals eta_{k,1}", k=k)
        lower = eta_star_k(A, k).value
        for m in (1, 2, 3):
            value = eta_km(A, k, m).value
            check.expect(lower <= value <= alpha, "eta*_k <= eta_{k,m} <= alpha_k",
                         k=k, m=m, eta_star=lower, eta=value, alpha=alpha)
    for m in (1, 2, 3):
        check.expect(gamma_m(A, m).value == eta_km(A, 1, m).value, "gamma_m equals eta_{1,m}", m=m)


@suite('monotonicity')
def monotonicity(rng: np.random.Generator, check: TrialCheck) -> None:
    X = random_space(rng, 8)
    B = random_subset(rng, X)
    A = _sub_subset(rng, B)
    check.digest = X.digest
    scale = X.diameter()
    check.expect(gamma_star(A).value <= gamma_star(B).value, "gamma* grows with the subset",
                 a=A.members, b=B.members)
    for k in (1, 2, 3):
        for name, fn in (('alpha_k', lambda S: alpha_k(S, k)), ('eta*_k', lambda S: eta_star_k(S, k)),
                         ('eta_{k,2}', lambda S: eta_km(S, k, 2))):
            check.expect(fn(A).value <= fn(B).value, f"{name} grows with the subset", k=k,
                         a=A.members, b=B.members)
        check.expect(alpha_k(A, k + 1).value <= alpha_k(A, k).value, "alpha_k shrinks as k grows", k=k)
        check.expect(eta_star_k(A, k + 1).value <= eta_star_k(A, k).value, "eta*_k shrinks as k grows", k=k)

        exact = alpha_k(A, k).value
        greedy = alpha_k(A, k, Mode.GREEDY).value
        check.expect(exact <= greedy and _at_most(greedy, 2 * exact, scale),
                     "greedy alpha_k lies between the optimum and twice it", k=k, exact=exact, greedy=greedy)
        exact_eta = eta_km(A, k, 2).value
        greedy_eta = eta_km(A, k, 2, Mode.GREEDY).value
        check.expect(exact_eta <= greedy_eta, "greedy eta_{k,m} bounds the optimum from above",
                     k=k, exact=exact_eta, greedy=greedy_eta)
    for m in (1, 2, 3):
        check.expect(eta_km(A, 1, m + 1).value <= eta_km(A, 1, m).value, "eta_{1,m} shrinks as m grows", m=m)


@suite('union-law')
def union_law(rng: np.random.Generator, check: TrialCheck) -> None:
    X = random_space(rng, 8)
    A, B = random_subset(rng, X), random_subset(rng, X)
    check.digest = X.digest
    joined = A.union(B)
    for k1 in (1, 2):
        for k2 in (1, 2):
            bound = max(eta_star_k(A, k1).value, eta_star_k(B, k2).value)
            value = eta_star_k(joined, k1 + k2).value
            check.expect(value <= bound, "eta* of a union is at most the larger part",
                         k1=k1, k2=k2, union=value, bound=bound)
            bound = max(alpha_k(A, k1).value, alpha_k(B, k2).value)
            value = alpha_k(joined, k1 + k2).value
            check.expect(value <= bound, "alpha of a union is at most the larger part",
                         k1=k1, k2=k2, union=value, bound=bound)


@suite('hausdorff-stability')
def hausdorff_stability(rng: np.random.Generator, check: TrialCheck) -> None:
    X = random_space(rng, 8)
    A, B = random_subset(rng, X), random_subset(rng, X)
    check.digest = X.digest
    distance = hausdorff(A, B)
    for k in (1, 2, 3):
        for S, T in ((A, B), (B, A)):
            value = eta_star_k(T, k).value
            bound = max(eta_star_k(S, k).value, distance)
            check.expect(value <= bound, "eta*_k moves by at most the Hausdorff distance",
                         k=k, source=S.members, target=T.members, value=value, bound=bound)


@suite('box-product-law')
def box_product_law(rng: np.random.Generator, check: TrialCheck) -> None:
    X, Y = random_space(rng, 6), random_space(rng, 6)
    P = box_product(X, Y)
    check.digest = P.digest
    cx, cy, cp = bottleneck_matrix(X).c, bottleneck_matrix(Y).c, bottleneck_matrix(P).c
    m = len(Y)
    expected = np.maximum(cx[:, None, :, None], cy[None, :, None, :]).reshape(cp.shape)
    bad = np.argwhere(cp != expected)
    if len(bad):
        p, q = (int(v) for v in bad[0])
        check.expect(False, "product bottleneck is the max of the factor bottlenecks",
                     p=[p // m, p % m], q=[q // m, q % m], got=cp[p, q], expected=expected[p, q])


@suite('model-classifier-goldens')
def model_classifier_goldens(rng: np.random.Generator, check: TrialCheck) -> None:
    models = golden_models()
    for name, expected in SPACE_GOLDENS:
        report = classify_space(models[name])
        for verdict, value in expected.items():
            check.expect(report[verdict] == value, f"{name}: {verdict}", expected=value, got=report[verdict])
    for name, pieces, expected in SUBSET_GOLDENS:
        report = classify_subset(models[name], golden_subset(pieces))
        subset = [p.to_dict() for p in pieces]
        for verdict, value in expected.items():
            check.expect(report[verdict] == value, f"{subset} in {name}: {verdict}",
                         expected=value, got=report[verdict])


def _sampled_points(rng: np.random.Generator, M: Model1D, limit: int = 24) -> List[Fraction]:
    points = M.representative_points()
    if len(points) > limit:
        points = [points[int(i)] for i in sorted(rng.choice(len(points), size=limit, replace=False))]
    return points


@suite('model-fc-laws')
def model_fc_laws(rng: np.random.Generator, check: TrialCheck) -> None:
    M = gen_model(rng)
    check.digest = M.digest
    kernel, limits = nslc(M), limit_points(M)
    points = _sampled_points(rng, M)
    values = {x: f_c(M, x) for x in points}
    for x, fc in values.items():
        check.expect((fc == 0) == kernel.contains(x), "f_c vanishes exactly on nslc", x=x, f_c=fc)
        iso = isolation(M, x)
        check.expect(iso <= fc, "isolation is at most f_c", x=x, isolation=iso, f_c=fc)
        check.expect((iso == 0) == limits.contains(x), "isolation vanishes exactly on limit points",
                     x=x, isolation=iso)
    infinite = [x for x, fc in values.items() if fc == INF]
    check.expect(bool(infinite) == M.is_bounded and len(infinite) in (0, len(values)),
                 "f_c is infinite everywhere or nowhere", infinite=infinite, bounded=M.is_bounded)
    if not M.is_bounded:
        for x in points:
            for y in points:
                if x < y:
                    check.expect(abs(values[x] - values[y]) <= y - x, "f_c is 1-Lipschitz",
                                 x=x, y=y, f_x=values[x], f_y=values[y])


@suite('hierarchy-audit')
def hierarchy_audit(rng: np.random.Generator, check: TrialCheck) -> None:
    M = gen_model(rng)
    check.digest = M.digest
    space_report = classify_space(M)
    check.expect(not space_report.violations(), "space verdicts respect the hierarchy",
                 violations=space_report.violations(), verdicts=space_report.verdicts)
    check.expect(space_report['uss'] == (nslc(M).is_compact), "USS iff nslc is compact",
                 verdicts=space_report.verdicts)
    A = gen_subset(rng, M)
    subset_report = classify_subset(M, A)
    check.expect(not subset_report.violations(), "subset verdicts respect the hierarchy",
                 subset=A.to_dict(), violations=subset_report.violations(), verdicts=subset_report.verdicts)
    if space_report['uss']:
        check.expect(subset_report['uss_subset'], "every subset of a USS space is USS", subset=A.to_dict())


@suite('bornology-laws')
def bornology_laws(rng: np.random.Generator, check: TrialCheck) -> None:
    M = gen_model(rng)
    check.digest = M.digest
    A, B = gen_subset(rng, M), gen_subset(rng, M)
    uss_a = classify_subset(M, A)['uss_subset']
    uss_b = classify_subset(M, B)['uss_subset']
    uss_ab = classify_subset(M, A.union(B))['uss_subset']
    check.expect(uss_ab == (uss_a and uss_b), "USS subsets are closed under finite unions and subsets",
                 a=A.to_dict(), b=B.to_dict(), uss_a=uss_a, uss_b=uss_b, uss_union=uss_ab)
    for x in _sampled_points(rng, M, 4):
        singleton = SubsetSpec([Points((x,))])
        check.expect(classify_subset(M, singleton)['uss_subset'], "singletons are USS", x=x)
    if A.is_bounded:
        check.expect(uss_a, "bounded subsets are USS", a=A.to_dict())


def _crosscheck_scales(points: List[Fraction], resolution: Fraction) -> List[Fraction]:
    thresholds = sorted({b - a for a, b in zip(points, points[1:])} | {resolution})
    scales = [(t + u) / 2 for t, u in zip(thresholds, thresholds[1:]) if t >= resolution]
    scales.append(thresholds[-1] + 1)
    return scales


@suite('sample-crosscheck')
def sample_crosscheck(rng: np.random.Generator, check: TrialCheck) -> None:
    M = gen_model(rng)
    check.digest = M.digest
    window = M.core_window()
    resolution = Fraction(1, int(rng.choice([2, 3, 4])))
    points = sample_points(M, window, resolution)
    if len(points) < 2:
        return
    X = sample(M, window, resolution)
    check.expect(len(X) == len(points), "sample keeps every sampled point", points=len(points), size=len(X))
    scales = _crosscheck_scales(points, resolution)
    chosen = sorted(int(i) for i in rng.choice(len(points), size=min(6, len(points)), replace=False))
    for eps in (scales[int(i)] for i in rng.choice(len(scales), size=min(4, len(scales)), replace=False)):
        for index in chosen:
            region = model_component(M, points[index], eps)
            expected = tuple(i for i, p in enumerate(points) if region.contains(p))
            got = chain_component(X, index, float(eps)).members
            check.expect(got == expected, "sampled component matches the exact component",
                         x=points[index], eps=eps, resolution=resolution, expected=expected, got=got)


@suite('bottleneck-oracle')
def bottleneck_oracle(rng: np.random.Generator, check: TrialCheck) -> None:
    X = random_space(rng, ConfigManager.get_oracle_max_points())
    check.digest = X.digest
    c = bottleneck_matrix(X).c
    for x in range(len(X)):
        for y in range(x + 1, len(X)):
            expected = oracle_minimax(X, x, y)
            check.expect(c[x, y] == expected, "bottleneck equals the minimax path value",
                         x=x, y=y, expected=expected, got=c[x, y])


@suite('covering-oracle')
def covering_oracle(rng: np.random.Generator, check: TrialCheck) -> None:
    X = random_space(rng, KCENTER_MAX_POINTS)
    A = random_subset(rng, X)
    check.digest = X.digest
    n = len(X)
    k = int(rng.integers(1, 4))
    alpha = alpha_k(A, k).value
    expected = oracle_kcenter(X, A, k, 1)
    check.expect(alpha == expected, "alpha_k matches exhaustive search", k=k, members=A.members,
                 expected=expected, got=alpha)
    for m in sorted({1, 2, n - 1}):
        value = eta_km(A, k, m).value
        expected = oracle_kcenter(X, A, k, m)
        check.expect(value == expected, "eta_{k,m} matches exhaustive search", k=k, m=m,
                     members=A.members, expected=expected, got=value)
    value = eta_star_k(A, k).value
    expected = oracle_kcenter(X, A, k, None)
    check.expect(value == expected, "eta*_k matches exhaustive search", k=k, members=A.members,
                 expected=expected, got=value)


@suite('model-functional-laws')
def model_functional_laws(rng: np.random.Generator, check: TrialCheck) -> None:
    M = gen_model(rng)
    check.digest = M.digest
    A, B = gen_subset(rng, M), gen_subset(rng, M)
    fa, fb = model_functionals(M, A), model_functionals(M, B)
    fab = model_functionals(M, A.union(B))
    check.expect(fab['eta_star'] == max(fa['eta_star'], fb['eta_star']), "eta* of a union is the larger part",
                 a=A.to_dict(), b=B.to_dict(), union=fab['eta_star'], parts=[fa['eta_star'], fb['eta_star']])
    check.expect(fa['eta_star'] <= fa['gamma_star'], "eta* is at most gamma*", a=A.to_dict(), values=fa)
    precompact = classify_subset(M, A)['qc_precompact']
    check.expect((fa['eta_star'] == 0) == precompact, "eta* vanishes exactly on precompact subsets",
                 a=A.to_dict(), eta_star=fa['eta_star'], qc_precompact=precompact)
    check.expect((fa['alpha'] == 0) == A.is_bounded, "alpha vanishes exactly on bounded subsets",
                 a=A.to_dict(), alpha=fa['alpha'])


def _rerun(name: str, seed: int, trials: int) -> str:
    return f"chainscope propcheck --suite {name} --seed {seed} --trials {trials}"


def _run_trial(name: str, seed: np.random.SeedSequence) -> Tuple[str, List[Tuple[str, Dict[str, Any]]]]:
    check = TrialCheck()
    try:
        SUITES[name](np.random.default_rng(seed), check)
    except Exception as e:
        logger.error(f"Trial of {name} raised: {e}", exc_info=True)
        check.failures.append(('trial completes without error', {'error': type(e).__name__, 'message': str(e)}))
    return check.digest, check.failures


def run_suite(name: str, seed: int = 0, trials: int = 100, workers: Optional[int] = None) -> SuiteReport:
    """Run ``trials`` seeded trials of a suite.

    Trial i draws from the i-th child of ``SeedSequence(seed)``, so the
    report (without timing) depends only on the name, seed and trial count.
    """
    if name not in SUITES:
        raise UnknownSuite(name, sorted(SUITES))
    if trials < 1:
        raise InvalidGeneratorConfig(f"trials must be positive, got {trials}", trials=trials)
    workers = workers or ConfigManager.get_workers()
    children = np.random.SeedSequence(seed).spawn(trials)
    started = time.perf_counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_trial, [name] * trials, children))
    else:
        outcomes = [_run_trial(name, child) for child in children]

    report = SuiteReport(name, seed, trials)
    rerun = _rerun(name, seed, trials)
    for trial, (digest, failures) in enumerate(outcomes):
        for assertion, witness in failures:
            report.failures.append(Failure(trial, digest, assertion, witness, rerun))
    report.elapsed = time.perf_counter() - started
    if report.failures:
        logger.warning(f"Suite {name} (seed {seed}): {len(report.failures)} failures in {trials} trials")
    else:
        logger.info(f"Suite {name} (seed {seed}): {trials} trials passed")
    return report
