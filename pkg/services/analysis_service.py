import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from chains.merge_tree import merge_tree
from functionals.covering import (
    FunctionalResult,
    Mode,
    alpha_k,
    eta_km,
    eta_star_k,
    gamma_m,
    gamma_star,
    isolation as point_isolation,
    unbounded_functionals,
)
from handlers.report_handlers import merge_events
from models.analysis import f_c, isolation, limit_points, nslc
from models.classifier import classify_product, classify_space, classify_subset, model_functionals
from models.model import Model1D
from models.sampling import sample
from models.subset import SubsetSpec
from spaces.finite_space import FiniteMetricSpace, PointSubset, box_product, hausdorff, set_gap

logger = logging.getLogger(__name__)


@dataclass
class AnalysisReport:
    """Everything ``analyze`` knows about one input."""

    kind: str
    digest: str
    points: List[Dict[str, Any]] = field(default_factory=list)
    merge_events: List[Dict[str, Any]] = field(default_factory=list)
    regions: Dict[str, Any] = field(default_factory=dict)
    functionals: Dict[str, Any] = field(default_factory=dict)
    classifier: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind,
            'digest': self.digest,
            'points': list(self.points),
            'merge_events': list(self.merge_events),
            'regions': dict(self.regions),
            'functionals': dict(self.functionals),
            'classifier': dict(self.classifier),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'AnalysisReport':
        return cls(**{name: data[name] for name in cls.__dataclass_fields__ if name in data})


def result_dict(result: FunctionalResult, space: FiniteMetricSpace) -> Dict[str, Any]:
    return {
        'functional': result.functional,
        'value': result.value,
        'centers': list(result.centers),
        'center_labels': [space.labels[c] for c in result.centers],
        'exactness': result.exactness.value,
    }


class AnalysisService:
    """Runs the module operations behind every command and shapes their results."""

    def analyze_space(self, space: FiniteMetricSpace, subset: Optional[PointSubset] = None,
                      k: int = 1, m: int = 1) -> AnalysisReport:
        tree = merge_tree(space)
        report = AnalysisReport('finite', space.digest)
        report.points = [
            {'label': label, 'isolation': point_isolation(space, i)}
            for i, label in enumerate(space.labels)
        ]
        report.merge_events = merge_events(tree)
        if subset is not None:
            report.functionals = self.functionals(subset, k, m)
        logger.debug(f"Analyzed finite space {space.digest[:12]}: {len(tree.events)} merge events")
        return report

    def analyze_model(self, model: Model1D, subset: Optional[SubsetSpec] = None) -> AnalysisReport:
        report = AnalysisReport('model1d', model.digest)
        report.points = [
            {'x': x, 'f_c': f_c(model, x), 'isolation': isolation(model, x)}
            for x in model.representative_points()
        ]
        report.regions = {
            'nslc': nslc(model).to_list(),
            'limit_points': limit_points(model).to_list(),
        }
        report.classifier = {'space': classify_space(model).to_dict()}
        if subset is not None:
            report.classifier['subset'] = classify_subset(model, subset).to_dict()
            report.functionals = model_functionals(model, subset)
        return report

    def functionals(self, A: PointSubset, k: Any = 1, m: Any = 1, mode: Mode = Mode.EXACT) -> Dict[str, Any]:
        """The parametric functionals of A for one pair of budgets."""
        space = A.space
        results = [
            alpha_k(A, k, mode),
            eta_km(A, k, m, mode),
            gamma_m(A, m),
            gamma_star(A),
            eta_star_k(A, k),
        ]
        table = {r.functional: result_dict(r, space) for r in results}
        table['unbounded'] = unbounded_functionals(A)
        table['budgets'] = {'k': k, 'm': m, 'mode': Mode(mode).value}
        return table

    def model_functionals(self, model: Model1D, A: SubsetSpec) -> Dict[str, Any]:
        return model_functionals(model, A)

    def classify(self, model: Model1D, subset: Optional[SubsetSpec] = None,
                 other: Optional[Model1D] = None) -> Dict[str, Any]:
        result = {'space': classify_space(model).to_dict()}
        if subset is not None:
            result['subset'] = classify_subset(model, subset).to_dict()
        if other is not None:
            result['product'] = classify_product(model, other).to_dict()
        return result

    def scales(self, space: FiniteMetricSpace) -> Dict[str, Any]:
        tree = merge_tree(space)
        return {'labels': list(space.labels), 'events': merge_events(tree)}

    def compare(self, A: PointSubset, B: PointSubset) -> Dict[str, Any]:
        return {'hausdorff': hausdorff(A, B), 'set_gap': set_gap(A, B)}

    def product(self, X: FiniteMetricSpace, Y: FiniteMetricSpace) -> Dict[str, Any]:
        return space_document(box_product(X, Y))

    def sample(self, model: Model1D, window: Tuple[Any, Any], resolution: Any) -> Dict[str, Any]:
        return space_document(sample(model, window, resolution))


def space_document(space: FiniteMetricSpace) -> Dict[str, Any]:
    """A matrix input file for ``space``, with its digest and provenance."""
    return {
        'kind': 'matrix',
        'labels': list(space.labels),
        'dist': space.dist.tolist(),
        'digest': space.digest,
        'provenance': space.provenance,
    }
