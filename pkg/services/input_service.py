import hashlib
import json
import logging
import os
from typing import Any, Callable, Dict, Union

from models.model import Model1D
from models.subset import SubsetSpec
from services.errors import InputError
from spaces.errors import ChainscopeError
from spaces.finite_space import FiniteMetricSpace, PointSubset, from_coordinates, validate_metric

logger = logging.getLogger(__name__)

Subject = Union[FiniteMetricSpace, Model1D]


def subset_digest(subset: Union[PointSubset, SubsetSpec]) -> str:
    if isinstance(subset, SubsetSpec):
        document = subset.to_dict()
    else:
        document = {'space': subset.space.digest, 'members': list(subset.members)}
    return hashlib.sha256(json.dumps(document, sort_keys=True).encode('utf-8')).hexdigest()


class InputService:
    """Loads space, model and subset files; parsers are dispatched on ``kind``."""

    def __init__(self):
        self.parsers: Dict[str, Callable[[Dict[str, Any], str], Subject]] = {
            'matrix': self._parse_matrix,
            'coords': self._parse_coords,
            'model1d': self._parse_model,
        }

    def read_json(self, path: str) -> Dict[str, Any]:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                text = f.read()
        except OSError as e:
            raise InputError(f"Cannot read {path}: {e.strerror}", file=path)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"Invalid JSON in {path}: {e.msg}", file=path, line=e.lineno, column=e.colno)
        if not isinstance(data, dict):
            raise InputError(f"{path} must hold a JSON object", file=path)
        return data

    def load(self, path: str) -> Subject:
        data = self.read_json(path)
        kind = data.get('kind')
        if kind not in self.parsers:
            raise InputError(f"Unknown input kind {kind!r}; expected one of {', '.join(sorted(self.parsers))}",
                             file=path, field='kind')
        try:
            subject = self.parsers[kind](data, path)
        except InputError:
            raise
        except ChainscopeError as e:
            e.witness.setdefault('file', path)
            raise
        logger.info(f"Loaded {kind} input {os.path.basename(path)} ({subject.digest[:12]})")
        return subject

    def load_space(self, path: str) -> FiniteMetricSpace:
        subject = self.load(path)
        if not isinstance(subject, FiniteMetricSpace):
            raise InputError(f"{path} holds a model; a finite space is needed here", file=path, field='kind')
        return subject

    def load_model(self, path: str) -> Model1D:
        subject = self.load(path)
        if not isinstance(subject, Model1D):
            raise InputError(f"{path} holds a finite space; a model is needed here", file=path, field='kind')
        return subject

    def load_point_subset(self, path: str, space: FiniteMetricSpace) -> PointSubset:
        data = self.read_json(path)
        members = data.get('members')
        if not isinstance(members, list):
            raise InputError("subset file needs a list field 'members'", file=path, field='members')
        try:
            return space.subset(members)
        except ChainscopeError as e:
            e.witness.setdefault('file', path)
            raise

    def load_model_subset(self, path: str, model: Model1D) -> SubsetSpec:
        data = self.read_json(path)
        try:
            subset = SubsetSpec.from_dict(data)
            subset.check_in(model)
        except ChainscopeError as e:
            e.witness.setdefault('file', path)
            raise
        return subset

    def load_subset(self, path: str, subject: Subject) -> Union[PointSubset, SubsetSpec]:
        if isinstance(subject, Model1D):
            return self.load_model_subset(path, subject)
        return self.load_point_subset(path, subject)

    @staticmethod
    def _labels(data: Dict[str, Any], count: int, path: str):
        labels = data.get('labels')
        if labels is None:
            return [str(i) for i in range(count)]
        if not isinstance(labels, list):
            raise InputError("'labels' must be a list", file=path, field='labels')
        return labels

    def _parse_matrix(self, data: Dict[str, Any], path: str) -> FiniteMetricSpace:
        dist = data.get('dist')
        if not isinstance(dist, list):
            raise InputError("matrix input needs a list field 'dist'", file=path, field='dist')
        labels = self._labels(data, len(dist), path)
        return validate_metric(labels, dist, provenance={'source': os.path.basename(path)})

    def _parse_coords(self, data: Dict[str, Any], path: str) -> FiniteMetricSpace:
        coords = data.get('coords')
        if not isinstance(coords, list):
            raise InputError("coords input needs a list field 'coords'", file=path, field='coords')
        metric = data.get('metric', 'euclidean')
        labels = self._labels(data, len(coords), path)
        return from_coordinates(coords, metric=metric, labels=labels,
                                provenance={'source': os.path.basename(path), 'metric': metric})

    def _parse_model(self, data: Dict[str, Any], path: str) -> Model1D:
        return Model1D.from_dict(data)
