import math
from fractions import Fraction

import numpy as np
import pytest

from functionals import Exactness
from handlers.report_handlers import diagnostic, dumps, envelope, jsonable
from services import AnalysisReport, AnalysisService
from spaces.errors import TooFewPoints


def test_jsonable_values():
    assert jsonable(Fraction(3, 4)) == '3/4'
    assert jsonable(math.inf) == 'inf'
    assert jsonable(np.float64(2.5)) == 2.5
    assert jsonable(np.int64(3)) == 3
    assert jsonable(np.bool_(True)) is True
    assert jsonable(Exactness.GREEDY_UPPER_BOUND) == 'greedy-upper-bound'
    assert jsonable({1: (Fraction(1), np.array([1.0, 2.0]))}) == {'1': ['1', [1.0, 2.0]]}


def test_dumps_is_sorted_and_finite():
    text = dumps({'b': math.inf, 'a': 1})
    assert text.index('"a"') < text.index('"b"')
    assert '"inf"' in text
    with pytest.raises(ValueError):
        dumps({'a': math.nan})


def test_envelope_and_diagnostic():
    document = envelope('scales', {'events': []}, {'x.json': 'abc'})
    assert document['tool'] == 'chainscope'
    assert document['version'] == '1.0.0'
    assert document['inputs'] == {'x.json': 'abc'}
    report = diagnostic(TooFewPoints(1), 'validate')
    assert report['diagnostic'] == {'error': 'too_few_points', 'message': report['diagnostic']['message'],
                                    'count': 1}
    assert report['command'] == 'validate'


def test_analysis_report_document(line_space):
    report = AnalysisService().analyze_space(line_space, line_space.full(), 1, 1)
    document = report.to_dict()
    assert document['kind'] == 'finite'
    assert document['merge_events'][0] == {'scale': 1.0, 'joined': [[0, 1]]}
    assert document['functionals']['alpha_k']['value'] == 4.0
    assert AnalysisReport.from_dict(document).to_dict() == document


def test_model_report(ray_and_naturals):
    report = AnalysisService().analyze_model(ray_and_naturals)
    assert report.regions['nslc'] == [{'type': 'ray', 'dir': 'left', 'end': '0'}]
    assert report.classifier['space'].get('verdicts', {}).get('uss') is False
    assert report.functionals == {}
