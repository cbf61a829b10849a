from services.analysis_service import AnalysisReport, AnalysisService
from services.errors import InputError
from services.input_service import InputService

__all__ = ['AnalysisReport', 'AnalysisService', 'InputError', 'InputService']
