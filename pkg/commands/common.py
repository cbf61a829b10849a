import argparse
import math
from typing import Any

from services.analysis_service import AnalysisService
from services.input_service import InputService

# shared by every command module
input_service = InputService()
analysis_service = AnalysisService()


def budget(text: str) -> Any:
    """Covering budget: a positive integer or "inf"."""
    if text.strip().lower() == 'inf':
        return math.inf
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'inf', got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'inf', got {text!r}")
    return value
