"""Machine output: JSON documents, and CSV or DOT renderings of merge trees."""
import csv
import io
import json
import math
import sys
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, TextIO

import numpy as np

from chains.merge_tree import MergeTree
from config.config_manager import ConfigManager
from spaces.ext_real import format_rational


def jsonable(value: Any) -> Any:
    """Plain JSON values: rationals become "p/q" and infinity "inf"."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [jsonable(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, Enum):
        return value.value
    if is_dataclass(value) and not isinstance(value, type):
        return jsonable(asdict(value))
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return format_rational(value)
        return value
    return value


def envelope(command: str, result: Any, inputs: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
    """Wrap a command result with the tool version and the digests of its inputs."""
    return {
        'tool': 'chainscope',
        'version': ConfigManager.get_version(),
        'command': command,
        'inputs': dict(inputs or {}),
        'result': result,
    }


def dumps(document: Any) -> str:
    return json.dumps(jsonable(document), sort_keys=True, indent=2, allow_nan=False)


def write_json(document: Any, stream: Optional[TextIO] = None) -> None:
    stream = stream or sys.stdout
    stream.write(dumps(document))
    stream.write('\n')


def merge_events(tree: MergeTree) -> list:
    return [
        {'scale': event.scale, 'joined': [list(reps) for reps in event.joined]}
        for event in tree.events
    ]


def merge_events_csv(tree: MergeTree) -> str:
    """One row per class formed: scale, new class id, absorbed representatives."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['scale', 'class', 'representatives'])
    labels = tree.space.labels
    for event in tree.events:
        for reps in event.joined:
            writer.writerow([repr(event.scale), labels[min(reps)], ' '.join(labels[r] for r in reps)])
    return buffer.getvalue()


def merge_events_dot(tree: MergeTree) -> str:
    labels = tree.space.labels
    lines = ['digraph merge_tree {', '  rankdir=BT;']
    current = {}
    for i, label in enumerate(labels):
        node = f'p{i}'
        current[i] = node
        lines.append(f'  {node} [label={json.dumps(label)}, shape=box];')
    for e, event in enumerate(tree.events):
        for c, reps in enumerate(event.joined):
            node = f'm{e}_{c}'
            lines.append(f'  {node} [label="{event.scale!r}"];')
            for rep in reps:
                lines.append(f'  {current[rep]} -> {node};')
            current[min(reps)] = node
    lines.append('}')
    return '\n'.join(lines) + '\n'


def diagnostic(error: Any, command: Optional[str] = None) -> Dict[str, Any]:
    """Error document for a rejected input; ``error`` is a ChainscopeError."""
    return {
        'tool': 'chainscope',
        'version': ConfigManager.get_version(),
        'command': command,
        'diagnostic': error.to_dict(),
    }
