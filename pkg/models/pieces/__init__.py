from typing import Any, Callable, Dict, Optional

from models.errors import InvalidPiece
from models.pieces.base_piece import Piece, Segment
from models.pieces.convex import ConvexPiece, FullLine, Interval, Ray, span
from models.pieces.lattice import Lattice
from models.pieces.points import Points

PIECE_TYPES: Dict[str, Callable[[Dict[str, Any]], Piece]] = {
    'interval': Interval.from_dict,
    'ray': Ray.from_dict,
    'fullline': FullLine.from_dict,
    'lattice': Lattice.from_dict,
    'points': Points.from_dict,
}


def piece_from_dict(data: Any, index: Optional[int] = None) -> Piece:
    if not isinstance(data, dict):
        raise InvalidPiece(f"Piece {index} must be an object", piece=index)
    kind = data.get('type')
    if kind not in PIECE_TYPES:
        raise InvalidPiece(f"Piece {index} has unknown type {kind!r}", piece=index, field='type')
    try:
        return PIECE_TYPES[kind](data)
    except InvalidPiece as e:
        e.witness.setdefault('piece', index)
        raise


__all__ = [
    'ConvexPiece',
    'FullLine',
    'Interval',
    'Lattice',
    'PIECE_TYPES',
    'Piece',
    'Points',
    'Ray',
    'Segment',
    'piece_from_dict',
    'span',
]
