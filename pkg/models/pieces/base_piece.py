from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from spaces.ext_real import INF, ExtReal

Segment = Tuple[Fraction, Fraction]


class Piece(ABC):
    """A closed subset of the line with exact rational parameters."""

    kind: str = ''
    is_convex: bool = False

    @property
    @abstractmethod
    def lower(self) -> ExtReal:
        pass

    @property
    @abstractmethod
    def upper(self) -> ExtReal:
        pass

    @abstractmethod
    def contains(self, x: Fraction) -> bool:
        pass

    @abstractmethod
    def successor(self, r: Fraction) -> Optional[Fraction]:
        """Infimum of the piece intersected with (r, inf), None if that is empty.

        For convex pieces the infimum may be r itself.
        """
        pass

    @abstractmethod
    def predecessor(self, r: Fraction) -> Optional[Fraction]:
        pass

    @abstractmethod
    def clip(self, lo: ExtReal, hi: ExtReal) -> Optional['Piece']:
        """The piece intersected with [lo, hi], None when empty."""
        pass

    @abstractmethod
    def count_in(self, lo: Fraction, hi: Fraction) -> int:
        """Number of segments ``segments(lo, hi)`` would return."""
        pass

    @abstractmethod
    def segments(self, lo: Fraction, hi: Fraction) -> List[Segment]:
        """Maximal closed segments of the piece inside the finite window [lo, hi]."""
        pass

    @abstractmethod
    def reflect(self) -> 'Piece':
        """Image under x -> -x."""
        pass

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        pass

    @property
    def is_bounded(self) -> bool:
        return self.lower > -INF and self.upper < INF

    @property
    def infinite_step(self) -> Optional[Fraction]:
        """Spacing of an unbounded discrete piece; None for every other piece."""
        return None

    @property
    def anchor_point(self) -> Fraction:
        """Some point of the piece."""
        if self.lower > -INF:
            return self.lower
        if self.upper < INF:
            return self.upper
        return Fraction(0)
