from typing import Any, Dict


class ChainscopeError(ValueError):
    """Root of every structured error raised by chainscope.

    Subclasses keep their witness data as attributes; ``to_dict`` is what
    the command line prints as a diagnostic.
    """

    code = "error"

    def __init__(self, message: str, **witness: Any):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "message": self.message, **self.witness}


class InvalidMetric(ChainscopeError):
    code = "invalid_metric"


class ShapeMismatch(InvalidMetric):
    code = "shape_mismatch"


class TooFewPoints(InvalidMetric):
    code = "too_few_points"

    def __init__(self, count: int):
        super().__init__(f"A metric space needs at least two points, got {count}", count=count)


class NegativeDistance(InvalidMetric):
    code = "negative_distance"

    def __init__(self, i: int, j: int, value: float):
        super().__init__(f"d({i},{j}) = {value} is negative", i=i, j=j, value=value)
        self.i, self.j = i, j


class NonFiniteDistance(InvalidMetric):
    code = "non_finite_distance"

    def __init__(self, i: int, j: int):
        super().__init__(f"d({i},{j}) is not a finite number", i=i, j=j)
        self.i, self.j = i, j


class NonzeroDiagonal(InvalidMetric):
    code = "nonzero_diagonal"

    def __init__(self, i: int, value: float):
        super().__init__(f"d({i},{i}) = {value}, expected 0", i=i, value=value)
        self.i = i


class Asymmetry(InvalidMetric):
    code = "asymmetry"

    def __init__(self, i: int, j: int, forward: float, backward: float):
        super().__init__(
            f"d({i},{j}) = {forward} but d({j},{i}) = {backward}",
            i=i, j=j, forward=forward, backward=backward,
        )
        self.i, self.j = i, j


class CoincidentPoints(InvalidMetric):
    code = "coincident_points"

    def __init__(self, i: int, j: int):
        super().__init__(f"d({i},{j}) = 0 for distinct points", i=i, j=j)
        self.i, self.j = i, j


class TriangleViolation(InvalidMetric):
    code = "triangle_violation"

    def __init__(self, i: int, j: int, k: int, direct: float, detour: float):
        super().__init__(
            f"d({i},{k}) = {direct} exceeds d({i},{j}) + d({j},{k}) = {detour}",
            i=i, j=j, k=k, direct=direct, detour=detour,
        )
        self.i, self.j, self.k = i, j, k


class MixedSpaces(ChainscopeError):
    code = "mixed_spaces"

    def __init__(self):
        super().__init__("Subsets belong to different spaces")


class InvalidSubset(ChainscopeError):
    code = "invalid_subset"


class SizeOverflow(ChainscopeError):
    code = "size_overflow"

    def __init__(self, size: int, bound: int):
        super().__init__(f"Product has {size} points, bound is {bound}", size=size, bound=bound)


class NonpositiveScale(ChainscopeError):
    code = "nonpositive_scale"

    def __init__(self, value: Any):
        super().__init__(f"Scale must be strictly positive, got {value}", value=str(value))
