from spaces.errors import ChainscopeError


class InvalidPiece(ChainscopeError):
    code = "invalid_piece"


class OverlappingPieces(ChainscopeError):
    code = "overlapping_pieces"

    def __init__(self, i: int, j: int, point: str):
        super().__init__(f"Pieces {i} and {j} share the point {point}", i=i, j=j, point=point)
        self.i, self.j = i, j


class PointNotInModel(ChainscopeError):
    code = "point_not_in_model"

    def __init__(self, point: str):
        super().__init__(f"{point} is not a point of the model", point=point)


class SubsetNotContained(ChainscopeError):
    code = "subset_not_contained"

    def __init__(self, piece: int, point: str):
        super().__init__(f"Subset piece {piece} leaves the model at {point}", piece=piece, point=point)
        self.piece = piece


class EmptySample(ChainscopeError):
    code = "empty_sample"

    def __init__(self, count: int):
        super().__init__(f"Sample window holds {count} model points, at least 2 are needed", count=count)


class ModelTooLarge(ChainscopeError):
    code = "model_too_large"

    def __init__(self, count: int, bound: int):
        super().__init__(
            f"Walk would enumerate {count} lattice points, bound is {bound} (CHAINSCOPE_MAX_MODEL_POINTS)",
            count=count, bound=bound,
        )
