from models.analysis import (
    f_c,
    fc_region_infimum,
    inf_fc,
    isolation,
    isolation_infimum,
    limit_points,
    model_component,
    nslc,
    nu,
)
from models.classifier import (
    ClassifierReport,
    classify_product,
    classify_space,
    classify_subset,
    model_functionals,
)
from models.errors import (
    EmptySample,
    InvalidPiece,
    ModelTooLarge,
    OverlappingPieces,
    PointNotInModel,
    SubsetNotContained,
)
from models.model import Model1D, Tail, TailKind
from models.pieces import FullLine, Interval, Lattice, Points, Ray
from models.region import SymbolicRegion
from models.sampling import sample, sample_points
from models.subset import SubsetSpec
