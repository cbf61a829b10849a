from spaces.finite_space import (
    FiniteMetricSpace,
    PointSubset,
    box_product,
    enlargement,
    from_coordinates,
    hausdorff,
    require_scale,
    set_gap,
    validate_metric,
)
from spaces.ext_real import INF, format_ext, format_rational

__all__ = [
    'FiniteMetricSpace',
    'PointSubset',
    'box_product',
    'enlargement',
    'from_coordinates',
    'hausdorff',
    'require_scale',
    'set_gap',
    'validate_metric',
    'INF',
    'format_ext',
    'format_rational',
]
