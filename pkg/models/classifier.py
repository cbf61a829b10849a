import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from models.analysis import (
    fc_region_infimum,
    inf_fc,
    isolation_infimum,
    limit_points,
    nslc,
    outside_unbounded_convex,
)
from models.model import Model1D, TailKind
from models.region import SymbolicRegion
from models.subset import SubsetSpec
from models.walk import widest_gap
from spaces.ext_real import INF, ExtReal, format_ext

logger = logging.getLogger(__name__)

# (premise, conclusion) pairs every report must respect
SPACE_HIERARCHY: List[Tuple[str, str]] = [
    ('compact', 'uss'),
    ('uss', 'cofinally_complete'),
    ('cofinally_complete', 'complete'),
    ('uc', 'uss'),
    ('strongly_uniformly_locally_compact', 'strongly_locally_compact'),
    ('strongly_uniformly_locally_compact', 'uss'),
    ('chainable', 'cofinally_complete'),
]

SUBSET_HIERARCHY: List[Tuple[str, str]] = [
    ('bounded', 'uss_subset'),
    ('uc_subset', 'uss_subset'),
    ('uss_subset', 'cc_subset'),
    ('bourbaki_bounded', 'qc_precompact'),
]


@dataclass
class ClassifierReport:
    subject: str
    verdicts: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, Any] = field(default_factory=dict)

    def __getitem__(self, name: str) -> bool:
        return self.verdicts[name]

    def violations(self) -> List[Tuple[str, str]]:
        rules = SUBSET_HIERARCHY if self.subject == 'subset' else SPACE_HIERARCHY
        return [(p, c) for p, c in rules
                if p in self.verdicts and c in self.verdicts and self.verdicts[p] and not self.verdicts[c]]

    def to_dict(self) -> Dict[str, Any]:
        return {'subject': self.subject, 'verdicts': dict(self.verdicts), 'witnesses': dict(self.witnesses)}


def _region_out(region: SymbolicRegion) -> List[Dict[str, Any]]:
    return region.to_list()


def classify_space(M: Model1D) -> ClassifierReport:
    """Hierarchy verdicts for M.

    f_c and I take finitely many values on M (finitely many gap lengths
    up to tail periodicity), so every infimum over a region missing their
    kernels is attained and positive. The delta-mu conditions therefore
    reduce to compactness of nslc and of the limit points, and the
    infima are reported as witnesses.
    """
    kernel = nslc(M)
    limits = limit_points(M)
    outside = outside_unbounded_convex(M)
    fc_outside = INF if outside is None else inf_fc(M, M.restrict(*outside))
    fc_inf = fc_region_infimum(M)
    iso_inf = isolation_infimum(M)

    verdicts = {
        'compact': M.is_bounded,
        'chainable': len(M.pieces) == 1 and M.pieces[0].is_convex,
        'strongly_locally_compact': kernel.is_empty,
        'strongly_uniformly_locally_compact': fc_inf > 0,
        'uc': limits.is_compact and iso_inf > 0,
        'uss': kernel.is_compact and fc_outside > 0,
        'cofinally_complete': True,
        'complete': True,
    }
    verdicts['cbq_complete'] = verdicts['uss']
    witnesses = {
        'nslc': _region_out(kernel),
        'limit_points': _region_out(limits),
        'nlc': [],
        'fc_infimum': format_ext(fc_inf),
        'fc_infimum_outside_nslc': format_ext(fc_outside),
        'isolation_infimum': format_ext(iso_inf),
        'right_tail': M.right_tail.to_dict(),
        'left_tail': M.left_tail.to_dict(),
    }
    if not kernel.is_compact:
        witnesses['unbounded_nslc_piece'] = next(p.to_dict() for p in kernel.pieces if not p.is_bounded)
    if not limits.is_compact:
        witnesses['unbounded_limit_piece'] = next(p.to_dict() for p in limits.pieces if not p.is_bounded)
    logger.debug(f"Classified model {M.digest[:12]}: {verdicts}")
    return ClassifierReport('space', verdicts, witnesses)


def _offending_tails(M: Model1D, A: SubsetSpec) -> Dict[str, ExtReal]:
    """Periodic tails A runs into; each splits into infinitely many components at small scales."""
    found = {}
    if A.upper == INF and M.right_tail.kind is TailKind.PERIODIC:
        found['right'] = M.right_tail.gap
    if A.lower == -INF and M.left_tail.kind is TailKind.PERIODIC:
        found['left'] = M.left_tail.gap
    return found


def subset_gamma_star(M: Model1D, A: SubsetSpec) -> ExtReal:
    """Largest gap of M between inf A and sup A: above it A sits in one component."""
    lo, hi = A.lower, A.upper
    if lo > -INF and hi < INF:
        return widest_gap(M.runs(lo, hi))
    if lo > -INF:
        return M.right_gap_sup(lo)
    if hi < INF:
        return M.left_gap_sup(hi)
    x = A.pieces[0].anchor_point
    return max(M.right_gap_sup(x), M.left_gap_sup(x))


def model_functionals(M: Model1D, A: SubsetSpec) -> Dict[str, ExtReal]:
    """Covering functionals of A with unbounded k and m.

    A chain ball of m steps at scale eps lies within m*eps of its centre,
    so alpha, eta and gamma are finite exactly for bounded A.
    """
    A.check_in(M)
    bounded = A.is_bounded
    gamma_star = subset_gamma_star(M, A)
    offending = _offending_tails(M, A)
    return {
        'alpha': Fraction(0) if bounded else INF,
        'eta': Fraction(0) if bounded else INF,
        'gamma': gamma_star if bounded else INF,
        'gamma_star': gamma_star,
        'eta_star': max(offending.values(), default=Fraction(0)),
    }


def classify_subset(M: Model1D, A: SubsetSpec) -> ClassifierReport:
    A.check_in(M)
    region = A.region
    kernel = region.meet_convex(nslc(M).pieces)
    limits = region.meet_convex(limit_points(M).pieces)
    outside = outside_unbounded_convex(M)
    off_kernel = SymbolicRegion() if outside is None else region.clip(*outside)
    fc_outside = inf_fc(M, off_kernel)
    iso_outside = isolation_infimum(M, region)
    functionals = model_functionals(M, A)
    offending = _offending_tails(M, A)

    verdicts = {
        'bounded': A.is_bounded,
        'uss_subset': kernel.is_compact and fc_outside > 0,
        'uc_subset': limits.is_compact and iso_outside > 0,
        'cc_subset': True,
        'qc_precompact': not offending,
        'bourbaki_bounded': functionals['eta'] == 0,
        'chainable': functionals['gamma_star'] == 0,
    }
    witnesses = {
        'cl_A_cap_nslc': _region_out(kernel),
        'cl_A_cap_limit_points': _region_out(limits),
        'fc_infimum_outside': format_ext(fc_outside),
        'isolation_infimum_outside': format_ext(iso_outside),
        'vacuous': {'cc_subset': 'nlc = []'},
        'offending_tails': {side: format_ext(gap) for side, gap in sorted(offending.items())},
        'functionals': {name: format_ext(value) for name, value in functionals.items()},
    }
    return ClassifierReport('subset', verdicts, witnesses)


def classify_product(M1: Model1D, M2: Model1D) -> ClassifierReport:
    """USS verdict for M1 x M2 with the box metric, from the factors alone.

    The product is USS iff one factor is compact and the other USS, or
    both are strongly locally compact and USS.
    """
    r1, r2 = classify_space(M1), classify_space(M2)
    clauses = {
        'first_compact': r1['compact'] and r2['uss'],
        'second_compact': r2['compact'] and r1['uss'],
        'both_strongly_locally_compact': (r1['strongly_locally_compact'] and r2['strongly_locally_compact']
                                          and r1['uss'] and r2['uss']),
    }
    verdicts = {
        'compact': r1['compact'] and r2['compact'],
        'uss': any(clauses.values()),
    }
    witnesses = {
        'clauses': clauses,
        'factors': [r1.verdicts, r2.verdicts],
    }
    return ClassifierReport('product', verdicts, witnesses)
