"""
Exact resolving-set solver: representations, metric dimension, all bases.
"""

from uniqdim.solver.basis import (
    BasisReport,
    all_bases,
    count_bases,
    is_uniquely_dimensional,
    is_uniquely_k_dimensional,
    iter_bases,
    metric_dimension,
    order_lower_bound,
    twin_lower_bound,
)
from uniqdim.solver.resolving import (
    MetricVector,
    PairDistinguishers,
    hits_all,
    is_resolving,
    pair_distinguishers,
    representation,
    resolves_subset,
)

__all__ = [
    'MetricVector',
    'representation',
    'is_resolving',
    'resolves_subset',
    'PairDistinguishers',
    'pair_distinguishers',
    'hits_all',
    'BasisReport',
    'metric_dimension',
    'all_bases',
    'iter_bases',
    'count_bases',
    'is_uniquely_dimensional',
    'is_uniquely_k_dimensional',
    'twin_lower_bound',
    'order_lower_bound',
]
