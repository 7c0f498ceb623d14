"""
Uniquely k-dimensional graph families and their verification.
"""

from uniqdim.constructions.base6 import find_base6, search_base6
from uniqdim.constructions.families import (
    ConstructedGraph,
    Prediction,
    construct_3k,
    construct_5k_half,
    construct_k_plus_3k,
    construct_order9,
    extend_by_path,
    five_halves_order,
    join_identify,
    tuple_vertex,
    universal_vertex,
    verify_constructed,
)

__all__ = [
    'ConstructedGraph',
    'Prediction',
    'construct_3k',
    'construct_k_plus_3k',
    'construct_order9',
    'find_base6',
    'search_base6',
    'join_identify',
    'universal_vertex',
    'construct_5k_half',
    'five_halves_order',
    'extend_by_path',
    'tuple_vertex',
    'verify_constructed',
]
