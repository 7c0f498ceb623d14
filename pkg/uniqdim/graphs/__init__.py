"""
Graph core: representation, distances, invariants, codecs and enumeration.
"""

from uniqdim.graphs.core import (
    DistanceMatrix,
    Graph,
    TwinClasses,
    are_twins,
    build_graph,
    check_distance_axioms,
    degree,
    diameter,
    distances,
    gamma,
    girth,
    is_connected,
    iter_bits,
    mask_of,
    max_degree,
    min_degree,
    twin_classes,
)
from uniqdim.graphs.enumerate import (
    MaskRange,
    canonical_mask,
    enumerate_connected,
    is_canonical,
    mask_ranges,
)
from uniqdim.graphs.formats import (
    detect_format,
    emit_graph6,
    format_graph,
    parse_edge_list,
    parse_graph6,
    read_graphs,
    to_edge_list_text,
)

__all__ = [
    # Representation
    'Graph',
    'build_graph',
    'iter_bits',
    'mask_of',

    # Distances and invariants
    'DistanceMatrix',
    'distances',
    'diameter',
    'girth',
    'gamma',
    'degree',
    'max_degree',
    'min_degree',
    'is_connected',
    'check_distance_axioms',

    # Twins
    'TwinClasses',
    'are_twins',
    'twin_classes',

    # Codecs
    'parse_graph6',
    'emit_graph6',
    'parse_edge_list',
    'to_edge_list_text',
    'read_graphs',
    'detect_format',
    'format_graph',

    # Enumeration
    'MaskRange',
    'mask_ranges',
    'enumerate_connected',
    'canonical_mask',
    'is_canonical',
]
