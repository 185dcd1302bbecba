"""Tropical Hurwitz complexes and Hurwitz numbers in exact arithmetic."""

from .class_algebra import (
    CentralElement,
    frobenius_pairing,
    hurwitz_number,
    multiply,
    trace,
    trace_product,
    triple_index,
)
from .complex import (
    HurwitzCell,
    HurwitzComplex,
    cell_weight,
    degree,
    degree_at_chamber,
    degree_recursive,
    enumerate_cells,
    faces_of,
    glue,
)
from .embedding import MetricPoint, QuadrupleSplit, double_ratio, embed, recover_edge_length
from .monodromy import count_monodromy_tuples, oracle_hurwitz
from .partitions import (
    Partition,
    RamificationProfile,
    all_partitions,
    class_size,
    ell,
    genus_from_profile,
    parse_partition,
    parse_profile,
    r,
)
from .trees import (
    LeafBipartition,
    LeafLabeledTree,
    canonical_key,
    degenerate,
    enumerate_trivalent_types,
    find_cherry,
    leaf_bipartition,
)

__version__ = "0.1.0"

__all__ = [
    "CentralElement",
    "HurwitzCell",
    "HurwitzComplex",
    "LeafBipartition",
    "LeafLabeledTree",
    "MetricPoint",
    "Partition",
    "QuadrupleSplit",
    "RamificationProfile",
    "all_partitions",
    "canonical_key",
    "cell_weight",
    "class_size",
    "count_monodromy_tuples",
    "degenerate",
    "degree",
    "degree_at_chamber",
    "degree_recursive",
    "double_ratio",
    "ell",
    "embed",
    "enumerate_cells",
    "enumerate_trivalent_types",
    "faces_of",
    "find_cherry",
    "frobenius_pairing",
    "genus_from_profile",
    "glue",
    "hurwitz_number",
    "leaf_bipartition",
    "multiply",
    "oracle_hurwitz",
    "parse_partition",
    "parse_profile",
    "r",
    "recover_edge_length",
    "trace",
    "trace_product",
    "triple_index",
]
