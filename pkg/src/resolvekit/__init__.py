"""resolvekit: exact graph resolvability at desk scale.

Computes metric dimension and partition dimension of small connected graphs
by certified exhaustive search, builds resolving partitions of Cartesian
products from factor witnesses, and verifies every claim independently.
"""

from ._kernels import BACKEND
from .constructions import (
    BoundEntry,
    BoundReport,
    FactorInputError,
    ProductPartitionPlan,
    bound_report,
    product_partition_from_partitions,
    product_partition_from_set,
    recognize_family,
)
from .families import FamilySpec, generate, paper_unicyclic_example
from .graph import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    ProductVertexCodec,
    all_pairs_distances,
    cartesian_product,
    from_edge_list,
    is_connected,
    product_set_distance,
)
from .resolvability import (
    Certificate,
    OrderedPartition,
    VertexSequence,
    distance_to_set,
    is_resolving_partition,
    is_resolving_set,
    metric_representation,
    partition_representation,
)
from .solvers import (
    DeskScaleError,
    DimResult,
    PdResult,
    metric_dimension,
    partition_dimension,
    verify_minimality,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundEntry",
    "BoundReport",
    "Certificate",
    "DeskScaleError",
    "DimResult",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "FactorInputError",
    "FamilySpec",
    "Graph",
    "OrderedPartition",
    "PdResult",
    "ProductPartitionPlan",
    "ProductVertexCodec",
    "VertexSequence",
    "all_pairs_distances",
    "bound_report",
    "cartesian_product",
    "distance_to_set",
    "from_edge_list",
    "generate",
    "is_connected",
    "is_resolving_partition",
    "is_resolving_set",
    "metric_dimension",
    "metric_representation",
    "paper_unicyclic_example",
    "partition_dimension",
    "partition_representation",
    "product_partition_from_partitions",
    "product_partition_from_set",
    "product_set_distance",
    "recognize_family",
    "verify_minimality",
]
