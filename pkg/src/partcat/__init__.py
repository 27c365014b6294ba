"""Two-row set partitions, their diagram-category operations, bounded
closure generation, and free-group word embeddings."""

from .closure import (
    ClosureSet,
    construct_closure,
    construct_colored_closure,
    construct_spatial_closure,
)
from .errors import (
    BoundError,
    ColorMismatchError,
    EmptyRowError,
    EnumerationLimitError,
    LevelMismatchError,
    LevelStructureError,
    ParseError,
    PartitionError,
    SizeMismatchError,
)
from .oracles import (
    bell_number,
    compose_reference,
    enumerate_all,
    is_noncrossing,
    is_pair_partition,
    reference_counts,
)
from .ops import (
    CORNERS,
    compose,
    compose_via_dfs,
    involution,
    reflect_vertical,
    rotate,
    tensor,
)
from .partition import (
    IDENTITY,
    PAIR,
    Partition,
    canonical_labels,
    canonical_sort_key,
    equivalent,
    kernel_partition,
    make_disjoint,
    normalize,
)
from .textio import (
    parse_colored,
    parse_partition,
    parse_spatial,
    render_colored,
    render_partition,
    render_spatial,
)
from .unionfind import UnionFind, components_by_dfs
from .variants import (
    BLACK,
    WHITE,
    ColoredPartition,
    SpatialPartition,
    colored_base_partitions,
    colored_compose,
    colored_involution,
    colored_reflect,
    colored_rotate,
    colored_tensor,
    flatten,
    invert_color,
    lift_to_levels,
    spatial_base_partitions,
    spatial_compose,
    spatial_involution,
    spatial_reflect,
    spatial_rotate,
    spatial_tensor,
    unflatten,
)
from .words import (
    FreeWord,
    InvolutiveWord,
    parse_word,
    partition_of_word,
    reduce_involutive,
    to_involutive,
)

__version__ = "0.1.0"

__all__ = [
    "BLACK",
    "BoundError",
    "CORNERS",
    "ClosureSet",
    "ColorMismatchError",
    "ColoredPartition",
    "EmptyRowError",
    "EnumerationLimitError",
    "FreeWord",
    "IDENTITY",
    "InvolutiveWord",
    "LevelMismatchError",
    "LevelStructureError",
    "PAIR",
    "ParseError",
    "Partition",
    "PartitionError",
    "SizeMismatchError",
    "SpatialPartition",
    "UnionFind",
    "WHITE",
    "bell_number",
    "canonical_labels",
    "canonical_sort_key",
    "colored_base_partitions",
    "colored_compose",
    "colored_involution",
    "colored_reflect",
    "colored_rotate",
    "colored_tensor",
    "components_by_dfs",
    "compose",
    "compose_reference",
    "compose_via_dfs",
    "construct_closure",
    "construct_colored_closure",
    "construct_spatial_closure",
    "enumerate_all",
    "equivalent",
    "flatten",
    "invert_color",
    "involution",
    "is_noncrossing",
    "is_pair_partition",
    "kernel_partition",
    "lift_to_levels",
    "make_disjoint",
    "normalize",
    "parse_colored",
    "parse_partition",
    "parse_spatial",
    "parse_word",
    "partition_of_word",
    "reduce_involutive",
    "reference_counts",
    "reflect_vertical",
    "render_colored",
    "render_partition",
    "render_spatial",
    "rotate",
    "spatial_base_partitions",
    "spatial_compose",
    "spatial_involution",
    "spatial_reflect",
    "spatial_rotate",
    "spatial_tensor",
    "tensor",
    "to_involutive",
    "unflatten",
]
