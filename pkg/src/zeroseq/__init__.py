"""Zero-sum and bounded-weight blocks in +-1 sequences."""

from .decomp import (
    LayeredInstance,
    PathDecomposition,
    decompose,
    decompose_interval,
    path_interpolate,
    pm1_band,
    zs_decompose,
)
from .extremal import (
    enumerate_block_family,
    enumerate_gap_family,
    is_block_family_member,
    is_gap_family_member,
)
from .search import (
    find_zs_ap,
    find_zs_gap_block,
    interpolate_gap_block,
    scan_bounded_block,
    scan_exact_block,
    stream_zs_blocks,
)
from .seq import BlockWitness, SequenceError, SignedSeq, parse_seq, weight_of, window_weight
from .thresholds import (
    ParameterError,
    block_threshold,
    gap_threshold,
    lambda_ceil,
    lambda_floor,
    level_set,
    residue_s,
    zero_in_level_set,
)

__version__ = "0.1.0"
