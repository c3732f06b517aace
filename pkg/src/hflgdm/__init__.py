"""Group decision making with hesitant fuzzy linguistic preference relations.

Provides the domain types (linguistic scale, hesitant term sets, reciprocal
preference matrices), a geometric consistency index with an automatic repair
loop, Monte-Carlo calibration of its critical values, and a worst-consensus
driven group decision procedure, plus a CLI and an HTTP service.
"""

from .scale import LinguisticScale
from .hflts import Hflts, hflts_distance, index_add, index_scale, normalize_pair
from .hflpr import (
    Hflpr,
    hflpr_from_json_dict,
    hflpr_from_upper,
    hflpr_similarity,
    hflpr_to_json_dict,
    load_hflpr,
    random_hflpr,
    to_hfpr,
    validate_hflpr,
)
from .consistency import (
    CalibrationResult,
    ConsistencyParams,
    ConsistencyReport,
    PriorityVector,
    StopMode,
    adjust,
    algorithm1,
    calibrate,
    consistency_index,
    critical_value,
    default_params,
    hflgci_for_slice,
    perfect_lpr,
    priority_vectors,
)
from .consensus import (
    ConsensusRound,
    ConsensusTrace,
    GroupProblem,
    algorithm2,
    dm_weights,
    fuse_indices,
    hflwa_aggregate,
    max_deviation_target,
    modify_row,
    perfect_hflpr,
    wcd,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "LinguisticScale",
    "Hflts",
    "Hflpr",
    "PriorityVector",
    "ConsistencyParams",
    "ConsistencyReport",
    "CalibrationResult",
    "StopMode",
    "GroupProblem",
    "ConsensusRound",
    "ConsensusTrace",
    "errors",
    "adjust",
    "algorithm1",
    "algorithm2",
    "calibrate",
    "consistency_index",
    "critical_value",
    "default_params",
    "dm_weights",
    "fuse_indices",
    "hflgci_for_slice",
    "hflpr_from_json_dict",
    "hflpr_from_upper",
    "hflpr_similarity",
    "hflpr_to_json_dict",
    "hflts_distance",
    "hflwa_aggregate",
    "index_add",
    "index_scale",
    "load_hflpr",
    "max_deviation_target",
    "modify_row",
    "normalize_pair",
    "perfect_hflpr",
    "perfect_lpr",
    "priority_vectors",
    "random_hflpr",
    "to_hfpr",
    "validate_hflpr",
    "wcd",
]
