"""Exact modular-data toolkit: validation, doubles, and the gapped-boundary verdict."""

from .cyclotomic import Cyclotomic, from_angle, rational, sqrt_int, zeta
from .errors import MtcError
from .fusion import (
    FusionRing,
    direct_sum,
    fp_dimensions,
    frobenius_pairing,
    group_ring,
    ring_product,
    validate,
)
from .modular import (
    ModularData,
    box_tensor,
    central_charge,
    double,
    gauss_sums,
    reverse,
    ring_from_verlinde,
    validate_modular,
    verlinde,
)
from .multifusion import BlockDecomposition, block_partition, corner_ring, morita_witness
from .obstruction import (
    ObstructionReport,
    candidate_search,
    canonical_double_candidate,
    central_charge_gate,
    verdict,
)
from .pointed import (
    MetricGroup,
    abelian_double,
    lagrangian_subgroups,
    matches_modular_data,
    metric_modular_data,
    milgram_signature,
    validate_metric,
)
from .specfile import CategorySpecFile

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "CategorySpecFile",
    "Cyclotomic",
    "FusionRing",
    "MetricGroup",
    "ModularData",
    "MtcError",
    "ObstructionReport",
    "abelian_double",
    "block_partition",
    "box_tensor",
    "candidate_search",
    "canonical_double_candidate",
    "central_charge",
    "central_charge_gate",
    "corner_ring",
    "direct_sum",
    "double",
    "fp_dimensions",
    "from_angle",
    "frobenius_pairing",
    "gauss_sums",
    "group_ring",
    "lagrangian_subgroups",
    "matches_modular_data",
    "metric_modular_data",
    "milgram_signature",
    "morita_witness",
    "rational",
    "reverse",
    "ring_from_verlinde",
    "ring_product",
    "sqrt_int",
    "validate",
    "validate_metric",
    "validate_modular",
    "verdict",
    "verlinde",
    "zeta",
    "__version__",
]
