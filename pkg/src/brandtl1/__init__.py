"""Exact-arithmetic l1 convolution algebras over Brandt semigroups.

Finitely supported vectors with exact rational coefficients over a group G,
the Brandt triples T = I x G x I, and the full semigroup S = T + null;
their convolutions, block structure and tensor module actions; the
splitting of the semigroup algebra; and approximate-diagonal constructions
with exact defect measurements.
"""

from .brandt import NULL, BrandtElement, BrandtNull, BrandtSemigroup, BrandtTriple, brandt_mul
from .diagonals import (
    DefectReport,
    NetIndex,
    blockwise_bound,
    commutator_defect,
    commutator_stage_threshold,
    defect_sweep,
    exact_diagonal,
    folner_diagonal,
    lift_diagonal,
    pi_defect,
    pi_stage_threshold,
    prefix_chain,
    spread_diagonal,
    tail_truncation,
)
from .groups import (
    FiniteGroup,
    Group,
    GroupAxiomError,
    IntegerGroup,
    cyclic,
    folner_defect,
    symmetric,
)
from .l1 import (
    Basis,
    L1Vector,
    act_left,
    act_right,
    block,
    blocks,
    convolve,
    convolve_t_sum,
    embed_block,
    embed_tensor_block,
    pi,
    point_sort_key,
    tensor,
)
from .splitting import (
    PairElement,
    balanced_embed,
    from_pair,
    restrict_to_triples,
    to_pair,
    total_mass,
)

__version__ = "0.1.0"

__all__ = [
    "NULL",
    "Basis",
    "BrandtElement",
    "BrandtNull",
    "BrandtSemigroup",
    "BrandtTriple",
    "DefectReport",
    "FiniteGroup",
    "Group",
    "GroupAxiomError",
    "IntegerGroup",
    "L1Vector",
    "NetIndex",
    "PairElement",
    "act_left",
    "act_right",
    "balanced_embed",
    "block",
    "blocks",
    "blockwise_bound",
    "brandt_mul",
    "commutator_defect",
    "commutator_stage_threshold",
    "convolve",
    "convolve_t_sum",
    "cyclic",
    "defect_sweep",
    "embed_block",
    "embed_tensor_block",
    "exact_diagonal",
    "folner_defect",
    "folner_diagonal",
    "from_pair",
    "lift_diagonal",
    "pi",
    "pi_defect",
    "pi_stage_threshold",
    "point_sort_key",
    "prefix_chain",
    "restrict_to_triples",
    "spread_diagonal",
    "symmetric",
    "tail_truncation",
    "tensor",
    "to_pair",
    "total_mass",
]
