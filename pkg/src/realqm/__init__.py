"""Real-number representation of finite-dimensional quantum theory.

Complex states and operators are embedded into real ones of twice the
dimension; composite systems are combined with a parity-contracted tensor
product that reproduces the complex predictions.
"""

from . import oracle
from .algebra import (
    RealifiedChannel,
    real_add,
    real_apply_channel,
    real_evolve,
    real_expectation,
    real_mul,
)
from .composite import (
    PARITY_CONTRACTOR,
    RawPairKet,
    ancilla_witness,
    counterexample_report,
    modified_tensor_operator,
    modified_tensor_state,
    naive_tensor,
    pair_ket,
    parity_contract,
)
from .estimator import StueckelbergTransformer
from .exceptions import BlockStructureViolation, DimensionMismatch, ValidationError
from .realify import (
    J,
    RealifiedKet,
    RealifiedOperator,
    RealifiedState,
    complexify,
    inner_product,
    realified_density_from_ket,
    realify_ket,
    realify_operator,
    realify_state,
)
from .report import ExperimentReport, __version__
from .scenarios import entanglement_swapping_demo, nonlocal_operation_demo, two_source_born_check

__all__ = [
    "BlockStructureViolation",
    "DimensionMismatch",
    "ExperimentReport",
    "J",
    "PARITY_CONTRACTOR",
    "RawPairKet",
    "RealifiedChannel",
    "RealifiedKet",
    "RealifiedOperator",
    "RealifiedState",
    "StueckelbergTransformer",
    "ValidationError",
    "ancilla_witness",
    "complexify",
    "counterexample_report",
    "entanglement_swapping_demo",
    "inner_product",
    "modified_tensor_operator",
    "modified_tensor_state",
    "naive_tensor",
    "nonlocal_operation_demo",
    "oracle",
    "pair_ket",
    "parity_contract",
    "real_add",
    "real_apply_channel",
    "real_evolve",
    "real_expectation",
    "real_mul",
    "realified_density_from_ket",
    "realify_ket",
    "realify_operator",
    "realify_state",
    "two_source_born_check",
    "__version__",
]
