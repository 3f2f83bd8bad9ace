"""Composite systems in the real representation.

Two realified objects each carry their own real/imaginary flag, so their
plain Kronecker product lives on two flags and is twice too large in each
direction. :func:`parity_contract` merges the two flags into one following
the multiplication table of {1, i}; :func:`modified_tensor_operator` is the
matching composition rule for operators, Map_R(V1) (x)~ Map_R(V2) =
Map_R(V1 (x) V2). The single merged flag is shared by every party, which
is what :func:`ancilla_witness` detects.
"""

from dataclasses import dataclass

import numpy as np

from ._validation import STRUCTURE_TOL, check_complex_matrix, check_real_matrix
from .exceptions import DimensionMismatch, ValidationError
from .realify import (
    RealifiedKet,
    RealifiedOperator,
    RealifiedState,
    assemble,
    blocks,
)

# Rows: merged flag (real, imaginary). Columns: flag pairs 00, 01, 10, 11.
# 1*1 = 1, 1*i = i, i*1 = i, i*i = -1.
PARITY_CONTRACTOR = np.array([[1.0, 0.0, 0.0, -1.0],
                              [0.0, 1.0, 1.0, 0.0]])

WITNESS_TOL = 1e-10


def naive_tensor(M, N):
    """Plain Kronecker product of two realified matrices (no structure kept)."""
    M = M.data if hasattr(M, "data") else check_real_matrix(M, "M")
    N = N.data if hasattr(N, "data") else check_real_matrix(N, "N")
    return np.kron(M, N)


@dataclass(frozen=True)
class RawPairKet:
    """Real vector over (flag pair) x (system pair), length 4 d1 d2.

    Index layout is ``pair * d1 * d2 + i * d2 + j`` with pair ordered
    00, 01, 10, 11.
    """

    d1: int
    d2: int
    data: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.data, dtype=float).reshape(-1)
        if data.size != 4 * self.d1 * self.d2:
            raise ValidationError(f"raw pair ket needs length {4 * self.d1 * self.d2}, got {data.size}")
        if not np.all(np.isfinite(data)):
            raise ValidationError("raw pair ket has non-finite entries")
        data = data.copy()
        data.flags.writeable = False
        object.__setattr__(self, "data", data)

    @classmethod
    def from_kron(cls, vec, d1, d2):
        """Regroup a plain ``np.kron(psi1~, psi2~)`` (flag1, i, flag2, j) so flags come first."""
        vec = np.asarray(vec, dtype=float).reshape(2, d1, 2, d2)
        return cls(d1, d2, vec.transpose(0, 2, 1, 3).reshape(-1))


def pair_ket(psi, phi):
    """Kronecker product of two realified kets, flags moved to the front."""
    return RawPairKet.from_kron(np.kron(psi.data, phi.data), psi.dim, phi.dim)


def parity_contract(v):
    """Merge the two flags of a :class:`RawPairKet` into one.

    Acts as the 2x4 contraction [[1, 0, 0, -1], [0, 1, 1, 0]] on the flag
    pair and as the identity on the system indices.
    """
    grid = v.data.reshape(4, v.d1 * v.d2)
    return RealifiedKet((PARITY_CONTRACTOR @ grid).reshape(-1))


def _operator_blocks(M, name):
    if isinstance(M, RealifiedState):
        raise ValidationError(f"{name} is a realified state; use modified_tensor_state")
    if not isinstance(M, RealifiedOperator):
        M = RealifiedOperator(M)
    return blocks(M.data)


def _combine(R1, S1, R2, S2):
    return assemble(np.kron(R1, R2) - np.kron(S1, S2),
                    np.kron(S1, R2) + np.kron(R1, S2))


def modified_tensor_operator(M, N):
    """Realified operator of V1 (x) V2, computed from M = V1~ and N = V2~ in real arithmetic."""
    R1, S1 = _operator_blocks(M, "M")
    R2, S2 = _operator_blocks(N, "N")
    return RealifiedOperator(_combine(R1, S1, R2, S2))


def modified_tensor_state(r1, r2, tol=STRUCTURE_TOL):
    """Realified state of rho1 (x) rho2.

    Inputs are rescaled to operator convention (x2), combined, and the
    result halved once so the 1/2 normalization appears exactly once.
    """
    for name, r in (("r1", r1), ("r2", r2)):
        if not isinstance(r, RealifiedState):
            raise ValidationError(f"{name} must be a RealifiedState")
        if abs(np.trace(r.data) - 1.0) > tol:
            raise ValidationError(f"{name} has trace {np.trace(r.data):.12g}")
    R1, S1 = blocks(2.0 * r1.data)
    R2, S2 = blocks(2.0 * r2.data)
    return RealifiedState(0.5 * _combine(R1, S1, R2, S2))


def modified_tensor_all(*ops):
    out = ops[0]
    combine = modified_tensor_state if isinstance(out, RealifiedState) else modified_tensor_operator
    for op in ops[1:]:
        out = combine(out, op)
    return out


@dataclass(frozen=True)
class AncillaWitness:
    uses_shared_ancilla: bool
    xz_component_norm: float

    def as_dict(self):
        return {"uses_shared_ancilla": self.uses_shared_ancilla,
                "xz_component_norm": self.xz_component_norm}


def ancilla_witness(M, tol=WITNESS_TOL):
    """Decompose M = I (x) R + J (x) S over the leftmost flag and report max|S|.

    A nonzero J component means the operator acts on the flag, which in a
    composite built with the modified tensor product is shared by all parties.
    """
    if isinstance(M, RealifiedState):
        M = M.as_operator()
    _, S = _operator_blocks(M, "M")
    norm = float(np.max(np.abs(S)))
    return AncillaWitness(norm > tol, norm)


def naive_dimension(d1, d2):
    return 4 * d1 * d2


def realified_tensor_dimension(d1, d2):
    return 2 * d1 * d2


def counterexample_report(d1, d2, seed, V1=None, V2=None):
    """Exhibit the dimension clash between naive tensoring and Map_R(V1 (x) V2).

    Samples generic V1 (d1 x d1) and V2 (d2 x d2) unless given, and also
    records the ket-level parity repair and the operator-level modified
    tensor on the same seed.
    """
    from . import oracle
    from .realify import complexify, realify_ket, realify_operator
    from .report import ExperimentReport

    d1, d2 = int(d1), int(d2)
    if d1 < 1 or d2 < 1:
        raise ValidationError("d1 and d2 must be >= 1")
    rng = np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)
    s = rng.integers(0, 2**63, size=4)
    V1 = oracle.sample("generic", d1, s[0]) if V1 is None else check_complex_matrix(V1, "V1")
    V2 = oracle.sample("generic", d2, s[1]) if V2 is None else check_complex_matrix(V2, "V2")
    if V1.shape != (d1, d1) or V2.shape != (d2, d2):
        raise DimensionMismatch("supplied matrices do not match d1, d2")

    M1, M2 = realify_operator(V1), realify_operator(V2)
    naive = naive_tensor(M1, M2)
    target = realify_operator(oracle.tensor(V1, V2))
    modified = modified_tensor_operator(M1, M2)

    psi, phi = oracle.sample("pure", d1, s[2]), oracle.sample("pure", d2, s[3])
    repaired = parity_contract(pair_ket(realify_ket(psi), realify_ket(phi)))
    ket_target = realify_ket(oracle.tensor(psi, phi))

    naive_dim = naive.shape[0]
    real_dim = target.shape[0]
    modified_err = float(np.max(np.abs(modified.data - target.data)))
    repair_err = float(np.max(np.abs(repaired.data - ket_target.data)))
    roundtrip_err = float(np.max(np.abs(complexify(modified) - oracle.tensor(V1, V2))))
    return ExperimentReport(
        name="counterexample",
        seed=int(seed),
        params={"d1": d1, "d2": d2},
        metrics={
            "naive_dimension": float(naive_dim),
            "realified_tensor_dimension": float(real_dim),
            "modified_tensor_max_abs_error": modified_err,
            "modified_tensor_roundtrip_error": roundtrip_err,
            "parity_repair_max_abs_error": repair_err,
        },
        verdicts={
            "incompatible": naive_dim != real_dim,
            "parity_repair": repair_err <= 1e-12,
            "modified_tensor": modified_err <= 1e-12,
        },
    )
