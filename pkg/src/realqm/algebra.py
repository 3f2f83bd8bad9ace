"""Single-system algebra on realified matrices.

Nothing here touches complex numbers: the dagger of a complex operator is
the transpose of its realification, so evolution and channels are written
with ``.T``.
"""

from dataclasses import dataclass

import numpy as np

from ._validation import STRUCTURE_TOL
from .exceptions import DimensionMismatch, ValidationError
from .realify import RealifiedOperator, RealifiedState, blocks


def _as_operator(M, name):
    if isinstance(M, RealifiedOperator):
        return M
    if isinstance(M, RealifiedState):
        raise ValidationError(f"{name} is a realified state; use as_operator() to combine it with operators")
    return RealifiedOperator(M)


def real_add(M, N):
    """Entrywise sum of two realified operators of equal shape."""
    M, N = _as_operator(M, "M"), _as_operator(N, "N")
    if M.shape != N.shape:
        raise DimensionMismatch(f"cannot add shapes {M.shape} and {N.shape}")
    return RealifiedOperator(M.data + N.data)


def real_mul(M, N):
    """Matrix product M N; the image of the complex product V2 V1 is real_mul(V2~, V1~)."""
    M, N = _as_operator(M, "M"), _as_operator(N, "N")
    if M.shape[1] != N.shape[0]:
        raise DimensionMismatch(f"cannot multiply shapes {M.shape} and {N.shape}")
    return RealifiedOperator(M.data @ N.data)


def is_orthogonal(M, tol=STRUCTURE_TOL):
    data = M.data if isinstance(M, RealifiedOperator) else np.asarray(M, dtype=float)
    if data.shape[0] != data.shape[1]:
        return False
    return bool(np.max(np.abs(data.T @ data - np.eye(data.shape[0]))) <= tol)


def real_evolve(rho, U, tol=STRUCTURE_TOL):
    """Unitary evolution U~ rho~ U~^T of a realified state.

    Raises
    ------
    ValidationError
        If ``U`` is not orthogonal, i.e. not the image of a unitary.
    """
    U = _as_operator(U, "U")
    if U.shape != rho.data.shape:
        raise DimensionMismatch(f"U has shape {U.shape}, state has shape {rho.data.shape}")
    if not is_orthogonal(U, tol):
        raise ValidationError("U is not orthogonal, so it is not the image of a unitary")
    return RealifiedState(U.data @ rho.data @ U.data.T)


@dataclass(frozen=True)
class RealifiedChannel:
    """Kraus channel in real form; completeness reads sum_j K~_j^T K~_j = I."""

    kraus_ops: tuple
    tol: float = STRUCTURE_TOL

    def __post_init__(self):
        ops = tuple(_as_operator(K, "K") for K in self.kraus_ops)
        if not ops:
            raise ValidationError("a channel needs at least one Kraus operator")
        n = ops[0].shape[0]
        if any(K.shape != (n, n) for K in ops):
            raise DimensionMismatch("realified Kraus operators must share one square shape")
        completeness = sum(K.data.T @ K.data for K in ops)
        dev = np.max(np.abs(completeness - np.eye(n)))
        if dev > self.tol:
            raise ValidationError(f"realified Kraus operators are not trace preserving ({dev:.3g})")
        object.__setattr__(self, "kraus_ops", ops)

    @classmethod
    def from_complex(cls, channel):
        from .realify import realify_operator
        ops = channel.kraus_ops if hasattr(channel, "kraus_ops") else channel
        return cls(tuple(realify_operator(K) for K in ops))

    @property
    def dim(self):
        return self.kraus_ops[0].shape[0] // 2


def real_apply_channel(channel, rho):
    """sum_j K~_j rho~ K~_j^T."""
    if not isinstance(channel, RealifiedChannel):
        channel = RealifiedChannel(tuple(channel))
    if channel.dim != rho.dim:
        raise DimensionMismatch(f"channel acts on d={channel.dim}, state has d={rho.dim}")
    out = sum(K.data @ rho.data @ K.data.T for K in channel.kraus_ops)
    return RealifiedState(out)


def check_hermitian_image(O, tol=STRUCTURE_TOL):
    """Raise unless ``O`` is the realification of a Hermitian matrix.

    That holds when the real block is symmetric and the imaginary block is
    antisymmetric; O need not be diagonal.
    """
    O = _as_operator(O, "O")
    if O.shape[0] != O.shape[1]:
        raise ValidationError(f"observable must be square, got {O.shape}")
    R, S = blocks(O.data)
    dev = max(np.max(np.abs(R - R.T)), np.max(np.abs(S + S.T)))
    if dev > tol:
        raise ValidationError(f"observable preimage is not Hermitian (deviation {dev:.3g})")
    return O


def real_expectation(rho, O, tol=STRUCTURE_TOL):
    """Tr(rho~ O~), which equals Tr(rho O) for the complex preimages."""
    O = check_hermitian_image(O, tol)
    if O.shape != rho.data.shape:
        raise DimensionMismatch(f"observable has shape {O.shape}, state has shape {rho.data.shape}")
    # Tr(AB) = sum(A * B^T) avoids forming the product.
    return float(np.sum(rho.data * O.data.T))


def real_trace(rho):
    return float(np.trace(rho.data))
