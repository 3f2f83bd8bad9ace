"""Reference complex-number quantum mechanics.

Everything the real-number pipeline computes is checked against the
functions here. They use plain complex numpy arithmetic and nothing from
the realified side of the package.
"""

from dataclasses import dataclass

import numpy as np

from ._validation import (
    STRUCTURE_TOL,
    check_complex_matrix,
    check_density_matrix,
    check_hermitian,
    check_square,
    frozen,
)
from .exceptions import DimensionMismatch, ValidationError

SAMPLE_KINDS = ("unitary", "density", "pure", "generic")

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S_PHASE = np.diag([1, 1j])
CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


def tensor(A, B):
    """Kronecker product; entry ((i1 i2), (j1 j2)) is A[i1, j1] * B[i2, j2]."""
    return np.kron(check_complex_matrix(A, "A"), check_complex_matrix(B, "B"))


def tensor_all(*mats):
    out = check_complex_matrix(mats[0])
    for m in mats[1:]:
        out = tensor(out, m)
    return out


def ket(amplitudes):
    """Column vector from a sequence of amplitudes."""
    return check_complex_matrix(np.asarray(amplitudes, dtype=complex).reshape(-1, 1), "psi")


def projector(psi):
    psi = check_complex_matrix(psi, "psi")
    return psi @ psi.conj().T


def expectation(rho, O, tol=STRUCTURE_TOL):
    """Born-rule expectation value Tr(rho O), returned as a real number.

    Raises
    ------
    DimensionMismatch
        If ``rho`` and ``O`` are not the same size.
    ValidationError
        If the trace has an imaginary part above ``tol``, i.e. ``O`` or
        ``rho`` is not Hermitian.
    """
    rho = check_square(check_complex_matrix(rho, "rho"), "rho")
    O = check_square(check_complex_matrix(O, "O"), "O")
    if rho.shape != O.shape:
        raise DimensionMismatch(f"rho is {rho.shape}, O is {O.shape}")
    value = np.trace(rho @ O)
    if abs(value.imag) > tol:
        raise ValidationError(f"Tr(rho O) has imaginary residue {value.imag:.3g}")
    return float(value.real)


@dataclass(frozen=True)
class KrausChannel:
    """Completely positive trace-preserving map rho -> sum_j K_j rho K_j^dagger."""

    kraus_ops: tuple
    tol: float = STRUCTURE_TOL

    def __post_init__(self):
        ops = tuple(frozen(check_square(check_complex_matrix(K, "K"), "K")) for K in self.kraus_ops)
        if not ops:
            raise ValidationError("a channel needs at least one Kraus operator")
        d = ops[0].shape[0]
        if any(K.shape != (d, d) for K in ops):
            raise DimensionMismatch("Kraus operators must share one square shape")
        completeness = sum(K.conj().T @ K for K in ops)
        dev = np.max(np.abs(completeness - np.eye(d)))
        if dev > self.tol:
            raise ValidationError(f"Kraus operators are not trace preserving (deviation {dev:.3g})")
        object.__setattr__(self, "kraus_ops", ops)

    @property
    def dim(self):
        return self.kraus_ops[0].shape[0]

    @classmethod
    def identity(cls, d):
        return cls((np.eye(d),))


def apply_channel(channel, rho):
    """Image of ``rho`` under a Kraus channel (or a plain list of Kraus operators)."""
    if not isinstance(channel, KrausChannel):
        channel = KrausChannel(tuple(channel))
    rho = check_square(check_complex_matrix(rho, "rho"), "rho")
    if rho.shape[0] != channel.dim:
        raise DimensionMismatch(f"channel acts on d={channel.dim}, rho has d={rho.shape[0]}")
    return sum(K @ rho @ K.conj().T for K in channel.kraus_ops)


def _rng(seed):
    # 64-bit seeds, negative values included, map onto numpy's unsigned seed space.
    return np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)


def _ginibre(rng, rows, cols):
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2)


def _haar_unitary(rng, d):
    q, r = np.linalg.qr(_ginibre(rng, d, d))
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


def sample(kind, d, seed, cols=None):
    """Draw a seeded random matrix.

    Parameters
    ----------
    kind : {"unitary", "density", "pure", "generic"}
        ``unitary`` is Haar distributed (QR of a complex Ginibre matrix with
        the phases of R's diagonal divided out), ``density`` is
        G G^dagger / Tr(G G^dagger), ``pure`` is a unit-norm column and
        ``generic`` has i.i.d. standard complex Gaussian entries.
    d : int
        Dimension (rows).
    seed : int
        Any 64-bit integer; the same ``(kind, d, seed)`` always yields the same matrix.
    cols : int, optional
        Column count for ``generic`` samples. Defaults to ``d``.
    """
    if kind not in SAMPLE_KINDS:
        raise ValidationError(f"unknown sample kind {kind!r}; expected one of {SAMPLE_KINDS}")
    d = int(d)
    if d < 1:
        raise ValidationError("d must be >= 1")
    rng = _rng(seed)
    if kind == "unitary":
        return _haar_unitary(rng, d)
    if kind == "density":
        G = _ginibre(rng, d, d)
        rho = G @ G.conj().T
        rho = (rho + rho.conj().T) / 2
        return rho / np.trace(rho).real
    if kind == "pure":
        psi = _ginibre(rng, d, 1)
        return psi / np.linalg.norm(psi)
    return _ginibre(rng, d, d if cols is None else int(cols))


def sample_observable(d, seed):
    """Random Hermitian matrix (G + G^dagger) / 2 with generic complex entries."""
    G = sample("generic", d, seed)
    return (G + G.conj().T) / 2


def sample_channel(d, n_kraus, seed):
    """Random channel: the Kraus operators are d x d slices of a Haar isometry."""
    V = _haar_unitary(_rng(seed), d * n_kraus)[:, :d]
    return KrausChannel(tuple(V[j * d:(j + 1) * d] for j in range(n_kraus)))


def is_density_matrix(rho, tol=STRUCTURE_TOL):
    try:
        check_density_matrix(rho, tol)
    except ValidationError:
        return False
    return True


def is_hermitian(A, tol=STRUCTURE_TOL):
    try:
        check_hermitian(A, tol)
    except ValidationError:
        return False
    return True
