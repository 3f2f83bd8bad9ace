"""The real-number embedding of complex vectors and matrices.

A complex d-vector psi = a + i b becomes the real 2d-vector [a; b]; a
complex matrix A = R + i S becomes [[R, -S], [S, R]] = I (x) R + J (x) S
with J = [[0, -1], [1, 0]] the real image of the imaginary unit. The
real/imaginary flag is always the leftmost (most significant) tensor
factor. Density matrices carry an extra factor 1/2 so that traces agree.
"""

from dataclasses import dataclass

import numpy as np

from ._validation import (
    BLOCK_TOL,
    STRUCTURE_TOL,
    block_asymmetry,
    check_block_structure,
    check_column,
    check_complex_matrix,
    check_density_matrix,
    check_real_matrix,
    check_square,
    frozen,
)
from .exceptions import BlockStructureViolation, DimensionMismatch, ValidationError

J = np.array([[0.0, -1.0], [1.0, 0.0]])
I2 = np.eye(2)


def blocks(M):
    """Split a realified matrix into its (real part, imaginary part) blocks."""
    r, c = M.shape[0] // 2, M.shape[1] // 2
    return M[:r, :c], M[r:, :c]


def assemble(R, S):
    return np.block([[R, -S], [S, R]])


@dataclass(frozen=True)
class RealifiedKet:
    """Real 2d-vector [a_0..a_{d-1}, b_0..b_{d-1}] for amplitudes a_j + i b_j."""

    data: np.ndarray
    normalized: bool = False
    tol: float = STRUCTURE_TOL

    def __post_init__(self):
        data = check_real_matrix(np.asarray(self.data).reshape(-1), "ket").reshape(-1)
        if data.size % 2:
            raise ValidationError(f"realified ket needs even length, got {data.size}")
        if self.normalized:
            norm = np.linalg.norm(data)
            if abs(norm - 1.0) > self.tol:
                raise ValidationError(f"ket flagged normalized has norm {norm:.12g}")
        object.__setattr__(self, "data", frozen(data))

    @property
    def dim(self):
        return self.data.size // 2

    @property
    def real_part(self):
        return self.data[:self.dim]

    @property
    def imag_part(self):
        return self.data[self.dim:]

    def norm(self):
        return float(np.linalg.norm(self.data))


@dataclass(frozen=True)
class RealifiedOperator:
    """2r x 2c real matrix of the form [[R, -S], [S, R]]."""

    data: np.ndarray
    tol: float = BLOCK_TOL

    def __post_init__(self):
        object.__setattr__(self, "data", frozen(check_block_structure(self.data, self.tol)))

    @property
    def shape(self):
        return self.data.shape

    @property
    def complex_shape(self):
        return self.data.shape[0] // 2, self.data.shape[1] // 2

    @property
    def real_block(self):
        return blocks(self.data)[0]

    @property
    def imag_block(self):
        return blocks(self.data)[1]

    @property
    def T(self):
        return RealifiedOperator(self.data.T)

    def __matmul__(self, other):
        from .algebra import real_mul
        return real_mul(self, other)

    def __add__(self, other):
        from .algebra import real_add
        return real_add(self, other)


@dataclass(frozen=True)
class RealifiedState:
    """Realified density matrix (1/2)(I (x) Re rho + J (x) Im rho), 2d x 2d.

    The real block is symmetric, the imaginary block antisymmetric and the
    trace is one.
    """

    data: np.ndarray
    tol: float = BLOCK_TOL

    def __post_init__(self):
        data = check_square(check_block_structure(self.data, self.tol, "state"), "state")
        R, S = blocks(data)
        dev = max(np.max(np.abs(R - R.T)), np.max(np.abs(S + S.T)))
        if dev > self.tol:
            raise ValidationError(f"state blocks are not the image of a Hermitian matrix ({dev:.3g})")
        tr = np.trace(data)
        if abs(tr - 1.0) > self.tol:
            raise ValidationError(f"realified state has trace {tr:.12g}, expected 1")
        object.__setattr__(self, "data", frozen(data))

    @property
    def dim(self):
        return self.data.shape[0] // 2

    def as_operator(self):
        """Operator-convention matrix (the 1/2 removed)."""
        return RealifiedOperator(2.0 * self.data)


def _unwrap(M):
    if isinstance(M, (RealifiedOperator, RealifiedState, RealifiedKet)):
        return M.data
    return M


def realify_ket(psi, normalized=False):
    """Map a complex column vector to [Re psi; Im psi]."""
    psi = check_column(check_complex_matrix(psi, "psi"), "psi")[:, 0]
    return RealifiedKet(np.concatenate([psi.real, psi.imag]), normalized=normalized)


def realify_operator(A):
    """Map a complex r x c matrix to the 2r x 2c real matrix [[Re A, -Im A], [Im A, Re A]]."""
    A = check_complex_matrix(A, "A")
    return RealifiedOperator(assemble(A.real, A.imag))


def realify_state(rho, tol=STRUCTURE_TOL):
    """Map a density matrix to (1/2)(I (x) Re rho + J (x) Im rho)."""
    rho = check_complex_matrix(rho, "rho")
    check_square(rho, "rho")
    rho = check_density_matrix(rho, tol)
    return RealifiedState(0.5 * assemble(rho.real, rho.imag))


def complexify(M, tol=BLOCK_TOL):
    """Inverse map: read the real and imaginary blocks back into a complex matrix.

    Accepts a :class:`RealifiedOperator`, :class:`RealifiedState` (the factor
    1/2 is undone), :class:`RealifiedKet` (returns a column) or a raw real
    array, which is treated as operator convention.

    Raises
    ------
    BlockStructureViolation
        If a raw array is not block structured within ``tol``; the exception
        carries the maximum asymmetry.
    """
    if isinstance(M, RealifiedKet):
        return (M.real_part + 1j * M.imag_part).reshape(-1, 1)
    if isinstance(M, RealifiedState):
        data = 2.0 * M.data
    elif isinstance(M, RealifiedOperator):
        data = M.data
    else:
        data = check_block_structure(M, tol)
    R, S = blocks(data)
    return R + 1j * S


def is_block_structured(M, tol=BLOCK_TOL):
    M = np.asarray(_unwrap(M), dtype=float)
    return M.ndim == 2 and block_asymmetry(M) <= tol


def inner_product(phi, psi):
    """Complex inner product <phi|psi> reconstructed from realified kets.

    Equals phi^T psi - i phi^T (J (x) I) psi, which is the inner product of
    the complex preimages.
    """
    if phi.dim != psi.dim:
        raise DimensionMismatch(f"kets have dims {phi.dim} and {psi.dim}")
    rotated = np.concatenate([-psi.imag_part, psi.real_part])
    return complex(phi.data @ psi.data, -(phi.data @ rotated))


def realified_density_from_ket(psi, tol=STRUCTURE_TOL):
    """Realified projector of a normalized realified ket, in real arithmetic.

    With v = [a; b] and w = (J (x) I) v = [-b; a], the result is
    (v v^T + w w^T) / 2, which equals the realified state of |psi><psi|.
    """
    if abs(psi.norm() - 1.0) > tol:
        raise ValidationError(f"ket has norm {psi.norm():.12g}; a density matrix needs norm 1")
    v = psi.data
    w = np.concatenate([-psi.imag_part, psi.real_part])
    return RealifiedState(0.5 * (np.outer(v, v) + np.outer(w, w)))


def embed_imaginary_unit(d):
    """J (x) I_d, the real image of multiplication by i on d-dimensional vectors."""
    return np.kron(J, np.eye(d))


__all__ = [
    "J",
    "RealifiedKet",
    "RealifiedOperator",
    "RealifiedState",
    "BlockStructureViolation",
    "blocks",
    "assemble",
    "complexify",
    "embed_imaginary_unit",
    "inner_product",
    "is_block_structured",
    "realified_density_from_ket",
    "realify_ket",
    "realify_operator",
    "realify_state",
]
