"""Input validation helpers shared by the public API."""

import numpy as np

from .exceptions import BlockStructureViolation, DimensionMismatch, ValidationError

STRUCTURE_TOL = 1e-10
BLOCK_TOL = 1e-9


def check_complex_matrix(A, name="A"):
    """Return ``A`` as a finite 2-D complex128 array.

    Scalars become 1x1 and 1-D input becomes a column.
    """
    arr = np.asarray(A)
    if arr.dtype == object:
        raise ValidationError(f"{name} must be numeric")
    arr = arr.astype(np.complex128, copy=False)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    elif arr.ndim != 2:
        raise ValidationError(f"{name} must be 2-D, got ndim={arr.ndim}")
    if arr.size == 0:
        raise ValidationError(f"{name} must be non-empty")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} has non-finite entries")
    return arr


def check_real_matrix(M, name="M"):
    arr = np.asarray(M)
    if np.iscomplexobj(arr):
        raise ValidationError(f"{name} must be real")
    arr = arr.astype(np.float64, copy=False)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2 or arr.size == 0:
        raise ValidationError(f"{name} must be a non-empty 2-D array")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} has non-finite entries")
    return arr


def check_square(A, name="A"):
    if A.shape[0] != A.shape[1]:
        raise ValidationError(f"{name} must be square, got shape {A.shape}")
    return A


def check_column(A, name="psi"):
    if A.shape[1] != 1:
        raise ValidationError(f"{name} must be a column vector, got shape {A.shape}")
    return A


def check_same_shape(A, B, names=("A", "B")):
    if A.shape != B.shape:
        raise DimensionMismatch(f"{names[0]} has shape {A.shape}, {names[1]} has shape {B.shape}")


def check_hermitian(A, tol=STRUCTURE_TOL, name="O"):
    A = check_square(check_complex_matrix(A, name), name)
    dev = np.max(np.abs(A - A.conj().T))
    if dev > tol:
        raise ValidationError(f"{name} is not Hermitian (deviation {dev:.3g})")
    return A


def check_density_matrix(rho, tol=STRUCTURE_TOL, name="rho"):
    rho = check_hermitian(rho, tol, name)
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol:
        raise ValidationError(f"{name} has trace {tr.real:.12g}, expected 1")
    lowest = np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0]
    if lowest < -tol:
        raise ValidationError(f"{name} has negative eigenvalue {lowest:.3g}")
    return rho


def block_asymmetry(M):
    """Largest deviation of an even-shaped real matrix from [[R, -S], [S, R]]."""
    rows, cols = M.shape
    if rows % 2 or cols % 2:
        return np.inf
    r, c = rows // 2, cols // 2
    top_left, top_right = M[:r, :c], M[:r, c:]
    bottom_left, bottom_right = M[r:, :c], M[r:, c:]
    return float(max(np.max(np.abs(top_left - bottom_right)),
                     np.max(np.abs(bottom_left + top_right))))


def check_block_structure(M, tol=BLOCK_TOL, name="M"):
    M = check_real_matrix(M, name)
    if M.shape[0] % 2 or M.shape[1] % 2:
        raise BlockStructureViolation(
            np.inf, f"{name} has odd shape {M.shape}; realified matrices are 2r x 2c")
    asym = block_asymmetry(M)
    if asym > tol:
        raise BlockStructureViolation(asym)
    return M


def frozen(arr):
    arr = np.array(arr, copy=True)
    arr.flags.writeable = False
    return arr
