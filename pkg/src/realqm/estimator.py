"""scikit-learn compatible wrappers around the real-number embedding."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import BLOCK_TOL, STRUCTURE_TOL, check_block_structure, check_density_matrix
from .exceptions import DimensionMismatch, ValidationError
from .realify import assemble, blocks

KINDS = ("ket", "operator", "state")


class StueckelbergTransformer(TransformerMixin, BaseEstimator):
    """Map batches of complex vectors or matrices to their real embeddings.

    Parameters
    ----------
    kind : {"ket", "operator", "state"}, default="operator"
        ``ket``: ``X`` has shape (n_samples, d), each row a vector of
        amplitudes; output shape (n_samples, 2d) laid out as [Re, Im].
        ``operator``: ``X`` has shape (n_samples, r, c) or (r, c); each
        matrix A becomes [[Re A, -Im A], [Im A, Re A]].
        ``state``: like ``operator`` with density matrices and the
        extra factor 1/2.
    tol : float, default=1e-9
        Block-structure tolerance used by :meth:`inverse_transform`.
    validate_states : bool, default=True
        Check Hermiticity, unit trace and positivity when ``kind="state"``.

    Attributes
    ----------
    input_shape_ : tuple
        Shape of one complex sample seen during :meth:`fit`.
    n_features_in_ : int
        Number of complex entries per sample.
    """

    def __init__(self, kind="operator", tol=BLOCK_TOL, validate_states=True):
        self.kind = kind
        self.tol = tol
        self.validate_states = validate_states

    def _check_kind(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")

    def _as_batch(self, X):
        X = np.asarray(X)
        if X.dtype == object:
            raise ValidationError("X must be numeric")
        X = X.astype(np.complex128, copy=False)
        if self.kind == "ket":
            if X.ndim == 1:
                X = X.reshape(1, -1)
            if X.ndim != 2:
                raise ValidationError(f"kets are passed as (n_samples, d), got ndim={X.ndim}")
        else:
            if X.ndim == 2:
                X = X[np.newaxis]
            if X.ndim != 3:
                raise ValidationError(f"matrices are passed as (n_samples, r, c), got ndim={X.ndim}")
        if X.size == 0 or not np.all(np.isfinite(X)):
            raise ValidationError("X must be non-empty and finite")
        return X

    def fit(self, X, y=None):
        self._check_kind()
        X = self._as_batch(X)
        if self.kind == "state" and X.shape[1] != X.shape[2]:
            raise ValidationError("density matrices must be square")
        self.input_shape_ = X.shape[1:]
        self.n_features_in_ = int(np.prod(self.input_shape_))
        return self

    def transform(self, X):
        check_is_fitted(self, "input_shape_")
        X = self._as_batch(X)
        if X.shape[1:] != self.input_shape_:
            raise DimensionMismatch(f"fitted on samples of shape {self.input_shape_}, got {X.shape[1:]}")
        if self.kind == "ket":
            return np.concatenate([X.real, X.imag], axis=1)
        if self.kind == "state" and self.validate_states:
            for rho in X:
                check_density_matrix(rho, STRUCTURE_TOL)
        scale = 0.5 if self.kind == "state" else 1.0
        return np.stack([scale * assemble(A.real, A.imag) for A in X])

    def inverse_transform(self, Xt):
        check_is_fitted(self, "input_shape_")
        Xt = np.asarray(Xt, dtype=float)
        if self.kind == "ket":
            if Xt.ndim == 1:
                Xt = Xt.reshape(1, -1)
            d = Xt.shape[1] // 2
            if Xt.shape[1] != 2 * d:
                raise ValidationError("realified kets have even length")
            return Xt[:, :d] + 1j * Xt[:, d:]
        if Xt.ndim == 2:
            Xt = Xt[np.newaxis]
        scale = 2.0 if self.kind == "state" else 1.0
        out = []
        for M in Xt:
            R, S = blocks(check_block_structure(scale * M, self.tol))
            out.append(R + 1j * S)
        return np.stack(out)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "input_shape_")
        n = self.n_features_in_
        if self.kind == "ket":
            return np.array([f"re{j}" for j in range(n)] + [f"im{j}" for j in range(n)], dtype=object)
        r, c = self.input_shape_
        return np.array([f"m{i}_{j}" for i in range(2 * r) for j in range(2 * c)], dtype=object)
