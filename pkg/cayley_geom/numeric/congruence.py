from typing import List, Tuple

import numpy as np

from .backend import Backend, FLOAT_TOLERANCE
from .numeric_exception import NumericException


def _add_column(work: np.ndarray, basis: np.ndarray, src: int, dst: int, factor) -> None:
    # congruence by E = I + factor * e_src e_dst^T
    work[:, dst] = work[:, dst] + factor * work[:, src]
    work[dst, :] = work[dst, :] + factor * work[src, :]
    basis[:, dst] = basis[:, dst] + factor * basis[:, src]


def _swap(work: np.ndarray, basis: np.ndarray, i: int, j: int) -> None:
    work[[i, j], :] = work[[j, i], :]
    work[:, [i, j]] = work[:, [j, i]]
    basis[:, [i, j]] = basis[:, [j, i]]


def diagonalize_congruence(matrix: np.ndarray, tolerance: float = FLOAT_TOLERANCE) -> Tuple[np.ndarray, List]:
    """
    Finds an invertible A with A^T M A = diag(d) for a symmetric M.
    The first non-vanishing diagonal entry is used as pivot, so for positive definite M the
    result is the Cholesky factorisation (A unit upper triangular). Raises on singular M.
    """
    backend = Backend.of(matrix)
    n = matrix.shape[0]
    work = np.array(matrix, dtype=object) if backend is Backend.EXACT else np.array(matrix, dtype=float)
    basis = backend.eye(n)

    for k in range(n):
        pivot = next((i for i in range(k, n) if not backend.is_zero_scalar(work[i, i], tolerance)), None)
        if pivot is None:
            pair = next(((i, j) for i in range(k, n) for j in range(k, n)
                         if i != j and not backend.is_zero_scalar(work[i, j], tolerance)), None)
            if pair is None:
                raise NumericException("singular matrix")
            i, j = pair
            _add_column(work, basis, j, i, backend.scalar(1))
            pivot = i
        if pivot != k:
            _swap(work, basis, k, pivot)
        for i in range(k + 1, n):
            if backend.is_zero_scalar(work[k, i], tolerance):
                continue
            _add_column(work, basis, k, i, -work[k, i] / work[k, k])
    return basis, [work[i, i] for i in range(n)]


def signature(matrix: np.ndarray, tolerance: float = FLOAT_TOLERANCE) -> Tuple[int, int]:
    """(n_plus, n_minus) by Sylvester's law of inertia."""
    _, diagonal = diagonalize_congruence(matrix, tolerance)
    backend = Backend.of(matrix)
    signs = [backend.sign(d, tolerance) for d in diagonal]
    return signs.count(1), signs.count(-1)
