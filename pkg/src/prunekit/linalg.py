"""Damped linear least-squares solver.

Solves min_r ||A r - y||^2 + damp^2 ||r||^2 by running conjugate gradients
on the regularized normal equations (A^T A + damp^2 I) r = A^T y. The
Gram matrix is formed once (columns are few at the scales this package
targets), every iterate's true residual is recomputed explicitly, and the
best iterate seen is returned, so results are deterministic for fixed
inputs. A direct factorization of the same normal equations is kept out
of this module on purpose: the test suite uses it as an independent
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class LstsqResult:
    """Solution of a damped least-squares solve.

    Attributes
    ----------
    x : np.ndarray
        Best iterate found (the minimizer when `converged` is True).
    converged : bool
        True when the relative normal-equations residual reached `tol`.
    iterations : int
        Conjugate-gradient iterations performed.
    residual : float
        Final relative residual ||G x - rhs|| / ||rhs|| of the
        regularized normal system.
    """

    x: np.ndarray
    converged: bool
    iterations: int
    residual: float


def solve_damped_lls(A, y, damp=1.0, tol=1e-10, max_iter=None):
    """Minimize ||A r - y||^2 + damp^2 ||r||^2.

    Parameters
    ----------
    A : (m, n) array_like of finite floats
    y : (m,) array_like of finite floats
    damp : float, >= 0
        Ridge weight. Any damp > 0 makes the system positive definite
        and hence uniquely solvable for arbitrary A.
    tol : float, > 0
        Convergence threshold on the relative residual of
        (A^T A + damp^2 I) r = A^T y.
    max_iter : int, optional
        Defaults to 10 * n. On exhaustion the best iterate is returned
        with ``converged=False``.

    Returns
    -------
    LstsqResult
    """
    A = np.asarray(A, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if A.ndim != 2:
        raise ValueError("A must be a matrix")
    if y.ndim != 1 or y.shape[0] != A.shape[0]:
        raise ValueError("y length must equal the row count of A")
    if A.shape[1] < 1:
        raise ValueError("A must have at least one column")
    if not np.all(np.isfinite(A)) or not np.all(np.isfinite(y)):
        raise ValueError("non-finite entries in A or y")
    if not np.isfinite(damp) or damp < 0:
        raise ValueError("damp must be a finite nonnegative real")
    if not tol > 0:
        raise ValueError("tol must be positive")

    n = A.shape[1]
    if max_iter is None:
        max_iter = 10 * n
    gram = A.T @ A
    if damp > 0:
        gram[np.diag_indices(n)] += damp * damp
    rhs = A.T @ y

    rhs_norm = float(np.linalg.norm(rhs))
    if rhs_norm == 0.0:
        return LstsqResult(np.zeros(n), True, 0, 0.0)

    x = np.zeros(n)
    r = rhs.copy()
    p = r.copy()
    rs = float(r @ r)
    best_x = x.copy()
    best_res = float(np.linalg.norm(gram @ x - rhs)) / rhs_norm
    iterations = 0
    for k in range(max_iter):
        gp = gram @ p
        denom = float(p @ gp)
        if denom <= 0.0:
            break  # singular or indefinite direction (only possible at damp=0)
        alpha = rs / denom
        x = x + alpha * p
        iterations = k + 1
        true_res = float(np.linalg.norm(gram @ x - rhs)) / rhs_norm
        if true_res < best_res:
            best_res = true_res
            best_x = x.copy()
        if true_res <= tol:
            return LstsqResult(best_x, True, iterations, best_res)
        r = r - alpha * gp
        rs_new = float(r @ r)
        if rs_new == 0.0:
            break
        p = r + (rs_new / rs) * p
        rs = rs_new
    return LstsqResult(best_x, best_res <= tol, iterations, best_res)
