"""Symmetric eigenvalue routines implemented in-repo.

Two independent algorithms are provided:

* :func:`sym_eig_extremes` — cyclic Jacobi rotations, the production path
  used by the Gram certifiers.  Provably convergent for symmetric matrices;
  matrices here are at most a few hundred rows, so the O(n^3) sweeps are
  cheap.
* :func:`sturm_eig_extremes` — Householder tridiagonalization followed by
  Sturm-sequence bisection on the characteristic polynomial.  This is the
  cross-check oracle: it shares no code path with the Jacobi solver beyond
  array storage.
"""

import math

import numpy as np

from .errors import ConvergenceError, ParameterError

MAX_SIZE = 512


def _validated_square(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ParameterError("expected a square matrix, got shape %s" % (a.shape,))
    if a.shape[0] > MAX_SIZE:
        raise ParameterError("matrix size %d exceeds the supported %d" % (a.shape[0], MAX_SIZE))
    if not np.all(np.isfinite(a)):
        raise ParameterError("matrix contains non-finite entries")
    if not np.array_equal(a, a.T):
        raise ParameterError("matrix is not exactly symmetric")
    return a


def _off_norm(a: np.ndarray) -> float:
    # summed directly over off-diagonal entries: subtracting the diagonal
    # mass from the total cancels catastrophically once nearly converged
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return math.sqrt(float((off * off).sum()))


def jacobi_eigenvalues(a, rel_tol: float = 1e-14, max_sweeps: int = 64) -> np.ndarray:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi, ascending.

    Sweeps run until the off-diagonal Frobenius norm drops below
    ``rel_tol * ||A||_F``.  Early sweeps skip rotations whose pivot is below
    the per-element share of the current off-norm (threshold strategy); the
    final sweeps rotate every nonzero pivot.
    """
    a = _validated_square(a)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    norm_f = math.sqrt(float((a * a).sum()))
    if norm_f == 0.0:
        return np.zeros(n)
    stop = rel_tol * norm_f
    for sweep in range(max_sweeps):
        off = _off_norm(a)
        if off <= stop:
            return np.sort(np.diagonal(a).copy())
        threshold = off / (n * math.sqrt(2.0)) if sweep < 3 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0 or abs(apq) <= threshold:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    raise ConvergenceError(
        "Jacobi sweeps did not reach off-norm %.3e within %d sweeps" % (stop, max_sweeps)
    )


def sym_eig_extremes(a, rel_tol: float = 1e-14, max_sweeps: int = 64):
    """(min eigenvalue, max eigenvalue) of a symmetric matrix via cyclic Jacobi."""
    eigs = jacobi_eigenvalues(a, rel_tol=rel_tol, max_sweeps=max_sweeps)
    return float(eigs[0]), float(eigs[-1])


def _householder_tridiagonal(a: np.ndarray):
    """Reduce a symmetric matrix to tridiagonal form; returns (diag, offdiag)."""
    a = a.copy()
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1 :, k].copy()
        norm_x = math.sqrt(float((x * x).sum()))
        if norm_x == 0.0:
            continue
        alpha = -math.copysign(norm_x, x[0] if x[0] != 0.0 else 1.0)
        v = x
        v[0] -= alpha
        v_norm2 = float((v * v).sum())
        if v_norm2 == 0.0:
            continue
        sub = a[k + 1 :, k + 1 :]
        w = sub @ v * (2.0 / v_norm2)
        kappa = float(v @ w) / v_norm2
        w -= kappa * v
        sub -= np.outer(w, v)
        sub -= np.outer(v, w)
        a[k + 1, k] = alpha
        a[k, k + 1] = alpha
        a[k + 2 :, k] = 0.0
        a[k, k + 2 :] = 0.0
    return np.diagonal(a).copy(), np.diagonal(a, 1).copy()


def _count_below(diag: np.ndarray, off2: np.ndarray, x: float) -> int:
    """Number of eigenvalues of the tridiagonal matrix strictly below x.

    Sturm count via the LDL^T pivot recurrence (Sylvester inertia).
    """
    count = 0
    q = 1.0
    for i in range(len(diag)):
        q = diag[i] - x - (off2[i - 1] / q if i > 0 else 0.0)
        if q == 0.0:
            q = -1e-300
        if q < 0.0:
            count += 1
    return count


def sturm_eig_extremes(a, bisection_steps: int = 90):
    """(min, max) eigenvalue via tridiagonalization + Sturm bisection.

    Independent oracle for :func:`sym_eig_extremes`: the eigenvalue counts
    come from the signs of the leading-principal-minor characteristic
    polynomials, located by bisection inside the Gershgorin interval.
    """
    a = _validated_square(a)
    n = a.shape[0]
    if n == 1:
        v = float(a[0, 0])
        return v, v
    diag, off = _householder_tridiagonal(a)
    off2 = off * off
    radius = np.zeros(n)
    radius[:-1] += np.abs(off)
    radius[1:] += np.abs(off)
    lo = float((diag - radius).min())
    hi = float((diag + radius).max())
    pad = 1e-12 * max(1.0, abs(lo), abs(hi))
    lo -= pad
    hi += pad

    def locate(target_count: int) -> float:
        # smallest x with (#eigs < x) >= target_count
        a_lo, a_hi = lo, hi
        for _ in range(bisection_steps):
            mid = 0.5 * (a_lo + a_hi)
            if _count_below(diag, off2, mid) >= target_count:
                a_hi = mid
            else:
                a_lo = mid
        return 0.5 * (a_lo + a_hi)

    return locate(1), locate(n)
