"""Pure python implementation of the eigensolver kernel.

This is the fallback used when the compiled extension is not built. The
rotation order, update expressions, and convergence accounting mirror the
compiled version exactly, so both backends produce identical output for
identical input (the extension is compiled without fused multiply-adds).
"""

from __future__ import annotations

import math

import numpy as np


def _offdiag_norm(a, n: int) -> float:
    # Naive accumulation in row-major order; the compiled twin sums in the
    # same order so the convergence decision never diverges between backends.
    rows = a.tolist()
    acc = 0.0
    for i in range(n):
        row = rows[i]
        for j in range(n):
            if j != i:
                v = row[j]
                acc += v * v
    return math.sqrt(acc)


def _frobenius_norm(a, n: int) -> float:
    rows = a.tolist()
    acc = 0.0
    for i in range(n):
        row = rows[i]
        for j in range(n):
            v = row[j]
            acc += v * v
    return math.sqrt(acc)


def jacobi_eigh(a_in, tol: float = 1e-12, max_sweeps: int = 100):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Sweeps the strict upper triangle in row-major order, applying a Givens
    rotation that zeroes each pivot. Stops once the off-diagonal Frobenius
    mass falls to ``tol`` times the Frobenius norm of the input, or after
    ``max_sweeps`` full sweeps.

    Returns ``(w, v, sweeps)`` where ``w`` holds the unsorted eigenvalue
    estimates (the final diagonal), the columns of ``v`` are the matching
    eigenvectors, and ``sweeps`` counts completed sweeps.
    """
    a = np.array(a_in, dtype=float, order="C")
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    n = a.shape[0]
    v = np.eye(n)
    if n < 2:
        return np.diag(a).copy(), v, 0

    threshold = tol * _frobenius_norm(a, n)
    # Rotations on entries this small cannot lift the off-diagonal mass
    # above the threshold, so they are skipped outright.
    skip = threshold / (10.0 * n)

    sweeps = 0
    while sweeps < max_sweeps:
        if _offdiag_norm(a, n) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                if abs(apq) <= skip:
                    continue
                theta = (float(a[q, q]) - float(a[p, p])) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq

                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq

                a[p, q] = 0.0
                a[q, p] = 0.0

                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1

    return np.diag(a).copy(), v, sweeps
