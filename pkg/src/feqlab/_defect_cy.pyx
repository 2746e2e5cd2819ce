# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled pairwise defect scan; hot kernel behind feqlab.kernels.

Mode numbering and witness semantics match feqlab._defect_np exactly.
"""

import numpy as np


cdef inline double complex _residual(int mode,
                                     const double complex[::1] f,
                                     const double complex[::1] g,
                                     const double complex[::1] H,
                                     const int[:, ::1] xy,
                                     const int[:, ::1] xsy,
                                     Py_ssize_t x,
                                     Py_ssize_t y):
    if mode == 0:    # d'Alembert
        return f[xy[x, y]] + f[xsy[x, y]] - 2.0 * f[x] * f[y]
    elif mode == 1:  # Kannappan
        return H[xy[x, y]] + H[xsy[x, y]] - 2.0 * f[x] * f[y]
    elif mode == 2:  # Van Vleck
        return H[xsy[x, y]] - H[xy[x, y]] - 2.0 * f[x] * f[y]
    elif mode == 3:  # Wilson
        return f[xy[x, y]] + f[xsy[x, y]] - 2.0 * f[x] * g[y]
    elif mode == 4:  # sine addition
        return f[xy[x, y]] - f[x] * g[y] - g[x] * f[y]
    elif mode == 5:  # multiplicativity
        return f[xy[x, y]] - f[x] * f[y]
    else:            # Kannappan with identity twist
        return H[xy[x, y]] - f[x] * f[y]


def pair_defect_scan(int mode,
                     const double complex[::1] f,
                     const double complex[::1] g,
                     const int[:, ::1] xy,
                     const int[:, ::1] xsy,
                     const int[:, ::1] watom,
                     const double complex[::1] coeffs,
                     double tie_tol=1e-12):
    """Max of |equation residual| over all pairs (x, y), with witness.

    Returns (max_defect, wx, wy).
    """
    cdef Py_ssize_t n = xy.shape[0]
    cdef Py_ssize_t m = watom.shape[1]
    cdef Py_ssize_t x, y, j
    cdef double complex acc
    cdef double d, best
    cdef Py_ssize_t wx = 0, wy = 0
    cdef const double complex[::1] H
    cdef double complex[::1] Hmv

    if mode < 0 or mode > 6:
        raise ValueError(f"unknown mode {mode}")

    if mode == 1 or mode == 2 or mode == 6:
        Harr = np.empty(n, dtype=np.complex128)
        Hmv = Harr
        for x in range(n):
            acc = 0
            for j in range(m):
                acc = acc + f[watom[x, j]] * coeffs[j]
            Hmv[x] = acc
        H = Harr
    else:
        H = f

    best = 0.0
    for x in range(n):
        for y in range(n):
            d = abs(_residual(mode, f, g, H, xy, xsy, x, y))
            if d > best:
                best = d
    for x in range(n):
        for y in range(n):
            d = abs(_residual(mode, f, g, H, xy, xsy, x, y))
            if d >= best - tie_tol:
                return best, x, y
    return best, wx, wy
