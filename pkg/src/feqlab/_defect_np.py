"""Pure-numpy pairwise defect scan; fallback for the compiled kernel.

Must stay observationally identical to feqlab._defect_cy: same modes, same
summation order, same witness tie-breaking (lexicographically first pair
attaining the maximum within tie_tol).
"""

import numpy as np

MODE_DALEMBERT = 0
MODE_KANNAPPAN = 1
MODE_VANVLECK = 2
MODE_WILSON = 3
MODE_SINE_ADDITION = 4
MODE_MULTIPLICATIVE = 5
MODE_KANNAPPAN_SIGMA_ID = 6


def pair_defect_scan(mode, f, g, xy, xsy, watom, coeffs, tie_tol=1e-12):
    """Max of |equation residual| over all pairs (x, y), with witness.

    Returns (max_defect, wx, wy).
    """
    n = xy.shape[0]
    if mode in (MODE_KANNAPPAN, MODE_VANVLECK, MODE_KANNAPPAN_SIGMA_ID):
        H = (f[watom] * coeffs).sum(axis=1)
    if mode == MODE_DALEMBERT:
        R = f[xy] + f[xsy] - 2.0 * np.outer(f, f)
    elif mode == MODE_KANNAPPAN:
        R = H[xy] + H[xsy] - 2.0 * np.outer(f, f)
    elif mode == MODE_VANVLECK:
        R = H[xsy] - H[xy] - 2.0 * np.outer(f, f)
    elif mode == MODE_WILSON:
        R = f[xy] + f[xsy] - 2.0 * np.outer(f, g)
    elif mode == MODE_SINE_ADDITION:
        R = f[xy] - np.outer(f, g) - np.outer(g, f)
    elif mode == MODE_MULTIPLICATIVE:
        R = f[xy] - np.outer(f, f)
    elif mode == MODE_KANNAPPAN_SIGMA_ID:
        R = H[xy] - np.outer(f, f)
    else:
        raise ValueError(f"unknown mode {mode}")
    D = np.abs(R)
    best = float(D.max())
    flat = int(np.argmax(D >= best - tie_tol))
    return best, flat // n, flat % n
