"""Bracketing scans and bisection."""

import numpy as np

from .errors import RootNotFoundError


def sign_changes(xs, fs, direction=0):
    """Indices ``i`` with a sign change between ``fs[i]`` and ``fs[i+1]``.

    ``direction=-1`` keeps only ``+ -> -`` changes, ``+1`` only ``- -> +``.
    """
    fs = np.asarray(fs, dtype=float)
    a, b = fs[:-1], fs[1:]
    down = (a > 0) & (b <= 0)
    up = (a < 0) & (b >= 0)
    if direction < 0:
        mask = down
    elif direction > 0:
        mask = up
    else:
        mask = down | up
    return list(np.flatnonzero(mask))


def bisect(f, lo, hi, xtol=1e-8, f_lo=None, f_hi=None, max_iter=200):
    """Root of ``f`` in ``[lo, hi]`` by bisection; needs a sign change."""
    f_lo = f(lo) if f_lo is None else f_lo
    f_hi = f(hi) if f_hi is None else f_hi
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise RootNotFoundError(
            f"no sign change on [{lo}, {hi}]: f = {f_lo:.3e}, {f_hi:.3e}",
            [(lo, f_lo), (hi, f_hi)],
        )
    for _ in range(max_iter):
        if hi - lo <= xtol:
            break
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0:
            return mid
        if np.sign(f_mid) == np.sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return 0.5 * (lo + hi)
