"""
Log-space special functions

ln Gamma for real x > 0 and the half-step ratio
ln[Gamma((n-1)/2)/Gamma(n/2)] used by the growth ratio formulas.
Gamma itself is never returned: Gamma(n/2) leaves double range near n = 343.
All functions accept a scalar (returns float) or an array (returns ndarray).
"""

import numpy as np
import scipy.special

from hypertools.utils.common import DomainError

# Arguments at or above the cutoff use the Stirling series
STIRLING_CUTOFF = 12.0

HALF_LOG_2PI = 0.91893853320467274178
SQRT_2PI = 2.5066282746310005

# Lanczos approximation, g = 607/128, 15 terms
LANCZOS_SHIFT = 5.24218750000000000 # g + 1/2
LANCZOS_C0 = 0.999999999999997092
LANCZOS_COEFFS = [57.1562356658629235, -59.5979603554754912,
                  14.1360979747417471, -0.491913816097620199,
                  .339946499848118887e-4, .465236289270485756e-4,
                  -.983744753048795646e-4, .158088703224912494e-3,
                  -.210264441724104883e-3, .217439618115212643e-3,
                  -.164318106536763890e-3, .844182239838527433e-4,
                  -.261908384015814087e-4, .368991826595316234e-5]

# B_2k / (2k(2k-1)) for k = 1..7
STIRLING_COEFFS = [1.0/12, -1.0/360, 1.0/1260, -1.0/1680,
                   1.0/1188, -691.0/360360, 1.0/156]

# ln Gamma vanishes at 1 and 2; within this distance of either zero the
# Lanczos sum loses relative accuracy and a power series is used instead
ROOT_WINDOW = 0.2
ROOT_SERIES_TERMS = 30

_k = np.arange(2, ROOT_SERIES_TERMS + 1)
_ZETAC = scipy.special.zetac(_k) # zeta(k) - 1
# ln Gamma(1+e) = -euler_gamma e + sum_k (-1)^k zeta(k) e^k / k
NEAR_ONE_COEFFS = np.concatenate([[-np.euler_gamma], (-1.0)**_k*(1.0 + _ZETAC)/_k])
# ln Gamma(2+e) = ln Gamma(1+e) + log1p(e)
NEAR_TWO_COEFFS = np.concatenate([[1.0 - np.euler_gamma], (-1.0)**_k*_ZETAC/_k])

def check_real_arg(x):
    """
    Validate an argument to Gamma

    Input:
    - x (float or array_like): must be finite and > 0

    Output:
    - arr (np.ndarray of float)

    Raises DomainError otherwise
    """
    try:
        arr = np.asarray(x, dtype=float)
    except (TypeError, ValueError):
        raise DomainError("Gamma argument must be real, got %r"%(x,))
    if not np.all(np.isfinite(arr)):
        raise DomainError("Gamma argument must be finite, got %r"%(x,))
    if np.any(arr <= 0):
        raise DomainError("Gamma argument must be > 0, got %r"%(x,))
    return arr

def _lanczos(x):
    ser = LANCZOS_C0
    y = x
    for c in LANCZOS_COEFFS:
        y = y + 1.0
        ser = ser + c/y
    tmp = x + LANCZOS_SHIFT
    tmp = (x + 0.5)*np.log(tmp) - tmp
    return tmp + np.log(SQRT_2PI*ser/x)

def _stirling_tail(x):
    """ Correction series sum_k B_2k/(2k(2k-1) x^(2k-1)) """
    w = 1.0/(x*x)
    s = STIRLING_COEFFS[-1]
    for c in reversed(STIRLING_COEFFS[:-1]):
        s = s*w + c
    return s/x

def _stirling(x):
    return (x - 0.5)*np.log(x) - x + HALF_LOG_2PI + _stirling_tail(x)

def _half_step_asymptotic(x):
    """
    ln Gamma(x) - ln Gamma(x+1/2) from the difference of the two
    Stirling series, with the leading terms combined through log1p
    """
    return (-0.5*np.log(x) - x*np.log1p(0.5/x) + 0.5
            + _stirling_tail(x) - _stirling_tail(x + 0.5))

def _by_cutoff(arr, small, large):
    """
    Apply small() below STIRLING_CUTOFF and large() at or above it
    """
    if arr.ndim == 0:
        val = float(arr)
        if val < STIRLING_CUTOFF: return float(small(val))
        return float(large(val))
    out = np.empty_like(arr)
    mask = arr < STIRLING_CUTOFF
    if np.any(mask): out[mask] = small(arr[mask])
    if not np.all(mask): out[~mask] = large(arr[~mask])
    return out

def _power_series(eps, coeffs):
    """ sum_j coeffs[j] eps^(j+1) by Horner's rule """
    s = coeffs[-1]
    for c in coeffs[-2::-1]:
        s = s*eps + c
    return s*eps

def _log_gamma(arr):
    out = _by_cutoff(arr, _lanczos, _stirling)
    near_one = np.abs(arr - 1.0) < ROOT_WINDOW
    near_two = np.abs(arr - 2.0) < ROOT_WINDOW
    # Gamma(1) = Gamma(2) = 1
    if arr.ndim == 0:
        if arr == 1.0 or arr == 2.0: return 0.0
        if near_one: return float(_power_series(float(arr) - 1.0, NEAR_ONE_COEFFS))
        if near_two: return float(_power_series(float(arr) - 2.0, NEAR_TWO_COEFFS))
        return out
    out[near_one] = _power_series(arr[near_one] - 1.0, NEAR_ONE_COEFFS)
    out[near_two] = _power_series(arr[near_two] - 2.0, NEAR_TWO_COEFFS)
    out[(arr == 1.0) | (arr == 2.0)] = 0.0
    return out

def log_gamma(x):
    """
    Natural log of the Gamma function for real x > 0

    Input:
    - x (float or array_like)

    Output:
    - ln Gamma(x), float for scalar input else np.ndarray
    """
    return _log_gamma(check_real_arg(x))

def log_gamma_half_ratio(n):
    """
    ln[Gamma((n-1)/2) / Gamma(n/2)] for n >= 2

    Evaluated as a single asymptotic difference once (n-1)/2 reaches the
    Stirling cutoff, so nothing of size ln Gamma(n/2) is ever subtracted.
    n may be real (the continuous sweep uses non-integer n).

    Input:
    - n (float or array_like): n >= 2

    Output:
    - log ratio, float for scalar input else np.ndarray
    """
    try:
        arr = np.asarray(n, dtype=float)
    except (TypeError, ValueError):
        raise DomainError("n must be real, got %r"%(n,))
    if not np.all(np.isfinite(arr)) or np.any(arr < 2):
        raise DomainError("log_gamma_half_ratio requires n >= 2, got %r"%(n,))
    x = (arr - 1.0)/2.0
    def small(v):
        return _log_gamma(np.asarray(v)) - _log_gamma(np.asarray(v + 0.5))
    return _by_cutoff(x, small, _half_step_asymptotic)
