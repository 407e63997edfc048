"""
Volumes of n-balls and of balls circumscribing the unit n-cube

Every volume is handled as its natural log (LogVolume); linear values are
only produced by volume_from_log(). Dimension arguments may be a single
integer or an integer array, in which case an array comes back.
"""

import functools
import math
import sys

import numpy as np

from hypertools.utils.common import DomainError, RangeError
import hypertools.utils.specfun as specfun

LOG_PI = math.log(math.pi)
LOG_2 = math.log(2.0)
LOG_2PI = math.log(2.0*math.pi)

# Product form results are reused across radii
PRODUCT_CACHE_SIZE = 1024

def check_dimension(n, minimum=1):
    """
    Validate a Dimension (integer >= minimum)

    Input:
    - n (int or integer array)
    - minimum (int): smallest allowed dimension

    Output:
    - n as int, or as an int64 array
    """
    arr = np.asarray(n)
    if arr.dtype.kind not in "iu":
        raise DomainError("Dimension must be an integer, got %r"%(n,))
    if arr.size > 0 and np.any(arr < minimum):
        raise DomainError("Dimension must be >= %s, got %r"%(minimum, n))
    if arr.ndim == 0: return int(arr)
    return arr.astype(np.int64)

def check_real_dimension(nu):
    """
    Validate a RealDimension (finite real > 2)
    """
    try:
        arr = np.asarray(nu, dtype=float)
    except (TypeError, ValueError):
        raise DomainError("Real dimension must be a number, got %r"%(nu,))
    if not np.all(np.isfinite(arr)) or np.any(arr <= 2):
        raise DomainError("Real dimension must be finite and > 2, got %r"%(nu,))
    if arr.ndim == 0: return float(arr)
    return arr

def check_radius(r):
    """
    Validate a Radius (finite real > 0)
    """
    try:
        r = float(r)
    except (TypeError, ValueError):
        raise DomainError("Radius must be a number, got %r"%(r,))
    if not math.isfinite(r) or r <= 0:
        raise DomainError("Radius must be finite and > 0, got %r"%(r,))
    return r

def _scalar_or_array(val):
    if np.ndim(val) == 0: return float(val)
    return val

def circumscribed_radius(n):
    """
    Radius of the sphere through all vertices of the centered unit n-cube:
    the half-diagonal sqrt(n)/2
    """
    n = check_dimension(n)
    return _scalar_or_array(np.sqrt(n)/2.0)

def cube_volume(n):
    """ The unit hypercube has volume 1 in every dimension """
    check_dimension(n)
    return 1.0

def log_ball_volume(n, r):
    """
    ln V_n(r) from the closed form V_n = pi^(n/2) r^n / Gamma(n/2 + 1)

    Input:
    - n (int or integer array): n >= 1
    - r (float): radius > 0

    Output:
    - log volume (float or np.ndarray)
    """
    n = check_dimension(n)
    r = check_radius(r)
    return _scalar_or_array(0.5*n*LOG_PI + n*math.log(r)
                            - specfun.log_gamma(np.asarray(n)/2.0 + 1.0))

@functools.lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def _log_product_sum(n):
    """
    ln prod_{k=1}^{n-2} sqrt(pi) Gamma((k+1)/2) / Gamma(1 + k/2),
    summed term by term
    """
    # lg[i] = ln Gamma((i+2)/2), i.e. Gamma(1), Gamma(3/2), ..., Gamma(n/2)
    lg = specfun.log_gamma(np.arange(2, n + 1)/2.0)
    terms = 0.5*LOG_PI + (lg[:-1] - lg[1:])
    return math.fsum(terms)

def log_ball_volume_product(n, r):
    """
    ln V_n(r) from the product form
    V_n = (2 pi r^n / n) prod_{k=1}^{n-2} sqrt(pi) Gamma((k+1)/2) / Gamma(1 + k/2)

    Only defined for n >= 3.
    """
    n = check_dimension(n, minimum=3)
    if not isinstance(n, int):
        raise DomainError("Product form takes a single dimension")
    r = check_radius(r)
    return LOG_2PI + n*math.log(r) - math.log(n) + _log_product_sum(n)

def log_ball_volume_recurrence(n, r):
    """
    ln V_n(r) from V_n = V_(n-2) 2 pi r^2 / n seeded at V_1 = 2r, V_2 = pi r^2
    """
    n = check_dimension(n)
    if not isinstance(n, int):
        raise DomainError("Recurrence takes a single dimension")
    r = check_radius(r)
    if n % 2: seed, start = LOG_2 + math.log(r), 3
    else: seed, start = LOG_PI + 2*math.log(r), 4
    steps = LOG_2PI + 2*math.log(r) - np.log(np.arange(start, n + 1, 2))
    return seed + math.fsum(steps)

def circumscribed_log_volume(n):
    """
    ln V_n(sqrt(n)/2), the volume of the ball circumscribing the unit n-cube
    """
    n = check_dimension(n)
    nf = np.asarray(n, dtype=float)
    return _scalar_or_array(0.5*nf*LOG_PI + 0.5*nf*np.log(nf/4.0)
                            - specfun.log_gamma(nf/2.0 + 1.0))

def volume_from_log(log_v):
    """
    Materialize a linear volume from its log

    Raises RangeError (kind "overflow" or "underflow") when the value is
    not a finite normal double
    """
    try:
        v = math.exp(log_v)
    except OverflowError:
        raise RangeError("Volume exp(%r) overflows"%log_v, "overflow")
    if v < sys.float_info.min:
        raise RangeError("Volume exp(%r) underflows"%log_v, "underflow")
    return v

def growth_ratio(n):
    """
    g_n = V_(n+1)(sqrt(n+1)/2) / V_n(sqrt(n)/2)

    The two log volumes are combined analytically before exponentiating:
    ln g_n = ln(pi)/2 + (n/2) log1p(1/n) + ln((n+1)/4)/2
             + ln[Gamma((n+2)/2) / Gamma((n+3)/2)]
    so no term of size n is cancelled.
    """
    n = check_dimension(n)
    nf = np.asarray(n, dtype=float)
    log_g = (0.5*LOG_PI + 0.5*nf*np.log1p(1.0/nf) + 0.5*np.log((nf + 1.0)/4.0)
             + specfun.log_gamma_half_ratio(nf + 3.0))
    return _scalar_or_array(np.exp(log_g))

def _log_eq3(v):
    """
    ln of (v^(v/2-1)/2) (v-1)^((3-v)/2) sqrt(pi) Gamma((v-1)/2) / Gamma(v/2),
    with the two power terms merged as 0.5 ln v - ((v-3)/2) log1p(-1/v)
    """
    return (0.5*np.log(v) - 0.5*(v - 3.0)*np.log1p(-1.0/v)
            + 0.5*LOG_PI + specfun.log_gamma_half_ratio(v) - LOG_2)

def eq3_ratio(n):
    """
    The printed growth ratio formula evaluated literally at integer n >= 3

    Telescopes to V_n/V_(n-1), so eq3_ratio(n) == growth_ratio(n-1)
    """
    n = check_dimension(n, minimum=3)
    return _scalar_or_array(np.exp(_log_eq3(np.asarray(n, dtype=float))))

def continuous_ratio(nu):
    """
    The growth ratio formula at real nu > 2
    """
    nu = check_real_dimension(nu)
    return _scalar_or_array(np.exp(_log_eq3(np.asarray(nu, dtype=float))))

def growth_limit():
    """ lim g_n = sqrt(pi e / 2) """
    return math.sqrt(math.pi*math.e/2.0)
