"""
Convergence of the growth ratio to its limit and the peak dimension of
V_n at fixed radius
"""

from typing import NamedTuple, Tuple

import numpy as np
import scipy.stats

from hypertools.utils.common import DomainError
import hypertools.utils.geometry as geometry

MIN_SCAN_POINTS = 3

class ConvergenceRow(NamedTuple):
    n: int
    g: float
    abs_error: float
    predicted: float        # two-term asymptotic model of g_n

class ConvergenceReport(NamedTuple):
    rows: Tuple[ConvergenceRow, ...]
    fitted_order: float     # slope of ln(abs_error) against ln(n)
    fitted_constant: float  # n*(limit - g_n) at the largest n

class PeakResult(NamedTuple):
    r: float
    peak_n: int
    log_v_peak: float
    n_max: int
    at_window_edge: bool    # maximum sits at n_max, scan window may be too small

def convergence_scan(dims):
    """
    Tabulate |g_n - limit| over a set of dimensions and fit the rate

    Input:
    - dims (iterable of int): at least 3 distinct dimensions, each >= 3

    Output:
    - report (ConvergenceReport): rows sorted by n
    """
    ns = geometry.check_dimension(np.asarray(list(dims)), minimum=3)
    if np.ndim(ns) == 0: ns = np.asarray([ns])
    ns = np.unique(ns)
    if len(ns) < MIN_SCAN_POINTS:
        raise DomainError("Convergence scan needs at least %s distinct dimensions, got %s"%(MIN_SCAN_POINTS, len(ns)))
    limit = geometry.growth_limit()
    g = geometry.growth_ratio(ns)
    err = np.abs(g - limit)
    if np.any(err == 0):
        raise DomainError("Growth ratio indistinguishable from its limit at n=%s"%ns[err == 0][0])
    fit = scipy.stats.linregress(np.log(ns), np.log(err))
    pred = predicted_ratio(ns)
    rows = tuple(ConvergenceRow(int(n), float(gn), float(e), float(p))
                 for n, gn, e, p in zip(ns, g, err, pred))
    return ConvergenceReport(rows=rows,
                             fitted_order=float(fit.slope),
                             fitted_constant=float(ns[-1]*(limit - g[-1])))

def predicted_ratio(n):
    """
    Asymptotic model of the approach to the limit L:
    ln g_n = ln L - 1/(2n) + 5/(12n^2) + O(n^-3)
    """
    n = geometry.check_dimension(n)
    nf = np.asarray(n, dtype=float)
    pred = geometry.growth_limit()*np.exp(-0.5/nf + 5.0/(12.0*nf*nf))
    if np.ndim(pred) == 0: return float(pred)
    return pred

def peak_dimension(r, n_max):
    """
    Smallest n in [1, n_max] maximizing V_n(r)

    Input:
    - r (float): radius > 0
    - n_max (int): upper end of the scan, >= 2

    Output:
    - result (PeakResult). at_window_edge is set when the peak is n_max
    """
    r = geometry.check_radius(r)
    n_max = geometry.check_dimension(n_max, minimum=2)
    ns = np.arange(1, n_max + 1)
    log_v = geometry.log_ball_volume(ns, r)
    # argmax returns the first maximum, so ties go to the smaller n
    i = int(np.argmax(log_v))
    peak_n = i + 1
    return PeakResult(r=r, peak_n=peak_n, log_v_peak=float(log_v[i]),
                      n_max=n_max, at_window_edge=(peak_n == n_max))
