"""
Hit-or-miss Monte Carlo oracle for n-ball volumes and checks of the
circumscription geometry

Samples are drawn in fixed-size blocks. Block b of a run with a given seed
always comes from a Philox stream keyed by the seed with its counter set
to b << 128, so hit counts do not depend on how blocks are spread across
workers.
"""

from concurrent.futures import ThreadPoolExecutor
import math
from typing import NamedTuple

import numpy as np

from hypertools.utils.common import DomainError
import hypertools.utils.geometry as geometry

BLOCK_SIZE = 1 << 16
MIN_SAMPLES = 1000
MAX_SEED = 2**64 - 1
MC_MAX_DIM = 12          # hit probability is uninformative beyond this
VERTEX_MAX_DIM = 20      # 2^n vertices are enumerated
CUBE_CHECK_MAX_DIM = 50

class McEstimate(NamedTuple):
    volume_estimate: float
    std_error: float
    samples: int
    hits: int
    seed: int

def _check_count(value, name, minimum, maximum=None):
    arr = np.asarray(value)
    if arr.ndim != 0 or arr.dtype.kind not in "iu":
        raise DomainError("%s must be an integer, got %r"%(name, value))
    value = int(arr)
    if value < minimum:
        raise DomainError("%s must be >= %s, got %s"%(name, minimum, value))
    if maximum is not None and value > maximum:
        raise DomainError("%s must be <= %s, got %s"%(name, maximum, value))
    return value

def block_generator(seed, block):
    """
    Random generator for one sample block

    Input:
    - seed (int): 64-bit unsigned seed, used as the Philox key
    - block (int): block index, placed in the high half of the counter

    Output:
    - rng (np.random.Generator)
    """
    return np.random.Generator(np.random.Philox(key=seed, counter=block << 128))

def _block_hits(seed, block, size, n, threshold):
    """
    Count points v uniform in [-1, 1)^n with |v|^2 <= threshold
    """
    v = 2.0*block_generator(seed, block).random((size, n)) - 1.0
    return int(np.count_nonzero(np.sum(v*v, axis=1) <= threshold))

def _count_hits(seed, samples, n, threshold, workers):
    nblocks = (samples + BLOCK_SIZE - 1)//BLOCK_SIZE
    def run(block):
        size = min(BLOCK_SIZE, samples - block*BLOCK_SIZE)
        return _block_hits(seed, block, size, n, threshold)
    if workers <= 1:
        return sum(run(b) for b in range(nblocks))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # integer counts, so the reduction order is irrelevant
        return sum(pool.map(run, range(nblocks)))

def mc_ball_volume(n, r, samples, seed, workers=1):
    """
    Estimate V_n(r) by hit-or-miss sampling of the bounding cube [-r, r]^n

    Input:
    - n (int): 1 <= n <= MC_MAX_DIM
    - r (float): radius > 0
    - samples (int): >= MIN_SAMPLES
    - seed (int): 0 <= seed <= 2^64 - 1
    - workers (int): threads; the result does not depend on it

    Output:
    - estimate (McEstimate)
    """
    n = _check_count(n, "Dimension", 1, MC_MAX_DIM)
    r = geometry.check_radius(r)
    samples = _check_count(samples, "samples", MIN_SAMPLES)
    seed = _check_count(seed, "seed", 0, MAX_SEED)
    workers = _check_count(workers, "workers", 1)
    # raises RangeError when the bounding cube volume is not representable
    box = geometry.volume_from_log(n*(geometry.LOG_2 + math.log(r)))
    hits = _count_hits(seed, samples, n, 1.0, workers)
    p = hits/samples
    return McEstimate(volume_estimate=p*box,
                      std_error=box*math.sqrt(p*(1.0 - p)/samples),
                      samples=samples, hits=hits, seed=seed)

def vertex_on_sphere_check(n):
    """
    Largest deviation of a unit-cube vertex from the circumscribed sphere

    Enumerates all v in {-1/2, +1/2}^n and returns
    max | |v| - sqrt(n)/2 |, which should be at rounding level.
    """
    n = _check_count(n, "Dimension", 1, VERTEX_MAX_DIM)
    radius = geometry.circumscribed_radius(n)
    shifts = np.arange(n, dtype=np.int64)
    worst = 0.0
    for start in range(0, 2**n, BLOCK_SIZE):
        idx = np.arange(start, min(start + BLOCK_SIZE, 2**n), dtype=np.int64)
        v = ((idx[:, None] >> shifts) & 1) - 0.5
        norms = np.sqrt(np.sum(v*v, axis=1))
        worst = max(worst, float(np.max(np.abs(norms - radius))))
    return worst

def cube_inside_ball_check(n, samples, seed, workers=1):
    """
    Fraction of uniform points of the centered unit cube that lie in the
    circumscribed ball (|x| <= sqrt(n)/2). Should be exactly 1.
    """
    n = _check_count(n, "Dimension", 1, CUBE_CHECK_MAX_DIM)
    samples = _check_count(samples, "samples", MIN_SAMPLES)
    seed = _check_count(seed, "seed", 0, MAX_SEED)
    workers = _check_count(workers, "workers", 1)
    # x in [-1/2, 1/2)^n is v/2 with v in [-1, 1)^n: |x|^2 <= n/4 iff |v|^2 <= n
    hits = _count_hits(seed, samples, n, float(n), workers)
    return hits/samples
