"""Pure-Python reference implementations of the hot loops.

Same algorithms, same operation order as ``_core.pyx``; used when the
compiled extension is unavailable or ``UNIQ_RECALL_PURE`` is set.
"""

import math

import numpy as np

# product of ratios switches to log space after this many factors
LOG_SWITCH = 1000


def binomial_mixture(ks, weights, k_max, r, tol):
    """delta[k] = sum_x w_x * C(x, k) r^k (1-r)^(x-k) for k = 0..k_max.

    Each binomial row is generated outward from its mode by the ratio
    recurrence, cut once the remaining tail is certified below ``tol``, and
    divided by its own sum. The lgamma mode estimate only drives the cut.
    Rows are accumulated in ascending x with Kahan compensation.
    """
    n = len(ks)
    delta = [0.0] * (k_max + 1)
    comp = [0.0] * (k_max + 1)
    row = [0.0] * (k_max + 1)
    lr = math.log(r)
    lq = math.log1p(-r)
    up = r / (1.0 - r)
    down = (1.0 - r) / r
    for j in range(n):
        x = int(ks[j])
        w = float(weights[j])
        m = int((x + 1) * r)
        if m > x:
            m = x
        pm = math.exp(math.lgamma(x + 1) - math.lgamma(m + 1) - math.lgamma(x - m + 1)
                      + m * lr + (x - m) * lq)
        # mode and upward tail, relative to the mode
        row[m] = 1.0
        p = 1.0
        hi = m
        while hi < x:
            q = (x - hi) / (hi + 1.0) * up
            p = p * q
            hi += 1
            row[hi] = p
            if q < 1.0 and p * pm <= tol * (1.0 - q):
                break
        # downward tail
        p = 1.0
        lo = m
        while lo > 0:
            q = lo / (x - lo + 1.0) * down
            p = p * q
            lo -= 1
            row[lo] = p
            if q < 1.0 and p * pm <= tol * (1.0 - q):
                break
        total = 0.0
        for k in range(lo, hi + 1):
            total += row[k]
        scale = w / total
        for k in range(lo, hi + 1):
            v = scale * row[k] - comp[k]
            t = delta[k] + v
            comp[k] = (t - delta[k]) - v
            delta[k] = t
    return np.array(delta, dtype=np.float64)


def miss_ratios(rhos, a, b):
    """P(color with redundancy rho unseen) = prod_{j<rho} (a-b-j)/(a-j).

    ``rhos`` must be ascending; the running product is shared across them.
    """
    out = np.zeros(len(rhos), dtype=np.float64)
    prod = 1.0
    logsum = 0.0
    in_log = False
    j = 0
    for i in range(len(rhos)):
        rho = int(rhos[i])
        while j < rho:
            num = a - b - j
            if num <= 0:
                prod = 0.0
                in_log = False
                j = rho
                break
            if in_log:
                logsum += math.log1p(-b / (a - j))
            else:
                prod *= num / (a - j)
                if j + 1 == LOG_SWITCH:
                    if prod > 0.0:
                        logsum = math.log(prod)
                        in_log = True
            j += 1
        if prod == 0.0:
            out[i:] = 0.0
            break
        out[i] = math.exp(logsum) if in_log else prod
    return out
