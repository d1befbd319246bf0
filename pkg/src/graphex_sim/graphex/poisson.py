import numpy as np
from scipy.special import gammaln, xlogy


def poisson_pmf(k, lam):
    """
    p(k; lambda) = exp(-lambda) lambda^k / k!, evaluated in log-space.

    Broadcasts over array arguments; p(0; 0) = 1.
    """
    k_arr = np.asarray(k, dtype=np.float64)
    lam_arr = np.asarray(lam, dtype=np.float64)
    if np.any(lam_arr < 0):
        raise ValueError("lambda must be non-negative")
    out = np.exp(xlogy(k_arr, lam_arr) - lam_arr - gammaln(k_arr + 1.0))
    out = np.where(k_arr < 0, 0.0, out)
    return float(out) if out.ndim == 0 else out
