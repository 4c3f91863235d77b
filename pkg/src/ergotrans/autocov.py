"""Stationary autocovariance estimation and the GLS mean.

The covariance matrix estimator is the flat-top tapered, banded sample
autocovariance: raw autocovariances are kept unchanged up to half the
bandwidth, linearly down-weighted to zero at the bandwidth, and zeroed
beyond. The resulting Toeplitz matrix is floored to positive definiteness
by eigenvalue clipping so that its log-determinant stays finite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_factor, cho_solve, toeplitz

from .errors import ConditioningError, DegenerateDataError

# Bandwidth rule constants: L is the smallest lag from which BAND_RUN
# consecutive autocorrelations stay below BAND_C0 * sqrt(log10(m)/m).
BAND_C0 = 2.0
BAND_RUN = 5

# Eigenvalues below PD_FLOOR * gamma_0 are clipped up to that floor.
PD_FLOOR = 1e-6

# gamma_0 below this times (mean |z|)^2 is treated as no variation at all.
DEGENERATE_REL_VAR = 1e-12

MIN_TAPER_LENGTH = 20


@dataclass(frozen=True)
class AutocovEstimate:
    """Tapered autocovariances and the implied Toeplitz covariance matrix."""

    gamma: np.ndarray
    bandwidth: int
    matrix_dim: int
    pd_adjusted: bool
    matrix: np.ndarray


def is_degenerate(z) -> bool:
    """True when the series has (numerically) zero variance."""
    z = np.asarray(z, dtype=float)
    scale = np.mean(np.abs(z)) ** 2
    return float(np.var(z)) < DEGENERATE_REL_VAR * max(scale, 1.0)


def sample_autocov(z, max_lag: int) -> tuple[np.ndarray, bool]:
    """Biased (1/m divisor) sample autocovariances for lags 0..max_lag.

    Returns the autocovariance sequence and a degenerate-variance flag;
    the biased divisor guarantees a positive semi-definite sequence.
    """
    z = np.asarray(z, dtype=float)
    m = len(z)
    if max_lag >= m:
        raise ValueError("max_lag must be smaller than the series length")
    d = z - z.mean()
    gamma = np.empty(max_lag + 1)
    for j in range(max_lag + 1):
        gamma[j] = d[j:] @ d[: m - j] / m
    return gamma, is_degenerate(z)


def _flat_top_weights(lags: np.ndarray, bandwidth: int) -> np.ndarray:
    u = np.abs(lags) / bandwidth
    w = np.where(u <= 0.5, 1.0, 2.0 * (1.0 - u))
    return np.clip(w, 0.0, 1.0)


def _bandwidth(rho: np.ndarray, m: int, cap: int) -> int:
    thr = BAND_C0 * np.sqrt(np.log10(m) / m)
    small = np.abs(rho) < thr
    for j in range(1, cap + 1):
        window = small[j : j + BAND_RUN]
        if len(window) == BAND_RUN and window.all():
            return j
    return cap


def tapered_autocov_matrix(z) -> AutocovEstimate:
    """Flat-top tapered, banded Toeplitz covariance estimate."""
    z = np.asarray(z, dtype=float)
    m = len(z)
    if m < MIN_TAPER_LENGTH:
        raise ValueError(f"need at least {MIN_TAPER_LENGTH} observations, got {m}")
    cap = max(m // 4, 1)
    gamma_raw, degenerate = sample_autocov(z, min(cap + BAND_RUN, m - 1))
    if degenerate:
        raise DegenerateDataError("series has no variation")
    rho = gamma_raw / gamma_raw[0]
    bandwidth = _bandwidth(rho, m, cap)

    gamma = np.zeros(m)
    keep = min(bandwidth, len(gamma_raw) - 1)
    lags = np.arange(keep + 1)
    gamma[: keep + 1] = gamma_raw[: keep + 1] * _flat_top_weights(lags, bandwidth)

    sigma = toeplitz(gamma)
    floor = PD_FLOOR * gamma_raw[0]
    eigvals = np.linalg.eigvalsh(sigma)
    pd_adjusted = False
    if eigvals[0] < floor:
        w, v = np.linalg.eigh(sigma)
        sigma = (v * np.maximum(w, floor)) @ v.T
        sigma = (sigma + sigma.T) / 2.0
        pd_adjusted = True
    return AutocovEstimate(
        gamma=gamma[: keep + 1],
        bandwidth=bandwidth,
        matrix_dim=m,
        pd_adjusted=pd_adjusted,
        matrix=sigma,
    )


def _factorize(sigma: AutocovEstimate):
    try:
        return cho_factor(sigma.matrix, lower=True)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - floor prevents this
        raise ConditioningError(str(exc)) from exc


def gls_mean(z, sigma: AutocovEstimate) -> float:
    """Generalized least-squares mean, solved via Cholesky (no explicit inverse)."""
    z = np.asarray(z, dtype=float)
    if len(z) != sigma.matrix_dim:
        raise ValueError("dimension mismatch between series and covariance")
    factor = _factorize(sigma)
    ones = np.ones(len(z))
    si_ones = cho_solve(factor, ones)
    return float(si_ones @ z / si_ones.sum())


def logdet_and_quadform(z, sigma: AutocovEstimate, mu: float) -> tuple[float, float]:
    """log det(Sigma) and (z - mu 1)' Sigma^{-1} (z - mu 1) via Cholesky."""
    z = np.asarray(z, dtype=float)
    factor = _factorize(sigma)
    logdet = 2.0 * float(np.sum(np.log(np.diag(factor[0]))))
    r = z - mu
    quad = float(r @ cho_solve(factor, r))
    return logdet, quad
