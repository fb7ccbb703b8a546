"""Modified Bessel functions of order 0 and 1 and the ratio A(κ) = I₁(κ)/I₀(κ).

Evaluated in-house: a power series below ``SERIES_SWITCH`` and the large-argument
asymptotic expansion above it. Everything is vectorised over numpy arrays and
returns a Python float for scalar input.

Besides A we expose r(κ) = A(κ)/κ, which stays finite (→ ½) at κ = 0 and lets the
von Mises metric avoid the 0/0 in g_κκ.
"""
from functools import lru_cache

import numpy as np

from ..utils.errors import DomainError

SERIES_SWITCH = 15.0
SERIES_TERMS = 60
ASYMPTOTIC_TERMS = 24
_SMALL_KAPPA = 1e-3


@lru_cache(maxsize=8)
def asymptotic_coefficients(nu: int, n_terms: int = ASYMPTOTIC_TERMS):
    """Coefficients c_k with I_ν(κ)·e^{-κ}·√(2πκ) ≈ Σ c_k κ^{-k}."""
    mu = 4.0 * nu * nu
    coeffs = [1.0]
    for k in range(1, n_terms):
        coeffs.append(-coeffs[-1] * (mu - (2 * k - 1) ** 2) / (k * 8.0))
    return tuple(coeffs)


def _as_kappa(kappa):
    k = np.asarray(kappa, dtype=float)
    if np.any(~np.isfinite(k)) or np.any(k < 0.0):
        raise DomainError(f"kappa must be finite and >= 0, got {kappa!r}")
    return k


def _out(arr, like):
    return float(arr) if np.ndim(like) == 0 else arr


def _series_sums(k):
    """S0 = Σ(j+1)c_j, S1 = Σc_j with c_j = (κ²/4)^j / (j!(j+1)!)."""
    q = (np.atleast_1d(k) ** 2 / 4.0)[:, None]
    j = np.arange(1, SERIES_TERMS, dtype=float)
    ratios = q / (j * (j + 1.0))
    c = np.concatenate([np.ones((q.shape[0], 1)), np.cumprod(ratios, axis=1)], axis=1)
    weights = np.arange(1, SERIES_TERMS + 1, dtype=float)
    return c @ weights, c.sum(axis=1)


def _asymptotic_sums(k):
    k = np.atleast_1d(k)
    inv = 1.0 / k
    powers = inv[:, None] ** np.arange(ASYMPTOTIC_TERMS, dtype=float)
    s0 = powers @ np.asarray(asymptotic_coefficients(0))
    s1 = powers @ np.asarray(asymptotic_coefficients(1))
    return s0, s1


def _scaled_pair(k):
    k = np.atleast_1d(k)
    i0e = np.empty_like(k)
    i1e = np.empty_like(k)
    low = k < SERIES_SWITCH
    if np.any(low):
        kl = k[low]
        s0, s1 = _series_sums(kl)
        damp = np.exp(-kl)
        i0e[low] = s0 * damp
        i1e[low] = 0.5 * kl * s1 * damp
    if np.any(~low):
        kh = k[~low]
        s0, s1 = _asymptotic_sums(kh)
        norm = 1.0 / np.sqrt(2.0 * np.pi * kh)
        i0e[~low] = s0 * norm
        i1e[~low] = s1 * norm
    return i0e, i1e


def bessel_i0e(kappa):
    """e^{-κ}·I₀(κ)."""
    k = _as_kappa(kappa)
    return _out(_scaled_pair(k)[0].reshape(k.shape), kappa)


def bessel_i1e(kappa):
    """e^{-κ}·I₁(κ)."""
    k = _as_kappa(kappa)
    return _out(_scaled_pair(k)[1].reshape(k.shape), kappa)


def _ratio_pair(k):
    """(A, r) with r = A/κ, computed without cancellation on either side of the switch."""
    k = np.atleast_1d(k)
    a = np.empty_like(k)
    r = np.empty_like(k)
    low = k < SERIES_SWITCH
    if np.any(low):
        s0, s1 = _series_sums(k[low])
        r[low] = 0.5 * s1 / s0
        a[low] = k[low] * r[low]
    if np.any(~low):
        s0, s1 = _asymptotic_sums(k[~low])
        a[~low] = s1 / s0
        r[~low] = a[~low] / k[~low]
    return a, r


def bessel_ratio(kappa):
    """A(κ) = I₁(κ)/I₀(κ); A(0) = 0, increasing, bounded by 1."""
    k = _as_kappa(kappa)
    a, _ = _ratio_pair(k)
    return _out(a.reshape(k.shape), kappa)


def bessel_ratio_over_kappa(kappa):
    """r(κ) = A(κ)/κ with r(0) = ½."""
    k = _as_kappa(kappa)
    _, r = _ratio_pair(k)
    return _out(r.reshape(k.shape), kappa)


def ratio_derivatives(kappa):
    """Return (A, r, A', r') on an array of κ values.

    A' = 1 - r - A² and r' = (1 - 2r - A²)/κ; for κ below 1e-3 the latter is
    replaced by its series -κ/8 + κ³/24.
    """
    k = np.atleast_1d(_as_kappa(kappa))
    a, r = _ratio_pair(k)
    da = 1.0 - r - a * a
    dr = np.empty_like(k)
    small = k < _SMALL_KAPPA
    ks = k[small]
    dr[small] = -ks / 8.0 + ks ** 3 / 24.0
    kb = k[~small]
    dr[~small] = (1.0 - 2.0 * r[~small] - a[~small] ** 2) / kb
    return a, r, da, dr
