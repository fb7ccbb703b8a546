"""Fisher–Rao geometry of the von Mises family in (φ, κ) coordinates.

g_φφ = κA(κ), g_κκ = 1 - A(κ)² - A(κ)/κ with A = I₁/I₀. There is no closed-form
distance, so it is found by relaxing a discretised path with L-BFGS-B on the
discrete path energy and measuring the relaxed path with Simpson's rule.
"""
import math

import numpy as np
from scipy.integrate import quad
from scipy.optimize import minimize

from ..utils.errors import NumericFailure
from ..utils.logger import get_logger
from .beliefs import MetricTensor2, VonMisesBelief, phase_difference
from .bessel import _as_kappa, _ratio_pair, ratio_derivatives

logger = get_logger("geometry.von_mises")

PATH_SEGMENTS = 256
MAX_ITER = 10_000
RESIDUAL_TOL = 1e-8


def _metric_arrays(kappa):
    a, r = _ratio_pair(np.atleast_1d(kappa))
    g_phi = kappa * a
    g_kap = 1.0 - a * a - r
    return g_phi, np.maximum(g_kap, 0.0)


def _metric_and_slopes(kappa):
    a, r, da, dr = ratio_derivatives(kappa)
    g_phi = kappa * a
    g_kap = np.maximum(1.0 - a * a - r, 0.0)
    dg_phi = a + kappa * da
    dg_kap = -2.0 * a * da - dr
    return g_phi, g_kap, dg_phi, dg_kap


def vonmises_metric(kappa: float) -> MetricTensor2:
    """(g_φφ, g_κκ) at κ; g_κκ(0) takes its limit ½."""
    k = float(_as_kappa(kappa))
    g_phi, g_kap = _metric_arrays(np.array([k]))
    return MetricTensor2(float(g_phi[0]), float(g_kap[0]))


def _path_energy(x, phi0, phi1, k0, k1, n):
    """Discrete energy N·Σ[g_φφ(κ̄)Δφ² + g_κκ(κ̄)Δκ²] and its gradient."""
    m = n - 1
    phi = np.concatenate(([phi0], x[:m], [phi1]))
    kap = np.concatenate(([k0], x[m:], [k1]))
    dphi = np.diff(phi)
    dkap = np.diff(kap)
    kbar = 0.5 * (kap[1:] + kap[:-1])
    g_phi, g_kap, dg_phi, dg_kap = _metric_and_slopes(kbar)
    energy = n * float(np.sum(g_phi * dphi ** 2 + g_kap * dkap ** 2))

    flux_phi = 2.0 * g_phi * dphi
    flux_kap = 2.0 * g_kap * dkap
    bend = 0.5 * (dg_phi * dphi ** 2 + dg_kap * dkap ** 2)
    grad_phi = flux_phi[:-1] - flux_phi[1:]
    grad_kap = flux_kap[:-1] - flux_kap[1:] + bend[:-1] + bend[1:]
    return energy, n * np.concatenate((grad_phi, grad_kap))


def _segment_lengths(phi, kap):
    """Simpson's rule per segment, κ linear along each segment."""
    dphi = np.diff(phi)
    dkap = np.diff(kap)
    nodes = [kap[:-1], 0.5 * (kap[:-1] + kap[1:]), kap[1:]]
    speeds = []
    for k in nodes:
        g_phi, g_kap = _metric_arrays(k)
        speeds.append(np.sqrt(g_phi * dphi ** 2 + g_kap * dkap ** 2))
    return (speeds[0] + 4.0 * speeds[1] + speeds[2]) / 6.0


def _projected_gradient(x, grad, n):
    """Inf-norm of the gradient projected onto the κ >= 0 box."""
    g = grad.copy()
    kappa_part = slice(n - 1, None)
    at_bound = (x[kappa_part] <= 0.0) & (g[kappa_part] > 0.0)
    g[kappa_part][at_bound] = 0.0
    return float(np.max(np.abs(g))) if g.size else 0.0


def vonmises_fr_distance(
    a: VonMisesBelief,
    b: VonMisesBelief,
    segments: int = PATH_SEGMENTS,
    max_iter: int = MAX_ITER,
    tol: float = RESIDUAL_TOL,
) -> float:
    if a.kappa == 0.0 and b.kappa == 0.0:
        # every phase of the uniform distribution is the same distribution
        return 0.0
    dphi = phase_difference(a.phi, b.phi)
    if dphi == 0.0 and a.kappa == b.kappa:
        return 0.0

    n = int(segments)
    phi0, phi1 = a.phi, a.phi + dphi
    k0, k1 = a.kappa, b.kappa
    t = np.linspace(0.0, 1.0, n + 1)[1:-1]
    x0 = np.concatenate((phi0 + t * dphi, k0 + t * (k1 - k0)))

    e0, _ = _path_energy(x0, phi0, phi1, k0, k1, n)
    if e0 == 0.0:
        return 0.0

    def objective(x):
        e, g = _path_energy(x, phi0, phi1, k0, k1, n)
        return e / e0, g / e0

    bounds = [(None, None)] * (n - 1) + [(0.0, None)] * (n - 1)
    max_fun = 4 * max_iter
    res = minimize(
        objective,
        x0,
        jac=True,
        method="L-BFGS-B",
        bounds=bounds,
        options={"maxiter": max_iter, "maxfun": max_fun, "gtol": 0.1 * tol, "ftol": 1e-15, "maxcor": 20},
    )
    _, grad = objective(res.x)
    residual = _projected_gradient(res.x, grad, n)
    if residual > tol:
        if res.nit >= max_iter or res.nfev >= max_fun:
            raise NumericFailure(
                f"von Mises path relaxation did not converge in {max_iter} iterations",
                residual=residual,
            )
        logger.debug(f"path relaxation stopped early ({res.message}); residual {residual:.3e}")

    phi = np.concatenate(([phi0], res.x[: n - 1], [phi1]))
    kap = np.concatenate(([k0], np.maximum(res.x[n - 1:], 0.0), [k1]))
    length = float(np.sum(_segment_lengths(phi, kap)))
    logger.debug(f"von Mises distance {length:.12g} after {res.nit} iterations")
    return length


def vonmises_kappa_length(k_start: float, k_end: float) -> float:
    """∫ √g_κκ dκ along a fixed-phase path, via adaptive quadrature."""
    lo, hi = sorted((float(k_start), float(k_end)))
    val, _ = quad(lambda k: math.sqrt(vonmises_metric(k).g22), lo, hi, epsabs=1e-12, epsrel=1e-10)
    return val
