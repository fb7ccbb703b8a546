from functools import lru_cache
import hashlib

import numpy as np

from .logger import get_logger

logger = get_logger("cache")


def config_hash(config_text: str) -> str:
    return hashlib.sha256(config_text.encode('utf-8')).hexdigest()


def stream_seed(seed: int, label: str) -> int:
    """Derive a 64-bit sub-seed for a named random stream.

    The label is hashed together with the run seed so every consumer
    (observation noise, random init, ...) gets its own reproducible stream
    regardless of call order.
    """
    digest = hashlib.sha256(f"{int(seed)}/{label}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def stream_rng(seed: int, label: str) -> np.random.Generator:
    return np.random.default_rng(stream_seed(seed, label))


@lru_cache(maxsize=16)
def gauss_hermite_rule(n_nodes: int = 16):
    """Nodes/weights for E[f(X)], X ~ N(0, 1) (probabilists' normalisation)."""
    x, w = np.polynomial.hermite.hermgauss(n_nodes)
    nodes = np.sqrt(2.0) * x
    weights = w / np.sqrt(np.pi)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def clear_cache():
    """Drop memoised quadrature rules and Bessel coefficients."""
    gauss_hermite_rule.cache_clear()
    from ..geometry import bessel
    bessel.asymptotic_coefficients.cache_clear()
    logger.info("🗑️ Caches cleared")
