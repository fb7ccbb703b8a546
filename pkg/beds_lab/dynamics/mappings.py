from ..utils.errors import DomainError


def ema_coherence(m: float) -> float:
    """Coherence implied by an EMA momentum coefficient: κ = 1/(1 - m)."""
    if not 0.0 <= m < 1.0:
        raise DomainError(f"momentum must lie in [0, 1), got {m}")
    return 1.0 / (1.0 - m)


def sac_coherence(alpha: float) -> float:
    """Coherence implied by an entropy temperature: κ = 1/α."""
    if not alpha > 0.0:
        raise DomainError(f"temperature must be positive, got {alpha}")
    return 1.0 / alpha
