"""Model parameters and the logistic right-hand side with delayed feedback."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["ModelParams", "logistic_rhs"]


@dataclass(frozen=True)
class ModelParams:
    """Parameters of the delayed logistic model under a fractional derivative.

    Attributes
    ----------
    r : float
        Intrinsic growth rate (1/time); any finite real.
    k : float
        Carrying capacity, > 0.
    z0 : float
        Initial value, > 0.
    mu : float
        Fractional order in (0, 1]; mu = 1 recovers the classical model.
    lam : float
        Proportional delay factor in [0, 1]; the feedback term samples the
        state at time ``lam * t``.
    b_norm : float
        Normalization of the fractional operator (also reused as the
        exponential-kernel normalization), > 0; default 1 so that the
        mu = 1 limits of all operators coincide.
    """

    r: float
    k: float
    z0: float
    mu: float
    lam: float = 1.0
    b_norm: float = 1.0

    def __post_init__(self):
        for name in ("r", "k", "z0", "mu", "lam", "b_norm"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.k <= 0.0:
            raise ValueError(f"k must be > 0, got {self.k}")
        if self.z0 <= 0.0:
            raise ValueError(f"z0 must be > 0, got {self.z0}")
        if not 0.0 < self.mu <= 1.0:
            raise ValueError(f"mu must lie in (0, 1], got {self.mu}")
        if not 0.0 <= self.lam <= 1.0:
            raise ValueError(f"lam must lie in [0, 1], got {self.lam}")
        if self.b_norm <= 0.0:
            raise ValueError(f"b_norm must be > 0, got {self.b_norm}")


def logistic_rhs(p: ModelParams, state: float, delayed: float, forcing: float = 0.0) -> float:
    """Growth law ``r * z(t) * (1 - z(lam*t)/k)`` plus an optional forcing."""
    return p.r * state * (1.0 - delayed / p.k) + forcing
