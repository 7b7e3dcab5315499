"""Empirical robustness probe in the Hyers-Ulam sense.

A system is stable in this sense when every function satisfying the
dynamics up to a defect of size eps stays within C * eps of an exact
solution, with C independent of eps.  The probe checks the empirical
signature of that statement: it solves the system with the extremal
constant defect +eps added to the right-hand side, measures the maximum
deviation from the unperturbed trajectory over the horizon, and reports
the ratio deviation/eps for each requested eps.  Bounded, eps-independent
ratios are the observable counterpart of the abstract constant C; no
constant is derived symbolically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ModelParams
from .solvers import SolveConfig, solve

__all__ = ["StabilityReport", "hyers_ulam_probe"]


@dataclass(frozen=True)
class StabilityReport:
    """Per-epsilon deviations and constant estimates over one horizon."""

    epsilons: tuple
    deviations: tuple
    c_estimates: tuple
    horizon: float


def hyers_ulam_probe(params: ModelParams, cfg: SolveConfig, epsilons) -> StabilityReport:
    """Estimate the stability constant for each perturbation size.

    Each epsilon must be positive; when the growth rate is nonzero it must
    also stay below ``0.1 * k * |r|`` so the perturbation remains small
    relative to the dynamics scale (for r = 0 there is no such scale and
    the bound is waived).
    """
    eps_list = [float(e) for e in epsilons]
    if not eps_list:
        raise ValueError("epsilons must be nonempty")
    for eps in eps_list:
        if not math.isfinite(eps) or eps <= 0.0:
            raise ValueError(f"epsilons must be positive, got {eps!r}")
        if params.r != 0.0 and eps > 0.1 * params.k * abs(params.r):
            raise ValueError(
                f"epsilon {eps} exceeds the dynamics scale bound "
                f"0.1*k*|r| = {0.1 * params.k * abs(params.r)}"
            )

    base = solve(params, cfg)
    deviations = []
    for eps in eps_list:
        perturbed = solve(params, cfg, forcing=eps)
        deviations.append(float(np.max(np.abs(perturbed.values - base.values))))
    ratios = [dev / eps for dev, eps in zip(deviations, eps_list)]
    return StabilityReport(
        epsilons=tuple(eps_list),
        deviations=tuple(deviations),
        c_estimates=tuple(ratios),
        horizon=cfg.t_end,
    )
