"""Hybrid Sumudu-variational iteration for the delayed fractional logistic model.

The scheme generates correction terms x_0, x_1, x_2, ... for

    D^mu z(t) = r z(t) (1 - z(lam*t)/k),    z(0) = z0,

where D^mu is the order-mu derivative with Mittag-Leffler memory and
normalization B = b_norm.  Starting from the constant x_0 = z0, each step
transports the previous term and its Adomian polynomial to the Sumudu
domain, applies the Lagrange-multiplier kernel (1 - mu + mu u^mu), scales
by r/B and transforms back:

    x_{n+1} = (1/B) S^-1[ r (1 - mu + mu u^mu) (S[x_n] - S[P_n]/k) ].

The truncated solution is the partial sum of the terms.  A separate
geometric closed form sums the crude surrogate in which every term is
replaced by z0 * q(t)^i with ratio

    q(t) = (r/B) (1 - z0/k) (1 - mu + mu t^mu / Gamma(mu+1));

the surrogate is first-order accurate only (the exact terms carry
1/Gamma(i*mu + 1)-type denominators the pure power q^i lacks), so the
two evaluations drift apart at order q^2; ``geometric_gap`` reports the
discrepancy at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .adomian import ADOMIAN_MODES, adomian_delayed_product
from .errors import ConvergenceError
from .model import ModelParams
from .series import (
    FracSeries,
    eval_series,
    kernel_multiply,
    series_add,
    series_scale,
    sumudu_forward,
    sumudu_inverse,
)
from .special import gamma_fn

__all__ = [
    "HsvSolution",
    "HsvEvaluation",
    "GeometricForm",
    "hsv_iterate",
    "hsv_evaluate",
    "geometric_closed_form",
    "geometric_gap",
    "psi_kernel",
    "HSV_SOLVER_AGREEMENT_RTOL",
]

# Pinned agreement tolerance between the 10-term series and the numerical
# reference solver on a short horizon (the series is asymptotic in
# character, so this is a qualitative-validity bound, not a convergence
# rate claim).
HSV_SOLVER_AGREEMENT_RTOL = 0.05


class HsvEvaluation(NamedTuple):
    """Partial-sum value plus the magnitude of the last retained term."""

    value: float
    last_term: float


class GeometricForm(NamedTuple):
    """Geometric closed-form value and the ratio it was summed from."""

    value: float
    ratio: float


@dataclass(frozen=True)
class HsvSolution:
    """Truncated term sequence produced by :func:`hsv_iterate`."""

    params: ModelParams
    mode: str
    terms: tuple

    @property
    def truncation(self) -> int:
        return len(self.terms) - 1

    def term_values(self, t: float) -> list:
        """Evaluate every term at ``t`` (index i holds x_i(t))."""
        return [eval_series(x, t) for x in self.terms]


def hsv_iterate(params: ModelParams, n_terms: int, mode: str = "general") -> HsvSolution:
    """Generate the terms x_0 .. x_{n_terms}.

    ``mode`` selects the Adomian expansion of the delayed product (see
    :mod:`fraclogistic.adomian`); both modes coincide for ``lam = 1``.
    """
    if not isinstance(n_terms, int) or n_terms < 1:
        raise ValueError(f"n_terms must be a positive integer, got {n_terms!r}")
    if mode not in ADOMIAN_MODES:
        raise ValueError(f"mode must be one of {ADOMIAN_MODES}, got {mode!r}")
    p = params
    terms = [FracSeries(p.mu, (p.z0,))]
    for _ in range(n_terms):
        poly = adomian_delayed_product(terms, p.lam, mode)[-1]
        combined = series_add(
            sumudu_forward(terms[-1]),
            series_scale(sumudu_forward(poly), -1.0 / p.k),
        )
        nxt = sumudu_inverse(series_scale(kernel_multiply(combined), p.r / p.b_norm))
        terms.append(nxt)
    return HsvSolution(params=p, mode=mode, terms=tuple(terms))


def hsv_evaluate(sol: HsvSolution, t: float) -> HsvEvaluation:
    """Partial sum of the terms at ``t``, with a truncation-error proxy.

    The reported value is the full partial sum.  For mu < 1 the correction
    terms contribute constant parts (1 - mu) * (...), so the value at
    t = 0 deliberately differs from z0: this mirrors the initial jump of
    the nonlocal operator's integral form rather than hiding it.
    """
    values = sol.term_values(t)
    return HsvEvaluation(value=sum(values), last_term=abs(values[-1]))


def psi_kernel(params: ModelParams, t: float) -> float:
    """Time-domain kernel ``1 - mu + mu t^mu / Gamma(mu + 1)``."""
    t = float(t)
    if t < 0.0:
        raise ValueError(f"t must be >= 0, got {t!r}")
    mu = params.mu
    power = 0.0 if t == 0.0 else t ** mu
    return 1.0 - mu + mu * power / gamma_fn(mu + 1.0)


def geometric_closed_form(params: ModelParams, t: float) -> GeometricForm:
    """Sum the geometric surrogate ``z0 * sum_i q(t)^i = z0 / (1 - q)``.

    Raises :class:`ConvergenceError` (carrying the ratio) when |q| >= 1.
    """
    p = params
    q = (p.r / p.b_norm) * (1.0 - p.z0 / p.k) * psi_kernel(p, t)
    if abs(q) >= 1.0:
        raise ConvergenceError(
            f"geometric ratio |q| = {abs(q)} >= 1 at t = {t}; "
            "closed form diverges",
            ratio=q,
        )
    return GeometricForm(value=p.z0 / (1.0 - q), ratio=q)


def geometric_gap(sol: HsvSolution, t: float) -> float:
    """Absolute difference between the partial sum and the geometric form.

    Quantifies, at runtime, how far the exact kernel powers drift from
    the pure ``q^i`` surrogate (zero only at q = 0).
    """
    series_value = hsv_evaluate(sol, t).value
    return abs(series_value - geometric_closed_form(sol.params, t).value)
