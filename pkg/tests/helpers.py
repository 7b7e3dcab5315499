"""Shared assertions and generators for the test suite."""

import numpy as np

from fraclogistic import FracSeries


def assert_series_close(a, b, rtol=1e-12, atol=1e-30):
    """Coefficientwise comparison of two series (padded with zeros)."""
    assert type(a) is type(b)
    assert a.mu == b.mu
    n = max(len(a.coeffs), len(b.coeffs))
    pa = np.array(a.coeffs + (0.0,) * (n - len(a.coeffs)))
    pb = np.array(b.coeffs + (0.0,) * (n - len(b.coeffs)))
    np.testing.assert_allclose(pa, pb, rtol=rtol, atol=atol)


def random_frac_series(rng, mu, length, scale=2.0):
    coeffs = tuple(rng.uniform(-scale, scale) for _ in range(length))
    return FracSeries(mu, coeffs)
