from dataclasses import replace

import numpy as np
import pytest

from fraclogistic import (
    ModelParams,
    OperatorKind,
    SolveConfig,
    SolverError,
    abc_exact_lambda0,
    classical_exact,
    compare_operators,
    lambda0_amplitude,
    solve,
)


def max_rel(a, b):
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(b), 1e-30)))


class TestClassicalOracle:
    def test_caputo_order_one_matches_logistic(self):
        p = ModelParams(r=1.0, k=100.0, z0=10.0, mu=1.0, lam=1.0)
        cfg = SolveConfig(operator="caputo", t_end=3.0, h=2e-3)
        traj = solve(p, cfg)
        exact = np.array([classical_exact(p, t) for t in traj.grid])
        err = max_rel(traj.values, exact)
        assert err < 1e-4
        refined = solve(p, replace(cfg, h=1e-3))
        exact_fine = np.array([classical_exact(p, t) for t in refined.grid])
        assert max_rel(refined.values, exact_fine) < err


class TestLambdaZeroOracle:
    @pytest.mark.parametrize("mu", [0.5, 0.8])
    def test_abc_matches_closed_form(self, mu):
        p = ModelParams(r=0.1, k=100.0, z0=10.0, mu=mu, lam=0.0)
        cfg = SolveConfig(operator="abc", t_end=3.0, h=2e-3)
        traj = solve(p, cfg)
        exact = np.array([abc_exact_lambda0(p, t) for t in traj.grid[1:]])
        assert max_rel(traj.values[1:], exact) < 1e-3

    def test_initial_node_is_jump_amplitude(self):
        p = ModelParams(r=0.1, k=100.0, z0=10.0, mu=0.5, lam=0.0)
        traj = solve(p, SolveConfig(operator="abc", t_end=1.0, h=0.01))
        assert traj.values[0] == pytest.approx(lambda0_amplitude(p), rel=1e-10)

    def test_cfc_caputo_start_at_datum(self):
        p = ModelParams(r=0.1, k=100.0, z0=10.0, mu=0.5, lam=0.0)
        for op in ("cfc", "caputo"):
            traj = solve(p, SolveConfig(operator=op, t_end=1.0, h=0.01))
            assert traj.values[0] == p.z0


class TestOperatorCoincidence:
    def test_order_one_collapses_all_operators(self):
        p = ModelParams(r=1.0, k=100.0, z0=10.0, mu=1.0, lam=1.0)
        cfg = SolveConfig(operator="abc", t_end=3.0, h=2e-3)
        trio = compare_operators(p, cfg)
        assert max_rel(trio.abc.values, trio.caputo.values) < 1e-10
        assert max_rel(trio.abc.values, trio.cfc.values) < 1e-3
        assert max_rel(trio.cfc.values, trio.caputo.values) < 1e-3

    def test_fractional_order_stays_bounded(self):
        p = ModelParams(r=0.3, k=100.0, z0=10.0, mu=0.7, lam=0.6)
        cfg = SolveConfig(operator="abc", t_end=10.0, h=0.02)
        trio = compare_operators(p, cfg)
        for traj in trio:
            assert np.all(traj.values > 0.0)
            assert np.all(traj.values < 1.05 * p.k)
        # operators genuinely differ away from the classical limit
        assert max_rel(trio.abc.values, trio.caputo.values) > 1e-4

    def test_equilibrium_constant_for_all(self):
        p = ModelParams(r=0.3, k=100.0, z0=100.0, mu=0.7, lam=0.5)
        trio = compare_operators(p, SolveConfig(operator="abc", t_end=2.0, h=0.02))
        for traj in trio:
            np.testing.assert_allclose(traj.values, p.k, rtol=1e-12)


class TestDelayHandling:
    def test_lambda_one_equals_direct_path(self):
        p = ModelParams(r=0.3, k=100.0, z0=10.0, mu=0.7, lam=1.0)
        cfg = SolveConfig(operator="abc", t_end=3.0, h=0.01)
        with_delay = solve(p, cfg)
        direct = solve(p, cfg, pantograph=False)
        assert np.max(np.abs(with_delay.values - direct.values)) <= 1e-12

    def test_interior_delay_differs_from_none(self):
        base = ModelParams(r=0.3, k=100.0, z0=10.0, mu=0.7, lam=1.0)
        half = replace(base, lam=0.5)
        cfg = SolveConfig(operator="abc", t_end=3.0, h=0.01)
        a = solve(base, cfg)
        b = solve(half, cfg)
        assert np.max(np.abs(a.values - b.values)) > 1e-4


class TestConvergenceOrder:
    @pytest.mark.parametrize("operator", ["abc", "cfc", "caputo"])
    @pytest.mark.parametrize("mu", [0.5, 0.9])
    def test_refinement_contracts(self, operator, mu):
        p = ModelParams(r=0.2, k=100.0, z0=10.0, mu=mu, lam=0.5)
        endpoints = []
        for h in (0.04, 0.02, 0.01):
            traj = solve(p, SolveConfig(operator=operator, t_end=2.0, h=h))
            endpoints.append(traj.values[-1])
        coarse = abs(endpoints[0] - endpoints[1])
        fine = abs(endpoints[1] - endpoints[2])
        assert fine < coarse


class TestBasicBehaviour:
    def test_zero_growth_is_flat(self):
        p = ModelParams(r=0.0, k=100.0, z0=10.0, mu=0.6, lam=0.5)
        for op in OperatorKind:
            traj = solve(p, SolveConfig(operator=op, t_end=2.0, h=0.05))
            np.testing.assert_array_equal(traj.values, np.full_like(traj.values, 10.0))

    def test_positivity(self):
        p = ModelParams(r=0.5, k=100.0, z0=5.0, mu=0.8, lam=0.7)
        for op in OperatorKind:
            traj = solve(p, SolveConfig(operator=op, t_end=8.0, h=0.02))
            assert np.all(traj.values > 0.0)

    def test_rectangle_quadrature_converges_to_same_solution(self):
        p = ModelParams(r=0.1, k=100.0, z0=10.0, mu=0.6, lam=0.0)
        trap = solve(p, SolveConfig(operator="abc", t_end=3.0, h=0.005))
        rect = solve(
            p, SolveConfig(operator="abc", t_end=3.0, h=0.005, quadrature="rectangle")
        )
        exact = np.array([abc_exact_lambda0(p, t) for t in trap.grid[1:]])
        trap_err = max_rel(trap.values[1:], exact)
        rect_err = max_rel(rect.values[1:], exact)
        assert rect_err < 1e-3
        assert trap_err < rect_err

    def test_grid_metadata(self):
        p = ModelParams(r=0.1, k=100.0, z0=10.0, mu=0.6, lam=1.0)
        cfg = SolveConfig(operator="cfc", t_end=1.0, h=0.1)
        traj = solve(p, cfg)
        assert traj.operator is OperatorKind.CFC
        assert traj.params == p
        np.testing.assert_allclose(traj.grid, 0.1 * np.arange(11), rtol=1e-15)
        assert np.all(np.isfinite(traj.values))


class TestFailureModes:
    def test_corrector_divergence_reports_step(self):
        p = ModelParams(r=50.0, k=100.0, z0=10.0, mu=0.2, lam=1.0)
        with pytest.raises(SolverError) as excinfo:
            solve(p, SolveConfig(operator="abc", t_end=5.0, h=0.5))
        assert excinfo.value.step >= 0

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SolveConfig(operator="abc", t_end=1.0, h=0.0)
        with pytest.raises(ValueError):
            SolveConfig(operator="abc", t_end=0.05, h=0.1)
        with pytest.raises(ValueError):
            SolveConfig(operator="abc", t_end=1e9, h=1e-3)
        with pytest.raises(ValueError):
            SolveConfig(operator="bogus", t_end=1.0, h=0.1)
        with pytest.raises(ValueError):
            SolveConfig(operator="abc", t_end=1.0, h=0.1, quadrature="simpson")
        with pytest.raises(ValueError):
            SolveConfig(operator="abc", t_end=1.0, h=0.1, corrector_iters=0)

    def test_operator_string_coercion(self):
        cfg = SolveConfig(operator="CAPUTO", t_end=1.0, h=0.1)
        assert cfg.operator is OperatorKind.CAPUTO
